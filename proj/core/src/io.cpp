#include <algorithm>  // for max
#include <cstddef>    // for size_t
#include <optional>   // for optional
#include <vector>     // for vector

#include "agcheck/error.hpp"
#include "agcheck/io.hpp"

namespace agcheck {

  namespace {

    struct Token {
      std::string_view text;
      std::size_t      column;  // 1-based
    };

    struct Line {
      std::size_t        number;
      std::vector<Token> tokens;
    };

    // Significant lines of text, comments stripped.  `last` receives the
    // number of the final line, for errors at end of input.
    std::vector<Line> tokenize(std::string_view text, std::size_t& last) {
      std::vector<Line> out;
      std::size_t       number = 0;
      std::size_t       pos    = 0;
      while (pos < text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) {
          end = text.size();
        }
        std::string_view line = text.substr(pos, end - pos);
        ++number;
        pos = end + 1;
        if (auto hash = line.find('#'); hash != std::string_view::npos) {
          line = line.substr(0, hash);
        }
        Line l{number, {}};
        std::size_t i = 0;
        while (i < line.size()) {
          while (i < line.size()
                 && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) {
            ++i;
          }
          std::size_t const start = i;
          while (i < line.size() && line[i] != ' ' && line[i] != '\t'
                 && line[i] != '\r') {
            ++i;
          }
          if (i > start) {
            l.tokens.push_back({line.substr(start, i - start), start + 1});
          }
        }
        if (!l.tokens.empty()) {
          out.push_back(std::move(l));
        }
      }
      last = number;
      return out;
    }

  }  // namespace

  Groupoid parse_table(std::string_view text) {
    std::size_t last  = 0;
    auto const  lines = tokenize(text, last);
    if (lines.empty()) {
      throw ParseError("expected a line of labels", std::max<std::size_t>(last, 1), 0);
    }
    auto const&              head = lines.front();
    std::vector<std::string> labels;
    for (auto const& t : head.tokens) {
      for (auto const& l : labels) {
        if (l == t.text) {
          throw ParseError("duplicate label \"" + std::string(t.text) + "\"",
                           head.number,
                           t.column);
        }
      }
      labels.emplace_back(t.text);
    }
    std::size_t const n = labels.size();
    if (n > max_order) {
      throw ParseError("at most " + std::to_string(max_order)
                           + " elements are supported",
                       head.number,
                       0);
    }
    if (lines.size() - 1 < n) {
      throw ParseError("expected " + std::to_string(n) + " rows, found "
                           + std::to_string(lines.size() - 1),
                       last + 1,
                       0);
    }
    if (lines.size() - 1 > n) {
      throw ParseError("unexpected row beyond the " + std::to_string(n)
                           + " declared",
                       lines[n + 1].number,
                       0);
    }
    std::vector<element_type> cells;
    cells.reserve(n * n);
    for (std::size_t r = 1; r <= n; ++r) {
      auto const& line = lines[r];
      if (line.tokens.size() != n) {
        std::size_t const col
            = line.tokens.size() > n ? line.tokens[n].column : 0;
        throw ParseError("expected " + std::to_string(n) + " entries, found "
                             + std::to_string(line.tokens.size()),
                         line.number,
                         col);
      }
      for (auto const& t : line.tokens) {
        std::optional<element_type> idx;
        for (std::size_t i = 0; i < n && !idx; ++i) {
          if (labels[i] == t.text) {
            idx = static_cast<element_type>(i);
          }
        }
        if (!idx) {
          throw ParseError(
              "unknown element \"" + std::string(t.text) + "\"", line.number, t.column);
        }
        cells.push_back(*idx);
      }
    }
    return Groupoid(n, cells, std::move(labels));
  }

  std::string serialize_table(Groupoid const& g) {
    std::size_t width = 0;
    for (auto const& l : g.labels()) {
      width = std::max(width, l.size());
    }
    auto cell = [&](std::string const& s, bool first) {
      return (first ? "" : " ") + std::string(width - s.size(), ' ') + s;
    };
    std::string out;
    for (element_type a = 0; a < g.order(); ++a) {
      out += cell(g.label(a), a == 0);
    }
    out += '\n';
    for (element_type a = 0; a < g.order(); ++a) {
      for (element_type b = 0; b < g.order(); ++b) {
        out += cell(g.label(g(a, b)), b == 0);
      }
      out += '\n';
    }
    return out;
  }

  FuzzySubset parse_fuzzy(std::string_view text, Groupoid const& g) {
    std::size_t                        last  = 0;
    auto const                         lines = tokenize(text, last);
    std::vector<std::optional<Grade>>  grades(g.order());
    for (auto const& line : lines) {
      if (line.tokens.size() != 2) {
        throw ParseError("expected \"label grade\"",
                         line.number,
                         line.tokens.size() > 2 ? line.tokens[2].column : 0);
      }
      auto const& lt  = line.tokens[0];
      auto const  idx = g.index_of(std::string(lt.text));
      if (!idx) {
        throw ParseError(
            "unknown element \"" + std::string(lt.text) + "\"", line.number, lt.column);
      }
      if (grades[*idx]) {
        throw ParseError("element \"" + std::string(lt.text)
                             + "\" assigned more than once",
                         line.number,
                         lt.column);
      }
      auto const& vt = line.tokens[1];
      try {
        grades[*idx] = Grade::parse(vt.text);
      } catch (InvalidArgument const& e) {
        throw ParseError(e.what(), line.number, vt.column);
      }
    }
    std::vector<Grade> out;
    for (element_type a = 0; a < g.order(); ++a) {
      if (!grades[a]) {
        throw ParseError("no grade for element \"" + g.label(a) + "\"", last + 1, 0);
      }
      out.push_back(*grades[a]);
    }
    return FuzzySubset(std::move(out));
  }

  std::string serialize_fuzzy(FuzzySubset const& f, Groupoid const& g) {
    if (f.order() != g.order()) {
      throw InvalidArgument("fuzzy subset and groupoid have different orders");
    }
    std::string out;
    for (element_type a = 0; a < g.order(); ++a) {
      out += g.label(a) + ' ' + f[a].str() + '\n';
    }
    return out;
  }

}  // namespace agcheck
