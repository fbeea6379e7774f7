#include "agcheck/groupoid.hpp"

#include <algorithm>  // for lexicographical_compare
#include <set>        // for set
#include <utility>    // for move

#include "agcheck/error.hpp"

namespace agcheck {

  Groupoid::Groupoid(std::size_t order, std::vector<element_type> const& cells)
      : Groupoid(order, cells, default_labels(order)) {}

  Groupoid::Groupoid(std::size_t                      order,
                     std::vector<element_type> const& cells,
                     std::vector<std::string>         labels)
      : _order(order), _cells(), _labels(std::move(labels)) {
    if (order == 0) {
      throw InvalidArgument("a groupoid must have at least one element");
    }
    if (order > max_order) {
      throw InvalidArgument("order " + std::to_string(order)
                            + " exceeds the cap of "
                            + std::to_string(max_order));
    }
    if (cells.size() != order * order) {
      throw InvalidArgument("expected " + std::to_string(order * order)
                            + " table entries, found "
                            + std::to_string(cells.size()));
    }
    if (_labels.size() != order) {
      throw InvalidArgument("expected " + std::to_string(order)
                            + " labels, found "
                            + std::to_string(_labels.size()));
    }
    std::set<std::string> seen;
    for (auto const& l : _labels) {
      if (l.empty()) {
        throw InvalidArgument("empty element label");
      }
      if (!seen.insert(l).second) {
        throw InvalidArgument("duplicate element label \"" + l + "\"");
      }
    }
    _cells.reserve(cells.size());
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (cells[i] >= order) {
        throw InvalidArgument("table entry (" + std::to_string(i / order)
                              + "," + std::to_string(i % order)
                              + ") = " + std::to_string(cells[i])
                              + " is out of range");
      }
      _cells.push_back(static_cast<std::uint8_t>(cells[i]));
    }
  }

  Groupoid
  Groupoid::from_rows(std::vector<std::vector<element_type>> const& rows,
                      std::vector<std::string>                      labels) {
    std::size_t const         n = rows.size();
    std::vector<element_type> cells;
    for (auto const& row : rows) {
      if (row.size() != n) {
        throw InvalidArgument("table is not square");
      }
      cells.insert(cells.end(), row.begin(), row.end());
    }
    if (labels.empty()) {
      labels = default_labels(n);
    }
    return Groupoid(n, cells, std::move(labels));
  }

  std::optional<element_type> Groupoid::index_of(std::string const& l) const {
    for (std::size_t i = 0; i < _labels.size(); ++i) {
      if (_labels[i] == l) {
        return static_cast<element_type>(i);
      }
    }
    return std::nullopt;
  }

  bool Groupoid::table_less(Groupoid const& a, Groupoid const& b) noexcept {
    if (a._order != b._order) {
      return a._order < b._order;
    }
    return std::lexicographical_compare(
        a._cells.begin(), a._cells.end(), b._cells.begin(), b._cells.end());
  }

  std::vector<std::string> default_labels(std::size_t order) {
    std::vector<std::string> out;
    out.reserve(order);
    for (std::size_t i = 0; i < order; ++i) {
      out.push_back(std::to_string(i));
    }
    return out;
  }

  std::string format_subset(Groupoid const& g, ElementSubset const& s) {
    std::string out = "{";
    bool        first = true;
    s.for_each([&](element_type x) {
      if (!first) {
        out += ',';
      }
      out += g.label(x);
      first = false;
    });
    return out + "}";
  }

  std::string format_tuple(Groupoid const&                  g,
                           std::vector<element_type> const& t) {
    std::string out = "(";
    for (std::size_t i = 0; i < t.size(); ++i) {
      if (i != 0) {
        out += ',';
      }
      out += g.label(t[i]);
    }
    return out + ")";
  }

}  // namespace agcheck
