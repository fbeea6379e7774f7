#include <string>  // for string

#include "agcheck/error.hpp"
#include "agcheck/verify.hpp"

namespace agcheck {

  std::optional<std::pair<element_type, element_type>>
  intra_regular_witness(Groupoid const& g, element_type a) {
    if (a >= g.order()) {
      throw InvalidArgument("element " + std::to_string(a) + " out of range");
    }
    element_type const a2 = g(a, a);
    for (element_type x = 0; x < g.order(); ++x) {
      element_type const xa2 = g(x, a2);
      for (element_type y = 0; y < g.order(); ++y) {
        if (g(xa2, y) == a) {
          return std::make_pair(x, y);
        }
      }
    }
    return std::nullopt;
  }

  bool verify_intra_witness(Groupoid const& g,
                            element_type    a,
                            element_type    x,
                            element_type    y) {
    if (a >= g.order() || x >= g.order() || y >= g.order()) {
      throw InvalidArgument("element out of range");
    }
    return g(g(x, g(a, a)), y) == a;
  }

  IntraRegularVerdict is_intra_regular(Groupoid const& g) {
    for (element_type a = 0; a < g.order(); ++a) {
      if (!intra_regular_witness(g, a)) {
        return {false, a};
      }
    }
    return {};
  }

  std::string_view to_string(Lemma34Clause c) noexcept {
    switch (c) {
      case Lemma34Clause::i:
        return "(i)";
      case Lemma34Clause::ii:
        return "(ii)";
      case Lemma34Clause::iii:
        return "(iii)";
      case Lemma34Clause::iv:
        return "(iv)";
      case Lemma34Clause::v:
        return "(v)";
      case Lemma34Clause::vi:
        return "(vi)";
      case Lemma34Clause::vii:
        return "(vii)";
      case Lemma34Clause::viii:
        return "(viii)";
    }
    return "?";
  }

  std::string_view lemma34_identity(Lemma34Clause c) noexcept {
    switch (c) {
      case Lemma34Clause::i:
        return "a = a(za)";
      case Lemma34Clause::ii:
        return "a = (wa)a";
      case Lemma34Clause::iii:
        return "a = (a^2(x^2 y^2))a";
      case Lemma34Clause::iv:
        return "a = (a(x^2 y^2))a^2";
      case Lemma34Clause::v:
        return "a = a^2((a y^2)x^2)";
      case Lemma34Clause::vi:
        return "a = (a((y^2 x^2)a))a";
      case Lemma34Clause::vii:
        return "a = (a^2 z)a^2";
      case Lemma34Clause::viii:
        return "a^2 = (az)a";
    }
    return "?";
  }

  std::size_t lemma34_arity(Lemma34Clause c) noexcept {
    switch (c) {
      case Lemma34Clause::iii:
      case Lemma34Clause::iv:
      case Lemma34Clause::v:
      case Lemma34Clause::vi:
        return 2;
      default:
        return 1;
    }
  }

  bool check_lemma34_clause(Groupoid const& g,
                            element_type    a,
                            Lemma34Clause   c,
                            Tuple const&    w) {
    if (w.size() != lemma34_arity(c)) {
      throw InvalidArgument("wrong number of witness elements for clause "
                            + std::string(to_string(c)));
    }
    for (auto x : w) {
      if (x >= g.order()) {
        throw InvalidArgument("witness element out of range");
      }
    }
    if (a >= g.order()) {
      throw InvalidArgument("element out of range");
    }
    auto const         sq = [&](element_type x) { return g(x, x); };
    element_type const a2 = sq(a);
    switch (c) {
      case Lemma34Clause::i:
        return a == g(a, g(w[0], a));
      case Lemma34Clause::ii:
        return a == g(g(w[0], a), a);
      case Lemma34Clause::iii:
        return a == g(g(a2, g(sq(w[0]), sq(w[1]))), a);
      case Lemma34Clause::iv:
        return a == g(g(a, g(sq(w[0]), sq(w[1]))), a2);
      case Lemma34Clause::v:
        return a == g(a2, g(g(a, sq(w[1])), sq(w[0])));
      case Lemma34Clause::vi:
        return a == g(g(a, g(g(sq(w[1]), sq(w[0])), a)), a);
      case Lemma34Clause::vii:
        return a == g(g(a2, w[0]), a2);
      case Lemma34Clause::viii:
        return a2 == g(g(a, w[0]), a);
    }
    return false;
  }

  Lemma34Witnesses lemma34_witnesses(Groupoid const& g, element_type a) {
    if (a >= g.order()) {
      throw InvalidArgument("element " + std::to_string(a) + " out of range");
    }
    if (!is_unitary(g)) {
      throw InvalidArgument(
          "Lemma 3.4 witnesses need a unitary AG-groupoid (left invertive "
          "with a left identity)");
    }
    if (!intra_regular_witness(g, a)) {
      throw InvalidArgument("element " + g.label(a) + " is not intra-regular");
    }
    Lemma34Witnesses out;
    for (auto c : lemma34_clauses) {
      auto& slot = out.witness[static_cast<std::size_t>(c)];
      if (lemma34_arity(c) == 1) {
        for (element_type z = 0; z < g.order() && !slot; ++z) {
          if (check_lemma34_clause(g, a, c, {z})) {
            slot = Tuple{z};
          }
        }
      } else {
        for (element_type x = 0; x < g.order() && !slot; ++x) {
          for (element_type y = 0; y < g.order() && !slot; ++y) {
            if (check_lemma34_clause(g, a, c, {x, y})) {
              slot = Tuple{x, y};
            }
          }
        }
      }
    }
    return out;
  }

}  // namespace agcheck
