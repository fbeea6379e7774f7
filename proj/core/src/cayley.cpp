#include "agcheck/cayley.hpp"

#include <string>  // for string

#include "agcheck/error.hpp"

namespace agcheck {

  namespace {

    template <typename Pred>
    LawCheck scan2(std::size_t n, Pred&& ok) {
      LawCheck out;
      for (element_type a = 0; a < n; ++a) {
        for (element_type b = 0; b < n; ++b) {
          ++out.tuples_checked;
          if (!out.counterexample && !ok(a, b)) {
            out.holds          = false;
            out.counterexample = Tuple{a, b};
          }
        }
      }
      return out;
    }

    template <typename Pred>
    LawCheck scan3(std::size_t n, Pred&& ok) {
      LawCheck out;
      for (element_type a = 0; a < n; ++a) {
        for (element_type b = 0; b < n; ++b) {
          for (element_type c = 0; c < n; ++c) {
            ++out.tuples_checked;
            if (!out.counterexample && !ok(a, b, c)) {
              out.holds          = false;
              out.counterexample = Tuple{a, b, c};
            }
          }
        }
      }
      return out;
    }

    template <typename Pred>
    LawCheck scan4(std::size_t n, Pred&& ok) {
      LawCheck out;
      for (element_type a = 0; a < n; ++a) {
        for (element_type b = 0; b < n; ++b) {
          for (element_type c = 0; c < n; ++c) {
            for (element_type d = 0; d < n; ++d) {
              ++out.tuples_checked;
              if (!out.counterexample && !ok(a, b, c, d)) {
                out.holds          = false;
                out.counterexample = Tuple{a, b, c, d};
              }
            }
          }
        }
      }
      return out;
    }

    std::string name(Groupoid const& g, element_type a) {
      return g.label(a);
    }

  }  // namespace

  LawReport check_identity_laws(Groupoid const& g) {
    std::size_t const n = g.order();
    LawReport         r;
    r.left_invertive = scan3(n, [&](auto a, auto b, auto c) {
      return g(g(a, b), c) == g(g(c, b), a);
    });
    r.medial = scan4(n, [&](auto a, auto b, auto c, auto d) {
      return g(g(a, b), g(c, d)) == g(g(a, c), g(b, d));
    });
    r.paramedial = scan4(n, [&](auto a, auto b, auto c, auto d) {
      return g(g(a, b), g(c, d)) == g(g(d, b), g(c, a));
    });
    r.law4 = scan3(
        n, [&](auto a, auto b, auto c) { return g(a, g(b, c)) == g(b, g(a, c)); });
    r.law5 = scan4(n, [&](auto a, auto b, auto c, auto d) {
      return g(g(a, b), g(c, d)) == g(g(d, c), g(b, a));
    });
    r.associative = scan3(
        n, [&](auto a, auto b, auto c) { return g(g(a, b), c) == g(a, g(b, c)); });
    r.commutative = scan2(n, [&](auto a, auto b) { return g(a, b) == g(b, a); });

    ElementSubset const ss = subset_product(g, g.carrier(), g.carrier());
    r.surjective.tuples_checked = n;
    ElementSubset const missing = g.carrier() - ss;
    if (!missing.empty()) {
      r.surjective.holds          = false;
      r.surjective.counterexample = Tuple{missing.front()};
    }
    return r;
  }

  bool is_left_invertive(Groupoid const& g) {
    std::size_t const n = g.order();
    for (element_type a = 0; a < n; ++a) {
      for (element_type b = 0; b < n; ++b) {
        for (element_type c = 0; c < n; ++c) {
          if (g(g(a, b), c) != g(g(c, b), a)) {
            return false;
          }
        }
      }
    }
    return true;
  }

  bool is_associative(Groupoid const& g) {
    std::size_t const n = g.order();
    for (element_type a = 0; a < n; ++a) {
      for (element_type b = 0; b < n; ++b) {
        for (element_type c = 0; c < n; ++c) {
          if (g(g(a, b), c) != g(a, g(b, c))) {
            return false;
          }
        }
      }
    }
    return true;
  }

  ElementSubset find_left_identities(Groupoid const& g) {
    std::size_t const n = g.order();
    ElementSubset     out(n);
    for (element_type e = 0; e < n; ++e) {
      bool identity_row = true;
      for (element_type x = 0; x < n && identity_row; ++x) {
        identity_row = g(e, x) == x;
      }
      if (identity_row) {
        out.insert(e);
      }
    }
    return out;
  }

  bool is_unitary(Groupoid const& g) {
    return !find_left_identities(g).empty() && is_left_invertive(g);
  }

  ElementSubset subset_product(Groupoid const&      g,
                               ElementSubset const& a,
                               ElementSubset const& b) {
    if (a.order() != g.order() || b.order() != g.order()) {
      throw InvalidArgument("subset order does not match the groupoid order "
                            + std::to_string(g.order()));
    }
    std::uint64_t out = 0;
    a.for_each([&](element_type x) {
      b.for_each([&](element_type y) { out |= std::uint64_t(1) << g(x, y); });
    });
    return ElementSubset(g.order(), out);
  }

  PrincipalSets principal_sets(Groupoid const& g, element_type a) {
    if (a >= g.order()) {
      throw InvalidArgument("element " + std::to_string(a)
                            + " out of range for order "
                            + std::to_string(g.order()));
    }
    std::size_t const   n = g.order();
    ElementSubset const s = g.carrier();
    PrincipalSets       p;
    p.Sa        = subset_product(g, s, ElementSubset::singleton(n, a));
    p.aS        = subset_product(g, ElementSubset::singleton(n, a), s);
    p.Sa2       = subset_product(g, s, ElementSubset::singleton(n, g(a, a)));
    p.Sa_cap_aS = p.Sa & p.aS;
    return p;
  }

  Groupoid from_abelian_group(Groupoid const& group) {
    std::size_t const n = group.order();
    auto const&       g = group;
    for (element_type a = 0; a < n; ++a) {
      for (element_type b = 0; b < n; ++b) {
        if (g(a, b) != g(b, a)) {
          throw InvalidArgument("not an abelian group: not commutative at ("
                                + name(g, a) + "," + name(g, b) + ")");
        }
        for (element_type c = 0; c < n; ++c) {
          if (g(g(a, b), c) != g(a, g(b, c))) {
            throw InvalidArgument("not an abelian group: not associative at ("
                                  + name(g, a) + "," + name(g, b) + ","
                                  + name(g, c) + ")");
          }
        }
      }
    }
    std::optional<element_type> identity;
    for (element_type e = 0; e < n && !identity; ++e) {
      bool ok = true;
      for (element_type x = 0; x < n && ok; ++x) {
        ok = g(e, x) == x && g(x, e) == x;
      }
      if (ok) {
        identity = e;
      }
    }
    if (!identity) {
      throw InvalidArgument("not an abelian group: no identity element");
    }
    std::vector<element_type> inverse(n);
    for (element_type x = 0; x < n; ++x) {
      bool found = false;
      for (element_type y = 0; y < n && !found; ++y) {
        if (g(x, y) == *identity) {
          inverse[x] = y;
          found      = true;
        }
      }
      if (!found) {
        throw InvalidArgument("not an abelian group: element " + name(g, x)
                              + " has no inverse");
      }
    }
    std::vector<element_type> cells(n * n);
    for (element_type x = 0; x < n; ++x) {
      for (element_type y = 0; y < n; ++y) {
        cells[x * n + y] = g(inverse[x], y);
      }
    }
    return Groupoid(n, cells, group.labels());
  }

}  // namespace agcheck
