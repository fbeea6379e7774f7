#include "agcheck/ideals.hpp"

#include <string>  // for string

#include "agcheck/error.hpp"

namespace agcheck {

  namespace {

    void check_nonempty(Groupoid const& g, ElementSubset const& a) {
      if (a.order() != g.order()) {
        throw InvalidArgument("subset bound to order "
                              + std::to_string(a.order())
                              + " but the groupoid has order "
                              + std::to_string(g.order()));
      }
      if (a.empty()) {
        throw InvalidArgument("ideal predicates require a nonempty subset");
      }
    }

    Verdict fail(Tuple t) {
      return Verdict{false, std::move(t)};
    }

    Verdict subgroupoid(Groupoid const& g, ElementSubset const& a) {
      for (auto x : a.elements()) {
        for (auto y : a.elements()) {
          if (!a.contains(g(x, y))) {
            return fail({x, y});
          }
        }
      }
      return {};
    }

    Verdict left(Groupoid const& g, ElementSubset const& a) {
      for (element_type s = 0; s < g.order(); ++s) {
        for (auto x : a.elements()) {
          if (!a.contains(g(s, x))) {
            return fail({s, x});
          }
        }
      }
      return {};
    }

    Verdict right(Groupoid const& g, ElementSubset const& a) {
      for (auto x : a.elements()) {
        for (element_type s = 0; s < g.order(); ++s) {
          if (!a.contains(g(x, s))) {
            return fail({x, s});
          }
        }
      }
      return {};
    }

    Verdict generalized_bi(Groupoid const& g, ElementSubset const& a) {
      auto const elts = a.elements();
      for (auto x : elts) {
        for (element_type s = 0; s < g.order(); ++s) {
          for (auto y : elts) {
            if (!a.contains(g(g(x, s), y))) {
              return fail({x, s, y});
            }
          }
        }
      }
      return {};
    }

    Verdict generalized_interior(Groupoid const& g, ElementSubset const& a) {
      auto const elts = a.elements();
      for (element_type s = 0; s < g.order(); ++s) {
        for (auto x : elts) {
          for (element_type t = 0; t < g.order(); ++t) {
            if (!a.contains(g(g(s, x), t))) {
              return fail({s, x, t});
            }
          }
        }
      }
      return {};
    }

    Verdict quasi(Groupoid const& g, ElementSubset const& a) {
      ElementSubset const s   = g.carrier();
      ElementSubset const bad = (subset_product(g, s, a) & subset_product(g, a, s)) - a;
      if (!bad.empty()) {
        return fail({bad.front()});
      }
      return {};
    }

    Verdict semiprime(Groupoid const& g, ElementSubset const& a) {
      for (element_type x = 0; x < g.order(); ++x) {
        if (a.contains(g(x, x)) && !a.contains(x)) {
          return fail({x});
        }
      }
      return {};
    }

    Verdict both(Verdict first, Verdict const& second) {
      return first.holds ? second : first;
    }

  }  // namespace

  std::string_view to_string(IdealKind kind) noexcept {
    switch (kind) {
      case IdealKind::subgroupoid:
        return "subgroupoid";
      case IdealKind::left:
        return "left";
      case IdealKind::right:
        return "right";
      case IdealKind::two_sided:
        return "two-sided";
      case IdealKind::generalized_bi:
        return "generalized-bi";
      case IdealKind::bi:
        return "bi";
      case IdealKind::generalized_interior:
        return "generalized-interior";
      case IdealKind::interior:
        return "interior";
      case IdealKind::quasi:
        return "quasi";
      case IdealKind::semiprime:
        return "semiprime";
    }
    return "unknown";
  }

  std::optional<IdealKind> parse_ideal_kind(std::string_view name) {
    for (auto k : all_kinds) {
      if (name == to_string(k)) {
        return k;
      }
    }
    if (name == "ideal" || name == "two_sided" || name == "twosided") {
      return IdealKind::two_sided;
    }
    if (name == "gen-bi" || name == "generalized_bi") {
      return IdealKind::generalized_bi;
    }
    if (name == "gen-interior" || name == "generalized_interior") {
      return IdealKind::generalized_interior;
    }
    return std::nullopt;
  }

  Verdict is_ideal(Groupoid const& g, ElementSubset const& a, IdealKind kind) {
    check_nonempty(g, a);
    switch (kind) {
      case IdealKind::subgroupoid:
        return subgroupoid(g, a);
      case IdealKind::left:
        return left(g, a);
      case IdealKind::right:
        return right(g, a);
      case IdealKind::two_sided:
        return both(left(g, a), right(g, a));
      case IdealKind::generalized_bi:
        return generalized_bi(g, a);
      case IdealKind::bi:
        return both(subgroupoid(g, a), generalized_bi(g, a));
      case IdealKind::generalized_interior:
        return generalized_interior(g, a);
      case IdealKind::interior:
        return both(subgroupoid(g, a), generalized_interior(g, a));
      case IdealKind::quasi:
        return quasi(g, a);
      case IdealKind::semiprime:
        return semiprime(g, a);
    }
    throw InvalidArgument("unknown ideal kind");
  }

  bool is_semiprime_subset(Groupoid const& g, ElementSubset const& a) {
    check_nonempty(g, a);
    return semiprime(g, a).holds;
  }

  std::vector<ElementSubset> nonempty_subsets(std::size_t order,
                                              std::size_t cap) {
    if (order > cap) {
      throw InvalidArgument("exhaustive subset scan of order "
                            + std::to_string(order) + " exceeds the cap of "
                            + std::to_string(cap));
    }
    std::vector<ElementSubset> out;
    std::uint64_t const        top = ElementSubset::mask(order);
    out.reserve(static_cast<std::size_t>(top));
    for (std::uint64_t bits = 1; bits <= top && bits != 0; ++bits) {
      out.emplace_back(order, bits);
    }
    return out;
  }

  std::vector<ElementSubset> enumerate_ideals(Groupoid const& g,
                                              IdealKind       kind,
                                              bool            semiprime_only,
                                              std::size_t     cap) {
    std::vector<ElementSubset> out;
    for (auto const& a : nonempty_subsets(g.order(), cap)) {
      if (is_ideal(g, a, kind).holds
          && (!semiprime_only || semiprime(g, a).holds)) {
        out.push_back(a);
      }
    }
    return out;
  }

}  // namespace agcheck
