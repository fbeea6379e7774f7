#include <algorithm>   // for find_if
#include <functional>  // for function
#include <map>         // for map
#include <memory>      // for unique_ptr
#include <string>      // for string, to_string

#include "agcheck/error.hpp"
#include "agcheck/random.hpp"
#include "agcheck/verify.hpp"

namespace agcheck {

  std::string_view to_string(ConditionVerdict v) noexcept {
    switch (v) {
      case ConditionVerdict::holds:
        return "holds";
      case ConditionVerdict::fails:
        return "fails";
      case ConditionVerdict::holds_on_sample:
        return "holds-on-sample";
      case ConditionVerdict::not_applicable:
        return "not-applicable";
    }
    return "?";
  }

  std::string_view to_string(StatementShape s) noexcept {
    switch (s) {
      case StatementShape::equivalence:
        return "equivalence";
      case StatementShape::implication:
        return "implication";
      case StatementShape::universal:
        return "universal";
    }
    return "?";
  }

  bool compute_agreement(StatementShape                     shape,
                         std::vector<ConditionEntry> const& conditions) {
    auto decided = [](ConditionEntry const& e) {
      return e.decisive
             && (e.verdict == ConditionVerdict::holds
                 || e.verdict == ConditionVerdict::fails);
    };
    switch (shape) {
      case StatementShape::equivalence: {
        std::optional<bool> value;
        for (auto const& e : conditions) {
          if (!decided(e)) {
            continue;
          }
          bool const v = e.verdict == ConditionVerdict::holds;
          if (value && *value != v) {
            return false;
          }
          value = v;
        }
        return true;
      }
      case StatementShape::implication:
        if (conditions.empty() || !decided(conditions.front())
            || conditions.front().verdict == ConditionVerdict::fails) {
          return true;
        }
        [[fallthrough]];
      case StatementShape::universal:
        for (auto const& e : conditions) {
          if (decided(e) && e.verdict == ConditionVerdict::fails) {
            return false;
          }
        }
        return true;
    }
    return true;
  }

  namespace {

    // Exhaustive scans over arbitrary subsets are limited to this order.
    constexpr std::size_t subset_scan_cap = 6;

    std::uint64_t fnv1a(std::string_view s) {
      std::uint64_t h = 0xcbf29ce484222325ULL;
      for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
      }
      return h;
    }

    std::uint64_t mix(std::uint64_t a, std::uint64_t b) {
      return splitmix64(a ^ splitmix64(b));
    }

    using Trial = std::function<std::optional<std::string>(
        KParam const&, std::uint64_t, std::uint64_t)>;

    class Ctx {
     public:
      Ctx(Groupoid const& g, FuzzyConfig const& cfg, std::string_view id)
          : g(g), cfg(cfg), id(id), n(g.order()) {}

      Groupoid const&    g;
      FuzzyConfig const& cfg;
      std::string        id;
      std::size_t        n;

      std::vector<ElementSubset> const& ideals(IdealKind kind) {
        auto it = _ideals.find(kind);
        if (it == _ideals.end()) {
          it = _ideals.emplace(kind, enumerate_ideals(g, kind)).first;
        }
        return it->second;
      }

      std::vector<ElementSubset> const& subsets() {
        if (!_subsets) {
          _subsets = nonempty_subsets(n, subset_scan_cap);
        }
        return *_subsets;
      }

      FuzzySubset sample(IdealKind kind, std::uint64_t seed, std::uint64_t i) {
        auto it = _samplers.find(kind);
        if (it == _samplers.end()) {
          it = _samplers
                   .emplace(kind,
                            std::make_unique<FuzzyIdealSampler>(g, kind, cfg.grid))
                   .first;
        }
        return it->second->sample(seed, i);
      }

      FuzzySubset random(std::uint64_t seed, std::uint64_t i) const {
        return random_fuzzy_subset(n, cfg.grid, seed, i);
      }

      std::string fmt(ElementSubset const& s) const {
        return format_subset(g, s);
      }

      std::string const& lab(element_type x) const {
        return g.label(x);
      }

      IntraRegularVerdict const& intra() {
        if (!_intra) {
          _intra = is_intra_regular(g);
        }
        return *_intra;
      }

     private:
      std::map<IdealKind, std::vector<ElementSubset>>                 _ideals;
      std::map<IdealKind, std::unique_ptr<FuzzyIdealSampler>>         _samplers;
      std::optional<std::vector<ElementSubset>>                       _subsets;
      std::optional<IntraRegularVerdict>                              _intra;
    };

    ConditionEntry crisp(std::string                label,
                         std::optional<std::string> cex,
                         bool                       informational = false) {
      ConditionEntry e;
      e.label          = std::move(label);
      e.verdict        = cex ? ConditionVerdict::fails : ConditionVerdict::holds;
      e.counterexample = std::move(cex);
      e.informational  = informational;
      e.decisive       = !informational;
      return e;
    }

    ConditionEntry not_applicable(std::string label, bool sampled = false) {
      ConditionEntry e;
      e.label   = std::move(label);
      e.verdict = ConditionVerdict::not_applicable;
      e.sampled = sampled;
      if (sampled) {
        e.sample_size = 0;
      }
      return e;
    }

    ConditionEntry sampled(Ctx&        c,
                           std::string label,
                           Trial const& trial,
                           bool        informational = false) {
      ConditionEntry e;
      e.label         = std::move(label);
      e.sampled       = true;
      e.informational = informational;
      if (c.cfg.samples == 0 || c.cfg.k_values.empty()) {
        e.verdict     = ConditionVerdict::not_applicable;
        e.sample_size = 0;
        return e;
      }
      std::uint64_t const salt = mix(c.cfg.seed, fnv1a(c.id + "|" + e.label));
      std::size_t         done = 0;
      for (std::size_t ki = 0; ki < c.cfg.k_values.size(); ++ki) {
        auto const&         k    = c.cfg.k_values[ki];
        std::uint64_t const seed = mix(salt, ki);
        for (std::size_t i = 0; i < c.cfg.samples; ++i) {
          ++done;
          if (auto r = trial(k, seed, i)) {
            e.verdict        = ConditionVerdict::fails;
            e.decisive       = !informational;
            e.counterexample = "k=" + k.str() + ", sample " + std::to_string(i)
                               + ": " + *r;
            e.sample_size    = done;
            return e;
          }
        }
      }
      e.verdict     = ConditionVerdict::holds_on_sample;
      e.sample_size = done;
      return e;
    }

    // First x with lhs(x) > rhs(x), described.
    std::optional<std::string> leq_violation(Ctx&               c,
                                             FuzzySubset const& lhs,
                                             FuzzySubset const& rhs) {
      for (element_type x = 0; x < c.n; ++x) {
        if (rhs[x] < lhs[x]) {
          return "at " + c.lab(x) + ": " + lhs[x].str() + " > " + rhs[x].str();
        }
      }
      return std::nullopt;
    }

    ConditionEntry intra_entry(Ctx& c) {
      auto const& v = c.intra();
      if (v.holds) {
        return crisp("S is intra-regular", std::nullopt);
      }
      return crisp("S is intra-regular",
                   "element " + c.lab(*v.failing_element)
                       + " has no x, y with a = (x a^2) y");
    }

    ElementSubset Sa(Ctx& c, element_type a) {
      return subset_product(c.g, c.g.carrier(), ElementSubset::singleton(c.n, a));
    }

    ElementSubset Sa2(Ctx& c, element_type a) {
      return subset_product(
          c.g, c.g.carrier(), ElementSubset::singleton(c.n, c.g(a, a)));
    }

    ElementSubset prod(Ctx& c, ElementSubset const& a, ElementSubset const& b) {
      return subset_product(c.g, a, b);
    }

    // A n B n C <= (AB)C, with A drawn from `as` in each of the positions.
    std::optional<std::string>
    triple_in_any_position(Ctx&                              c,
                           std::vector<ElementSubset> const& as,
                           std::vector<ElementSubset> const& others,
                           std::string_view                  what) {
      for (auto const& a : as) {
        for (auto const& b : others) {
          for (auto const& d : others) {
            ElementSubset const xs[3][3] = {{a, b, d}, {b, a, d}, {b, d, a}};
            for (std::size_t pos = 0; pos < 3; ++pos) {
              auto const& [p, q, r] = xs[pos];
              ElementSubset const lhs = p & q & r;
              ElementSubset const rhs = prod(c, prod(c, p, q), r);
              if (!lhs.is_subset_of(rhs)) {
                return std::string(what) + " " + c.fmt(a) + " in position "
                       + std::to_string(pos + 1) + " with " + c.fmt(b) + ", "
                       + c.fmt(d) + ": A n B n C = " + c.fmt(lhs)
                       + " not contained in (AB)C = " + c.fmt(rhs);
              }
            }
          }
        }
      }
      return std::nullopt;
    }

    std::optional<std::string> triple_first(Ctx&                              c,
                                            std::vector<ElementSubset> const& as,
                                            std::vector<ElementSubset> const& bs,
                                            bool reverse) {
      for (auto const& a : as) {
        for (auto const& b : bs) {
          for (auto const& d : bs) {
            ElementSubset const meet3 = a & b & d;
            ElementSubset const rhs   = prod(c, prod(c, a, b), d);
            bool const ok = reverse ? rhs.is_subset_of(meet3)
                                    : meet3.is_subset_of(rhs);
            if (!ok) {
              return "A = " + c.fmt(a) + ", B = " + c.fmt(b) + ", C = "
                     + c.fmt(d) + ": A n B n C = " + c.fmt(meet3)
                     + ", (AB)C = " + c.fmt(rhs);
            }
          }
        }
      }
      return std::nullopt;
    }

    // A n B <= AB n BA.
    std::optional<std::string> pair_check(Ctx&                              c,
                                          std::vector<ElementSubset> const& as,
                                          std::vector<ElementSubset> const& bs) {
      for (auto const& a : as) {
        for (auto const& b : bs) {
          ElementSubset const lhs = a & b;
          ElementSubset const rhs = prod(c, a, b) & prod(c, b, a);
          if (!lhs.is_subset_of(rhs)) {
            return "A = " + c.fmt(a) + ", B = " + c.fmt(b) + ": A n B = "
                   + c.fmt(lhs) + ", AB n BA = " + c.fmt(rhs);
          }
        }
      }
      return std::nullopt;
    }

    std::optional<std::string> all_semiprime(Ctx& c, IdealKind kind) {
      for (auto const& a : c.ideals(kind)) {
        auto v = is_ideal(c.g, a, IdealKind::semiprime);
        if (!v.holds) {
          auto const x = v.counterexample->front();
          return std::string(to_string(kind)) + " ideal " + c.fmt(a) + ": "
                 + c.lab(x) + "^2 in A but " + c.lab(x) + " not in A";
        }
      }
      return std::nullopt;
    }

    // Fuzzy helpers: (f ^k g) ^k h <= (f ok g) ok h, and the pair version.
    std::optional<std::string> fuzzy_triple(Ctx&               c,
                                            FuzzySubset const& f,
                                            FuzzySubset const& g,
                                            FuzzySubset const& h,
                                            KParam const&      k) {
      auto lhs = meet_k(meet_k(f, g, k), h, k);
      auto rhs = compose_k(c.g, compose_k(c.g, f, g, k), h, k);
      if (auto v = leq_violation(c, lhs, rhs)) {
        return "f=" + f.str() + ", g=" + g.str() + ", h=" + h.str() + ", " + *v;
      }
      return std::nullopt;
    }

    std::optional<std::string> fuzzy_triple_any_position(Ctx&               c,
                                                         FuzzySubset const& f,
                                                         FuzzySubset const& g,
                                                         FuzzySubset const& h,
                                                         KParam const&      k) {
      if (auto r = fuzzy_triple(c, f, g, h, k)) {
        return "ideal first, " + *r;
      }
      if (auto r = fuzzy_triple(c, g, f, h, k)) {
        return "ideal second, " + *r;
      }
      if (auto r = fuzzy_triple(c, g, h, f, k)) {
        return "ideal third, " + *r;
      }
      return std::nullopt;
    }

    std::optional<std::string> fuzzy_pair(Ctx&               c,
                                          FuzzySubset const& f,
                                          FuzzySubset const& g,
                                          KParam const&      k) {
      auto lhs = meet_k(f, g, k);
      auto rhs = meet(compose_k(c.g, f, g, k), compose_k(c.g, g, f, k));
      if (auto v = leq_violation(c, lhs, rhs)) {
        return "f=" + f.str() + ", g=" + g.str() + ", " + *v;
      }
      return std::nullopt;
    }

    // Slots for independent draws within one trial.
    std::uint64_t slot(std::uint64_t seed, std::uint64_t s) {
      return mix(seed, s + 1);
    }

    ////////////////////////////////////////////////////////////////////////
    // Statements
    ////////////////////////////////////////////////////////////////////////

    using Conditions = std::vector<ConditionEntry>;

    Conditions t38(Ctx& c) {
      Conditions out{intra_entry(c)};
      std::optional<std::string> cex;
      for (element_type a = 0; a < c.n && !cex; ++a) {
        auto const s = Sa2(c, a);
        if (!s.contains(a)) {
          cex = "a = " + c.lab(a) + ": Sa^2 = " + c.fmt(s);
        }
      }
      out.push_back(crisp("a in Sa^2 for every a", cex));
      return out;
    }

    Conditions c39(Ctx& c) {
      return {intra_entry(c),
              crisp("all right ideals are semiprime",
                    all_semiprime(c, IdealKind::right)),
              crisp("all interior ideals are semiprime",
                    all_semiprime(c, IdealKind::interior))};
    }

    Conditions t310(Ctx& c) {
      Conditions out{intra_entry(c)};
      out.push_back(crisp(
          "(ii) A n B n C <= (AB)C when one of A, B, C is a left ideal",
          triple_in_any_position(
              c, c.ideals(IdealKind::left), c.subsets(), "left ideal")));
      out.push_back(sampled(
          c,
          "(iii) f ^k g ^k h <= (f ok g) ok h when one is a fuzzy left ideal",
          [&](KParam const& k, std::uint64_t seed, std::uint64_t i) {
            auto f = c.sample(IdealKind::left, slot(seed, 0), i);
            auto g = c.random(slot(seed, 1), i);
            auto h = c.random(slot(seed, 2), i);
            return fuzzy_triple_any_position(c, f, g, h, k);
          }));
      return out;
    }

    Conditions c311(Ctx& c) {
      auto const& ls = c.ideals(IdealKind::left);
      Conditions  out{intra_entry(c)};
      out.push_back(crisp("(ii) A n B n C <= (AB)C for all left ideals",
                          triple_first(c, ls, ls, false)));
      out.push_back(sampled(
          c,
          "(iii) f ^k g ^k h <= (f ok g) ok h for all fuzzy left ideals",
          [&](KParam const& k, std::uint64_t seed, std::uint64_t i) {
            auto f = c.sample(IdealKind::left, slot(seed, 0), i);
            auto g = c.sample(IdealKind::left, slot(seed, 1), i);
            auto h = c.sample(IdealKind::left, slot(seed, 2), i);
            return fuzzy_triple(c, f, g, h, k);
          }));
      return out;
    }

    Conditions t312(Ctx& c) {
      auto const& ls = c.ideals(IdealKind::left);
      Conditions  out{intra_entry(c)};
      out.push_back(
          crisp("(ii) A n B <= AB n BA for all left ideals", pair_check(c, ls, ls)));
      out.push_back(sampled(
          c,
          "(iii) f ^k g <= (f ok g) ^ (g ok f) for all fuzzy left ideals",
          [&](KParam const& k, std::uint64_t seed, std::uint64_t i) {
            auto f = c.sample(IdealKind::left, slot(seed, 0), i);
            auto g = c.sample(IdealKind::left, slot(seed, 1), i);
            return fuzzy_pair(c, f, g, k);
          }));
      return out;
    }

    Conditions t313(Ctx& c) {
      auto const& bs = c.ideals(IdealKind::bi);
      Conditions  out{intra_entry(c)};
      out.push_back(
          crisp("(ii) A n B n C <= (AB)C for each bi-ideal A and all B, C",
                triple_first(c, bs, c.subsets(), false)));
      out.push_back(
          crisp("(ii) (AB)C <= A n B n C for each bi-ideal A and all B, C",
                triple_first(c, bs, c.subsets(), true),
                true));
      out.push_back(sampled(
          c,
          "(iii) f ^k g ^k h <= (f ok g) ok h for each fuzzy bi-ideal f",
          [&](KParam const& k, std::uint64_t seed, std::uint64_t i) {
            auto f = c.sample(IdealKind::bi, slot(seed, 0), i);
            auto g = c.random(slot(seed, 1), i);
            auto h = c.random(slot(seed, 2), i);
            return fuzzy_triple(c, f, g, h, k);
          }));
      out.push_back(sampled(
          c,
          "(iv) f ^k g ^k h <= (f ok g) ok h for each fuzzy generalized "
          "bi-ideal f",
          [&](KParam const& k, std::uint64_t seed, std::uint64_t i) {
            auto f = c.sample(IdealKind::generalized_bi, slot(seed, 0), i);
            auto g = c.random(slot(seed, 1), i);
            auto h = c.random(slot(seed, 2), i);
            return fuzzy_triple(c, f, g, h, k);
          }));
      return out;
    }

    Conditions c314(Ctx& c) {
      auto const& bs = c.ideals(IdealKind::bi);
      Conditions  out{intra_entry(c)};
      out.push_back(crisp("(ii) A n B n C <= (AB)C for all bi-ideals",
                          triple_first(c, bs, bs, false)));
      out.push_back(crisp("(ii) (AB)C <= A n B n C for all bi-ideals",
                          triple_first(c, bs, bs, true),
                          true));
      out.push_back(sampled(
          c,
          "(iii) f ^k g ^k h <= (f ok g) ok h for all fuzzy bi-ideals",
          [&](KParam const& k, std::uint64_t seed, std::uint64_t i) {
            auto f = c.sample(IdealKind::bi, slot(seed, 0), i);
            auto g = c.sample(IdealKind::bi, slot(seed, 1), i);
            auto h = c.sample(IdealKind::bi, slot(seed, 2), i);
            return fuzzy_triple(c, f, g, h, k);
          }));
      out.push_back(sampled(
          c,
          "(iv) f ^k g ^k h <= (f ok g) ok h for all fuzzy generalized "
          "bi-ideals",
          [&](KParam const& k, std::uint64_t seed, std::uint64_t i) {
            auto f = c.sample(IdealKind::generalized_bi, slot(seed, 0), i);
            auto g = c.sample(IdealKind::generalized_bi, slot(seed, 1), i);
            auto h = c.sample(IdealKind::generalized_bi, slot(seed, 2), i);
            return fuzzy_triple(c, f, g, h, k);
          }));
      return out;
    }

    Conditions t315(Ctx& c) {
      Conditions out{intra_entry(c)};
      out.push_back(crisp("(ii) A n B <= AB n BA for each bi-ideal A and all B",
                          pair_check(c, c.ideals(IdealKind::bi), c.subsets())));
      out.push_back(sampled(
          c,
          "(iii) f ^k g <= (f ok g) ^ (g ok f) for each fuzzy bi-ideal f",
          [&](KParam const& k, std::uint64_t seed, std::uint64_t i) {
            auto f = c.sample(IdealKind::bi, slot(seed, 0), i);
            auto g = c.random(slot(seed, 1), i);
            return fuzzy_pair(c, f, g, k);
          }));
      return out;
    }

    Conditions c316(Ctx& c) {
      auto const& bs = c.ideals(IdealKind::bi);
      Conditions  out{intra_entry(c)};
      out.push_back(
          crisp("(ii) A n B <= AB n BA for all bi-ideals", pair_check(c, bs, bs)));
      out.push_back(sampled(
          c,
          "(iii) f ^k g <= (f ok g) ^ (g ok f) for all fuzzy bi-ideals",
          [&](KParam const& k, std::uint64_t seed, std::uint64_t i) {
            auto f = c.sample(IdealKind::bi, slot(seed, 0), i);
            auto g = c.sample(IdealKind::bi, slot(seed, 1), i);
            return fuzzy_pair(c, f, g, k);
          }));
      return out;
    }

    std::optional<std::string>
    square_check(Ctx& c, IdealKind kind, bool equality, bool cubed) {
      for (auto const& a : c.ideals(kind)) {
        ElementSubset rhs = prod(c, a, a);
        if (cubed) {
          rhs = prod(c, rhs, a);
        }
        bool const ok = equality ? rhs == a : a.is_subset_of(rhs);
        if (!ok) {
          return "A = " + c.fmt(a) + (cubed ? ", (A^2)A = " : ", A^2 = ")
                 + c.fmt(rhs);
        }
      }
      return std::nullopt;
    }

    Conditions t317(Ctx& c) {
      Conditions out{intra_entry(c)};
      out.push_back(crisp("(i) A = A^2 for all left ideals",
                          square_check(c, IdealKind::left, true, false)));
      out.push_back(crisp("(ii) A = (A^2)A for all left ideals",
                          square_check(c, IdealKind::left, true, true)));
      out.push_back(sampled(
          c,
          "(iii) f_k <= f ok f for all fuzzy left ideals",
          [&](KParam const& k, std::uint64_t seed, std::uint64_t i) {
            auto f = c.sample(IdealKind::left, slot(seed, 0), i);
            auto v = leq_violation(c, truncate_k(f, k), compose_k(c.g, f, f, k));
            return v ? std::optional<std::string>("f=" + f.str() + ", " + *v)
                     : std::nullopt;
          }));
      out.push_back(sampled(
          c,
          "(iv) f_k <= (f ok f) ok f for all fuzzy left ideals",
          [&](KParam const& k, std::uint64_t seed, std::uint64_t i) {
            auto f   = c.sample(IdealKind::left, slot(seed, 0), i);
            auto rhs = compose_k(c.g, compose_k(c.g, f, f, k), f, k);
            auto v   = leq_violation(c, truncate_k(f, k), rhs);
            return v ? std::optional<std::string>("f=" + f.str() + ", " + *v)
                     : std::nullopt;
          }));
      out.push_back(crisp("(i') A <= A^2 for all left ideals",
                          square_check(c, IdealKind::left, false, false)));
      out.push_back(crisp("(i') A <= A^2 for all bi-ideals",
                          square_check(c, IdealKind::bi, false, false)));
      out.push_back(crisp("(i') A <= A^2 for all generalized bi-ideals",
                          square_check(c, IdealKind::generalized_bi, false, false)));
      out.push_back(crisp("(i) A = A^2 for all bi-ideals",
                          square_check(c, IdealKind::bi, true, false)));
      out.push_back(crisp("(i) A = A^2 for all generalized bi-ideals",
                          square_check(c, IdealKind::generalized_bi, true, false)));
      return out;
    }

    Conditions p41(Ctx& c) {
      std::optional<std::string> cex;
      for (element_type a = 0; a < c.n && !cex; ++a) {
        auto const p = principal_sets(c.g, a);
        std::pair<char const*, ElementSubset const*> const sets[]
            = {{"Sa n aS", &p.Sa_cap_aS}, {"Sa", &p.Sa}, {"Sa^2", &p.Sa2}};
        for (auto const& [name, s] : sets) {
          if (!is_ideal(c.g, *s, IdealKind::quasi).holds) {
            cex = "a = " + c.lab(a) + ": " + name + " = " + c.fmt(*s)
                  + " is not a quasi-ideal";
            break;
          }
        }
      }
      return {crisp("Sa n aS, Sa and Sa^2 are quasi-ideals for every a", cex)};
    }

    Conditions c42(Ctx& c) {
      std::optional<std::string> lhs, rhs;
      for (element_type a = 0; a < c.n; ++a) {
        auto const sa  = Sa(c, a);
        auto const sa2 = Sa2(c, a);
        auto const pp  = prod(c, sa, sa);
        auto const qs  = prod(c, sa2, c.g.carrier());
        if (!lhs && pp != sa2) {
          lhs = "a = " + c.lab(a) + ": Sa.Sa = " + c.fmt(pp) + ", Sa^2 = "
                + c.fmt(sa2);
        }
        if (!rhs && qs != sa2) {
          rhs = "a = " + c.lab(a) + ": Sa^2 = " + c.fmt(sa2) + ", Sa^2.S = "
                + c.fmt(qs);
        }
      }
      return {crisp("Sa.Sa = Sa^2 for every a", lhs),
              crisp("Sa^2 = Sa^2.S for every a", rhs)};
    }

    Conditions p43(Ctx& c) {
      Conditions out{intra_entry(c)};
      auto       cex = all_semiprime(c, IdealKind::quasi);
      out.push_back(out.front().verdict == ConditionVerdict::holds
                        ? crisp("all quasi-ideals are semiprime", cex)
                        : not_applicable("all quasi-ideals are semiprime"));
      out.push_back(crisp(
          "all quasi-ideals are semiprime, without intra-regularity", cex, true));
      return out;
    }

    Conditions t48(Ctx& c) {
      auto const& qs = c.ideals(IdealKind::quasi);
      Conditions  out{intra_entry(c)};
      std::optional<std::string> ii;
      for (element_type a = 0; a < c.n && !ii; ++a) {
        auto const sa  = Sa(c, a);
        auto const sa2 = Sa2(c, a);
        if (!sa.is_subset_of(sa2)) {
          ii = "a = " + c.lab(a) + ": Sa = " + c.fmt(sa) + ", Sa^2 = "
               + c.fmt(sa2);
        }
      }
      out.push_back(crisp("(ii) Sa <= Sa^2 for every a", ii));
      std::optional<std::string> iii;
      for (auto const& a : qs) {
        for (auto const& b : qs) {
          if (!iii && !(a & b).is_subset_of(prod(c, a, b))) {
            iii = "I = " + c.fmt(a) + ", J = " + c.fmt(b) + ": I n J = "
                  + c.fmt(a & b) + ", IJ = " + c.fmt(prod(c, a, b));
          }
        }
      }
      out.push_back(crisp("(iii) I n J <= IJ for all quasi-ideals", iii));
      out.push_back(sampled(
          c,
          "(iv) f ^k g <= f ok g for all fuzzy quasi-ideals",
          [&](KParam const& k, std::uint64_t seed, std::uint64_t i) {
            auto f = c.sample(IdealKind::quasi, slot(seed, 0), i);
            auto g = c.sample(IdealKind::quasi, slot(seed, 1), i);
            auto v = leq_violation(c, meet_k(f, g, k), compose_k(c.g, f, g, k));
            return v ? std::optional<std::string>("f=" + f.str() + ", g="
                                                  + g.str() + ", " + *v)
                     : std::nullopt;
          }));
      return out;
    }

    Conditions c34(Ctx& c) {
      Conditions out{intra_entry(c)};
      std::optional<std::string> i;
      for (auto const& q : c.ideals(IdealKind::quasi)) {
        auto const q2 = prod(c, q, q);
        if (q2 != q) {
          i = "Q = " + c.fmt(q) + ", Q^2 = " + c.fmt(q2);
          break;
        }
      }
      out.push_back(crisp("(i) Q^2 = Q for all quasi-ideals", i));
      std::optional<std::string> ii;
      for (element_type a = 0; a < c.n && !ii; ++a) {
        auto const sa  = Sa(c, a);
        auto const sa2 = Sa2(c, a);
        if (sa != sa2) {
          ii = "a = " + c.lab(a) + ": Sa = " + c.fmt(sa) + ", Sa^2 = "
               + c.fmt(sa2);
        }
      }
      out.push_back(crisp("(ii) Sa = Sa^2 for every a", ii));
      out.push_back(sampled(
          c,
          "(iii) f_k <= f ok f for all fuzzy quasi-ideals",
          [&](KParam const& k, std::uint64_t seed, std::uint64_t j) {
            auto f = c.sample(IdealKind::quasi, slot(seed, 0), j);
            auto v = leq_violation(c, truncate_k(f, k), compose_k(c.g, f, f, k));
            return v ? std::optional<std::string>("f=" + f.str() + ", " + *v)
                     : std::nullopt;
          }));
      return out;
    }

    Conditions c26(Ctx& c) {
      std::optional<std::string> cex;
      for (auto const& a : c.ideals(IdealKind::right)) {
        if (!is_ideal(c.g, a, IdealKind::left).holds) {
          cex = "right ideal " + c.fmt(a) + " is not a left ideal";
          break;
        }
      }
      Conditions out{crisp("every right ideal is a left ideal", cex)};
      out.push_back(sampled(
          c,
          "every fuzzy right ideal is a fuzzy left ideal",
          [&](KParam const& k, std::uint64_t seed, std::uint64_t i) {
            auto f = c.sample(IdealKind::right, slot(seed, 0), i);
            auto v = is_fuzzy_ideal(c.g, f, k, IdealKind::left);
            return v.holds ? std::nullopt
                           : std::optional<std::string>(
                               "f=" + f.str() + " fails the left ideal "
                               + "inequality at "
                               + format_tuple(c.g, *v.counterexample));
          }));
      return out;
    }

    Conditions c47(Ctx& c) {
      std::optional<std::string> cex;
      for (auto kind : {IdealKind::left, IdealKind::right}) {
        for (auto const& a : c.ideals(kind)) {
          if (!cex && !is_ideal(c.g, a, IdealKind::quasi).holds) {
            cex = std::string(to_string(kind)) + " ideal " + c.fmt(a)
                  + " is not a quasi-ideal";
          }
        }
      }
      Conditions out{crisp("every left and right ideal is a quasi-ideal", cex)};
      out.push_back(sampled(
          c,
          "every fuzzy left ideal is a fuzzy quasi-ideal",
          [&](KParam const& k, std::uint64_t seed, std::uint64_t i) {
            auto f = c.sample(IdealKind::left, slot(seed, 0), i);
            auto v = is_fuzzy_ideal(c.g, f, k, IdealKind::quasi);
            return v.holds ? std::nullopt
                           : std::optional<std::string>(
                               "f=" + f.str() + " fails at "
                               + format_tuple(c.g, *v.counterexample));
          }));
      return out;
    }

    constexpr IdealKind c35_kinds[] = {IdealKind::left,
                                       IdealKind::right,
                                       IdealKind::generalized_bi,
                                       IdealKind::interior,
                                       IdealKind::generalized_interior};

    Conditions c35(Ctx& c) {
      Conditions out{intra_entry(c)};
      bool const on = out.front().verdict == ConditionVerdict::holds;
      for (auto kind : c35_kinds) {
        std::string label = "fuzzy " + std::string(to_string(kind))
                            + " ideals are fuzzy semiprime";
        if (!on) {
          out.push_back(not_applicable(label, true));
          continue;
        }
        out.push_back(sampled(
            c, label, [&, kind](KParam const& k, std::uint64_t seed, std::uint64_t i) {
              auto f = c.sample(kind, slot(seed, 0), i);
              auto v = is_fuzzy_ideal(c.g, f, k, IdealKind::semiprime);
              return v.holds ? std::nullopt
                             : std::optional<std::string>(
                                 "f=" + f.str() + " fails at "
                                 + format_tuple(c.g, *v.counterexample));
            }));
      }
      return out;
    }

    Conditions r35(Ctx& c) {
      Conditions        out{intra_entry(c)};
      std::string const label = "all generalized interior ideals are semiprime";
      if (out.front().verdict == ConditionVerdict::holds) {
        out.push_back(
            crisp(label, all_semiprime(c, IdealKind::generalized_interior)));
      } else {
        out.push_back(not_applicable(label));
      }
      return out;
    }

    // f(a) = f(a^2) >= f(e), after applying `view` to f.
    std::optional<std::string> c36_violation(Ctx&               c,
                                             FuzzySubset const& f,
                                             FuzzySubset const& view) {
      auto const es = find_left_identities(c.g);
      for (element_type a = 0; a < c.n; ++a) {
        element_type const a2 = c.g(a, a);
        if (view[a] != view[a2]) {
          return "f=" + f.str() + ", a = " + c.lab(a) + ": " + view[a].str()
                 + " != " + view[a2].str();
        }
        for (auto e : es.elements()) {
          if (view[a2] < view[e]) {
            return "f=" + f.str() + ", a = " + c.lab(a) + ", e = " + c.lab(e)
                   + ": " + view[a2].str() + " < " + view[e].str();
          }
        }
      }
      return std::nullopt;
    }

    constexpr IdealKind c36_kinds[] = {IdealKind::left,
                                       IdealKind::right,
                                       IdealKind::generalized_bi,
                                       IdealKind::generalized_interior};

    Conditions c36(Ctx& c) {
      Conditions out{intra_entry(c)};
      bool const on = out.front().verdict == ConditionVerdict::holds;
      for (bool literal : {false, true}) {
        for (auto kind : c36_kinds) {
          std::string label = std::string(literal ? "f(a) = f(a^2) >= f(e)"
                                                  : "f_k(a) = f_k(a^2) >= f_k(e)")
                              + " for fuzzy " + std::string(to_string(kind))
                              + " ideals";
          if (!on) {
            out.push_back(not_applicable(label, true));
            continue;
          }
          out.push_back(sampled(
              c,
              label,
              [&, kind, literal](
                  KParam const& k, std::uint64_t seed, std::uint64_t i) {
                auto f = c.sample(kind, slot(seed, 0), i);
                return c36_violation(c, f, literal ? f : truncate_k(f, k));
              },
              literal));
        }
      }
      return out;
    }

    Conditions c37(Ctx& c) {
      Conditions out{intra_entry(c)};
      bool const on = out.front().verdict == ConditionVerdict::holds;
      for (auto kind : c35_kinds) {
        std::string label
            = "all " + std::string(to_string(kind)) + " ideals are semiprime";
        out.push_back(on ? crisp(label, all_semiprime(c, kind))
                         : not_applicable(label));
      }
      return out;
    }

    Conditions l34(Ctx& c) {
      Conditions out{intra_entry(c)};
      bool const on = out.front().verdict == ConditionVerdict::holds;
      for (auto clause : lemma34_clauses) {
        std::string label = std::string(to_string(clause)) + " "
                            + std::string(lemma34_identity(clause));
        if (!on) {
          out.push_back(not_applicable(label));
          continue;
        }
        std::optional<std::string> cex;
        std::string                witnesses;
        for (element_type a = 0; a < c.n; ++a) {
          auto const w = lemma34_witnesses(c.g, a)[clause];
          if (!w) {
            cex = "no witness for a = " + c.lab(a);
            break;
          }
          witnesses += (a == 0 ? "" : ", ") + c.lab(a) + ": "
                       + format_tuple(c.g, *w);
        }
        auto e = crisp(label, cex);
        if (!cex) {
          e.witness = witnesses;
        }
        out.push_back(std::move(e));
      }
      return out;
    }

    // Fuzzy-module delegations.

    constexpr IdealKind pointwise_kinds[] = {IdealKind::subgroupoid,
                                             IdealKind::left,
                                             IdealKind::right,
                                             IdealKind::two_sided,
                                             IdealKind::generalized_bi,
                                             IdealKind::bi,
                                             IdealKind::generalized_interior,
                                             IdealKind::interior};

    template <typename Kinds>
    Conditions level_statement(Ctx& c, Kinds const& kinds) {
      std::optional<std::string> cex;
      for (auto const& a : c.subsets()) {
        for (auto const& k : c.cfg.k_values) {
          for (auto const& f : {characteristic_k(a, k), characteristic(a)}) {
            for (auto kind : kinds) {
              if (!cex && !level_characterization_check(c.g, f, k, kind).agree) {
                cex = std::string(to_string(kind)) + ", k=" + k.str()
                      + ", f=" + f.str();
              }
            }
          }
        }
      }
      Conditions out{crisp(
          "level sets characterize the fuzzy notion on characteristic maps",
          cex)};
      for (auto kind : kinds) {
        out.push_back(sampled(
            c,
            "level sets characterize fuzzy " + std::string(to_string(kind))
                + " ideals on random fuzzy subsets",
            [&, kind](KParam const& k, std::uint64_t seed, std::uint64_t i) {
              auto f = c.random(slot(seed, 0), i);
              auto r = level_characterization_check(c.g, f, k, kind);
              return r.agree ? std::nullopt
                             : std::optional<std::string>("f=" + f.str());
            }));
      }
      return out;
    }

    Conditions p22(Ctx& c) {
      std::optional<std::string> cex;
      for (auto const& a : c.subsets()) {
        for (auto const& k : c.cfg.k_values) {
          for (auto const& f : {characteristic_k(a, k), characteristic(a)}) {
            for (auto kind : pointwise_kinds) {
              if (!cex
                  && is_fuzzy_ideal(c.g, f, k, kind).holds
                         != is_fuzzy_ideal_pointwise(c.g, f, k, kind)) {
                cex = std::string(to_string(kind)) + ", k=" + k.str()
                      + ", f=" + f.str();
              }
            }
          }
        }
      }
      Conditions out{crisp(
          "inequality and fuzzy-point forms agree on characteristic maps", cex)};
      for (auto kind : pointwise_kinds) {
        out.push_back(sampled(
            c,
            "inequality and fuzzy-point forms agree for "
                + std::string(to_string(kind)) + " on random fuzzy subsets",
            [&, kind](KParam const& k, std::uint64_t seed, std::uint64_t i) {
              auto f = c.random(slot(seed, 0), i);
              return is_fuzzy_ideal(c.g, f, k, kind).holds
                             == is_fuzzy_ideal_pointwise(c.g, f, k, kind)
                         ? std::nullopt
                         : std::optional<std::string>("f=" + f.str());
            }));
      }
      return out;
    }

    Conditions p23(Ctx& c) {
      return level_statement(c, pointwise_kinds);
    }

    Conditions p45(Ctx& c) {
      IdealKind const kinds[] = {IdealKind::quasi};
      return level_statement(c, kinds);
    }

    template <typename Kinds>
    Conditions correspondence(Ctx& c, Kinds const& kinds) {
      std::optional<std::string> cex;
      for (auto const& a : c.subsets()) {
        for (auto const& k : c.cfg.k_values) {
          for (auto kind : kinds) {
            if (!cex && !check_characteristic_correspondence(c.g, a, k, kind)) {
              cex = std::string(to_string(kind)) + ", k=" + k.str()
                    + ", A = " + c.fmt(a);
            }
          }
        }
      }
      return {crisp("A is an ideal iff (C_A)_k is a fuzzy ideal", cex)};
    }

    Conditions p25(Ctx& c) {
      IdealKind const kinds[] = {IdealKind::subgroupoid,
                                 IdealKind::left,
                                 IdealKind::right,
                                 IdealKind::two_sided,
                                 IdealKind::generalized_bi,
                                 IdealKind::bi,
                                 IdealKind::generalized_interior,
                                 IdealKind::interior,
                                 IdealKind::semiprime};
      return correspondence(c, kinds);
    }

    Conditions p46(Ctx& c) {
      IdealKind const kinds[] = {IdealKind::quasi};
      return correspondence(c, kinds);
    }

    Conditions l27(Ctx& c) {
      std::optional<std::string> i, ii, iii, lit;
      for (auto const& a : c.subsets()) {
        for (auto const& b : c.subsets()) {
          for (auto const& k : c.cfg.k_values) {
            auto const r = check_lemma27(c.g, a, b, k);
            auto const where
                = "A = " + c.fmt(a) + ", B = " + c.fmt(b) + ", k=" + k.str();
            if (!i && !r.intersection_eq) {
              i = where;
            }
            if (!ii && !r.union_eq_on_support) {
              ii = where;
            }
            if (!iii && !r.product_eq) {
              iii = where;
            }
            if (!lit && !r.union_eq_literal) {
              lit = where + ": differs on " + c.fmt(r.union_mismatch);
            }
          }
        }
      }
      return {crisp("(i) (C_{A n B})_k = C_A ^k C_B", i),
              crisp("(ii) (C_{A u B})_k and C_A vk C_B have support A u B", ii),
              crisp("(iii) (C_{AB})_k = C_A ok C_B", iii),
              crisp("(ii) (C_{A u B})_k = C_A vk C_B pointwise", lit, true)};
    }

    struct Entry {
      StatementInfo  info;
      StatementShape shape;
      Conditions (*build)(Ctx&);
    };

    using S = StatementShape;

    Entry const registry[] = {
        {{"P2.2", "inequality forms of the fuzzy-point definitions", false, true},
         S::universal,
         p22},
        {{"P2.3", "level-set characterization", false, true}, S::universal, p23},
        {{"P2.5", "characteristic-map correspondence", false, false},
         S::universal,
         p25},
        {{"C2.6", "fuzzy right ideals are fuzzy left ideals", true, true},
         S::universal,
         c26},
        {{"L2.7", "characteristic maps of intersections, unions, products",
          false,
          false},
         S::universal,
         l27},
        {{"L3.4", "identities of unitary intra-regular AG-groupoids", true, false},
         S::implication,
         l34},
        {{"C3.5", "fuzzy ideals are semiprime", true, true}, S::implication, c35},
        {{"R3.5", "generalized interior ideals are semiprime", false, false},
         S::implication,
         r35},
        {{"C3.6", "f(a) = f(a^2) >= f(e)", true, true}, S::implication, c36},
        {{"C3.7", "ideals are semiprime", true, false}, S::implication, c37},
        {{"T3.8", "intra-regular iff a in Sa^2", true, false}, S::equivalence, t38},
        {{"C3.9", "intra-regular iff right (interior) ideals are semiprime",
          true,
          false},
         S::equivalence,
         c39},
        {{"T3.10", "A n B n C <= (AB)C with a left ideal", true, true},
         S::equivalence,
         t310},
        {{"C3.11", "A n B n C <= (AB)C for left ideals", true, true},
         S::equivalence,
         c311},
        {{"T3.12", "A n B <= AB n BA for left ideals", true, true},
         S::equivalence,
         t312},
        {{"T3.13", "A n B n C = (AB)C for a bi-ideal A", true, true},
         S::equivalence,
         t313},
        {{"C3.14", "A n B n C = (AB)C for bi-ideals", true, true},
         S::equivalence,
         c314},
        {{"T3.15", "A n B <= AB n BA for a bi-ideal A", true, true},
         S::equivalence,
         t315},
        {{"C3.16", "A n B <= AB n BA for bi-ideals", true, true},
         S::equivalence,
         c316},
        {{"T3.17", "A = A^2 for left ideals", true, true}, S::equivalence, t317},
        {{"P4.1", "Sa n aS, Sa, Sa^2 are quasi-ideals", true, false},
         S::universal,
         p41},
        {{"C4.2", "Sa.Sa = Sa^2 = Sa^2.S", true, false}, S::universal, c42},
        {{"P4.3", "quasi-ideals are semiprime", true, false},
         S::implication,
         p43},
        {{"P4.5", "level-set characterization of fuzzy quasi-ideals", false, true},
         S::universal,
         p45},
        {{"P4.6", "characteristic maps of quasi-ideals", false, false},
         S::universal,
         p46},
        {{"C4.7", "fuzzy left ideals are fuzzy quasi-ideals", false, true},
         S::universal,
         c47},
        {{"T4.8", "intra-regular iff I n J <= IJ for quasi-ideals", true, true},
         S::equivalence,
         t48},
        {{"C3.4", "intra-regular iff Q^2 = Q for quasi-ideals", true, true},
         S::equivalence,
         c34},
        {{"C4.9", "intra-regular iff Q^2 = Q for quasi-ideals", true, true},
         S::equivalence,
         c34},
    };

    std::vector<StatementInfo> const& infos() {
      static std::vector<StatementInfo> const v = [] {
        std::vector<StatementInfo> out;
        for (auto const& e : registry) {
          out.push_back(e.info);
        }
        return out;
      }();
      return v;
    }

    Entry const* find_entry(std::string_view id) {
      auto it = std::find_if(std::begin(registry),
                             std::end(registry),
                             [&](Entry const& e) { return e.info.id == id; });
      return it == std::end(registry) ? nullptr : &*it;
    }

  }  // namespace

  std::span<StatementInfo const> statements() {
    return infos();
  }

  std::optional<StatementInfo> find_statement(std::string_view id) {
    if (auto const* e = find_entry(id)) {
      return e->info;
    }
    return std::nullopt;
  }

  ConditionReport check_statement(Groupoid const&    g,
                                  std::string_view   id,
                                  FuzzyConfig const& cfg) {
    auto const* entry = find_entry(id);
    if (entry == nullptr) {
      throw InvalidArgument("unknown statement id \"" + std::string(id) + "\"");
    }
    if (g.order() > subset_scan_cap) {
      throw InvalidArgument("order " + std::to_string(g.order())
                            + " exceeds the exhaustive-scan cap of "
                            + std::to_string(subset_scan_cap));
    }
    ConditionReport r;
    r.statement_id = std::string(entry->info.id);
    r.title        = std::string(entry->info.title);
    r.shape        = entry->shape;
    if (!is_left_invertive(g)) {
      r.applicable = false;
      r.note       = "not an AG-groupoid (left invertive law fails)";
      return r;
    }
    if (entry->info.requires_unitary && find_left_identities(g).empty()) {
      r.applicable = false;
      r.note       = "no left identity";
      return r;
    }
    Ctx ctx(g, cfg, entry->info.id);
    r.conditions = entry->build(ctx);
    r.agreement  = compute_agreement(r.shape, r.conditions);
    return r;
  }

}  // namespace agcheck
