#include "agcheck/fuzzy.hpp"

#include <algorithm>  // for min, max, sort, unique
#include <set>        // for set
#include <string>     // for string

#include "agcheck/cayley.hpp"
#include "agcheck/error.hpp"
#include "agcheck/random.hpp"

namespace agcheck {

  namespace {

    void check_carrier(std::size_t expected, FuzzySubset const& f) {
      if (f.order() != expected) {
        throw InvalidArgument("fuzzy subset defined on "
                              + std::to_string(f.order())
                              + " elements, expected "
                              + std::to_string(expected));
      }
    }

    Grade const& min3(Grade const& a, Grade const& b, Grade const& c) {
      return std::min(std::min(a, b), c);
    }

    Verdict fail(Tuple t) {
      return Verdict{false, std::move(t)};
    }

    // f(xy) >= min{f(x), f(y), h}
    Verdict fuzzy_subgroupoid(Groupoid const&    g,
                              FuzzySubset const& f,
                              Grade const&       h) {
      for (element_type x = 0; x < g.order(); ++x) {
        for (element_type y = 0; y < g.order(); ++y) {
          if (f[g(x, y)] < min3(f[x], f[y], h)) {
            return fail({x, y});
          }
        }
      }
      return {};
    }

    // f(xy) >= min{f(y), h} (left) or min{f(x), h} (right)
    Verdict fuzzy_one_sided(Groupoid const&    g,
                            FuzzySubset const& f,
                            Grade const&       h,
                            bool               left) {
      for (element_type x = 0; x < g.order(); ++x) {
        for (element_type y = 0; y < g.order(); ++y) {
          if (f[g(x, y)] < std::min(f[left ? y : x], h)) {
            return fail({x, y});
          }
        }
      }
      return {};
    }

    // f(xy.z) >= min{f(x), f(z), h}
    Verdict fuzzy_generalized_bi(Groupoid const&    g,
                                 FuzzySubset const& f,
                                 Grade const&       h) {
      std::size_t const n = g.order();
      for (element_type x = 0; x < n; ++x) {
        for (element_type y = 0; y < n; ++y) {
          for (element_type z = 0; z < n; ++z) {
            if (f[g(g(x, y), z)] < min3(f[x], f[z], h)) {
              return fail({x, y, z});
            }
          }
        }
      }
      return {};
    }

    // f(xy.z) >= min{f(y), h}
    Verdict fuzzy_generalized_interior(Groupoid const&    g,
                                       FuzzySubset const& f,
                                       Grade const&       h) {
      std::size_t const n = g.order();
      for (element_type x = 0; x < n; ++x) {
        for (element_type y = 0; y < n; ++y) {
          for (element_type z = 0; z < n; ++z) {
            if (f[g(g(x, y), z)] < std::min(f[y], h)) {
              return fail({x, y, z});
            }
          }
        }
      }
      return {};
    }

    // f >= (S o_k f) ^_k (f o_k S)
    Verdict fuzzy_quasi(Groupoid const&    g,
                        FuzzySubset const& f,
                        KParam const&      k) {
      FuzzySubset const s   = FuzzySubset::constant(g.order(), Grade::one());
      FuzzySubset const rhs = meet_k(compose_k(g, s, f, k), compose_k(g, f, s, k), k);
      for (element_type a = 0; a < g.order(); ++a) {
        if (f[a] < rhs[a]) {
          return fail({a});
        }
      }
      return {};
    }

    // f(a) >= min{f(aa), h}
    Verdict fuzzy_semiprime(Groupoid const&    g,
                            FuzzySubset const& f,
                            Grade const&       h) {
      for (element_type a = 0; a < g.order(); ++a) {
        if (f[a] < std::min(f[g(a, a)], h)) {
          return fail({a});
        }
      }
      return {};
    }

    Verdict both(Verdict first, Verdict const& second) {
      return first.holds ? second : first;
    }

    // The thresholds at which the fuzzy-point implications can first fail.
    std::vector<Grade> critical_thresholds(FuzzySubset const& f,
                                           KParam const&      k) {
      std::set<Grade> out;
      for (auto const& v : f.grades()) {
        if (v.value() > 0) {
          out.insert(v);
        }
        rational const r = rational(1) - k.k() - v.value();
        if (r > 0 && r <= 1) {
          out.insert(Grade(r));
        }
      }
      return {out.begin(), out.end()};
    }

    // x_r in f and y_t in f => (target)_{min(r,t)} in-or-q_k f
    bool two_point_implication(FuzzySubset const&        f,
                               KParam const&             k,
                               element_type              x,
                               element_type              y,
                               element_type              target,
                               std::vector<Grade> const& ts) {
      for (auto const& r : ts) {
        if (!point_relation(f, FuzzyPoint(x, r), k).belongs) {
          continue;
        }
        for (auto const& t : ts) {
          if (!point_relation(f, FuzzyPoint(y, t), k).belongs) {
            continue;
          }
          FuzzyPoint const p(target, std::min(r, t));
          if (!point_relation(f, p, k).in_or_qk) {
            return false;
          }
        }
      }
      return true;
    }

    // y_t in f => (target)_t in-or-q_k f
    bool one_point_implication(FuzzySubset const&        f,
                               KParam const&             k,
                               element_type              y,
                               element_type              target,
                               std::vector<Grade> const& ts) {
      for (auto const& t : ts) {
        if (point_relation(f, FuzzyPoint(y, t), k).belongs
            && !point_relation(f, FuzzyPoint(target, t), k).in_or_qk) {
          return false;
        }
      }
      return true;
    }

    Grade pick(std::vector<Grade> const& grid, Rng& rng) {
      return grid[rng.below(grid.size())];
    }

    void check_grid(std::vector<Grade> const& grid) {
      if (grid.empty()) {
        throw InvalidArgument("grade grid is empty");
      }
      for (std::size_t i = 1; i < grid.size(); ++i) {
        if (!(grid[i - 1] < grid[i])) {
          throw InvalidArgument("grade grid must be strictly increasing");
        }
      }
    }

  }  // namespace

  FuzzySubset::FuzzySubset(std::vector<Grade> grades)
      : _grades(std::move(grades)) {
    if (_grades.size() > max_order) {
      throw InvalidArgument("fuzzy subset larger than the order cap");
    }
  }

  std::string FuzzySubset::str() const {
    std::string out = "(";
    for (std::size_t i = 0; i < _grades.size(); ++i) {
      if (i != 0) {
        out += ',';
      }
      out += _grades[i].str();
    }
    return out + ")";
  }

  bool pointwise_leq(FuzzySubset const& f, FuzzySubset const& g) {
    check_carrier(f.order(), g);
    for (element_type x = 0; x < f.order(); ++x) {
      if (g[x] < f[x]) {
        return false;
      }
    }
    return true;
  }

  FuzzyPoint::FuzzyPoint(element_type x, Grade t) : element(x), value(t) {
    if (t == Grade::zero()) {
      throw InvalidArgument("a fuzzy point needs a positive value");
    }
  }

  PointRelation point_relation(FuzzySubset const& f,
                               FuzzyPoint const&  p,
                               KParam const&      k) {
    if (p.element >= f.order()) {
      throw InvalidArgument("fuzzy point outside the carrier");
    }
    Grade const& fx = f[p.element];
    PointRelation out;
    out.belongs          = fx >= p.value;
    out.quasi_coincident = fx.value() + p.value.value() + k.k() > 1;
    out.in_or_qk         = out.belongs || out.quasi_coincident;
    return out;
  }

  FuzzySubset meet_k(FuzzySubset const& f, FuzzySubset const& g, KParam const& k) {
    check_carrier(f.order(), g);
    std::vector<Grade> out;
    out.reserve(f.order());
    for (element_type x = 0; x < f.order(); ++x) {
      out.push_back(min3(f[x], g[x], k.half()));
    }
    return FuzzySubset(std::move(out));
  }

  FuzzySubset join_k(FuzzySubset const& f, FuzzySubset const& g, KParam const& k) {
    check_carrier(f.order(), g);
    std::vector<Grade> out;
    out.reserve(f.order());
    for (element_type x = 0; x < f.order(); ++x) {
      out.push_back(std::max(std::max(f[x], g[x]), k.half()));
    }
    return FuzzySubset(std::move(out));
  }

  FuzzySubset meet(FuzzySubset const& f, FuzzySubset const& g) {
    check_carrier(f.order(), g);
    std::vector<Grade> out;
    out.reserve(f.order());
    for (element_type x = 0; x < f.order(); ++x) {
      out.push_back(std::min(f[x], g[x]));
    }
    return FuzzySubset(std::move(out));
  }

  FuzzySubset truncate_k(FuzzySubset const& f, KParam const& k) {
    std::vector<Grade> out;
    out.reserve(f.order());
    for (auto const& v : f.grades()) {
      out.push_back(std::min(v, k.half()));
    }
    return FuzzySubset(std::move(out));
  }

  FuzzySubset compose_k(Groupoid const&    g,
                        FuzzySubset const& f,
                        FuzzySubset const& h,
                        KParam const&      k) {
    check_carrier(g.order(), f);
    check_carrier(g.order(), h);
    // Elements with no factorization keep the initial 0.
    std::vector<Grade> out(g.order(), Grade::zero());
    for (element_type p = 0; p < g.order(); ++p) {
      for (element_type q = 0; q < g.order(); ++q) {
        Grade& slot = out[g(p, q)];
        slot        = std::max(slot, min3(f[p], h[q], k.half()));
      }
    }
    return FuzzySubset(std::move(out));
  }

  ElementSubset level_set(FuzzySubset const& f, Grade const& t) {
    if (t == Grade::zero()) {
      throw InvalidArgument("level sets are taken at thresholds t > 0");
    }
    ElementSubset out(f.order());
    for (element_type x = 0; x < f.order(); ++x) {
      if (f[x] >= t) {
        out.insert(x);
      }
    }
    return out;
  }

  FuzzySubset characteristic_k(ElementSubset const& a, KParam const& k) {
    std::vector<Grade> out(a.order(), Grade::zero());
    a.for_each([&](element_type x) { out[x] = k.half(); });
    return FuzzySubset(std::move(out));
  }

  FuzzySubset characteristic(ElementSubset const& a) {
    std::vector<Grade> out(a.order(), Grade::zero());
    a.for_each([&](element_type x) { out[x] = Grade::one(); });
    return FuzzySubset(std::move(out));
  }

  Verdict is_fuzzy_ideal(Groupoid const&    g,
                         FuzzySubset const& f,
                         KParam const&      k,
                         IdealKind          kind) {
    check_carrier(g.order(), f);
    Grade const& h = k.half();
    switch (kind) {
      case IdealKind::subgroupoid:
        return fuzzy_subgroupoid(g, f, h);
      case IdealKind::left:
        return fuzzy_one_sided(g, f, h, true);
      case IdealKind::right:
        return fuzzy_one_sided(g, f, h, false);
      case IdealKind::two_sided:
        return both(fuzzy_one_sided(g, f, h, true),
                    fuzzy_one_sided(g, f, h, false));
      case IdealKind::generalized_bi:
        return fuzzy_generalized_bi(g, f, h);
      case IdealKind::bi:
        return both(fuzzy_subgroupoid(g, f, h), fuzzy_generalized_bi(g, f, h));
      case IdealKind::generalized_interior:
        return fuzzy_generalized_interior(g, f, h);
      case IdealKind::interior:
        return both(fuzzy_subgroupoid(g, f, h),
                    fuzzy_generalized_interior(g, f, h));
      case IdealKind::quasi:
        return fuzzy_quasi(g, f, k);
      case IdealKind::semiprime:
        return fuzzy_semiprime(g, f, h);
    }
    throw InvalidArgument("unknown ideal kind");
  }

  bool is_fuzzy_ideal_pointwise(Groupoid const&    g,
                                FuzzySubset const& f,
                                KParam const&      k,
                                IdealKind          kind) {
    check_carrier(g.order(), f);
    std::vector<Grade> const ts = critical_thresholds(f, k);
    std::size_t const        n  = g.order();

    auto subgroupoid = [&] {
      for (element_type x = 0; x < n; ++x) {
        for (element_type y = 0; y < n; ++y) {
          if (!two_point_implication(f, k, x, y, g(x, y), ts)) {
            return false;
          }
        }
      }
      return true;
    };
    auto one_sided = [&](bool left) {
      for (element_type x = 0; x < n; ++x) {
        for (element_type y = 0; y < n; ++y) {
          if (!one_point_implication(f, k, left ? y : x, g(x, y), ts)) {
            return false;
          }
        }
      }
      return true;
    };
    auto generalized_bi = [&] {
      for (element_type x = 0; x < n; ++x) {
        for (element_type y = 0; y < n; ++y) {
          for (element_type z = 0; z < n; ++z) {
            if (!two_point_implication(f, k, x, z, g(g(x, y), z), ts)) {
              return false;
            }
          }
        }
      }
      return true;
    };
    auto generalized_interior = [&] {
      for (element_type x = 0; x < n; ++x) {
        for (element_type y = 0; y < n; ++y) {
          for (element_type z = 0; z < n; ++z) {
            if (!one_point_implication(f, k, y, g(g(x, y), z), ts)) {
              return false;
            }
          }
        }
      }
      return true;
    };

    switch (kind) {
      case IdealKind::subgroupoid:
        return subgroupoid();
      case IdealKind::left:
        return one_sided(true);
      case IdealKind::right:
        return one_sided(false);
      case IdealKind::two_sided:
        return one_sided(true) && one_sided(false);
      case IdealKind::generalized_bi:
        return generalized_bi();
      case IdealKind::bi:
        return subgroupoid() && generalized_bi();
      case IdealKind::generalized_interior:
        return generalized_interior();
      case IdealKind::interior:
        return subgroupoid() && generalized_interior();
      case IdealKind::quasi:
      case IdealKind::semiprime:
        break;
    }
    throw InvalidArgument("no fuzzy-point definition for "
                          + std::string(to_string(kind)));
  }

  LevelReport level_characterization_check(Groupoid const&    g,
                                           FuzzySubset const& f,
                                           KParam const&      k,
                                           IdealKind          kind) {
    check_carrier(g.order(), f);
    std::set<Grade> thresholds{k.half()};
    for (auto const& v : f.grades()) {
      if (v > Grade::zero() && v <= k.half()) {
        thresholds.insert(v);
      }
    }
    LevelReport out;
    for (auto const& t : thresholds) {
      ElementSubset const u = level_set(f, t);
      if (u.empty()) {
        continue;
      }
      bool const ok = is_ideal(g, u, kind).holds;
      out.levels.push_back({t, u, ok});
      out.levels_ok = out.levels_ok && ok;
    }
    out.predicate_ok = is_fuzzy_ideal(g, f, k, kind).holds;
    out.agree        = out.levels_ok == out.predicate_ok;
    return out;
  }

  bool check_characteristic_correspondence(Groupoid const&      g,
                                           ElementSubset const& a,
                                           KParam const&        k,
                                           IdealKind            kind) {
    bool const crisp = is_ideal(g, a, kind).holds;
    bool const fuzzy = is_fuzzy_ideal(g, characteristic_k(a, k), k, kind).holds;
    return crisp == fuzzy;
  }

  Lemma27Report check_lemma27(Groupoid const&      g,
                              ElementSubset const& a,
                              ElementSubset const& b,
                              KParam const&        k) {
    if (a.empty() || b.empty()) {
      throw InvalidArgument("check_lemma27 requires nonempty subsets");
    }
    if (a.order() != g.order() || b.order() != g.order()) {
      throw InvalidArgument("subset order does not match the groupoid");
    }
    FuzzySubset const ca = characteristic(a);
    FuzzySubset const cb = characteristic(b);
    ElementSubset const u = a | b;

    Lemma27Report r;
    r.intersection_eq = characteristic_k(a & b, k) == meet_k(ca, cb, k);
    r.product_eq
        = characteristic_k(subset_product(g, a, b), k) == compose_k(g, ca, cb, k);

    // With value-1 maps the union clause would also differ on A u B; the
    // truncated maps isolate the mismatch off A u B, which no reading fixes.
    FuzzySubset const lhs = characteristic_k(u, k);
    FuzzySubset const rhs = join_k(characteristic_k(a, k), characteristic_k(b, k), k);
    r.union_eq_literal    = lhs == rhs;
    r.union_mismatch      = ElementSubset(g.order());
    ElementSubset lhs_support(g.order());
    bool          rhs_positive_on_u = true;
    for (element_type x = 0; x < g.order(); ++x) {
      if (!(lhs[x] == rhs[x])) {
        r.union_mismatch.insert(x);
      }
      if (lhs[x] > Grade::zero()) {
        lhs_support.insert(x);
      }
      if (u.contains(x) && rhs[x] == Grade::zero()) {
        rhs_positive_on_u = false;
      }
    }
    r.union_eq_on_support = lhs_support == u && rhs_positive_on_u;
    return r;
  }

  std::vector<Grade> eighths_grid() {
    std::vector<Grade> out;
    for (std::int64_t i = 0; i <= 8; ++i) {
      out.emplace_back(i, 8);
    }
    return out;
  }

  FuzzySubset fuzzy_from_chain(std::vector<ElementSubset> const& chain,
                               std::vector<Grade> const&         grades) {
    if (chain.empty() || chain.size() != grades.size()) {
      throw InvalidArgument("a chain needs one grade per member");
    }
    std::size_t const n = chain.back().order();
    if (chain.back() != ElementSubset::full(n)) {
      throw InvalidArgument("a chain must end at the whole carrier");
    }
    std::vector<Grade> out(n);
    ElementSubset      below(n);
    for (std::size_t i = 0; i < chain.size(); ++i) {
      if (i > 0
          && !(chain[i - 1].is_subset_of(chain[i]) && chain[i - 1] != chain[i])) {
        throw InvalidArgument("chain members must be strictly increasing");
      }
      if (i > 0 && !(grades[i] < grades[i - 1])) {
        throw InvalidArgument("chain grades must be strictly decreasing");
      }
      (chain[i] - below).for_each([&](element_type x) { out[x] = grades[i]; });
      below = chain[i];
    }
    return FuzzySubset(std::move(out));
  }

  FuzzyIdealSampler::FuzzyIdealSampler(Groupoid const&    g,
                                       IdealKind          kind,
                                       std::vector<Grade> grid)
      : _order(g.order()),
        _kind(kind),
        _grid(std::move(grid)),
        _ideals(enumerate_ideals(g, kind)) {
    check_grid(_grid);
  }

  FuzzySubset FuzzyIdealSampler::sample(std::uint64_t seed,
                                        std::uint64_t index) const {
    Rng rng(seed, index);

    // Walk down from S through strictly smaller ideals of this kind.
    std::vector<ElementSubset> chain{ElementSubset::full(_order)};
    std::vector<ElementSubset const*> smaller;
    while (chain.size() < _grid.size()) {
      smaller.clear();
      for (auto const& c : _ideals) {
        if (c.is_subset_of(chain.back()) && c != chain.back()) {
          smaller.push_back(&c);
        }
      }
      if (smaller.empty() || rng.below(3) == 0) {
        break;
      }
      chain.push_back(*smaller[rng.below(smaller.size())]);
    }
    std::reverse(chain.begin(), chain.end());

    // chain.size() distinct grid positions, assigned in decreasing order.
    std::vector<std::size_t> idx(_grid.size());
    for (std::size_t j = 0; j < idx.size(); ++j) {
      idx[j] = j;
    }
    for (std::size_t j = 0; j < chain.size(); ++j) {
      std::swap(idx[j], idx[j + rng.below(idx.size() - j)]);
    }
    std::vector<std::size_t> chosen(idx.begin(), idx.begin() + chain.size());
    std::sort(chosen.rbegin(), chosen.rend());
    std::vector<Grade> grades;
    grades.reserve(chosen.size());
    for (auto j : chosen) {
      grades.push_back(_grid[j]);
    }
    return fuzzy_from_chain(chain, grades);
  }

  std::vector<FuzzySubset>
  generate_fuzzy_ideals(Groupoid const&           g,
                        KParam const&             k,
                        IdealKind                 kind,
                        std::vector<Grade> const& grid,
                        std::size_t               count,
                        std::uint64_t             seed,
                        std::uint64_t             first_index) {
    FuzzyIdealSampler const  sampler(g, kind, grid);
    std::vector<FuzzySubset> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
      FuzzySubset f = sampler.sample(seed, first_index + i);
      if (!is_fuzzy_ideal(g, f, k, kind).holds) {
        throw Error("generated fuzzy " + std::string(to_string(kind))
                    + " ideal " + f.str() + " fails its own predicate");
      }
      out.push_back(std::move(f));
    }
    return out;
  }

  FuzzySubset random_fuzzy_subset(std::size_t               order,
                                  std::vector<Grade> const& grid,
                                  std::uint64_t             seed,
                                  std::uint64_t             index) {
    check_grid(grid);
    Rng                rng(seed, index);
    std::vector<Grade> out;
    out.reserve(order);
    for (std::size_t x = 0; x < order; ++x) {
      out.push_back(pick(grid, rng));
    }
    return FuzzySubset(std::move(out));
  }

}  // namespace agcheck
