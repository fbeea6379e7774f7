#include <catch_amalgamated.hpp>

#include "agcheck/cayley.hpp"
#include "agcheck/error.hpp"
#include "agcheck/fixtures.hpp"
#include "agcheck/fuzzy.hpp"

#include "oracle.hpp"

using namespace agcheck;
using oracle::Q;

namespace {
  ElementSubset set_of(Groupoid const& g, std::initializer_list<char const*> ls) {
    ElementSubset out(g.order());
    for (auto l : ls) {
      out.insert(*g.index_of(l));
    }
    return out;
  }

  FuzzySubset fz(std::initializer_list<char const*> grades) {
    std::vector<Grade> out;
    for (auto g : grades) {
      out.push_back(Grade::parse(g));
    }
    return FuzzySubset(out);
  }

  oracle::Fz to_q(FuzzySubset const& f) {
    oracle::Fz out;
    for (auto const& g : f.grades()) {
      out.emplace_back(g.value().numerator(), g.value().denominator());
    }
    return out;
  }

  Q to_q(KParam const& k) {
    return Q(k.k().numerator(), k.k().denominator());
  }

  // Inequality forms of every kind, written out from the definitions.
  bool oracle_fuzzy(oracle::Table const& t, oracle::Fz const& f, Q k, IdealKind kind) {
    int const n = oracle::size(t);
    Q const   h = oracle::half(k);
    auto      sub = [&] {
      for (int x = 0; x < n; ++x) {
        for (int y = 0; y < n; ++y) {
          if (f[t[x][y]] < oracle::min3(f[x], f[y], h)) {
            return false;
          }
        }
      }
      return true;
    };
    auto gen_bi = [&] {
      for (int x = 0; x < n; ++x) {
        for (int y = 0; y < n; ++y) {
          for (int z = 0; z < n; ++z) {
            if (f[t[t[x][y]][z]] < oracle::min3(f[x], f[z], h)) {
              return false;
            }
          }
        }
      }
      return true;
    };
    auto gen_int = [&] {
      for (int x = 0; x < n; ++x) {
        for (int y = 0; y < n; ++y) {
          for (int z = 0; z < n; ++z) {
            if (f[t[t[x][y]][z]] < std::min(f[y], h)) {
              return false;
            }
          }
        }
      }
      return true;
    };
    switch (kind) {
      case IdealKind::subgroupoid: return sub();
      case IdealKind::left: return oracle::fz_left(t, f, k);
      case IdealKind::right: return oracle::fz_right(t, f, k);
      case IdealKind::two_sided:
        return oracle::fz_left(t, f, k) && oracle::fz_right(t, f, k);
      case IdealKind::generalized_bi: return gen_bi();
      case IdealKind::bi: return sub() && gen_bi();
      case IdealKind::generalized_interior: return gen_int();
      case IdealKind::interior: return sub() && gen_int();
      case IdealKind::quasi: return oracle::fz_quasi(t, f, k);
      case IdealKind::semiprime:
        for (int a = 0; a < n; ++a) {
          if (f[a] < std::min(f[t[a][a]], h)) {
            return false;
          }
        }
        return true;
    }
    return false;
  }

  std::vector<KParam> ks() {
    return {KParam(rational(0)), KParam(rational(1, 5)), KParam(rational(1, 2)),
            KParam(rational(9, 10))};
  }

  std::vector<Groupoid> small_corpus() {
    std::vector<Groupoid> out{fixtures::example3(),
                              fixtures::multiplication_mod(4),
                              from_abelian_group(fixtures::cyclic_group(3))};
    for (int n = 1; n <= 3; ++n) {
      for (auto const& t : oracle::naive_ag(n, false, false)) {
        out.push_back(oracle::groupoid(t));
      }
    }
    return out;
  }

  // The population used for agreement checks: characteristic maps of every
  // nonempty subset plus random grid-valued maps.
  std::vector<FuzzySubset> population(Groupoid const& g, KParam const& k, std::uint64_t seed) {
    std::vector<FuzzySubset> out;
    for (auto const& a : nonempty_subsets(g.order())) {
      out.push_back(characteristic_k(a, k));
      out.push_back(characteristic(a));
    }
    for (std::uint64_t i = 0; i < 12; ++i) {
      out.push_back(random_fuzzy_subset(g.order(), eighths_grid(), seed, i));
    }
    return out;
  }
}  // namespace

TEST_CASE("Point relations", "[fuzzy]") {
  KParam const k0;
  auto const   r1 = point_relation(fz({"0.9"}), FuzzyPoint(0, Grade::parse("0.9")), k0);
  CHECK(r1.belongs);

  auto const r2 = point_relation(fz({"0.5"}), FuzzyPoint(0, Grade::parse("0.6")), k0);
  CHECK(r2.quasi_coincident);
  CHECK_FALSE(r2.belongs);
  CHECK(r2.in_or_qk);

  auto const r3 = point_relation(fz({"0.4"}), FuzzyPoint(0, Grade::parse("0.4")),
                                 KParam::parse("0.2"));
  CHECK_FALSE(r3.quasi_coincident);
  CHECK(r3.belongs);
  CHECK(r3.in_or_qk);

  CHECK_THROWS_AS(FuzzyPoint(0, Grade::zero()), InvalidArgument);
  CHECK_THROWS_AS(point_relation(fz({"0.4"}), FuzzyPoint(1, Grade::one()), k0),
                  InvalidArgument);
}

TEST_CASE("Pointwise operations", "[fuzzy]") {
  KParam const k0;
  CHECK(meet_k(fz({"0.9"}), fz({"0.8"}), k0) == fz({"1/2"}));
  CHECK(join_k(fz({"0.1"}), fz({"0.2"}), k0) == fz({"1/2"}));
  CHECK(join_k(fz({"0.9"}), fz({"0.2"}), k0) == fz({"0.9"}));
  CHECK(meet(fz({"0.9", "0.1"}), fz({"0.8", "0.3"})) == fz({"0.8", "0.1"}));
  CHECK(truncate_k(fz({"0.9", "0.1"}), KParam::parse("1/2")) == fz({"1/4", "0.1"}));
  CHECK_THROWS_AS(meet_k(fz({"0.9"}), fz({"0.8", "0"}), k0), InvalidArgument);
}

TEST_CASE("Truncation is monotone and idempotent", "[fuzzy]") {
  for (auto const& k : ks()) {
    for (std::uint64_t i = 0; i < 50; ++i) {
      auto const f = random_fuzzy_subset(5, eighths_grid(), 3, i);
      auto const t = truncate_k(f, k);
      CHECK(pointwise_leq(t, f));
      CHECK(truncate_k(t, k) == t);
    }
  }
}

TEST_CASE("Composition", "[fuzzy]") {
  Groupoid const g  = fixtures::example3();
  KParam const   k0;
  auto const     f  = characteristic_k(set_of(g, {"1"}), k0);
  auto const     h  = characteristic_k(set_of(g, {"1", "2"}), k0);
  auto const     fh = compose_k(g, f, h, k0);
  CHECK(fh == fz({"1/2", "0", "0", "0", "0", "0"}));

  auto const zero = FuzzySubset::constant(6, Grade::zero());
  for (auto const& k : ks()) {
    CHECK(compose_k(g, zero, h, k) == zero);
  }

  auto const t = oracle::rows(g);
  for (auto const& k : ks()) {
    for (std::uint64_t i = 0; i < 40; ++i) {
      auto const a = random_fuzzy_subset(6, eighths_grid(), 5, i);
      auto const b = random_fuzzy_subset(6, eighths_grid(), 6, i);
      CHECK(to_q(compose_k(g, a, b, k)) == oracle::compose(t, to_q(a), to_q(b), to_q(k)));
    }
  }
}

TEST_CASE("Level sets", "[fuzzy]") {
  Groupoid const g = fixtures::example3();
  auto const     f = fixtures::example3_fuzzy_ideal();
  CHECK(f == fz({"0.9", "0.8", "0.5", "0.5", "0.5", "0.5"}));
  CHECK(level_set(f, Grade::parse("0.8")) == set_of(g, {"1", "2"}));
  CHECK(level_set(FuzzySubset::constant(6, Grade::one()), Grade::one()) == g.carrier());
  CHECK(level_set(f, Grade::parse("0.95")).empty());
  CHECK_THROWS_AS(level_set(f, Grade::zero()), InvalidArgument);
}

TEST_CASE("Characteristic maps", "[fuzzy]") {
  Groupoid const g = fixtures::example3();
  CHECK(characteristic_k(set_of(g, {"1", "2"}), KParam())
        == fz({"1/2", "1/2", "0", "0", "0", "0"}));
  CHECK(characteristic_k(g.carrier(), KParam::parse("1/2"))
        == FuzzySubset::constant(6, Grade(1, 4)));
  CHECK(characteristic_k(ElementSubset(1, {0}), KParam()) == fz({"1/2"}));
}

TEST_CASE("Fuzzy ideal examples", "[fuzzy]") {
  Groupoid const g = fixtures::example3();
  KParam const   k0;
  auto const     f = fixtures::example3_fuzzy_ideal();
  CHECK(is_fuzzy_ideal(g, f, k0, IdealKind::two_sided).holds);
  CHECK(is_fuzzy_ideal_pointwise(g, f, k0, IdealKind::two_sided));

  auto const one = FuzzySubset::constant(6, Grade::one());
  for (auto const& k : ks()) {
    for (auto kind : all_kinds) {
      CHECK(is_fuzzy_ideal(g, one, k, kind).holds);
    }
    for (auto kind : ideal_kinds) {
      if (kind != IdealKind::quasi) {
        CHECK(is_fuzzy_ideal_pointwise(g, one, k, kind));
      }
    }
  }

  auto const fp = fz({"0", "1", "0", "0", "0", "0"});
  auto const v  = is_fuzzy_ideal(g, fp, k0, IdealKind::left);
  REQUIRE_FALSE(v.holds);
  CHECK(format_tuple(g, *v.counterexample) == "(1,2)");
  CHECK_FALSE(is_fuzzy_ideal_pointwise(g, fp, k0, IdealKind::left));

  CHECK_THROWS_AS(is_fuzzy_ideal(g, fz({"1"}), k0, IdealKind::left), InvalidArgument);
  CHECK_THROWS_AS(is_fuzzy_ideal_pointwise(g, f, k0, IdealKind::quasi), InvalidArgument);
}

TEST_CASE("Fuzzy predicates agree with the inequality oracle", "[fuzzy]") {
  std::uint64_t seed = 0;
  for (auto const& g : small_corpus()) {
    auto const t = oracle::rows(g);
    for (auto const& k : ks()) {
      for (auto const& f : population(g, k, ++seed)) {
        for (auto kind : all_kinds) {
          auto const v = is_fuzzy_ideal(g, f, k, kind);
          CHECK(v.holds == oracle_fuzzy(t, to_q(f), to_q(k), kind));
          CHECK(v.holds != v.counterexample.has_value());
        }
      }
    }
  }
}

TEST_CASE("Inequality and fuzzy-point forms agree", "[fuzzy]") {
  std::uint64_t seed  = 100;
  std::size_t   count = 0;
  for (auto const& g : small_corpus()) {
    auto const t = oracle::rows(g);
    for (auto const& k : ks()) {
      for (auto const& f : population(g, k, ++seed)) {
        for (auto kind : ideal_kinds) {
          if (kind == IdealKind::quasi) {
            continue;
          }
          CHECK(is_fuzzy_ideal_pointwise(g, f, k, kind)
                == is_fuzzy_ideal(g, f, k, kind).holds);
        }
        // Thresholds on a 1/40 grid hit every critical value here.
        CHECK(oracle::fz_left_points(t, to_q(f), to_q(k), 40)
              == is_fuzzy_ideal_pointwise(g, f, k, IdealKind::left));
        ++count;
      }
    }
  }
  CHECK(count >= 1000);
}

TEST_CASE("Critical threshold beyond f(y)", "[fuzzy]") {
  // Constant product 0 with f(0) = 0.3, f(1) = 0.8, k = 0.  At t = 0.6 the
  // point 1_t belongs to f but 0_t is neither in f nor quasi-coincident.
  // Testing only t = f(1) = 0.8 would miss this (0.3 + 0.8 > 1).
  Groupoid const g = Groupoid::from_rows({{0, 0}, {0, 0}});
  auto const     f = fz({"0.3", "0.8"});
  CHECK_FALSE(is_fuzzy_ideal(g, f, KParam(), IdealKind::left).holds);
  CHECK_FALSE(is_fuzzy_ideal_pointwise(g, f, KParam(), IdealKind::left));
}

TEST_CASE("Level characterization", "[fuzzy]") {
  Groupoid const g = fixtures::example3();
  KParam const   k0;
  auto const     r = level_characterization_check(g, fixtures::example3_fuzzy_ideal(), k0,
                                                  IdealKind::two_sided);
  CHECK(r.agree);
  CHECK(r.levels_ok);
  CHECK(r.predicate_ok);
  // Every grade is at least 1/2, so only U(f, 1/2) = S is examined.
  REQUIRE(r.levels.size() == 1);
  CHECK(r.levels[0].threshold == Grade(1, 2));
  CHECK(r.levels[0].level == g.carrier());

  auto const c = level_characterization_check(
      g, FuzzySubset::constant(6, Grade::one()), k0, IdealKind::left);
  CHECK(c.agree);
  REQUIRE(c.levels.size() == 1);
  CHECK(c.levels[0].level == g.carrier());

  auto const p = level_characterization_check(g, fz({"0", "1", "0", "0", "0", "0"}), k0,
                                              IdealKind::left);
  CHECK(p.agree);
  CHECK_FALSE(p.levels_ok);
  CHECK_FALSE(p.predicate_ok);
  REQUIRE(p.levels.size() == 1);
  CHECK(p.levels[0].level == set_of(g, {"2"}));

  std::uint64_t seed = 200;
  for (auto const& gg : small_corpus()) {
    for (auto const& k : ks()) {
      for (auto const& f : population(gg, k, ++seed)) {
        for (auto kind : ideal_kinds) {
          CHECK(level_characterization_check(gg, f, k, kind).agree);
        }
      }
    }
  }
}

TEST_CASE("Characteristic correspondence", "[fuzzy]") {
  Groupoid const g = fixtures::example3();
  KParam const   half = KParam::parse("1/2");
  CHECK(is_ideal(g, set_of(g, {"1"}), IdealKind::left).holds);
  CHECK(check_characteristic_correspondence(g, set_of(g, {"1"}), half, IdealKind::left));
  CHECK_FALSE(is_ideal(g, set_of(g, {"5"}), IdealKind::left).holds);
  CHECK(check_characteristic_correspondence(g, set_of(g, {"5"}), KParam(), IdealKind::left));
  for (auto const& gg : small_corpus()) {
    for (auto const& a : nonempty_subsets(gg.order())) {
      for (auto const& k : {KParam(), half, KParam::parse("9/10")}) {
        for (auto kind : all_kinds) {
          CHECK(check_characteristic_correspondence(gg, a, k, kind));
        }
      }
    }
  }
}

TEST_CASE("Characteristic map identities", "[fuzzy]") {
  Groupoid const g = fixtures::example3();
  KParam const   k0;
  auto const     r = check_lemma27(g, set_of(g, {"1"}), set_of(g, {"1", "2"}), k0);
  CHECK(r.intersection_eq);
  CHECK(r.product_eq);

  for (auto const& k : ks()) {
    auto const s = check_lemma27(g, g.carrier(), g.carrier(), k);
    CHECK(s.intersection_eq);
    CHECK(s.product_eq);
  }

  auto const u = check_lemma27(g, set_of(g, {"1"}), set_of(g, {"2"}), k0);
  CHECK_FALSE(u.union_eq_literal);
  CHECK(u.union_mismatch == set_of(g, {"3", "4", "5", "6"}));
  CHECK(u.union_eq_on_support);
  CHECK(check_lemma27(g, set_of(g, {"1", "2"}), set_of(g, {"3", "4", "5", "6"}), k0)
            .union_eq_literal);

  CHECK_THROWS_AS(check_lemma27(g, g.empty_subset(), g.carrier(), k0), InvalidArgument);

  for (auto const& gg : small_corpus()) {
    auto const subsets = nonempty_subsets(gg.order());
    for (auto const& a : subsets) {
      for (auto const& b : subsets) {
        for (auto const& k : ks()) {
          auto const l = check_lemma27(gg, a, b, k);
          CHECK(l.intersection_eq);
          CHECK(l.product_eq);
        }
      }
    }
  }
}

TEST_CASE("Chain generated fuzzy ideals", "[fuzzy]") {
  Groupoid const g = fixtures::example3();
  auto const     f = fuzzy_from_chain(
      {set_of(g, {"1"}), set_of(g, {"1", "2"}), g.carrier()},
      {Grade::parse("0.9"), Grade::parse("0.8"), Grade::parse("0.5")});
  CHECK(f == fixtures::example3_fuzzy_ideal());
  CHECK(fuzzy_from_chain({g.carrier()}, {Grade::one()})
        == FuzzySubset::constant(6, Grade::one()));
  CHECK_THROWS_AS(fuzzy_from_chain({set_of(g, {"1"})}, {Grade::one()}), InvalidArgument);
  CHECK_THROWS_AS(fuzzy_from_chain({set_of(g, {"1"}), g.carrier()},
                                   {Grade(1, 2), Grade::one()}),
                  InvalidArgument);

  for (auto kind : all_kinds) {
    for (auto const& k : ks()) {
      auto const a = generate_fuzzy_ideals(g, k, kind, eighths_grid(), 30, 9);
      auto const b = generate_fuzzy_ideals(g, k, kind, eighths_grid(), 30, 9);
      CHECK(a == b);
      for (auto const& x : a) {
        CHECK(is_fuzzy_ideal(g, x, k, kind).holds);
      }
    }
  }
  // The stream is indexed: a suffix equals a later start.
  auto const all  = generate_fuzzy_ideals(g, KParam(), IdealKind::left, eighths_grid(), 10, 4);
  auto const tail = generate_fuzzy_ideals(g, KParam(), IdealKind::left, eighths_grid(), 5, 4, 5);
  CHECK(std::equal(tail.begin(), tail.end(), all.begin() + 5));
}

TEST_CASE("Fuzzy right ideals are left, left ideals are quasi", "[fuzzy]") {
  std::uint64_t seed = 300;
  for (auto const& g : small_corpus()) {
    if (!is_left_invertive(g)) {
      continue;
    }
    bool const unitary = is_unitary(g);
    for (auto const& k : ks()) {
      auto pop = population(g, k, ++seed);
      for (auto kind : {IdealKind::left, IdealKind::right}) {
        auto const gen = generate_fuzzy_ideals(g, k, kind, eighths_grid(), 20, seed);
        pop.insert(pop.end(), gen.begin(), gen.end());
      }
      for (auto const& f : pop) {
        bool const left = is_fuzzy_ideal(g, f, k, IdealKind::left).holds;
        if (unitary && is_fuzzy_ideal(g, f, k, IdealKind::right).holds) {
          CHECK(left);
        }
        if (left) {
          CHECK(is_fuzzy_ideal(g, f, k, IdealKind::quasi).holds);
        }
      }
    }
  }
}
