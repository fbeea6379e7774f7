#include <random>

#include <catch_amalgamated.hpp>

#include "agcheck/cayley.hpp"
#include "agcheck/error.hpp"
#include "agcheck/fixtures.hpp"
#include "agcheck/verify.hpp"

#include "oracle.hpp"

using namespace agcheck;

namespace {
  ElementSubset set_of(Groupoid const& g, std::initializer_list<char const*> ls) {
    ElementSubset out(g.order());
    for (auto l : ls) {
      out.insert(*g.index_of(l));
    }
    return out;
  }
}  // namespace

TEST_CASE("Identity laws on Example 3", "[cayley]") {
  auto const r = check_identity_laws(fixtures::example3());
  CHECK(r.left_invertive.holds);
  CHECK_FALSE(r.left_invertive.counterexample);
  CHECK(r.medial.holds);
  CHECK(r.left_invertive.tuples_checked == 216);
  CHECK(r.medial.tuples_checked == 1296);
}

TEST_CASE("Identity laws on the trivial groupoid", "[cayley]") {
  auto const r = check_identity_laws(fixtures::trivial());
  for (auto const* l : {&r.left_invertive, &r.medial, &r.paramedial, &r.law4,
                        &r.law5, &r.associative, &r.commutative, &r.surjective}) {
    CHECK(l->holds);
    CHECK_FALSE(l->counterexample);
  }
}

TEST_CASE("Least left invertive counterexample", "[cayley]") {
  Groupoid const g = Groupoid::from_rows({{1, 0}, {0, 0}});
  auto const     r = check_identity_laws(g);
  REQUIRE_FALSE(r.left_invertive.holds);
  CHECK(*r.left_invertive.counterexample == Tuple{0, 0, 1});
  CHECK_FALSE(is_left_invertive(g));
}

TEST_CASE("Counterexamples are the least violating tuples", "[cayley]") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    int           n = 2 + trial % 3;
    oracle::Table t(n, std::vector<int>(n));
    for (auto& row : t) {
      for (auto& c : row) {
        c = static_cast<int>(rng() % n);
      }
    }
    auto const r = check_identity_laws(oracle::groupoid(t));
    CHECK(r.left_invertive.holds == oracle::left_invertive(t));
    CHECK(r.associative.holds == oracle::associative(t));
    if (!r.left_invertive.holds) {
      std::optional<Tuple> least;
      for (int a = 0; a < n && !least; ++a) {
        for (int b = 0; b < n && !least; ++b) {
          for (int c = 0; c < n && !least; ++c) {
            if (t[t[a][b]][c] != t[t[c][b]][a]) {
              least = Tuple{element_type(a), element_type(b), element_type(c)};
            }
          }
        }
      }
      CHECK(r.left_invertive.counterexample == least);
    }
  }
}

TEST_CASE("Every failing law has a counterexample", "[cayley]") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    std::size_t               n = 2 + trial % 4;
    std::vector<element_type> cells(n * n);
    for (auto& c : cells) {
      c = static_cast<element_type>(rng() % n);
    }
    auto const r = check_identity_laws(Groupoid(n, cells));
    for (auto const* l : {&r.left_invertive, &r.medial, &r.paramedial, &r.law4,
                          &r.law5, &r.associative, &r.commutative, &r.surjective}) {
      CHECK(l->holds != l->counterexample.has_value());
    }
  }
}

TEST_CASE("Medial law holds in AG-groupoids", "[cayley]") {
  // Random order <= 6 tables filtered for the left invertive law are rare,
  // so build them from known AG-groupoids by relabelling.
  for (int n = 1; n <= 3; ++n) {
    for (auto const& t : oracle::naive_ag(n, false, false)) {
      auto const r = check_identity_laws(oracle::groupoid(t));
      CHECK(r.left_invertive.holds);
      CHECK(r.medial.holds);
      if (oracle::has_left_identity(t)) {
        CHECK(r.paramedial.holds);
        CHECK(r.law4.holds);
        CHECK(r.law5.holds);
      }
    }
  }
}

TEST_CASE("Commutative and associative implies left invertive", "[cayley]") {
  for (std::size_t n = 1; n <= 6; ++n) {
    CHECK(is_left_invertive(fixtures::cyclic_group(n)));
    CHECK(is_left_invertive(fixtures::multiplication_mod(n)));
  }
}

TEST_CASE("Left identities", "[cayley]") {
  CHECK(find_left_identities(fixtures::example3()).empty());
  CHECK_FALSE(is_unitary(fixtures::example3()));
  CHECK(find_left_identities(fixtures::trivial()) == ElementSubset(1, {0}));
  Groupoid const z3 = from_abelian_group(fixtures::cyclic_group(3));
  CHECK(find_left_identities(z3) == ElementSubset(3, {0}));
  CHECK(is_unitary(z3));
  // x * y = y: every element is a left identity.
  Groupoid const right_zero = Groupoid::from_rows({{0, 1}, {0, 1}});
  CHECK(find_left_identities(right_zero) == ElementSubset::full(2));
}

TEST_CASE("Subset products", "[cayley]") {
  Groupoid const g = fixtures::example3();
  CHECK(subset_product(g, set_of(g, {"1"}), set_of(g, {"1", "2"}))
        == set_of(g, {"1"}));
  CHECK(subset_product(g, g.empty_subset(), g.carrier()).empty());
  CHECK(subset_product(g, g.carrier(), g.empty_subset()).empty());
  CHECK(subset_product(g, g.carrier(), g.carrier()) == g.carrier());
  CHECK_THROWS_AS(subset_product(g, ElementSubset(5), g.carrier()),
                  InvalidArgument);
}

TEST_CASE("Subset product is monotone", "[cayley]") {
  Groupoid const g = fixtures::example3();
  auto const     t = oracle::rows(g);
  for (std::uint64_t a = 1; a < 64; a += 5) {
    for (std::uint64_t b = 1; b < 64; b += 3) {
      ElementSubset const A(6, a), B(6, b);
      auto const          ab = subset_product(g, A, B);
      std::set<int>       sa, sb;
      A.for_each([&](element_type x) { sa.insert(x); });
      B.for_each([&](element_type x) { sb.insert(x); });
      std::set<int> got;
      ab.for_each([&](element_type x) { got.insert(x); });
      CHECK(got == oracle::product(t, sa, sb));
      for (std::uint64_t a2 = a; a2 < 64; a2 = (a2 + 1) | a) {
        CHECK(ab.is_subset_of(subset_product(g, ElementSubset(6, a2), B)));
      }
    }
  }
}

TEST_CASE("Principal sets", "[cayley]") {
  Groupoid const g = fixtures::example3();
  auto const     p = principal_sets(g, *g.index_of("2"));
  CHECK(p.Sa == set_of(g, {"1", "2"}));
  CHECK(p.Sa_cap_aS == (p.Sa & p.aS));

  auto const z4 = principal_sets(fixtures::multiplication_mod(4), 2);
  CHECK(z4.Sa2 == ElementSubset(4, {0}));

  auto const one = principal_sets(fixtures::trivial(), 0);
  CHECK(one.Sa == ElementSubset(1, {0}));
  CHECK(one.aS == ElementSubset(1, {0}));
  CHECK(one.Sa2 == ElementSubset(1, {0}));
  CHECK(one.Sa_cap_aS == ElementSubset(1, {0}));

  CHECK_THROWS_AS(principal_sets(g, 6), InvalidArgument);
}

TEST_CASE("Groupoid from an abelian group", "[cayley]") {
  Groupoid const z2 = fixtures::cyclic_group(2);
  CHECK(from_abelian_group(z2).same_table(z2));

  Groupoid const z3 = from_abelian_group(fixtures::cyclic_group(3));
  CHECK(oracle::rows(z3) == oracle::Table{{0, 1, 2}, {2, 0, 1}, {1, 2, 0}});
  CHECK(z3(z3(1, 1), 1) == 1);
  CHECK(z3(1, z3(1, 1)) == 2);
  auto const r = check_identity_laws(z3);
  CHECK_FALSE(r.associative.holds);
  // The least failing triple: (1*0)*0 = 2*0 = 1 but 1*(0*0) = 1*0 = 2.
  CHECK(*r.associative.counterexample == Tuple{1, 0, 0});

  for (std::size_t n = 1; n <= 6; ++n) {
    Groupoid const g = from_abelian_group(fixtures::cyclic_group(n));
    CHECK(is_left_invertive(g));
    CHECK(is_unitary(g));
    CHECK(is_intra_regular(g).holds);
    // x * y = y - x mod n.
    for (element_type x = 0; x < n; ++x) {
      for (element_type y = 0; y < n; ++y) {
        CHECK(g(x, y) == (y + n - x) % n);
      }
    }
  }
  Groupoid const k4 = fixtures::klein_four_group();
  CHECK(from_abelian_group(k4).same_table(k4));
}

TEST_CASE("Non-groups are rejected", "[cayley]") {
  CHECK_THROWS_AS(from_abelian_group(fixtures::multiplication_mod(3)),
                  InvalidArgument);
  // Not associative.
  CHECK_THROWS_AS(
      from_abelian_group(from_abelian_group(fixtures::cyclic_group(3))),
      InvalidArgument);
  // Not commutative.
  CHECK_THROWS_AS(from_abelian_group(Groupoid::from_rows({{0, 1}, {0, 1}})),
                  InvalidArgument);
}
