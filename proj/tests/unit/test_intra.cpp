#include <catch_amalgamated.hpp>

#include "agcheck/cayley.hpp"
#include "agcheck/error.hpp"
#include "agcheck/fixtures.hpp"
#include "agcheck/verify.hpp"

#include "oracle.hpp"

using namespace agcheck;

namespace {
  element_type at(Groupoid const& g, char const* label) {
    return *g.index_of(label);
  }

  // The eight identities, evaluated on a plain table.
  bool identity_holds(oracle::Table const& t, int a, Lemma34Clause c, Tuple const& w) {
    auto m  = [&](int x, int y) { return t[x][y]; };
    auto sq = [&](int x) { return m(x, x); };
    int  a2 = sq(a);
    switch (c) {
      case Lemma34Clause::i: return a == m(a, m(w[0], a));
      case Lemma34Clause::ii: return a == m(m(w[0], a), a);
      case Lemma34Clause::iii:
        return a == m(m(a2, m(sq(w[0]), sq(w[1]))), a);
      case Lemma34Clause::iv: return a == m(m(a, m(sq(w[0]), sq(w[1]))), a2);
      case Lemma34Clause::v: return a == m(a2, m(m(a, sq(w[1])), sq(w[0])));
      case Lemma34Clause::vi:
        return a == m(m(a, m(m(sq(w[1]), sq(w[0])), a)), a);
      case Lemma34Clause::vii: return a == m(m(a2, w[0]), a2);
      case Lemma34Clause::viii: return a2 == m(m(a, w[0]), a);
    }
    return false;
  }
}  // namespace

TEST_CASE("Intra-regularity witnesses on Example 3", "[intra]") {
  Groupoid const g = fixtures::example3();
  auto const     w = intra_regular_witness(g, at(g, "4"));
  REQUIRE(w);
  CHECK(format_tuple(g, {w->first, w->second}) == "(3,6)");

  std::vector<std::array<char const*, 3>> const printed
      = {{"1", "1", "1"}, {"2", "2", "2"}, {"3", "3", "5"},
         {"4", "6", "3"}, {"5", "5", "5"}, {"6", "4", "3"}};
  for (auto const& [a, x, y] : printed) {
    CAPTURE(a, x, y);
    CHECK(verify_intra_witness(g, at(g, a), at(g, x), at(g, y)));
  }
  CHECK_FALSE(verify_intra_witness(g, at(g, "3"), at(g, "1"), at(g, "1")));
  CHECK(is_intra_regular(g).holds);
  CHECK_FALSE(is_intra_regular(g).failing_element);
  CHECK_THROWS_AS(intra_regular_witness(g, 6), InvalidArgument);
}

TEST_CASE("Intra-regularity failures", "[intra]") {
  Groupoid const z4 = fixtures::multiplication_mod(4);
  CHECK_FALSE(intra_regular_witness(z4, 2));
  auto const v = is_intra_regular(z4);
  CHECK_FALSE(v.holds);
  CHECK(v.failing_element == element_type(2));
  CHECK(is_intra_regular(from_abelian_group(fixtures::cyclic_group(3))).holds);

  auto const one = intra_regular_witness(fixtures::trivial(), 0);
  REQUIRE(one);
  CHECK(*one == std::pair<element_type, element_type>(0, 0));
  CHECK(verify_intra_witness(fixtures::trivial(), 0, 0, 0));
}

TEST_CASE("Witnesses are least and agree with the oracle", "[intra]") {
  for (int n = 1; n <= 3; ++n) {
    for (auto const& t : oracle::naive_ag(n, false, false)) {
      Groupoid const g = oracle::groupoid(t);
      CHECK(is_intra_regular(g).holds == oracle::intra_regular(t));
      for (int a = 0; a < n; ++a) {
        auto const w = intra_regular_witness(g, a);
        CHECK(w.has_value() == oracle::intra_regular_element(t, a));
        if (!w) {
          continue;
        }
        CHECK(t[t[w->first][t[a][a]]][w->second] == a);
        CHECK(verify_intra_witness(g, a, w->first, w->second));
        for (int x = 0; x < n; ++x) {
          for (int y = 0; y < n; ++y) {
            if (std::pair<element_type, element_type>(x, y) < *w) {
              CHECK_FALSE(verify_intra_witness(g, a, x, y));
            }
          }
        }
      }
    }
  }
}

TEST_CASE("Clause names", "[intra]") {
  CHECK(to_string(Lemma34Clause::i) == "(i)");
  CHECK(to_string(Lemma34Clause::viii) == "(viii)");
  CHECK(lemma34_identity(Lemma34Clause::i) == "a = a(za)");
  CHECK(lemma34_arity(Lemma34Clause::i) == 1);
  CHECK(lemma34_arity(Lemma34Clause::iii) == 2);
  CHECK(lemma34_arity(Lemma34Clause::vi) == 2);
  CHECK(lemma34_arity(Lemma34Clause::vii) == 1);
}

TEST_CASE("Identity witnesses on the derived Z_3", "[intra]") {
  Groupoid const g = from_abelian_group(fixtures::cyclic_group(3));
  auto const     w = lemma34_witnesses(g, 1);
  CHECK(w.complete());
  CHECK(w[Lemma34Clause::i] == Tuple{2});
  CHECK(w[Lemma34Clause::viii] == Tuple{2});
}

TEST_CASE("Identity witness preconditions", "[intra]") {
  CHECK_THROWS_AS(lemma34_witnesses(fixtures::example3(), 0), InvalidArgument);
  CHECK_THROWS_AS(lemma34_witnesses(fixtures::multiplication_mod(4), 2),
                  InvalidArgument);
  CHECK_THROWS_AS(
      lemma34_witnesses(from_abelian_group(fixtures::cyclic_group(3)), 3),
      InvalidArgument);
}

TEST_CASE("All eight identities have witnesses", "[intra]") {
  std::size_t groupoids = 0;
  for (int n = 1; n <= 3; ++n) {
    for (auto const& t : oracle::naive_ag(n, true, true)) {
      Groupoid const g = oracle::groupoid(t);
      ++groupoids;
      for (int a = 0; a < n; ++a) {
        auto const w = lemma34_witnesses(g, a);
        CHECK(w.complete());
        for (auto c : lemma34_clauses) {
          if (!w[c]) {
            continue;
          }
          CHECK(w[c]->size() == lemma34_arity(c));
          CHECK(identity_holds(t, a, c, *w[c]));
          CHECK(check_lemma34_clause(g, a, c, *w[c]));
        }
      }
    }
  }
  CHECK(groupoids > 0);
}

TEST_CASE("Clause checks agree with the oracle on every tuple", "[intra]") {
  Groupoid const g = from_abelian_group(fixtures::cyclic_group(4));
  auto const     t = oracle::rows(g);
  for (element_type a = 0; a < 4; ++a) {
    for (auto c : lemma34_clauses) {
      for (element_type x = 0; x < 4; ++x) {
        if (lemma34_arity(c) == 1) {
          CHECK(check_lemma34_clause(g, a, c, {x}) == identity_holds(t, a, c, {x}));
          continue;
        }
        for (element_type y = 0; y < 4; ++y) {
          CHECK(check_lemma34_clause(g, a, c, {x, y})
                == identity_holds(t, a, c, {x, y}));
        }
      }
    }
  }
}
