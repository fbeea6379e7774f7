#ifndef AGCHECK_FUZZY_HPP_
#define AGCHECK_FUZZY_HPP_

#include <cstddef>  // for size_t
#include <cstdint>  // for uint64_t
#include <vector>   // for vector

#include "grade.hpp"
#include "groupoid.hpp"
#include "ideals.hpp"
#include "subset.hpp"

namespace agcheck {

  //! A total map from the carrier of a groupoid to exact grades in [0, 1].
  class FuzzySubset {
   public:
    FuzzySubset() = default;

    explicit FuzzySubset(std::vector<Grade> grades);

    static FuzzySubset constant(std::size_t order, Grade const& g) {
      return FuzzySubset(std::vector<Grade>(order, g));
    }

    std::size_t order() const noexcept {
      return _grades.size();
    }

    Grade const& operator[](element_type x) const {
      return _grades.at(x);
    }

    std::vector<Grade> const& grades() const noexcept {
      return _grades;
    }

    //! "(1/2,1/2,0/1)".
    std::string str() const;

    friend bool operator==(FuzzySubset const&, FuzzySubset const&) = default;

   private:
    std::vector<Grade> _grades;
  };

  //! f <= g pointwise.
  bool pointwise_leq(FuzzySubset const& f, FuzzySubset const& g);

  //! The fuzzy point x_t; t must be positive.
  struct FuzzyPoint {
    FuzzyPoint(element_type x, Grade t);

    element_type element;
    Grade        value;
  };

  struct PointRelation {
    bool belongs;           // f(x) >= t
    bool quasi_coincident;  // f(x) + t + k > 1
    bool in_or_qk;          // either of the above
  };

  PointRelation point_relation(FuzzySubset const& f,
                               FuzzyPoint const&  p,
                               KParam const&      k);

  //! min{f, g, (1-k)/2} pointwise.
  FuzzySubset meet_k(FuzzySubset const& f, FuzzySubset const& g, KParam const& k);

  //! max{f, g, (1-k)/2} pointwise.
  FuzzySubset join_k(FuzzySubset const& f, FuzzySubset const& g, KParam const& k);

  //! Plain pointwise minimum (no truncation).
  FuzzySubset meet(FuzzySubset const& f, FuzzySubset const& g);

  //! f_k = min{f, (1-k)/2}.
  FuzzySubset truncate_k(FuzzySubset const& f, KParam const& k);

  //! (f o_k g)(a) = max over a = pq of min{f(p), g(q), (1-k)/2}; 0 if a has
  //! no factorization.
  FuzzySubset compose_k(Groupoid const&    g,
                        FuzzySubset const& f,
                        FuzzySubset const& h,
                        KParam const&      k);

  //! U(f, t) = { x : f(x) >= t }; t must be positive.
  ElementSubset level_set(FuzzySubset const& f, Grade const& t);

  //! (C_A)_k: (1-k)/2 on A, 0 elsewhere.
  FuzzySubset characteristic_k(ElementSubset const& a, KParam const& k);

  //! C_A: 1 on A, 0 elsewhere.
  FuzzySubset characteristic(ElementSubset const& a);

  //! The inequality form of each (in, in-or-q_k)-fuzzy notion, e.g.
  //! f(xy) >= min{f(y), (1-k)/2} for left ideals, and
  //! f >= (S o_k f) ^_k (f o_k S) for quasi-ideals.  Counterexamples are the
  //! least violating tuple, laid out as in is_ideal: (x, y) for the binary
  //! kinds, (x, y, z) for the generalized kinds, (a) for quasi and semiprime.
  Verdict is_fuzzy_ideal(Groupoid const&    g,
                         FuzzySubset const& f,
                         KParam const&      k,
                         IdealKind          kind);

  //! The fuzzy-point definitions, e.g. y_t in f => (xy)_t in-or-q_k f,
  //! evaluated with point_relation.
  //!
  //! The quantifier over t in (0, 1] is decided on the finite set
  //! { f(x) } u { 1 - k - f(x) } intersected with (0, 1]: for fixed
  //! operands the implication fails exactly for
  //! t in (f(xy), min{f(y), 1 - k - f(xy)}], and that right end point is
  //! always in the set.  Not defined for quasi and semiprime.
  bool is_fuzzy_ideal_pointwise(Groupoid const&    g,
                                FuzzySubset const& f,
                                KParam const&      k,
                                IdealKind          kind);

  struct LevelEntry {
    Grade         threshold;
    ElementSubset level;
    bool          is_ideal;
  };

  struct LevelReport {
    bool                    levels_ok    = true;
    bool                    predicate_ok = true;
    bool                    agree        = true;
    std::vector<LevelEntry> levels;  // the nonempty levels examined
  };

  //! Compares is_fuzzy_ideal with "every nonempty U(f, t), 0 < t <= (1-k)/2,
  //! is an ideal of the given kind".  Only the thresholds in
  //! ({ f(x) } u { (1-k)/2 }) n (0, (1-k)/2] need examining.
  LevelReport level_characterization_check(Groupoid const&    g,
                                           FuzzySubset const& f,
                                           KParam const&      k,
                                           IdealKind          kind);

  //! is_ideal(A) == is_fuzzy_ideal((C_A)_k).  A must be nonempty.
  bool check_characteristic_correspondence(Groupoid const&      g,
                                           ElementSubset const& a,
                                           KParam const&        k,
                                           IdealKind            kind);

  struct Lemma27Report {
    bool intersection_eq;      // (C_{A n B})_k == C_A ^_k C_B
    bool product_eq;           // (C_{AB})_k == C_A o_k C_B
    bool union_eq_literal;     // (C_{A u B})_k == (C_A)_k v_k (C_B)_k
    bool union_eq_on_support;  // both sides positive exactly on A u B
    ElementSubset union_mismatch;  // where the literal union comparison fails
  };

  //! The intersection and product right-hand sides use the value-1 maps
  //! C_A, C_B.  The union compares against (C_A)_k v_k (C_B)_k, which
  //! differs from (C_{A u B})_k exactly off A u B.
  Lemma27Report check_lemma27(Groupoid const&      g,
                              ElementSubset const& a,
                              ElementSubset const& b,
                              KParam const&        k);

  //! The grid {0, 1/8, ..., 1}.
  std::vector<Grade> eighths_grid();

  //! The fuzzy subset equal to grades[i] on chain[i] \ chain[i-1].  The
  //! chain must be strictly increasing and end at the whole carrier; the
  //! grades strictly decreasing.
  FuzzySubset fuzzy_from_chain(std::vector<ElementSubset> const& chain,
                               std::vector<Grade> const&         grades);

  //! Draws fuzzy ideals of one kind from random chains of crisp ideals.
  //!
  //! The crisp ideals of the kind are enumerated once on construction.
  //! sample(seed, i) is a pure function of (seed, i): a random chain
  //! I_1 < ... < I_m = S of crisp ideals, with strictly decreasing grades
  //! drawn from the grid, the largest on I_1.  Every nonempty level of the
  //! result is a chain member, so the result is a fuzzy ideal of the kind.
  class FuzzyIdealSampler {
   public:
    FuzzyIdealSampler(Groupoid const&    g,
                      IdealKind          kind,
                      std::vector<Grade> grid);

    FuzzySubset sample(std::uint64_t seed, std::uint64_t index) const;

    IdealKind kind() const noexcept {
      return _kind;
    }

   private:
    std::size_t                _order;
    IdealKind                  _kind;
    std::vector<Grade>         _grid;
    std::vector<ElementSubset> _ideals;
  };

  //! \p count fuzzy ideals of the given kind, each constant on the layers of
  //! a random chain I_1 < ... < I_m = S of crisp ideals of that kind, with
  //! strictly decreasing grades drawn from \p grid.  Sample i depends only
  //! on (seed, first_index + i), so disjoint index ranges can be generated
  //! independently.  Every output is checked with is_fuzzy_ideal.
  std::vector<FuzzySubset>
  generate_fuzzy_ideals(Groupoid const&           g,
                        KParam const&             k,
                        IdealKind                 kind,
                        std::vector<Grade> const& grid,
                        std::size_t               count,
                        std::uint64_t             seed,
                        std::uint64_t             first_index = 0);

  //! A fuzzy subset with independent uniformly drawn grid grades; a pure
  //! function of (seed, index).
  FuzzySubset random_fuzzy_subset(std::size_t               order,
                                  std::vector<Grade> const& grid,
                                  std::uint64_t             seed,
                                  std::uint64_t             index);

}  // namespace agcheck

#endif  // AGCHECK_FUZZY_HPP_
