#ifndef AGCHECK_CAYLEY_HPP_
#define AGCHECK_CAYLEY_HPP_

#include <cstddef>   // for size_t
#include <optional>  // for optional
#include <vector>    // for vector

#include "groupoid.hpp"
#include "subset.hpp"

namespace agcheck {

  //! An operand tuple, e.g. a counterexample (a, b, c) to (ab)c = (cb)a.
  using Tuple = std::vector<element_type>;

  //! Outcome of scanning one identity over every operand tuple.
  struct LawCheck {
    bool                 holds = true;
    std::optional<Tuple> counterexample;
    std::size_t          tuples_checked = 0;
  };

  //! One entry per identity.  A failing law carries the lexicographically
  //! least counterexample in operand order; a holding law carries none.
  struct LawReport {
    LawCheck left_invertive;  // ab.c = cb.a
    LawCheck medial;          // ab.cd = ac.bd
    LawCheck paramedial;      // ab.cd = db.ca
    LawCheck law4;            // a.bc = b.ac
    LawCheck law5;            // ab.cd = dc.ba
    LawCheck associative;     // ab.c = a.bc
    LawCheck commutative;     // ab = ba
    LawCheck surjective;      // SS = S; counterexample is an element not in SS
  };

  LawReport check_identity_laws(Groupoid const& g);

  //! Fast test of the left invertive law alone.
  bool is_left_invertive(Groupoid const& g);

  bool is_associative(Groupoid const& g);

  //! Every e with e * x = x for all x.  Empty when there is none.
  ElementSubset find_left_identities(Groupoid const& g);

  //! An AG-groupoid with at least one left identity.
  bool is_unitary(Groupoid const& g);

  //! { a * b : a in A, b in B }.
  ElementSubset subset_product(Groupoid const&      g,
                               ElementSubset const& a,
                               ElementSubset const& b);

  struct PrincipalSets {
    ElementSubset Sa;
    ElementSubset aS;
    ElementSubset Sa2;
    ElementSubset Sa_cap_aS;
  };

  PrincipalSets principal_sets(Groupoid const& g, element_type a);

  //! The groupoid x * y = x^{-1} o y on an abelian group (G, o, e).
  //!
  //! The group axioms of \p group are checked first; an InvalidArgument
  //! naming the failing axiom (with a witness) is thrown otherwise.
  Groupoid from_abelian_group(Groupoid const& group);

}  // namespace agcheck

#endif  // AGCHECK_CAYLEY_HPP_
