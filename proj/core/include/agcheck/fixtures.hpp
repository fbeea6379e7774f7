#ifndef AGCHECK_FIXTURES_HPP_
#define AGCHECK_FIXTURES_HPP_

#include <cstddef>  // for size_t

#include "fuzzy.hpp"
#include "groupoid.hpp"

namespace agcheck::fixtures {

  //! The six-element intra-regular AG-groupoid with labels 1, ..., 6 and no
  //! left identity.
  Groupoid example3();

  //! The fuzzy ideal of example3() with grades 0.9, 0.8, 0.5, 0.5, 0.5, 0.5.
  FuzzySubset example3_fuzzy_ideal();

  //! The single-element groupoid.
  Groupoid trivial();

  //! The additive group Z_n.
  Groupoid cyclic_group(std::size_t n);

  //! Z_2 x Z_2.
  Groupoid klein_four_group();

  //! The commutative monoid (Z_n, * mod n).
  Groupoid multiplication_mod(std::size_t n);

}  // namespace agcheck::fixtures

#endif  // AGCHECK_FIXTURES_HPP_
