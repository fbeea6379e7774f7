#include "agcheck/fixtures.hpp"

#include <vector>  // for vector

namespace agcheck::fixtures {

  Groupoid example3() {
    // Printed with labels 1..6; stored here 0-based.
    return Groupoid::from_rows({{0, 0, 0, 0, 0, 0},
                                {0, 1, 0, 0, 0, 0},
                                {0, 0, 4, 5, 2, 3},
                                {0, 0, 3, 4, 5, 2},
                                {0, 0, 2, 3, 4, 5},
                                {0, 0, 5, 2, 3, 4}},
                               {"1", "2", "3", "4", "5", "6"});
  }

  FuzzySubset example3_fuzzy_ideal() {
    return FuzzySubset({Grade::parse("0.9"),
                        Grade::parse("0.8"),
                        Grade::parse("0.5"),
                        Grade::parse("0.5"),
                        Grade::parse("0.5"),
                        Grade::parse("0.5")});
  }

  Groupoid trivial() {
    return Groupoid(1, {0});
  }

  Groupoid cyclic_group(std::size_t n) {
    std::vector<element_type> cells(n * n);
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        cells[x * n + y] = static_cast<element_type>((x + y) % n);
      }
    }
    return Groupoid(n, cells);
  }

  Groupoid klein_four_group() {
    std::vector<element_type> cells(16);
    for (element_type x = 0; x < 4; ++x) {
      for (element_type y = 0; y < 4; ++y) {
        cells[x * 4 + y] = x ^ y;
      }
    }
    return Groupoid(4, cells, {"e", "a", "b", "c"});
  }

  Groupoid multiplication_mod(std::size_t n) {
    std::vector<element_type> cells(n * n);
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        cells[x * n + y] = static_cast<element_type>((x * y) % n);
      }
    }
    return Groupoid(n, cells);
  }

}  // namespace agcheck::fixtures
