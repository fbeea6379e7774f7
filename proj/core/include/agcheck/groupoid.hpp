#ifndef AGCHECK_GROUPOID_HPP_
#define AGCHECK_GROUPOID_HPP_

#include <cstddef>   // for size_t
#include <cstdint>   // for uint8_t
#include <optional>  // for optional
#include <span>      // for span
#include <string>    // for string
#include <vector>    // for vector

#include "subset.hpp"

namespace agcheck {

  //! A finite groupoid (magma) given by its Cayley table.
  //!
  //! Elements are the indices 0, ..., n - 1; the entry in row i, column j is
  //! the product i * j.  Labels are only used for input and output.
  //! Instances are immutable once constructed and every constructor
  //! validates its input.
  class Groupoid {
   public:
    //! Labels default to "0", ..., "n-1".
    Groupoid(std::size_t order, std::vector<element_type> const& cells);

    Groupoid(std::size_t                      order,
             std::vector<element_type> const& cells,
             std::vector<std::string>         labels);

    //! Construct from rows, e.g. from_rows({{1, 0}, {0, 0}}).
    static Groupoid from_rows(std::vector<std::vector<element_type>> const& rows,
                              std::vector<std::string> labels = {});

    std::size_t order() const noexcept {
      return _order;
    }

    element_type product(element_type a, element_type b) const noexcept {
      return _cells[a * _order + b];
    }

    element_type operator()(element_type a, element_type b) const noexcept {
      return product(a, b);
    }

    //! Row-major table.
    std::span<std::uint8_t const> cells() const noexcept {
      return _cells;
    }

    std::vector<std::string> const& labels() const noexcept {
      return _labels;
    }

    std::string const& label(element_type a) const {
      return _labels.at(a);
    }

    std::optional<element_type> index_of(std::string const& label) const;

    ElementSubset carrier() const {
      return ElementSubset::full(_order);
    }

    ElementSubset empty_subset() const {
      return ElementSubset(_order);
    }

    //! Same order and identical table, ignoring labels.
    bool same_table(Groupoid const& that) const noexcept {
      return _order == that._order && _cells == that._cells;
    }

    //! Ascending table order: by order, then row-major lexicographic.
    static bool table_less(Groupoid const& a, Groupoid const& b) noexcept;

    friend bool operator==(Groupoid const&, Groupoid const&) = default;

   private:
    std::size_t               _order;
    std::vector<std::uint8_t> _cells;
    std::vector<std::string>  _labels;
  };

  //! The labels 0, ..., n - 1 as strings.
  std::vector<std::string> default_labels(std::size_t order);

  //! "{1,2}" using the labels of \p g.
  std::string format_subset(Groupoid const& g, ElementSubset const& s);

  //! "(3,6)" using the labels of \p g.
  std::string format_tuple(Groupoid const&                  g,
                           std::vector<element_type> const& t);

}  // namespace agcheck

#endif  // AGCHECK_GROUPOID_HPP_
