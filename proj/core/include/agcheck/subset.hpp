#ifndef AGCHECK_SUBSET_HPP_
#define AGCHECK_SUBSET_HPP_

#include <bit>               // for popcount, countr_zero
#include <compare>           // for strong_ordering
#include <cstddef>           // for size_t
#include <cstdint>           // for uint64_t, uint32_t
#include <initializer_list>  // for initializer_list
#include <vector>            // for vector

#include "error.hpp"

namespace agcheck {

  //! Index of an element of a finite groupoid.
  using element_type = std::uint32_t;

  //! Hard cap on the order of a groupoid; subsets are single 64-bit words.
  inline constexpr std::size_t max_order = 64;

  //! A subset of the carrier {0, ..., n - 1} of a groupoid of order n.
  //!
  //! Subsets remember the order they are bound to, and every binary
  //! operation checks that both operands are bound to the same order.
  //! Ordering (operator<=>) is by the underlying bit pattern, which is the
  //! "ascending bitset order" used by ideal enumeration.
  class ElementSubset {
   public:
    ElementSubset() = default;

    explicit ElementSubset(std::size_t order) : _bits(0), _order(order) {
      check_order(order);
    }

    ElementSubset(std::size_t order, std::uint64_t bits)
        : _bits(bits), _order(order) {
      check_order(order);
      if ((bits & ~mask(order)) != 0) {
        throw InvalidArgument("subset has bits set beyond the order "
                              + std::to_string(order));
      }
    }

    ElementSubset(std::size_t order, std::initializer_list<element_type> elts)
        : ElementSubset(order) {
      for (auto x : elts) {
        insert(x);
      }
    }

    static ElementSubset full(std::size_t order) {
      return ElementSubset(order, mask(order));
    }

    static ElementSubset singleton(std::size_t order, element_type x) {
      ElementSubset out(order);
      out.insert(x);
      return out;
    }

    static ElementSubset from_elements(std::size_t                      order,
                                       std::vector<element_type> const& elts) {
      ElementSubset out(order);
      for (auto x : elts) {
        out.insert(x);
      }
      return out;
    }

    //! Mask with the low \p order bits set.
    static constexpr std::uint64_t mask(std::size_t order) noexcept {
      return order >= 64 ? ~std::uint64_t(0)
                         : (std::uint64_t(1) << order) - 1;
    }

    std::size_t order() const noexcept {
      return _order;
    }

    std::uint64_t bits() const noexcept {
      return _bits;
    }

    bool empty() const noexcept {
      return _bits == 0;
    }

    std::size_t size() const noexcept {
      return static_cast<std::size_t>(std::popcount(_bits));
    }

    bool contains(element_type x) const noexcept {
      return x < _order && ((_bits >> x) & 1U) != 0;
    }

    void insert(element_type x) {
      check_element(x);
      _bits |= std::uint64_t(1) << x;
    }

    void erase(element_type x) {
      check_element(x);
      _bits &= ~(std::uint64_t(1) << x);
    }

    //! Least element; only meaningful when nonempty.
    element_type front() const noexcept {
      return static_cast<element_type>(std::countr_zero(_bits));
    }

    std::vector<element_type> elements() const {
      std::vector<element_type> out;
      out.reserve(size());
      for (std::uint64_t b = _bits; b != 0; b &= b - 1) {
        out.push_back(static_cast<element_type>(std::countr_zero(b)));
      }
      return out;
    }

    //! Calls \p f on every element in ascending order.
    template <typename Func>
    void for_each(Func&& f) const {
      for (std::uint64_t b = _bits; b != 0; b &= b - 1) {
        f(static_cast<element_type>(std::countr_zero(b)));
      }
    }

    bool is_subset_of(ElementSubset const& that) const {
      check_same(that);
      return (_bits & ~that._bits) == 0;
    }

    ElementSubset complement() const {
      return ElementSubset(_order, ~_bits & mask(_order));
    }

    ElementSubset& operator|=(ElementSubset const& that) {
      check_same(that);
      _bits |= that._bits;
      return *this;
    }

    ElementSubset& operator&=(ElementSubset const& that) {
      check_same(that);
      _bits &= that._bits;
      return *this;
    }

    ElementSubset& operator-=(ElementSubset const& that) {
      check_same(that);
      _bits &= ~that._bits;
      return *this;
    }

    friend ElementSubset operator|(ElementSubset a, ElementSubset const& b) {
      return a |= b;
    }

    friend ElementSubset operator&(ElementSubset a, ElementSubset const& b) {
      return a &= b;
    }

    friend ElementSubset operator-(ElementSubset a, ElementSubset const& b) {
      return a -= b;
    }

    friend bool operator==(ElementSubset const&, ElementSubset const&)
        = default;

    friend std::strong_ordering operator<=>(ElementSubset const& a,
                                            ElementSubset const& b) noexcept {
      if (auto c = a._order <=> b._order; c != 0) {
        return c;
      }
      return a._bits <=> b._bits;
    }

    void check_same(ElementSubset const& that) const {
      if (_order != that._order) {
        throw InvalidArgument("subsets bound to different orders ("
                              + std::to_string(_order) + " and "
                              + std::to_string(that._order) + ")");
      }
    }

   private:
    static void check_order(std::size_t order) {
      if (order > max_order) {
        throw InvalidArgument("order " + std::to_string(order)
                              + " exceeds the subset cap of "
                              + std::to_string(max_order));
      }
    }

    void check_element(element_type x) const {
      if (x >= _order) {
        throw InvalidArgument("element " + std::to_string(x)
                              + " out of range for order "
                              + std::to_string(_order));
      }
    }

    std::uint64_t _bits  = 0;
    std::size_t   _order = 0;
  };

}  // namespace agcheck

#endif  // AGCHECK_SUBSET_HPP_
