#ifndef AGCHECK_ENUMERATE_HPP_
#define AGCHECK_ENUMERATE_HPP_

#include <cstddef>     // for size_t
#include <cstdint>     // for uint64_t
#include <functional>  // for function
#include <optional>    // for optional
#include <string>      // for string
#include <vector>      // for vector

#include "groupoid.hpp"

namespace agcheck {

  //! Default largest order enumerate_ag accepts.
  inline constexpr std::size_t default_enumeration_order_cap = 5;

  //! Largest order accepted at all, and only with allow_order_6.
  inline constexpr std::size_t hard_enumeration_order_cap = 6;

  //! Largest order canonical_form and are_isomorphic accept.
  inline constexpr std::size_t canonical_order_cap = 8;

  struct SearchConstraints {
    std::size_t order                 = 1;
    bool        require_unitary       = false;
    bool        require_intra_regular = false;
    bool        up_to_isomorphism     = false;
  };

  struct SearchOptions {
    //! Worker threads; 0 means std::thread::hardware_concurrency().
    std::size_t threads = 1;
    //! Permits order 6, which takes hours without filters.
    bool allow_order_6 = false;
    //! Progress file.  Completed subtrees are appended as they finish and
    //! skipped on the next run; tables in skipped subtrees are counted but
    //! not passed to the callback again.
    std::optional<std::string> checkpoint;
  };

  //! Calls \p emit with every AG-groupoid matching \p c, in ascending table
  //! order, on the calling thread.  Returns the number of matches, including
  //! those in subtrees skipped through the checkpoint.
  //!
  //! Labelled search (up_to_isomorphism false) emits every table.  With
  //! up_to_isomorphism, each class is emitted once as its canonical form.
  //! Throws InvalidArgument when the order is out of range or the
  //! checkpoint belongs to different constraints.
  std::uint64_t for_each_ag(SearchConstraints const&                    c,
                            SearchOptions const&                        opts,
                            std::function<void(Groupoid const&)> const& emit);

  std::vector<Groupoid> enumerate_ag(SearchConstraints const& c,
                                     SearchOptions const&     opts = {});

  std::uint64_t count_ag(SearchConstraints const& c, SearchOptions const& opts = {});

  //! perm[a] is the new index of a: R(perm[a], perm[b]) = perm[T(a, b)].
  //! Labels travel with their elements.
  Groupoid relabel(Groupoid const& g, std::vector<element_type> const& perm);

  //! The row-major lexicographically least relabelling, with labels
  //! "0", ..., "n-1".
  Groupoid canonical_form(Groupoid const& g);

  //! Whether the table of \p g is its own canonical form.
  bool is_canonical(Groupoid const& g);

  //! The least (lexicographic) permutation carrying g's table onto h's.
  std::optional<std::vector<element_type>> are_isomorphic(Groupoid const& g,
                                                          Groupoid const& h);

}  // namespace agcheck

#endif  // AGCHECK_ENUMERATE_HPP_
