#ifndef AGCHECK_IDEALS_HPP_
#define AGCHECK_IDEALS_HPP_

#include <array>        // for array
#include <cstddef>      // for size_t
#include <optional>     // for optional
#include <string_view>  // for string_view
#include <vector>       // for vector

#include "cayley.hpp"
#include "groupoid.hpp"
#include "subset.hpp"

namespace agcheck {

  //! The ideal notions, plus semiprimeness.
  //!
  //! The first nine enumerators are the ideal kinds proper; \c semiprime is
  //! carried in the same enumeration so that crisp and fuzzy predicates,
  //! the characteristic correspondence and the command line can all be
  //! indexed uniformly.
  enum class IdealKind {
    subgroupoid,
    left,
    right,
    two_sided,
    generalized_bi,
    bi,
    generalized_interior,
    interior,
    quasi,
    semiprime
  };

  //! The nine ideal kinds, in declaration order.
  inline constexpr std::array<IdealKind, 9> ideal_kinds
      = {IdealKind::subgroupoid,
         IdealKind::left,
         IdealKind::right,
         IdealKind::two_sided,
         IdealKind::generalized_bi,
         IdealKind::bi,
         IdealKind::generalized_interior,
         IdealKind::interior,
         IdealKind::quasi};

  //! ideal_kinds followed by IdealKind::semiprime.
  inline constexpr std::array<IdealKind, 10> all_kinds
      = {IdealKind::subgroupoid,
         IdealKind::left,
         IdealKind::right,
         IdealKind::two_sided,
         IdealKind::generalized_bi,
         IdealKind::bi,
         IdealKind::generalized_interior,
         IdealKind::interior,
         IdealKind::quasi,
         IdealKind::semiprime};

  std::string_view to_string(IdealKind kind) noexcept;

  //! Accepts the names returned by to_string and a few aliases
  //! ("ideal", "two-sided", "gen-bi", ...).
  std::optional<IdealKind> parse_ideal_kind(std::string_view name);

  //! Result of a predicate with an optional least counterexample.
  struct Verdict {
    bool                 holds = true;
    std::optional<Tuple> counterexample;

    explicit operator bool() const noexcept {
      return holds;
    }
  };

  //! Whether the nonempty subset \p a is an ideal of the given kind.
  //!
  //! Counterexamples, when the predicate fails:
  //! - subgroupoid: (x, y) with x, y in A and xy not in A;
  //! - left: (s, x) with x in A and sx not in A; right: (x, s) likewise;
  //! - generalized_bi: (x, s, y) with x, y in A and (xs)y not in A;
  //! - generalized_interior: (s, x, t) with x in A and (sx)t not in A;
  //! - quasi: (x) with x in SA and in AS but not in A;
  //! - semiprime: (x) with xx in A but x not in A.
  //! two_sided, bi and interior report the first failing component.
  //!
  //! Throws InvalidArgument if \p a is empty or bound to another order.
  Verdict is_ideal(Groupoid const& g, ElementSubset const& a, IdealKind kind);

  //! a * a in A implies a in A, for every a.
  bool is_semiprime_subset(Groupoid const& g, ElementSubset const& a);

  //! Default bound on the order for exhaustive subset scans.
  inline constexpr std::size_t default_enumeration_cap = 16;

  //! Every nonempty subset passing is_ideal (and is_semiprime_subset when
  //! \p semiprime_only), in ascending bitset order.
  std::vector<ElementSubset>
  enumerate_ideals(Groupoid const& g,
                   IdealKind       kind,
                   bool            semiprime_only = false,
                   std::size_t     cap            = default_enumeration_cap);

  //! Every nonempty subset, ascending.  Subject to the same cap.
  std::vector<ElementSubset>
  nonempty_subsets(std::size_t order,
                   std::size_t cap = default_enumeration_cap);

}  // namespace agcheck

#endif  // AGCHECK_IDEALS_HPP_
