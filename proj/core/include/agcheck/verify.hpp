#ifndef AGCHECK_VERIFY_HPP_
#define AGCHECK_VERIFY_HPP_

#include <array>        // for array
#include <cstddef>      // for size_t
#include <cstdint>      // for uint64_t
#include <optional>     // for optional
#include <span>         // for span
#include <string>       // for string
#include <string_view>  // for string_view
#include <utility>      // for pair
#include <vector>       // for vector

#include "cayley.hpp"
#include "fuzzy.hpp"
#include "grade.hpp"
#include "groupoid.hpp"

namespace agcheck {

  ////////////////////////////////////////////////////////////////////////
  // Intra-regularity
  ////////////////////////////////////////////////////////////////////////

  //! The lexicographically least (x, y) with (x * (a * a)) * y = a.
  std::optional<std::pair<element_type, element_type>>
  intra_regular_witness(Groupoid const& g, element_type a);

  bool verify_intra_witness(Groupoid const& g,
                            element_type    a,
                            element_type    x,
                            element_type    y);

  struct IntraRegularVerdict {
    bool                        holds = true;
    std::optional<element_type> failing_element;  // least one without witness
  };

  IntraRegularVerdict is_intra_regular(Groupoid const& g);

  ////////////////////////////////////////////////////////////////////////
  // The eight identities that hold in unitary intra-regular AG-groupoids
  ////////////////////////////////////////////////////////////////////////

  enum class Lemma34Clause { i, ii, iii, iv, v, vi, vii, viii };

  inline constexpr std::array<Lemma34Clause, 8> lemma34_clauses
      = {Lemma34Clause::i,
         Lemma34Clause::ii,
         Lemma34Clause::iii,
         Lemma34Clause::iv,
         Lemma34Clause::v,
         Lemma34Clause::vi,
         Lemma34Clause::vii,
         Lemma34Clause::viii};

  //! "(i)" ... "(viii)".
  std::string_view to_string(Lemma34Clause c) noexcept;

  //! The identity of a clause, e.g. "a = a(za)".
  std::string_view lemma34_identity(Lemma34Clause c) noexcept;

  //! Number of witness elements a clause takes: 1 for (i), (ii), (vii),
  //! (viii); 2 (x, y) for (iii)-(vi).
  std::size_t lemma34_arity(Lemma34Clause c) noexcept;

  //! Substitutes \p witness into the clause and compares exactly.
  bool check_lemma34_clause(Groupoid const& g,
                            element_type    a,
                            Lemma34Clause   c,
                            Tuple const&    witness);

  //! One entry per clause, in order (i)..(viii); an absent witness means no
  //! element (pair) satisfies the clause.
  struct Lemma34Witnesses {
    std::array<std::optional<Tuple>, 8> witness;

    std::optional<Tuple> const& operator[](Lemma34Clause c) const {
      return witness[static_cast<std::size_t>(c)];
    }

    bool complete() const noexcept {
      for (auto const& w : witness) {
        if (!w) {
          return false;
        }
      }
      return true;
    }
  };

  //! Least witnesses of every clause for \p a.  Throws InvalidArgument
  //! unless \p g is a unitary AG-groupoid and \p a is intra-regular.  A
  //! missing witness is returned (not thrown) since it refutes the lemma.
  Lemma34Witnesses lemma34_witnesses(Groupoid const& g, element_type a);

  ////////////////////////////////////////////////////////////////////////
  // Statement checking
  ////////////////////////////////////////////////////////////////////////

  enum class ConditionVerdict { holds, fails, holds_on_sample, not_applicable };

  std::string_view to_string(ConditionVerdict v) noexcept;

  //! One condition of a statement.
  //!
  //! Crisp conditions are decided exhaustively and are decisive.  Sampled
  //! (fuzzy) conditions are decisive only when a sample refutes them;
  //! "holds-on-sample" never counts towards agreement.  Informational
  //! conditions are reported but never decisive.
  struct ConditionEntry {
    std::string                label;
    ConditionVerdict           verdict = ConditionVerdict::not_applicable;
    bool                       decisive      = false;
    bool                       sampled       = false;
    bool                       informational = false;
    std::optional<std::string> witness;
    std::optional<std::string> counterexample;
    std::optional<std::size_t> sample_size;
  };

  //! How the conditions of a statement relate.
  //! - equivalence: all decisive conditions have the same truth value;
  //! - implication: the first condition is the hypothesis; when it fails
  //!   the others are not applicable, otherwise all decisive ones hold;
  //! - universal: all decisive conditions hold.
  enum class StatementShape { equivalence, implication, universal };

  std::string_view to_string(StatementShape s) noexcept;

  struct ConditionReport {
    std::string                 statement_id;
    std::string                 title;
    StatementShape              shape      = StatementShape::equivalence;
    bool                        applicable = true;
    std::string                 note;  // why not applicable
    std::vector<ConditionEntry> conditions;
    bool                        agreement = true;
  };

  struct FuzzyConfig {
    std::size_t         samples = 100;  // per k value and per sampled condition
    std::uint64_t       seed    = 1;
    std::vector<KParam> k_values{KParam(rational(0)),
                                 KParam(rational(1, 2)),
                                 KParam(rational(9, 10))};
    std::vector<Grade>  grid = eighths_grid();
  };

  struct StatementInfo {
    std::string_view id;
    std::string_view title;
    bool             requires_unitary;
    bool             has_fuzzy_conditions;
  };

  //! Every registered statement id, including the alias "C4.9" of "C3.4".
  std::span<StatementInfo const> statements();

  std::optional<StatementInfo> find_statement(std::string_view id);

  //! Evaluates every condition of \p id on \p g.  Statements requiring a
  //! left identity are not applicable on groupoids without one; every
  //! statement is not applicable when \p g violates the left invertive law.
  //! Throws InvalidArgument for an unknown id or a groupoid beyond the
  //! exhaustive-scan cap.
  ConditionReport check_statement(Groupoid const&    g,
                                  std::string_view   id,
                                  FuzzyConfig const& cfg = {});

  //! Recomputes ConditionReport::agreement from the conditions.
  bool compute_agreement(StatementShape                     shape,
                         std::vector<ConditionEntry> const& conditions);

}  // namespace agcheck

#endif  // AGCHECK_VERIFY_HPP_
