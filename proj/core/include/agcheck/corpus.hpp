#ifndef AGCHECK_CORPUS_HPP_
#define AGCHECK_CORPUS_HPP_

#include <cstddef>  // for size_t
#include <string>   // for string
#include <vector>   // for vector

#include "groupoid.hpp"
#include "verify.hpp"

namespace agcheck {

  struct CorpusViolation {
    Groupoid        groupoid;  // canonical form
    ConditionReport report;
  };

  struct CorpusSummary {
    std::size_t                  groupoids_checked = 0;
    std::size_t                  checks            = 0;  // applicable reports
    std::size_t                  agreements        = 0;
    std::vector<CorpusViolation> violations;
  };

  //! The AG-groupoids of orders 1..order_max up to isomorphism, as
  //! canonical forms in ascending order, optionally only the unitary ones.
  std::vector<Groupoid> ag_corpus(std::size_t order_max, bool unitary_only);

  //! Runs check_statement for every id over the corpus: the unitary corpus
  //! for statements that need a left identity, every AG-groupoid otherwise.
  //! Groupoids are shared among \p threads workers; the summary does not
  //! depend on the thread count.  order_max is limited by the default
  //! enumeration cap.
  CorpusSummary corpus_verify(std::size_t                     order_max,
                              std::vector<std::string> const& statement_ids,
                              FuzzyConfig const&              cfg     = {},
                              std::size_t                     threads = 1);

}  // namespace agcheck

#endif  // AGCHECK_CORPUS_HPP_
