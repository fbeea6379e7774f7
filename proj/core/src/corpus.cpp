#include <algorithm>  // for max, min
#include <atomic>     // for atomic
#include <thread>     // for thread

#include "agcheck/cayley.hpp"
#include "agcheck/corpus.hpp"
#include "agcheck/enumerate.hpp"
#include "agcheck/error.hpp"

namespace agcheck {

  std::vector<Groupoid> ag_corpus(std::size_t order_max, bool unitary_only) {
    std::vector<Groupoid> out;
    for (std::size_t n = 1; n <= order_max; ++n) {
      SearchConstraints c;
      c.order             = n;
      c.require_unitary   = unitary_only;
      c.up_to_isomorphism = true;
      for_each_ag(c, {}, [&](Groupoid const& g) { out.push_back(g); });
    }
    return out;
  }

  CorpusSummary corpus_verify(std::size_t                     order_max,
                              std::vector<std::string> const& statement_ids,
                              FuzzyConfig const&              cfg,
                              std::size_t                     threads) {
    if (order_max == 0 || order_max > default_enumeration_order_cap) {
      throw InvalidArgument("order_max must be between 1 and "
                            + std::to_string(default_enumeration_order_cap));
    }
    bool any_general = false;
    for (auto const& id : statement_ids) {
      auto info = find_statement(id);
      if (!info) {
        throw InvalidArgument("unknown statement id \"" + id + "\"");
      }
      any_general = any_general || !info->requires_unitary;
    }
    // Unitary groupoids are a subset of the general corpus, so one pass over
    // the general corpus serves both kinds of statement.
    std::vector<Groupoid> const corpus = ag_corpus(order_max, !any_general);

    std::vector<std::vector<ConditionReport>> reports(corpus.size());
    std::atomic<std::size_t>                  next{0};
    auto                                      worker = [&] {
      for (;;) {
        std::size_t const i = next.fetch_add(1);
        if (i >= corpus.size()) {
          return;
        }
        bool const unitary = !find_left_identities(corpus[i]).empty();
        for (auto const& id : statement_ids) {
          if (find_statement(id)->requires_unitary && !unitary) {
            continue;
          }
          reports[i].push_back(check_statement(corpus[i], id, cfg));
        }
      }
    };
    if (threads == 0) {
      threads = std::max(1u, std::thread::hardware_concurrency());
    }
    threads = std::max<std::size_t>(1, std::min(threads, corpus.size()));
    std::vector<std::thread> pool;
    for (std::size_t t = 1; t < threads; ++t) {
      pool.emplace_back(worker);
    }
    worker();
    for (auto& t : pool) {
      t.join();
    }

    CorpusSummary out;
    for (std::size_t i = 0; i < corpus.size(); ++i) {
      if (reports[i].empty()) {
        continue;
      }
      ++out.groupoids_checked;
      for (auto& r : reports[i]) {
        if (!r.applicable) {
          continue;
        }
        ++out.checks;
        if (r.agreement) {
          ++out.agreements;
        } else {
          out.violations.push_back({corpus[i], std::move(r)});
        }
      }
    }
    return out;
  }

}  // namespace agcheck
