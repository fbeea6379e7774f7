#include <algorithm>           // for next_permutation, sort
#include <atomic>              // for atomic
#include <condition_variable>  // for condition_variable
#include <fstream>             // for ifstream, ofstream
#include <mutex>               // for mutex, unique_lock
#include <numeric>             // for iota
#include <sstream>             // for istringstream
#include <thread>              // for thread

#include "agcheck/enumerate.hpp"
#include "agcheck/error.hpp"

namespace agcheck {

  namespace {

    using Table = std::vector<std::uint8_t>;
    using Perm  = std::vector<element_type>;

    // Compares the relabelling of t by perm (inverse inv) with ref, row-major.
    int compare_relabelled(std::uint8_t const* t,
                           std::size_t         n,
                           Perm const&         perm,
                           Perm const&         inv,
                           std::uint8_t const* ref) {
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          std::uint8_t const r = static_cast<std::uint8_t>(
              perm[t[inv[i] * n + inv[j]]]);
          std::uint8_t const s = ref[i * n + j];
          if (r != s) {
            return r < s ? -1 : 1;
          }
        }
      }
      return 0;
    }

    Perm inverse(Perm const& p) {
      Perm inv(p.size());
      for (std::size_t i = 0; i < p.size(); ++i) {
        inv[p[i]] = static_cast<element_type>(i);
      }
      return inv;
    }

    Table relabel_raw(std::uint8_t const* t, std::size_t n, Perm const& perm) {
      Table out(n * n);
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
          out[perm[a] * n + perm[b]] = static_cast<std::uint8_t>(perm[t[a * n + b]]);
        }
      }
      return out;
    }

    Perm identity_perm(std::size_t n) {
      Perm p(n);
      std::iota(p.begin(), p.end(), element_type(0));
      return p;
    }

    Table canonical_raw(std::uint8_t const* t, std::size_t n) {
      Table best(t, t + n * n);
      Perm  p = identity_perm(n);
      while (std::next_permutation(p.begin(), p.end())) {
        Perm const inv = inverse(p);
        if (compare_relabelled(t, n, p, inv, best.data()) < 0) {
          best = relabel_raw(t, n, p);
        }
      }
      return best;
    }

    // No relabelling is smaller.  With `left_ids`, only relabellings moving
    // one of those elements to 0 are considered.
    bool is_minimal_raw(std::uint8_t const* t,
                        std::size_t         n,
                        std::uint64_t       left_ids = ~std::uint64_t(0)) {
      Perm p = identity_perm(n);
      while (std::next_permutation(p.begin(), p.end())) {
        Perm const inv = inverse(p);
        if (((left_ids >> inv[0]) & 1) == 0) {
          continue;
        }
        if (compare_relabelled(t, n, p, inv, t) < 0) {
          return false;
        }
      }
      return true;
    }

    std::uint64_t left_identities_raw(std::uint8_t const* t, std::size_t n) {
      std::uint64_t out = 0;
      for (std::size_t e = 0; e < n; ++e) {
        bool ok = true;
        for (std::size_t x = 0; x < n && ok; ++x) {
          ok = t[e * n + x] == x;
        }
        if (ok) {
          out |= std::uint64_t(1) << e;
        }
      }
      return out;
    }

    bool intra_regular_raw(std::uint8_t const* t, std::size_t n) {
      for (std::size_t a = 0; a < n; ++a) {
        std::size_t const a2    = t[a * n + a];
        bool              found = false;
        for (std::size_t x = 0; x < n && !found; ++x) {
          std::size_t const xa2 = t[x * n + a2];
          for (std::size_t y = 0; y < n && !found; ++y) {
            found = t[xa2 * n + y] == a;
          }
        }
        if (!found) {
          return false;
        }
      }
      return true;
    }

    void check_canonical_order(std::size_t n) {
      if (n > canonical_order_cap) {
        throw InvalidArgument("order " + std::to_string(n)
                              + " exceeds the canonical-form bound of "
                              + std::to_string(canonical_order_cap));
      }
    }

    // Backtracking over one subtree: cells are filled in row-major order
    // and each assignment is checked against every instance of
    // (xy)z = (zy)x that it completes.
    class Search {
     public:
      Search(std::size_t n) : _n(n), _t(n * n, -1) {}

      void set(std::size_t idx, int v) {
        _t[idx] = static_cast<signed char>(v);
      }

      bool consistent(std::size_t idx) const {
        int const a = static_cast<int>(idx / _n);
        int const b = static_cast<int>(idx % _n);
        int const n = static_cast<int>(_n);
        for (int z = 0; z < n; ++z) {
          if (!ok(a, b, z) || !ok(z, b, a)) {
            return false;
          }
        }
        for (int x = 0; x < n; ++x) {
          for (int y = 0; y < n; ++y) {
            if (get(x, y) == a && (!ok(x, y, b) || !ok(b, y, x))) {
              return false;
            }
          }
        }
        return true;
      }

      template <typename Leaf>
      void run(std::size_t idx, Leaf&& leaf) {
        if (idx == _t.size()) {
          for (std::size_t i = 0; i < _t.size(); ++i) {
            _leaf[i] = static_cast<std::uint8_t>(_t[i]);
          }
          leaf(_leaf.data());
          return;
        }
        for (std::size_t v = 0; v < _n; ++v) {
          _t[idx] = static_cast<signed char>(v);
          if (consistent(idx)) {
            run(idx + 1, leaf);
          }
        }
        _t[idx] = -1;
      }

     private:
      int get(int i, int j) const {
        return _t[static_cast<std::size_t>(i) * _n + static_cast<std::size_t>(j)];
      }

      bool ok(int x, int y, int z) const {
        int const p = get(x, y);
        if (p < 0) {
          return true;
        }
        int const l = get(p, z);
        if (l < 0) {
          return true;
        }
        int const q = get(z, y);
        if (q < 0) {
          return true;
        }
        int const r = get(q, x);
        return r < 0 || l == r;
      }

      std::size_t              _n;
      std::vector<signed char> _t;
      Table                    _leaf = Table(_n * _n);
    };

    struct JobResult {
      std::uint64_t count = 0;
      Table         tables;  // concatenated
    };

    std::string header(SearchConstraints const& c) {
      return "# agcheck enumeration checkpoint n=" + std::to_string(c.order)
             + " unitary=" + std::to_string(int(c.require_unitary))
             + " intra=" + std::to_string(int(c.require_intra_regular))
             + " iso=" + std::to_string(int(c.up_to_isomorphism));
    }

    class Enumerator {
     public:
      Enumerator(SearchConstraints const& c, SearchOptions const& opts)
          : _c(c), _opts(opts), _n(c.order) {
        if (_n == 0) {
          throw InvalidArgument("order must be at least 1");
        }
        if (_n > hard_enumeration_order_cap
            || (_n > default_enumeration_order_cap && !opts.allow_order_6)) {
          throw InvalidArgument(
              "order " + std::to_string(_n) + " exceeds the enumeration cap of "
              + std::to_string(default_enumeration_order_cap)
              + (_n == hard_enumeration_order_cap ? " (order 6 must be enabled "
                                                    "explicitly)"
                                                  : ""));
        }
        _fixed_identity = c.require_unitary && c.up_to_isomorphism;
        _prefix_row     = _fixed_identity ? 1 : 0;
        _jobs           = 1;
        if (_prefix_row < _n) {
          for (std::size_t i = 0; i < _n; ++i) {
            _jobs *= _n;
          }
        }
      }

      std::uint64_t run(std::function<void(Groupoid const&)> const& emit) {
        _store = static_cast<bool>(emit);
        std::uint64_t total = 0;
        std::size_t   first = 0;
        std::ofstream ckpt;
        if (_opts.checkpoint) {
          first = resume(*_opts.checkpoint, total);
          ckpt.open(*_opts.checkpoint, std::ios::app);
          if (!ckpt) {
            throw Error("cannot write checkpoint " + *_opts.checkpoint);
          }
          if (first == 0 && _fresh) {
            ckpt << header(_c) << '\n' << std::flush;
          }
        }

        std::vector<std::optional<JobResult>> results(_jobs);
        std::mutex                            mutex;
        std::condition_variable               done;
        std::atomic<std::size_t>              next{first};

        auto worker = [&] {
          for (;;) {
            std::size_t const j = next.fetch_add(1);
            if (j >= _jobs) {
              return;
            }
            JobResult r = run_job(j);
            {
              std::lock_guard lock(mutex);
              results[j] = std::move(r);
            }
            done.notify_all();
          }
        };

        std::size_t threads = _opts.threads;
        if (threads == 0) {
          threads = std::max(1u, std::thread::hardware_concurrency());
        }
        threads = std::min(threads, _jobs - std::min(first, _jobs));
        std::vector<std::thread> pool;
        for (std::size_t i = 0; i < threads; ++i) {
          pool.emplace_back(worker);
        }

        Table sorted;  // unitary canonical forms, sorted at the end
        for (std::size_t j = first; j < _jobs; ++j) {
          JobResult r;
          {
            std::unique_lock lock(mutex);
            done.wait(lock, [&] { return results[j].has_value(); });
            r = std::move(*results[j]);
            results[j].reset();
          }
          total += r.count;
          if (_store) {
            if (_fixed_identity) {
              sorted.insert(sorted.end(), r.tables.begin(), r.tables.end());
            } else {
              for (std::size_t off = 0; off < r.tables.size(); off += _n * _n) {
                emit_table(emit, r.tables.data() + off);
              }
            }
          }
          if (ckpt.is_open()) {
            ckpt << prefix_text(j) << '\t' << r.count << '\n' << std::flush;
          }
        }
        for (auto& t : pool) {
          t.join();
        }

        if (_store && _fixed_identity) {
          std::size_t const   nn = _n * _n;
          std::vector<Table>  tables;
          for (std::size_t off = 0; off < sorted.size(); off += nn) {
            tables.emplace_back(sorted.begin() + off, sorted.begin() + off + nn);
          }
          std::sort(tables.begin(), tables.end());
          for (auto const& t : tables) {
            emit_table(emit, t.data());
          }
        }
        return total;
      }

     private:
      void emit_table(std::function<void(Groupoid const&)> const& emit,
                      std::uint8_t const*                         t) const {
        emit(Groupoid(_n, std::vector<element_type>(t, t + _n * _n)));
      }

      std::string prefix_text(std::size_t j) const {
        if (_prefix_row >= _n) {
          return "-";
        }
        std::string out;
        for (std::size_t i = 0; i < _n; ++i) {
          if (i > 0) {
            out += ' ';
          }
          out += std::to_string(digit(j, i));
        }
        return out;
      }

      // Value of cell (prefix_row, i) in job j; cell 0 is most significant.
      std::size_t digit(std::size_t j, std::size_t i) const {
        for (std::size_t k = i + 1; k < _n; ++k) {
          j /= _n;
        }
        return j % _n;
      }

      std::size_t resume(std::string const& path, std::uint64_t& total) {
        std::ifstream in(path);
        if (!in) {
          _fresh = true;
          return 0;
        }
        std::string line;
        if (!std::getline(in, line)) {
          _fresh = true;
          return 0;
        }
        if (line != header(_c)) {
          throw InvalidArgument("checkpoint " + path
                                + " was written for different constraints");
        }
        std::size_t done = 0;
        while (std::getline(in, line)) {
          auto const tab = line.find('\t');
          if (tab == std::string::npos || done >= _jobs
              || line.substr(0, tab) != prefix_text(done)) {
            throw InvalidArgument("checkpoint " + path + " is corrupt at entry "
                                  + std::to_string(done + 1));
          }
          std::istringstream count(line.substr(tab + 1));
          std::uint64_t      c = 0;
          if (!(count >> c)) {
            throw InvalidArgument("checkpoint " + path + " is corrupt at entry "
                                  + std::to_string(done + 1));
          }
          total += c;
          ++done;
        }
        return done;
      }

      JobResult run_job(std::size_t j) const {
        JobResult r;
        Search    s(_n);
        if (_fixed_identity) {
          for (std::size_t b = 0; b < _n; ++b) {
            s.set(b, static_cast<int>(b));
            if (!s.consistent(b)) {
              return r;
            }
          }
        }
        std::size_t start = _prefix_row * _n;
        if (_prefix_row < _n) {
          for (std::size_t i = 0; i < _n; ++i) {
            s.set(start + i, static_cast<int>(digit(j, i)));
            if (!s.consistent(start + i)) {
              return r;
            }
          }
          start += _n;
        }
        s.run(start, [&](std::uint8_t const* t) { leaf(t, r); });
        return r;
      }

      void leaf(std::uint8_t const* t, JobResult& r) const {
        std::uint64_t const ids = left_identities_raw(t, _n);
        if (_c.require_unitary && ids == 0) {
          return;
        }
        if (_fixed_identity) {
          if (!is_minimal_raw(t, _n, ids)) {
            return;
          }
        } else if (_c.up_to_isomorphism && !is_minimal_raw(t, _n)) {
          return;
        }
        if (_c.require_intra_regular && !intra_regular_raw(t, _n)) {
          return;
        }
        ++r.count;
        if (_store) {
          if (_fixed_identity) {
            Table const canon = canonical_raw(t, _n);
            r.tables.insert(r.tables.end(), canon.begin(), canon.end());
          } else {
            r.tables.insert(r.tables.end(), t, t + _n * _n);
          }
        }
      }

      SearchConstraints _c;
      SearchOptions     _opts;
      std::size_t       _n;
      bool              _fixed_identity = false;
      std::size_t       _prefix_row     = 0;
      std::size_t       _jobs           = 1;
      bool              _store          = false;
      bool              _fresh          = false;
    };

  }  // namespace

  std::uint64_t for_each_ag(SearchConstraints const&                    c,
                            SearchOptions const&                        opts,
                            std::function<void(Groupoid const&)> const& emit) {
    return Enumerator(c, opts).run(emit);
  }

  std::vector<Groupoid> enumerate_ag(SearchConstraints const& c,
                                     SearchOptions const&     opts) {
    std::vector<Groupoid> out;
    for_each_ag(c, opts, [&](Groupoid const& g) { out.push_back(g); });
    return out;
  }

  std::uint64_t count_ag(SearchConstraints const& c, SearchOptions const& opts) {
    return for_each_ag(c, opts, {});
  }

  Groupoid relabel(Groupoid const& g, std::vector<element_type> const& perm) {
    std::size_t const n = g.order();
    if (perm.size() != n) {
      throw InvalidArgument("permutation has " + std::to_string(perm.size())
                            + " entries, expected " + std::to_string(n));
    }
    std::vector<bool> seen(n, false);
    for (auto p : perm) {
      if (p >= n || seen[p]) {
        throw InvalidArgument("not a permutation of the carrier");
      }
      seen[p] = true;
    }
    Table const              t = relabel_raw(g.cells().data(), n, perm);
    std::vector<std::string> labels(n);
    for (std::size_t a = 0; a < n; ++a) {
      labels[perm[a]] = g.label(static_cast<element_type>(a));
    }
    return Groupoid(n, std::vector<element_type>(t.begin(), t.end()), labels);
  }

  Groupoid canonical_form(Groupoid const& g) {
    check_canonical_order(g.order());
    Table const t = canonical_raw(g.cells().data(), g.order());
    return Groupoid(g.order(), std::vector<element_type>(t.begin(), t.end()));
  }

  bool is_canonical(Groupoid const& g) {
    check_canonical_order(g.order());
    return is_minimal_raw(g.cells().data(), g.order());
  }

  std::optional<std::vector<element_type>> are_isomorphic(Groupoid const& g,
                                                          Groupoid const& h) {
    if (g.order() != h.order()) {
      throw InvalidArgument("cannot compare groupoids of orders "
                            + std::to_string(g.order()) + " and "
                            + std::to_string(h.order()));
    }
    std::size_t const n = g.order();
    check_canonical_order(n);
    Perm p = identity_perm(n);
    do {
      if (compare_relabelled(g.cells().data(), n, p, inverse(p), h.cells().data())
          == 0) {
        return p;
      }
    } while (std::next_permutation(p.begin(), p.end()));
    return std::nullopt;
  }

}  // namespace agcheck
