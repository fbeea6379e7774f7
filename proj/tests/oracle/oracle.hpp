// Brute-force reference implementations used by the tests.  They work on
// plain nested vectors and std::set, straight from the definitions, and
// share no code with the library beyond reading a Groupoid's table.
#ifndef AGCHECK_TESTS_ORACLE_HPP_
#define AGCHECK_TESTS_ORACLE_HPP_

#include <algorithm>
#include <numeric>
#include <set>
#include <vector>

#include <boost/rational.hpp>

#include "agcheck/groupoid.hpp"

namespace oracle {

  using Table = std::vector<std::vector<int>>;
  using Set   = std::set<int>;
  using Q     = boost::rational<long long>;
  using Fz    = std::vector<Q>;

  inline Table rows(agcheck::Groupoid const& g) {
    int   n = static_cast<int>(g.order());
    Table t(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) {
        t[a][b] = static_cast<int>(g(a, b));
      }
    }
    return t;
  }

  inline agcheck::Groupoid groupoid(Table const& t) {
    std::vector<std::vector<agcheck::element_type>> r;
    for (auto const& row : t) {
      r.emplace_back(row.begin(), row.end());
    }
    return agcheck::Groupoid::from_rows(r);
  }

  inline int size(Table const& t) {
    return static_cast<int>(t.size());
  }

  inline bool left_invertive(Table const& t) {
    int n = size(t);
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) {
        for (int c = 0; c < n; ++c) {
          if (t[t[a][b]][c] != t[t[c][b]][a]) {
            return false;
          }
        }
      }
    }
    return true;
  }

  inline bool associative(Table const& t) {
    int n = size(t);
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) {
        for (int c = 0; c < n; ++c) {
          if (t[t[a][b]][c] != t[a][t[b][c]]) {
            return false;
          }
        }
      }
    }
    return true;
  }

  inline bool has_left_identity(Table const& t) {
    int n = size(t);
    for (int e = 0; e < n; ++e) {
      bool ok = true;
      for (int x = 0; x < n; ++x) {
        ok = ok && t[e][x] == x;
      }
      if (ok) {
        return true;
      }
    }
    return false;
  }

  inline bool intra_regular_element(Table const& t, int a) {
    int n = size(t);
    for (int x = 0; x < n; ++x) {
      for (int y = 0; y < n; ++y) {
        if (t[t[x][t[a][a]]][y] == a) {
          return true;
        }
      }
    }
    return false;
  }

  inline bool intra_regular(Table const& t) {
    for (int a = 0; a < size(t); ++a) {
      if (!intra_regular_element(t, a)) {
        return false;
      }
    }
    return true;
  }

  //! Every n x n table, in lexicographic row-major order.
  template <typename F>
  void for_each_table(int n, F&& f) {
    int   cells = n * n;
    Table t(n, std::vector<int>(n, 0));
    std::vector<int> digits(cells, 0);
    for (;;) {
      for (int i = 0; i < cells; ++i) {
        t[i / n][i % n] = digits[i];
      }
      f(t);
      int i = cells - 1;
      while (i >= 0 && digits[i] == n - 1) {
        digits[i] = 0;
        --i;
      }
      if (i < 0) {
        return;
      }
      ++digits[i];
    }
  }

  //! The naive filter: all tables satisfying (ab)c = (cb)a plus filters.
  inline std::vector<Table> naive_ag(int n, bool unitary, bool intra) {
    std::vector<Table> out;
    for_each_table(n, [&](Table const& t) {
      if (left_invertive(t) && (!unitary || has_left_identity(t))
          && (!intra || intra_regular(t))) {
        out.push_back(t);
      }
    });
    return out;
  }

  //! R[p[a]][p[b]] = p[T[a][b]].
  inline Table relabel(Table const& t, std::vector<int> const& p) {
    int   n = size(t);
    Table r(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) {
        r[p[a]][p[b]] = p[t[a][b]];
      }
    }
    return r;
  }

  inline Table canonical(Table const& t) {
    std::vector<int> p(t.size());
    std::iota(p.begin(), p.end(), 0);
    Table best = t;
    do {
      best = std::min(best, relabel(t, p));
    } while (std::next_permutation(p.begin(), p.end()));
    return best;
  }

  ////////////////////////////////////////////////////////////////////////
  // Subsets
  ////////////////////////////////////////////////////////////////////////

  inline Set all(int n) {
    Set s;
    for (int i = 0; i < n; ++i) {
      s.insert(i);
    }
    return s;
  }

  inline Set product(Table const& t, Set const& a, Set const& b) {
    Set out;
    for (int x : a) {
      for (int y : b) {
        out.insert(t[x][y]);
      }
    }
    return out;
  }

  inline bool subset(Set const& a, Set const& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
  }

  inline Set meet(Set const& a, Set const& b) {
    Set out;
    std::set_intersection(
        a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.end()));
    return out;
  }

  inline std::vector<Set> nonempty_subsets(int n) {
    std::vector<Set> out;
    for (unsigned m = 1; m < (1u << n); ++m) {
      Set s;
      for (int i = 0; i < n; ++i) {
        if (m & (1u << i)) {
          s.insert(i);
        }
      }
      out.push_back(s);
    }
    return out;
  }

  inline bool is_subgroupoid(Table const& t, Set const& a) {
    return subset(product(t, a, a), a);
  }
  inline bool is_left(Table const& t, Set const& a) {
    return subset(product(t, all(size(t)), a), a);
  }
  inline bool is_right(Table const& t, Set const& a) {
    return subset(product(t, a, all(size(t))), a);
  }
  inline bool is_gen_bi(Table const& t, Set const& a) {
    return subset(product(t, product(t, a, all(size(t))), a), a);
  }
  inline bool is_gen_interior(Table const& t, Set const& a) {
    auto s = all(size(t));
    return subset(product(t, product(t, s, a), s), a);
  }
  inline bool is_quasi(Table const& t, Set const& a) {
    auto s = all(size(t));
    return subset(meet(product(t, s, a), product(t, a, s)), a);
  }
  inline bool is_semiprime(Table const& t, Set const& a) {
    for (int x = 0; x < size(t); ++x) {
      if (a.count(t[x][x]) && !a.count(x)) {
        return false;
      }
    }
    return true;
  }

  ////////////////////////////////////////////////////////////////////////
  // Fuzzy subsets over exact rationals
  ////////////////////////////////////////////////////////////////////////

  inline Q half(Q k) {
    return (Q(1) - k) / 2;
  }

  inline Q min3(Q a, Q b, Q c) {
    return std::min(a, std::min(b, c));
  }

  inline Fz compose(Table const& t, Fz const& f, Fz const& g, Q k) {
    int n = size(t);
    Fz  out(n, Q(0));
    for (int p = 0; p < n; ++p) {
      for (int q = 0; q < n; ++q) {
        out[t[p][q]] = std::max(out[t[p][q]], min3(f[p], g[q], half(k)));
      }
    }
    return out;
  }

  // Inequality forms, straight from the definitions.
  inline bool fz_left(Table const& t, Fz const& f, Q k) {
    int n = size(t);
    for (int x = 0; x < n; ++x) {
      for (int y = 0; y < n; ++y) {
        if (f[t[x][y]] < std::min(f[y], half(k))) {
          return false;
        }
      }
    }
    return true;
  }

  inline bool fz_right(Table const& t, Fz const& f, Q k) {
    int n = size(t);
    for (int x = 0; x < n; ++x) {
      for (int y = 0; y < n; ++y) {
        if (f[t[x][y]] < std::min(f[x], half(k))) {
          return false;
        }
      }
    }
    return true;
  }

  inline bool fz_quasi(Table const& t, Fz const& f, Q k) {
    int n = size(t);
    Fz  one(n, Q(1));
    Fz  l = compose(t, one, f, k);
    Fz  r = compose(t, f, one, k);
    for (int a = 0; a < n; ++a) {
      if (f[a] < min3(l[a], r[a], half(k))) {
        return false;
      }
    }
    return true;
  }

  //! The fuzzy-point form of "left ideal" on a dense grid of thresholds
  //! t = m / den, m = 1..den.
  inline bool fz_left_points(Table const& t, Fz const& f, Q k, long long den) {
    int n = size(t);
    for (int x = 0; x < n; ++x) {
      for (int y = 0; y < n; ++y) {
        for (long long m = 1; m <= den; ++m) {
          Q const tt(m, den);
          if (f[y] >= tt) {
            Q const v = f[t[x][y]];
            if (!(v >= tt || v + tt + k > Q(1))) {
              return false;
            }
          }
        }
      }
    }
    return true;
  }

}  // namespace oracle

#endif  // AGCHECK_TESTS_ORACLE_HPP_
