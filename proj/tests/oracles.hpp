#pragma once

// Slow, obviously-correct reference computations. They work on raw tables
// and share no code with the library beyond the table types.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace oracle {

  using Table  = std::vector<std::vector<std::size_t>>;
  using Labels = std::vector<std::size_t>;

  // Renumber block labels by first occurrence.
  inline Labels normal_form(Labels const& labels) {
    std::map<std::size_t, std::size_t> seen;
    Labels                             out;
    for (auto l : labels) {
      auto it = seen.find(l);
      if (it == seen.end()) {
        it = seen.emplace(l, seen.size()).first;
      }
      out.push_back(it->second);
    }
    return out;
  }

  inline std::size_t nr_blocks(Labels const& labels) {
    return std::set<std::size_t>(labels.begin(), labels.end()).size();
  }

  // Every set partition of {0..n-1}, generated without any pruning.
  inline std::vector<Labels> all_partitions(std::size_t n) {
    std::vector<Labels> out;
    Labels              cur(n, 0);
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t i,
                                                            std::size_t used) {
      if (i == n) {
        out.push_back(cur);
        return;
      }
      for (std::size_t b = 0; b <= used; ++b) {
        cur[i] = b;
        rec(i + 1, std::max(used, b + 1));
      }
    };
    if (n == 0) {
      return {Labels{}};
    }
    rec(0, 0);
    return out;
  }

  // act[a][m] = a*m
  inline bool compatible(Table const& act, Labels const& p) {
    for (std::size_t a = 0; a < act.size(); ++a) {
      for (std::size_t b = 0; b < act.size(); ++b) {
        if (p[a] != p[b]) {
          continue;
        }
        for (std::size_t m = 0; m < act[a].size(); ++m) {
          if (p[act[a][m]] != p[act[b][m]]) {
            return false;
          }
        }
      }
    }
    return true;
  }

  inline std::vector<Labels> congruences(Table const& act) {
    std::vector<Labels> out;
    for (auto const& p : all_partitions(act.size())) {
      if (compatible(act, p)) {
        out.push_back(p);
      }
    }
    return out;
  }

  inline bool separates(Labels const& p,
                        std::size_t   a,
                        std::vector<std::size_t> const& x) {
    return std::none_of(
        x.begin(), x.end(), [&](std::size_t y) { return p[y] == p[a]; });
  }

  inline std::optional<std::size_t> min_separating_index(
      Table const&                    act,
      std::size_t                     a,
      std::vector<std::size_t> const& x) {
    std::optional<std::size_t> best;
    for (auto const& p : congruences(act)) {
      if (separates(p, a, x)) {
        std::size_t k = nr_blocks(p);
        if (!best || k < *best) {
          best = k;
        }
      }
    }
    return best;
  }

  inline bool associative(Table const& t) {
    std::size_t n = t.size();
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = 0; k < n; ++k) {
          if (t[t[i][j]][k] != t[i][t[j][k]]) {
            return false;
          }
        }
      }
    }
    return true;
  }

  // Least relabeled table over permutations fixing 0 (the identity).
  inline Table canonical(Table const& t) {
    std::size_t              n = t.size();
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    Table best;
    do {
      Table r(n, std::vector<std::size_t>(n));
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          r[perm[i]][perm[j]] = perm[t[i][j]];
        }
      }
      if (best.empty() || r < best) {
        best = r;
      }
    } while (std::next_permutation(perm.begin() + 1, perm.end()));
    return best;
  }

  // Number of monoids of order n up to isomorphism, by trying every table
  // with identity 0.
  inline std::size_t count_monoids(std::size_t n) {
    std::set<Table> seen;
    Table           t(n, std::vector<std::size_t>(n));
    for (std::size_t i = 0; i < n; ++i) {
      t[0][i] = t[i][0] = i;
    }
    std::size_t const cells = (n - 1) * (n - 1);
    std::vector<std::size_t> digits(cells, 0);
    while (true) {
      for (std::size_t c = 0; c < cells; ++c) {
        t[1 + c / (n - 1)][1 + c % (n - 1)] = digits[c];
      }
      if (associative(t)) {
        seen.insert(canonical(t));
      }
      std::size_t c = 0;
      while (c < cells && ++digits[c] == n) {
        digits[c++] = 0;
      }
      if (c == cells) {
        break;
      }
    }
    return seen.size();
  }

  // Backtracking search for an isomorphism between two monoid tables.
  inline bool isomorphic(Table const& a,
                         std::size_t  ida,
                         Table const& b,
                         std::size_t  idb) {
    std::size_t n = a.size();
    if (b.size() != n) {
      return false;
    }
    std::vector<std::size_t> f(n, n), finv(n, n);
    std::vector<std::size_t> order;
    order.push_back(ida);
    for (std::size_t x = 0; x < n; ++x) {
      if (x != ida) {
        order.push_back(x);
      }
    }
    auto consistent = [&]() {
      for (std::size_t u = 0; u < n; ++u) {
        if (f[u] == n) {
          continue;
        }
        for (std::size_t v = 0; v < n; ++v) {
          if (f[v] == n) {
            continue;
          }
          std::size_t uv = a[u][v];
          if (f[uv] != n && f[uv] != b[f[u]][f[v]]) {
            return false;
          }
          if (f[uv] == n && finv[b[f[u]][f[v]]] != n) {
            return false;
          }
        }
      }
      return true;
    };
    std::function<bool(std::size_t)> rec = [&](std::size_t pos) {
      if (pos == n) {
        return true;
      }
      std::size_t x = order[pos];
      for (std::size_t y = 0; y < n; ++y) {
        if (finv[y] != n || (pos == 0 && y != idb) || (pos > 0 && y == idb)) {
          continue;
        }
        f[x]    = y;
        finv[y] = x;
        if (consistent() && rec(pos + 1)) {
          return true;
        }
        f[x]    = n;
        finv[y] = n;
      }
      return false;
    };
    return rec(0);
  }

  inline bool square_free(std::string const& w) {
    for (std::size_t len = 1; 2 * len <= w.size(); ++len) {
      for (std::size_t i = 0; i + 2 * len <= w.size(); ++i) {
        if (w.compare(i, len, w, i + len, len) == 0) {
          return false;
        }
      }
    }
    return true;
  }

  // Square-free words over {a,b,c} of lengths 1..n.
  inline std::size_t count_square_free(std::size_t n) {
    std::size_t total = 0;
    for (std::size_t len = 1; len <= n; ++len) {
      std::size_t words = 1;
      for (std::size_t i = 0; i < len; ++i) {
        words *= 3;
      }
      for (std::size_t code = 0; code < words; ++code) {
        std::string w;
        for (std::size_t i = 0, c = code; i < len; ++i, c /= 3) {
          w += char('a' + c % 3);
        }
        total += square_free(w);
      }
    }
    return total;
  }

  // Sandwich rank by pairwise testing. p[j][i], group table g with identity
  // e. Returns (r_I, r_J).
  inline std::pair<std::size_t, std::size_t> sandwich_rank(
      std::vector<std::vector<std::size_t>> const& p,
      Table const&                                 g) {
    std::size_t cols = p.size(), rows = p[0].size(), order = g.size();
    auto rel_I = [&](std::size_t i, std::size_t k) {
      for (std::size_t h = 0; h < order; ++h) {
        bool ok = true;
        for (std::size_t j = 0; j < cols && ok; ++j) {
          ok = p[j][i] == g[p[j][k]][h];
        }
        if (ok) {
          return true;
        }
      }
      return false;
    };
    auto rel_J = [&](std::size_t j, std::size_t l) {
      for (std::size_t h = 0; h < order; ++h) {
        bool ok = true;
        for (std::size_t i = 0; i < rows && ok; ++i) {
          ok = p[j][i] == g[h][p[l][i]];
        }
        if (ok) {
          return true;
        }
      }
      return false;
    };
    std::size_t r_I = 0, r_J = 0;
    for (std::size_t i = 0; i < rows; ++i) {
      bool fresh = true;
      for (std::size_t k = 0; k < i && fresh; ++k) {
        fresh = !rel_I(i, k);
      }
      r_I += fresh;
    }
    for (std::size_t j = 0; j < cols; ++j) {
      bool fresh = true;
      for (std::size_t l = 0; l < j && fresh; ++l) {
        fresh = !rel_J(j, l);
      }
      r_J += fresh;
    }
    return {r_I, r_J};
  }

  // Nonempty subsets closed under the action, as sorted vectors.
  inline std::set<std::vector<std::size_t>> closed_subsets(Table const& act) {
    std::set<std::vector<std::size_t>> out;
    std::size_t                        k = act.size();
    for (std::size_t mask = 1; mask < (std::size_t(1) << k); ++mask) {
      bool ok = true;
      for (std::size_t a = 0; a < k && ok; ++a) {
        if (!(mask >> a & 1)) {
          continue;
        }
        for (auto b : act[a]) {
          if (!(mask >> b & 1)) {
            ok = false;
            break;
          }
        }
      }
      if (ok) {
        std::vector<std::size_t> s;
        for (std::size_t a = 0; a < k; ++a) {
          if (mask >> a & 1) {
            s.push_back(a);
          }
        }
        out.insert(s);
      }
    }
    return out;
  }

}  // namespace oracle
