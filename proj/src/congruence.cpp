#include "actsep/congruence.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdlib>
#include <deque>
#include <map>
#include <string>

namespace actsep {

  std::optional<std::array<Index, 3>> find_incompatibility(FiniteAct const& a,
                                                           Partition const& p) {
    std::size_t const  n = a.monoid()->order();
    std::vector<Index> rep(p.index(), undefined);
    for (Index x = 0; x < a.size(); ++x) {
      if (rep[p.block_of(x)] == undefined) {
        rep[p.block_of(x)] = x;
      }
    }
    // comparing each element with its block representative is enough
    for (Index x = 0; x < a.size(); ++x) {
      Index const r = rep[p.block_of(x)];
      if (r == x) {
        continue;
      }
      for (Index m = 0; m < n; ++m) {
        if (!p.same_block(a.act(r, m), a.act(x, m))) {
          return std::array<Index, 3>{r, x, m};
        }
      }
    }
    return std::nullopt;
  }

  Congruence verify_congruence(ActPtr act, Partition partition) {
    if (partition.size() != act->size()) {
      throw MalformedTable("partition has " + std::to_string(partition.size())
                           + " elements, act has "
                           + std::to_string(act->size()));
    }
    if (auto bad = find_incompatibility(*act, partition)) {
      throw NotCompatible((*bad)[0], (*bad)[1], (*bad)[2]);
    }
    return Congruence(std::move(act), std::move(partition));
  }

  Congruence equality_congruence(ActPtr const& a) {
    return verify_congruence(a, Partition::discrete(a->size()));
  }

  Congruence universal_congruence(ActPtr const& a) {
    return verify_congruence(a, Partition::universal(a->size()));
  }

  Congruence principal_closure(ActPtr const& a, PairList const& seeds) {
    std::size_t const                   n = a->monoid()->order();
    UnionFind                           uf(a->size());
    std::deque<std::pair<Index, Index>> queue;
    for (auto const& [x, y] : seeds) {
      if (x >= a->size() || y >= a->size()) {
        throw MalformedTable("seed out of range");
      }
      queue.emplace_back(x, y);
    }
    while (!queue.empty()) {
      auto [x, y] = queue.front();
      queue.pop_front();
      if (uf.unite(x, y)) {
        for (Index m = 0; m < n; ++m) {
          queue.emplace_back(a->act(x, m), a->act(y, m));
        }
      }
    }
    return verify_congruence(a, uf.to_partition());
  }

  Congruence rees_congruence(ActPtr const& a, ElementSet const& b) {
    require_subact(*a, b);
    std::vector<Index> labels(a->size());
    for (Index x = 0; x < a->size(); ++x) {
      labels[x] = set_contains(b, x) ? b[0] : x;
    }
    return verify_congruence(a, Partition::from_labels(labels));
  }

  Congruence meet(std::vector<Congruence> const& rhos) {
    if (rhos.empty()) {
      throw MalformedTable("meet of no congruences");
    }
    ActPtr const& a = rhos[0].act();
    for (auto const& r : rhos) {
      if (r.act() != a) {
        throw ActMismatch();
      }
    }
    std::map<std::vector<Index>, Index> ids;
    std::vector<Index>                  labels(a->size());
    for (Index x = 0; x < a->size(); ++x) {
      std::vector<Index> key;
      for (auto const& r : rhos) {
        key.push_back(r.partition().block_of(x));
      }
      labels[x] = ids.emplace(key, ids.size()).first->second;
    }
    return verify_congruence(a, Partition::from_labels(labels));
  }

  Congruence restrict_to(Congruence const& rho, ElementSet const& b) {
    ActPtr             sub = sub_act(*rho.act(), b);
    std::vector<Index> labels;
    for (Index x : b) {
      labels.push_back(rho.partition().block_of(x));
    }
    return verify_congruence(sub, Partition::from_labels(labels));
  }

  QuotientAct quotient(Congruence const& rho) {
    FiniteAct const&  a = *rho.act();
    Partition const&  p = rho.partition();
    std::size_t const n = a.monoid()->order();
    auto const        blocks = p.blocks();
    Table             t(blocks.size(), std::vector<Index>(n));
    std::vector<std::string> labels;
    for (Index b = 0; b < blocks.size(); ++b) {
      labels.push_back("[" + a.label(blocks[b][0]) + "]");
      for (Index m = 0; m < n; ++m) {
        t[b][m] = p.block_of(a.act(blocks[b][0], m));
      }
    }
    ActPtr q = FiniteAct::from_table(a.monoid(), t, std::move(labels));
    return {q, ActHomomorphism::make(rho.act(), q, p.block_ids())};
  }

  Congruence kernel(ActHomomorphism const& f) {
    return verify_congruence(f.source(), Partition::from_labels(f.map()));
  }

  ActPtr cyclic_act_from_right_congruence(Congruence const& rho) {
    FiniteAct const&    a = *rho.act();
    FiniteMonoid const& m = *a.monoid();
    bool                regular = a.size() == m.order();
    for (Index x = 0; x < a.size() && regular; ++x) {
      for (Index y = 0; y < m.order() && regular; ++y) {
        regular = a.act(x, y) == m.mul(x, y);
      }
    }
    if (!regular) {
      throw NotACongruence("right congruence must live on the regular act");
    }
    return quotient(rho).act;
  }

  // Enumeration ////////////////////////////////////////////////////////////

  double default_search_cap() {
    if (char const* env = std::getenv("ACTSEP_MAX_SEARCH")) {
      char*        end = nullptr;
      double const v   = std::strtod(env, &end);
      if (end != env && v > 0) {
        return v;
      }
    }
    return std::ldexp(1.0, 31);
  }

  double partition_count(std::size_t k, std::size_t max_blocks) {
    // Stirling numbers of the second kind, row by row
    std::vector<double> s(max_blocks + 1, 0.0);
    s[0] = 1.0;
    for (std::size_t i = 1; i <= k; ++i) {
      for (std::size_t j = std::min(i, max_blocks); j >= 1; --j) {
        s[j] = j * s[j] + s[j - 1];
      }
      s[0] = 0.0;
    }
    double total = 0.0;
    for (std::size_t j = 1; j <= max_blocks; ++j) {
      total += s[j];
    }
    return k == 0 ? 1.0 : total;
  }

  namespace {
    // Depth-first search over restricted-growth strings. Every constraint is
    // attached to the first depth at which all elements it mentions are
    // assigned, so each is checked exactly once per branch.
    class RgsSearch {
     public:
      RgsSearch(FiniteAct const& a, SearchOptions const& opts)
          : _k(a.size()),
            _max_blocks(opts.max_index ? std::min(*opts.max_index, a.size())
                                       : a.size()),
            _compat(_k),
            _apart(_k),
            _block(_k, 0) {
        double const estimate = partition_count(_k, _max_blocks);
        if (estimate > opts.cap) {
          throw SearchSpaceTooLarge(estimate);
        }
        std::size_t const n = a.monoid()->order();
        for (Index x = 0; x < _k; ++x) {
          for (Index y = x + 1; y < _k; ++y) {
            for (Index m = 0; m < n; ++m) {
              Index const tx = a.act(x, m), ty = a.act(y, m);
              if (tx == ty) {
                continue;
              }
              Index const depth = std::max({y, tx, ty});
              _compat[depth].push_back({x, y, tx, ty});
            }
          }
        }
        for (auto& list : _compat) {
          std::sort(list.begin(), list.end());
          list.erase(std::unique(list.begin(), list.end()), list.end());
        }
        for (auto const& [x, y] : opts.must_separate) {
          if (x >= _k || y >= _k) {
            throw MalformedTable("separation pair out of range");
          }
          if (x == y) {
            _impossible = true;
          }
          _apart[std::max(x, y)].emplace_back(x, y);
        }
      }

      // visit(block ids, number of blocks) -> continue?
      template <typename Visit>
      void run(Visit&& visit, std::size_t const* bound = nullptr) {
        if (_impossible || _k == 0 || _max_blocks == 0) {
          return;
        }
        _bound = bound;
        _block[0] = 0;
        if (ok(0)) {
          _stop = false;
          dfs(1, 1, visit);
        }
      }

     private:
      bool ok(Index depth) const {
        for (auto const& c : _compat[depth]) {
          if (_block[c[0]] == _block[c[1]] && _block[c[2]] != _block[c[3]]) {
            return false;
          }
        }
        for (auto const& [x, y] : _apart[depth]) {
          if (_block[x] == _block[y]) {
            return false;
          }
        }
        return true;
      }

      template <typename Visit>
      void dfs(Index depth, std::size_t used, Visit& visit) {
        if (depth == _k) {
          if (!visit(_block, used)) {
            _stop = true;
          }
          return;
        }
        std::size_t limit = _max_blocks;
        if (_bound != nullptr) {
          // only strictly fewer blocks than the current best are useful
          limit = std::min(limit, *_bound - 1);
        }
        if (used > limit) {
          return;
        }
        std::size_t const top = std::min(used + 1, limit);
        for (Index b = 0; b < top && !_stop; ++b) {
          _block[depth] = b;
          if (ok(depth)) {
            dfs(depth + 1, std::max(used, b + 1), visit);
          }
        }
      }

      std::size_t                                 _k;
      std::size_t                                 _max_blocks;
      std::vector<std::vector<std::array<Index, 4>>> _compat;
      std::vector<PairList>                       _apart;
      std::vector<Index>                          _block;
      bool                                        _impossible = false;
      bool                                        _stop       = false;
      std::size_t const*                          _bound      = nullptr;
    };
  }  // namespace

  void for_each_congruence(FiniteAct const&                             a,
                           SearchOptions const&                         opts,
                           std::function<bool(Partition const&)> const& visit) {
    RgsSearch search(a, opts);
    search.run([&](std::vector<Index> const& ids, std::size_t) {
      return visit(Partition::from_labels(ids));
    });
  }

  std::vector<Congruence> enumerate_congruences(
      ActPtr const&              a,
      std::optional<std::size_t> max_index) {
    SearchOptions opts;
    opts.max_index = max_index;
    std::vector<Congruence> out;
    for_each_congruence(*a, opts, [&](Partition const& p) {
      out.push_back(verify_congruence(a, p));
      return true;
    });
    return out;
  }

  std::optional<Congruence> min_index_congruence(ActPtr const&        a,
                                                 SearchOptions const& opts) {
    RgsSearch          search(*a, opts);
    std::size_t        best = a->size() + 1;
    std::vector<Index> best_ids;
    search.run(
        [&](std::vector<Index> const& ids, std::size_t used) {
          if (used < best) {
            best     = used;
            best_ids = ids;
          }
          // a one-block answer cannot be beaten
          return best > 1;
        },
        &best);
    if (best_ids.empty()) {
      return std::nullopt;
    }
    return verify_congruence(a, Partition::from_labels(best_ids));
  }

}  // namespace actsep
