#include "actsep/structure.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace actsep {

  ElementSet idempotents(FiniteMonoid const& m) {
    ElementSet out;
    for (Index x = 0; x < m.order(); ++x) {
      if (m.mul(x, x) == x) {
        out.push_back(x);
      }
    }
    return out;
  }

  bool is_commutative(FiniteMonoid const& m) {
    for (Index x = 0; x < m.order(); ++x) {
      for (Index y = x + 1; y < m.order(); ++y) {
        if (m.mul(x, y) != m.mul(y, x)) {
          return false;
        }
      }
    }
    return true;
  }

  bool has_central_idempotents(FiniteMonoid const& m) {
    for (Index e : idempotents(m)) {
      for (Index x = 0; x < m.order(); ++x) {
        if (m.mul(e, x) != m.mul(x, e)) {
          return false;
        }
      }
    }
    return true;
  }

  bool is_regular(FiniteMonoid const& m) {
    for (Index x = 0; x < m.order(); ++x) {
      bool found = false;
      for (Index y = 0; y < m.order() && !found; ++y) {
        found = m.mul(m.mul(x, y), x) == x;
      }
      if (!found) {
        return false;
      }
    }
    return true;
  }

  namespace {
    std::vector<Index> inverses_of(FiniteMonoid const& m, Index x) {
      std::vector<Index> out;
      for (Index y = 0; y < m.order(); ++y) {
        if (m.mul(m.mul(x, y), x) == x && m.mul(m.mul(y, x), y) == y) {
          out.push_back(y);
        }
      }
      return out;
    }
  }  // namespace

  std::optional<Index> semigroup_inverse(FiniteMonoid const& m, Index x) {
    auto inv = inverses_of(m, x);
    if (inv.size() != 1) {
      return std::nullopt;
    }
    return inv[0];
  }

  bool is_clifford(FiniteMonoid const& m) {
    if (!is_regular(m) || !has_central_idempotents(m)) {
      return false;
    }
    for (Index x = 0; x < m.order(); ++x) {
      if (inverses_of(m, x).size() != 1) {
        return false;
      }
    }
    return true;
  }

  Partition l_classes(FiniteMonoid const& m) {
    std::map<ElementSet, Index> ids;
    std::vector<Index>          labels(m.order());
    for (Index x = 0; x < m.order(); ++x) {
      ElementSet left;
      for (Index y = 0; y < m.order(); ++y) {
        left.push_back(m.mul(y, x));
      }
      labels[x] = ids.emplace(normalize_set(left), ids.size()).first->second;
    }
    return Partition::from_labels(labels);
  }

  Partition h_classes(FiniteMonoid const& m) {
    Partition const    r = m.r_classes();
    Partition const    l = l_classes(m);
    std::vector<Index> labels(m.order());
    for (Index x = 0; x < m.order(); ++x) {
      labels[x] = r.block_of(x) * m.order() + l.block_of(x);
    }
    return Partition::from_labels(labels);
  }

  void for_each_down_set(
      std::vector<std::vector<Index>> const&               below,
      std::size_t                                          cap,
      std::function<void(std::vector<bool> const&)> const& visit) {
    std::size_t const k = below.size();
    std::vector<bool> in(k, false);
    std::size_t       count = 0;
    // depth-first; exclude before include
    std::function<void(Index, bool)> rec = [&](Index c, bool any) {
      if (c == k) {
        if (any) {
          if (++count > cap) {
            throw RightIdealEnumerationTooLarge(cap);
          }
          visit(in);
        }
        return;
      }
      rec(c + 1, any);
      bool ok = std::all_of(
          below[c].begin(), below[c].end(), [&](Index d) { return in[d]; });
      if (ok) {
        in[c] = true;
        rec(c + 1, true);
        in[c] = false;
      }
    };
    rec(0, false);
  }

  std::vector<ElementSet> right_ideals(FiniteMonoid const& m, std::size_t cap) {
    Partition const& r = m.r_classes();
    std::size_t const k = r.index();
    std::vector<Index> rep(k);
    for (Index x = m.order(); x-- > 0;) {
      rep[r.block_of(x)] = x;
    }
    // order classes by ideal size so that strictly smaller ideals come first
    std::vector<Index> order(k);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](Index a, Index b) {
      return m.right_ideal_of(rep[a]).size() < m.right_ideal_of(rep[b]).size();
    });
    std::vector<std::vector<Index>> below(k);
    for (Index c = 0; c < k; ++c) {
      ElementSet const& ic = m.right_ideal_of(rep[order[c]]);
      for (Index d = 0; d < c; ++d) {
        if (set_contains(ic, rep[order[d]])) {
          below[c].push_back(d);
        }
      }
    }
    std::vector<std::vector<Index>> members(k);
    for (Index x = 0; x < m.order(); ++x) {
      members[r.block_of(x)].push_back(x);
    }
    std::vector<ElementSet> out;
    for_each_down_set(below, cap, [&](std::vector<bool> const& in) {
      ElementSet s;
      for (Index c = 0; c < k; ++c) {
        if (in[c]) {
          auto const& mem = members[order[c]];
          s.insert(s.end(), mem.begin(), mem.end());
        }
      }
      out.push_back(normalize_set(std::move(s)));
    });
    std::sort(out.begin(), out.end());
    return out;
  }

  StructureReport structural_queries(FiniteMonoid const& m, std::size_t cap) {
    StructureReport rep;
    rep.idempotents = idempotents(m);
    rep.commutative = is_commutative(m);
    rep.group       = is_group(m);
    rep.clifford    = is_clifford(m);
    rep.r_classes   = m.r_classes();
    rep.h_classes   = h_classes(m);
    for (Index x = 0; x < m.order(); ++x) {
      rep.principal_right_ideals.push_back(m.right_ideal_of(x));
    }
    rep.right_ideals = right_ideals(m, cap);
    return rep;
  }

}  // namespace actsep
