#include "actsep/partition.hpp"

#include <algorithm>
#include <limits>

namespace actsep {

  ElementSet normalize_set(ElementSet s) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return s;
  }

  bool set_contains(ElementSet const& s, Index x) {
    return std::binary_search(s.begin(), s.end(), x);
  }

  ElementSet set_union(ElementSet const& a, ElementSet const& b) {
    ElementSet out;
    std::set_union(
        a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
  }

  ElementSet set_difference(ElementSet const& a, ElementSet const& b) {
    ElementSet out;
    std::set_difference(
        a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
  }

  ElementSet full_set(std::size_t n) {
    ElementSet out(n);
    std::iota(out.begin(), out.end(), 0);
    return out;
  }

  Partition Partition::discrete(std::size_t n) {
    Partition p;
    p._ids.resize(n);
    std::iota(p._ids.begin(), p._ids.end(), 0);
    p._nr_blocks = n;
    return p;
  }

  Partition Partition::universal(std::size_t n) {
    Partition p;
    p._ids.assign(n, 0);
    p._nr_blocks = n == 0 ? 0 : 1;
    return p;
  }

  Partition Partition::from_labels(std::vector<Index> const& labels) {
    constexpr Index unset = std::numeric_limits<Index>::max();
    Index           max_label = 0;
    for (Index l : labels) {
      max_label = std::max(max_label, l);
    }
    // labels may be sparse; use a map-by-vector when reasonable
    Partition p;
    p._ids.resize(labels.size());
    if (max_label <= 4 * labels.size() + 16) {
      std::vector<Index> rename(max_label + 1, unset);
      for (std::size_t i = 0; i < labels.size(); ++i) {
        if (rename[labels[i]] == unset) {
          rename[labels[i]] = p._nr_blocks++;
        }
        p._ids[i] = rename[labels[i]];
      }
    } else {
      std::vector<std::pair<Index, Index>> seen;
      for (std::size_t i = 0; i < labels.size(); ++i) {
        auto it = std::find_if(seen.begin(), seen.end(), [&](auto const& kv) {
          return kv.first == labels[i];
        });
        if (it == seen.end()) {
          seen.emplace_back(labels[i], p._nr_blocks++);
          p._ids[i] = seen.back().second;
        } else {
          p._ids[i] = it->second;
        }
      }
    }
    return p;
  }

  Partition Partition::from_blocks(std::size_t                    n,
                                   std::vector<ElementSet> const& blocks) {
    constexpr Index    unset = std::numeric_limits<Index>::max();
    std::vector<Index> labels(n, unset);
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      if (blocks[b].empty()) {
        throw MalformedTable("empty block in partition");
      }
      for (Index x : blocks[b]) {
        if (x >= n) {
          throw MalformedTable("partition member " + std::to_string(x)
                               + " out of range");
        }
        if (labels[x] != unset) {
          throw MalformedTable("element " + std::to_string(x)
                               + " occurs in two blocks");
        }
        labels[x] = b;
      }
    }
    for (Index x = 0; x < n; ++x) {
      if (labels[x] == unset) {
        throw MalformedTable("element " + std::to_string(x)
                             + " is in no block");
      }
    }
    return from_labels(labels);
  }

  std::vector<ElementSet> Partition::blocks() const {
    std::vector<ElementSet> out(_nr_blocks);
    for (Index x = 0; x < _ids.size(); ++x) {
      out[_ids[x]].push_back(x);
    }
    return out;
  }

  ElementSet Partition::block_containing(Index x) const {
    ElementSet out;
    for (Index y = 0; y < _ids.size(); ++y) {
      if (_ids[y] == _ids[x]) {
        out.push_back(y);
      }
    }
    return out;
  }

  bool Partition::refines(Partition const& other) const {
    if (other.size() != size()) {
      return false;
    }
    constexpr Index    unset = std::numeric_limits<Index>::max();
    std::vector<Index> image(_nr_blocks, unset);
    for (Index x = 0; x < _ids.size(); ++x) {
      Index& img = image[_ids[x]];
      if (img == unset) {
        img = other._ids[x];
      } else if (img != other._ids[x]) {
        return false;
      }
    }
    return true;
  }

  bool UnionFind::unite(Index x, Index y) {
    x = find(x);
    y = find(y);
    if (x == y) {
      return false;
    }
    if (_rank[x] < _rank[y]) {
      std::swap(x, y);
    }
    _parent[y] = x;
    if (_rank[x] == _rank[y]) {
      ++_rank[x];
    }
    return true;
  }

  Partition UnionFind::to_partition() {
    std::vector<Index> labels(_parent.size());
    for (Index x = 0; x < _parent.size(); ++x) {
      labels[x] = find(x);
    }
    return Partition::from_labels(labels);
  }

}  // namespace actsep
