#pragma once

#include <compare>
#include <cstddef>
#include <numeric>
#include <utility>
#include <vector>

#include "actsep/error.hpp"

namespace actsep {

  // Sorted, duplicate-free list of indices.
  using ElementSet = std::vector<Index>;

  ElementSet normalize_set(ElementSet s);
  bool set_contains(ElementSet const& s, Index x);
  ElementSet set_union(ElementSet const& a, ElementSet const& b);
  ElementSet set_difference(ElementSet const& a, ElementSet const& b);
  ElementSet full_set(std::size_t n);

  // A partition of {0, ..., n-1} stored as a block id per element. Block ids
  // are numbered in order of first occurrence, so two partitions are equal iff
  // their id vectors are equal, and the blocks come out sorted by least member.
  class Partition {
   public:
    Partition() = default;

    static Partition discrete(std::size_t n);
    static Partition universal(std::size_t n);
    // Renumbers arbitrary labels into first-occurrence form.
    static Partition from_labels(std::vector<Index> const& labels);
    // Throws MalformedTable if blocks do not cover {0..n-1} exactly once.
    static Partition from_blocks(std::size_t n,
                                 std::vector<ElementSet> const& blocks);

    std::size_t size() const noexcept {
      return _ids.size();
    }
    std::size_t index() const noexcept {
      return _nr_blocks;
    }
    Index block_of(Index x) const {
      return _ids[x];
    }
    bool same_block(Index x, Index y) const {
      return _ids[x] == _ids[y];
    }
    std::vector<Index> const& block_ids() const noexcept {
      return _ids;
    }
    std::vector<ElementSet> blocks() const;
    ElementSet block_containing(Index x) const;

    // True if every block of *this lies inside a block of other.
    bool refines(Partition const& other) const;

    bool operator==(Partition const& that) const {
      return _ids == that._ids;
    }
    auto operator<=>(Partition const& that) const {
      return _ids <=> that._ids;
    }

   private:
    std::vector<Index> _ids;
    std::size_t        _nr_blocks = 0;
  };

  class UnionFind {
   public:
    explicit UnionFind(std::size_t n) : _parent(n), _rank(n, 0) {
      std::iota(_parent.begin(), _parent.end(), 0);
    }

    Index find(Index x) {
      while (_parent[x] != x) {
        _parent[x] = _parent[_parent[x]];
        x          = _parent[x];
      }
      return x;
    }

    /// Returns true if x and y were in different sets.
    bool unite(Index x, Index y);

    bool same(Index x, Index y) {
      return find(x) == find(y);
    }

    std::size_t size() const noexcept {
      return _parent.size();
    }

    Partition to_partition();

   private:
    std::vector<Index>       _parent;
    std::vector<std::size_t> _rank;
  };

}  // namespace actsep
