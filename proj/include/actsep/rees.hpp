#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "actsep/monoid.hpp"

namespace actsep {

  // Data for the Rees matrix semigroup M(G; I, J; P). I = {0..rows-1},
  // J = {0..cols-1}, and sandwich[j][i] = p_{ji}, an element of group.
  struct ReesMatrixSpec {
    MonoidPtr                       group;
    std::size_t                     rows = 0;
    std::size_t                     cols = 0;
    std::vector<std::vector<Index>> sandwich;

    // Throws NotAGroup / MalformedTable.
    void validate() const;

    Index entry(Index j, Index i) const {
      return sandwich[j][i];
    }
  };

  struct ReesTriple {
    Index i, g, j;
    bool  operator==(ReesTriple const&) const = default;
  };

  // Index of (i,g,j) in rees_matrix_monoid(spec); the adjoined identity is 0.
  Index rees_index(ReesMatrixSpec const& spec, Index i, Index g, Index j);
  // Inverse of rees_index; nothing for the identity.
  std::optional<ReesTriple> rees_triple(ReesMatrixSpec const& spec, Index x);

  // S^1 for S = M(G; I, J; P) with (i,g,j)(k,h,l) = (i, g p_{jk} h, l).
  // Labels are "1" and "(i,g,j)" with g written by its group label.
  MonoidPtr rees_matrix_monoid(ReesMatrixSpec const& spec);

  // q_{ji} = p_{j,i0}^-1 p_{ji} p_{j0,i}^-1 p_{j0,i0}; row j0 and column i0
  // of the result are identically e.
  ReesMatrixSpec normalize_sandwich(ReesMatrixSpec const& spec,
                                    Index                 i0,
                                    Index                 j0);

  bool is_normalized(ReesMatrixSpec const& spec, Index i0, Index j0);

  struct RankReport {
    std::size_t r_I  = 0;
    std::size_t r_J  = 0;
    std::size_t rank = 0;
    Partition   classes_I;  // partition of I
    Partition   classes_J;  // partition of J
  };

  // i ~_I k iff p_{ji} = p_{jk} g for some g and all j;
  // j ~_J l iff p_{ji} = g p_{li} for some g and all i.
  // With a normal subgroup N the entries are read in G/N first.
  RankReport sandwich_rank(ReesMatrixSpec const&            spec,
                           std::optional<ElementSet> const& normal_subgroup
                           = std::nullopt);

}  // namespace actsep
