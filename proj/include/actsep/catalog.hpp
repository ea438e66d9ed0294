#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "actsep/act.hpp"
#include "actsep/monoid.hpp"

namespace actsep {

  struct CatalogMonoid {
    std::string name;
    MonoidPtr   monoid;
  };

  // Least table over all relabelings that send the identity to 0.
  Table canonical_table(FiniteMonoid const& m);

  // All monoids of order <= max_order up to isomorphism, found as
  // submonoids of the full transformation monoid T_max_order. Each is stored
  // in canonical form (identity 0) and named "m<order>_<k>".
  std::vector<CatalogMonoid> small_monoids(std::size_t max_order = 4);

  // Named constructions used throughout the tests: null, chain, cyclic
  // groups, a Clifford monoid, the rectangular band 2x2 with identity and a
  // Z2 Rees monoid.
  std::vector<CatalogMonoid> named_monoids();

  // small_monoids(4) followed by named_monoids().
  std::vector<CatalogMonoid> monoid_catalog();

  // Greedy generating set: each element not yet generated, in index order.
  std::vector<Index> generating_set(FiniteMonoid const& m);

  // All acts of m on {0..carrier-1}, i.e. homomorphisms m -> T_carrier.
  // With up_to_isomorphism, one act per relabeling class (the least table).
  // carrier is limited to 8.
  std::vector<ActPtr> acts_of(MonoidPtr const& m,
                              std::size_t      carrier,
                              bool             up_to_isomorphism = true);

  // acts_of(m, k) for k = 1..max_carrier.
  std::vector<ActPtr> act_corpus(MonoidPtr const& m, std::size_t max_carrier);

}  // namespace actsep
