#pragma once

#include <map>
#include <utility>
#include <vector>

#include "actsep/monoid.hpp"

namespace actsep {

  // Strong semilattice of groups S(Y, G_alpha). Y is a commutative idempotent
  // monoid; alpha >= beta means alpha*beta = beta. links[{alpha, beta}] maps
  // G_alpha -> G_beta for alpha >= beta; missing diagonal links default to
  // the identity map.
  struct StrongSemilatticeSpec {
    MonoidPtr                                            semilattice;
    std::vector<MonoidPtr>                               components;
    std::map<std::pair<Index, Index>, std::vector<Index>> links;
  };

  // Element (alpha, g) sits at offset(alpha) + g, with offsets in Y order.
  // Labels are "<alpha>:<g>" built from the component labels.
  struct SemilatticeMonoid {
    MonoidPtr          monoid;
    std::vector<Index> offset;     // first index of each component
    std::vector<Index> component;  // component of each element
  };

  SemilatticeMonoid strong_semilattice(StrongSemilatticeSpec const& spec);

  MonoidPtr strong_semilattice_monoid(StrongSemilatticeSpec const& spec);

}  // namespace actsep
