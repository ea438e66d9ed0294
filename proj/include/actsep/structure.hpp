#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "actsep/monoid.hpp"

namespace actsep {

  inline constexpr std::size_t default_ideal_cap = std::size_t(1) << 20;

  ElementSet idempotents(FiniteMonoid const& m);
  bool       is_commutative(FiniteMonoid const& m);
  bool       has_central_idempotents(FiniteMonoid const& m);
  bool       is_regular(FiniteMonoid const& m);
  // Regular, idempotents central, and every element has exactly one inverse.
  bool is_clifford(FiniteMonoid const& m);

  Partition l_classes(FiniteMonoid const& m);
  Partition h_classes(FiniteMonoid const& m);

  // Unique inverse of x in a Clifford (inverse) monoid, if it exists.
  std::optional<Index> semigroup_inverse(FiniteMonoid const& m, Index x);

  // Calls visit on every nonempty down-set of a finite preorder given by
  // its classes. `below[c]` lists the classes strictly below class c; classes
  // must be numbered so that everything below c has a smaller number.
  // Throws RightIdealEnumerationTooLarge once more than cap sets are seen.
  void for_each_down_set(std::vector<std::vector<Index>> const&  below,
                         std::size_t                             cap,
                         std::function<void(std::vector<bool> const&)> const&
                             visit);

  // All right ideals (nonempty), each sorted; sorted lexicographically.
  std::vector<ElementSet> right_ideals(FiniteMonoid const& m,
                                       std::size_t cap = default_ideal_cap);

  struct StructureReport {
    ElementSet              idempotents;
    bool                    commutative = false;
    bool                    group       = false;
    bool                    clifford    = false;
    Partition               r_classes;
    Partition               h_classes;
    std::vector<ElementSet> principal_right_ideals;  // mM for each m
    std::vector<ElementSet> right_ideals;
  };

  StructureReport structural_queries(FiniteMonoid const& m,
                                     std::size_t cap = default_ideal_cap);

}  // namespace actsep
