#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "actsep/error.hpp"
#include "actsep/partition.hpp"

namespace actsep {

  class FiniteMonoid;
  using MonoidPtr = std::shared_ptr<FiniteMonoid const>;

  using Table          = std::vector<std::vector<Index>>;
  using Transformation = std::vector<Index>;

  // A finite monoid given by its full multiplication table. Values are
  // validated on construction and immutable afterwards; share them through
  // MonoidPtr.
  class FiniteMonoid {
   public:
    // Validates shape, range, identity law and associativity (in that order).
    static MonoidPtr from_table(Table const&             table,
                                Index                    identity,
                                std::vector<std::string> labels = {});

    // As from_table but skips the cubic associativity check. Only for tables
    // that are associative by construction (e.g. composition of maps).
    static MonoidPtr from_trusted_table(Table const&             table,
                                        Index                    identity,
                                        std::vector<std::string> labels = {});

    std::size_t order() const noexcept {
      return _n;
    }
    Index identity() const noexcept {
      return _identity;
    }
    Index mul(Index x, Index y) const {
      return _table[x * _n + y];
    }
    Table table() const;

    bool has_labels() const noexcept {
      return !_labels.empty();
    }
    std::vector<std::string> const& labels() const noexcept {
      return _labels;
    }
    // Falls back to the decimal index when no labels were given.
    std::string label(Index x) const;

    // Green's R-classes (x R y iff xM = yM), computed once at construction.
    Partition const& r_classes() const noexcept {
      return _r_classes;
    }
    // Principal right ideal xM, sorted.
    ElementSet const& right_ideal_of(Index x) const {
      return _principal[x];
    }

   private:
    FiniteMonoid() = default;
    static MonoidPtr make(Table const&             table,
                          Index                    identity,
                          std::vector<std::string> labels,
                          bool                     check_assoc);
    void             compute_green();

    std::size_t              _n        = 0;
    Index                    _identity = 0;
    std::vector<Index>       _table;
    std::vector<std::string> _labels;
    std::vector<ElementSet>  _principal;
    Partition                _r_classes;
  };

  // Exhaustive checks shared by the validators. Each returns the first
  // violation (in lexicographic order) or nothing.
  std::optional<Index> find_identity_violation(Table const& table,
                                               Index        identity);
  std::optional<std::vector<Index>> find_associativity_violation(
      Table const& table);

  // Transformation monoids ////////////////////////////////////////////////

  inline constexpr std::size_t default_closure_cap = 10'000;

  struct TransformationMonoid {
    MonoidPtr                   monoid;
    std::vector<Transformation> elements;  // elements[0] is the identity map
  };

  // Submonoid of T_n generated by gens. Composition is left to right:
  // element x*y maps p to y(x(p)), matching right actions. Elements appear in
  // breadth-first order from the identity.
  TransformationMonoid transformation_closure_elements(
      std::size_t                        degree,
      std::vector<Transformation> const& gens,
      std::size_t                        cap = default_closure_cap);

  MonoidPtr transformation_closure(std::size_t                        degree,
                                   std::vector<Transformation> const& gens,
                                   std::size_t cap = default_closure_cap);

  // Monoid S^1 with a fresh identity at index 0 and s shifted to s+1.
  // Labels, if given, are for the semigroup elements; the identity gets "1".
  MonoidPtr adjoin_identity(Table const&             semigroup,
                            std::vector<std::string> labels = {});

  // Small named monoids /////////////////////////////////////////////////////

  // Z_n with element k = g^k; labels "e", "g", "g^2", ...
  MonoidPtr cyclic_group(std::size_t n);
  MonoidPtr trivial_monoid();
  MonoidPtr direct_product(MonoidPtr const& a, MonoidPtr const& b);

  // Groups ////////////////////////////////////////////////////////////////

  // Two-sided inverse of x, if any.
  std::optional<Index> inverse(FiniteMonoid const& m, Index x);
  bool                 is_group(FiniteMonoid const& m);
  bool is_subgroup(FiniteMonoid const& g, ElementSet const& h);
  bool is_normal_subgroup(FiniteMonoid const& g, ElementSet const& h);
  // Right cosets Hg, as a partition of G.
  Partition right_coset_partition(FiniteMonoid const& g, ElementSet const& h);

  // Homomorphisms and submonoids ////////////////////////////////////////////

  // map[x] is the image of x in target. Checks identity and products.
  bool is_monoid_homomorphism(FiniteMonoid const&       source,
                              FiniteMonoid const&       target,
                              std::vector<Index> const& map);

  struct Submonoid {
    MonoidPtr          monoid;
    std::vector<Index> embedding;  // submonoid index -> ambient index
  };
  // elems must contain the identity and be closed under products.
  Submonoid submonoid(MonoidPtr const& m, ElementSet const& elems);

  // Two-sided congruences on a monoid (used by the act/monoid comparison).
  bool is_monoid_congruence(FiniteMonoid const& m, Partition const& p);
  MonoidPtr quotient_monoid(FiniteMonoid const& m, Partition const& p);

}  // namespace actsep
