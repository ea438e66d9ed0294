#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "actsep/act.hpp"
#include "actsep/partition.hpp"

namespace actsep {

  class Congruence;

  // Only way to obtain a Congruence; throws NotCompatible(a, b, m) with the
  // first violating triple, or MalformedTable on a size mismatch.
  Congruence verify_congruence(ActPtr act, Partition partition);

  // A partition of an act's carrier that has been checked compatible with the
  // action.
  class Congruence {
   public:
    ActPtr const& act() const noexcept {
      return _act;
    }
    Partition const& partition() const noexcept {
      return _partition;
    }
    std::size_t index() const noexcept {
      return _partition.index();
    }
    bool same_block(Index a, Index b) const {
      return _partition.same_block(a, b);
    }
    bool operator==(Congruence const& that) const {
      return _act == that._act && _partition == that._partition;
    }

   private:
    friend Congruence verify_congruence(ActPtr act, Partition partition);
    Congruence(ActPtr act, Partition p)
        : _act(std::move(act)), _partition(std::move(p)) {}

    ActPtr    _act;
    Partition _partition;
  };

  using PairList = std::vector<std::pair<Index, Index>>;

  // First (a, b, m) in lexicographic order with a ~ b but a*m !~ b*m.
  std::optional<std::array<Index, 3>> find_incompatibility(FiniteAct const& a,
                                                           Partition const& p);

  Congruence equality_congruence(ActPtr const& a);
  Congruence universal_congruence(ActPtr const& a);

  // Smallest congruence containing the seed pairs.
  Congruence principal_closure(ActPtr const& a, PairList const& seeds);

  // Classes: B, and a singleton for each element outside B.
  Congruence rees_congruence(ActPtr const& a, ElementSet const& b);

  // Common refinement. Throws ActMismatch.
  Congruence meet(std::vector<Congruence> const& rhos);

  // Restriction to the subact B, as a congruence on sub_act(A, B).
  Congruence restrict_to(Congruence const& rho, ElementSet const& b);

  // A/rho with elements in block order, labels "[<label of least member>]".
  QuotientAct quotient(Congruence const& rho);

  Congruence kernel(ActHomomorphism const& f);

  // rho must live on the regular act of its monoid.
  ActPtr cyclic_act_from_right_congruence(Congruence const& rho);

  // Enumeration ////////////////////////////////////////////////////////////

  // Default search cap (number of candidate partitions before pruning);
  // overridable through the ACTSEP_MAX_SEARCH environment variable.
  double default_search_cap();

  // Number of partitions of k elements into at most max_blocks blocks.
  double partition_count(std::size_t k, std::size_t max_blocks);

  struct SearchOptions {
    std::optional<std::size_t> max_index;
    // pairs that must end up in different blocks
    PairList must_separate;
    double   cap = default_search_cap();
  };

  // Visits every congruence allowed by the options in restricted-growth
  // order; stop early by returning false. Throws SearchSpaceTooLarge.
  void for_each_congruence(FiniteAct const&                             a,
                           SearchOptions const&                         opts,
                           std::function<bool(Partition const&)> const& visit);

  std::vector<Congruence> enumerate_congruences(
      ActPtr const&              a,
      std::optional<std::size_t> max_index = std::nullopt);

  // Congruence of least index satisfying the options (first in
  // restricted-growth order among those of least index), if any.
  std::optional<Congruence> min_index_congruence(ActPtr const&        a,
                                                 SearchOptions const& opts);

}  // namespace actsep
