#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "actsep/act.hpp"
#include "actsep/congruence.hpp"
#include "actsep/monoid.hpp"
#include "actsep/rees.hpp"

namespace actsep {

  enum class FactKind {
    forcing_chain,
    min_index,
    witness_congruence,
    no_separation_up_to,
    structural_count
  };

  // A partition to be checked on a total act (as a congruence) or on a
  // partial act (compatible with every defined entry), together with the
  // separations it is supposed to achieve.
  struct WitnessSpec {
    std::string   name;
    ActPtr        act;
    PartialActPtr partial;
    Partition     partition;
    // also require a two-sided monoid congruence (total regular acts only)
    bool                                      two_sided = false;
    std::vector<std::pair<Index, ElementSet>> separations;
    // optional: the block of `block_of` must be exactly this set
    std::optional<std::pair<Index, ElementSet>> expected_block;
  };

  struct Fact {
    FactKind kind = FactKind::forcing_chain;
    // forcing_chain: the seed pair must force the target pair
    std::pair<Index, Index> seed{}, target{};
    // min_index / no_separation_up_to
    Index                      element = 0;
    ElementSet                 subset;
    std::optional<std::size_t> value;  // expected minimum, or the bound
    // witness_congruence
    std::optional<WitnessSpec> witness;
    // structural_count
    std::string count_name;
    std::size_t count_expected = 0;
  };

  using Params = std::map<std::string, long>;

  struct FamilyInstance {
    std::string name;
    Params      params;
    // Exactly one of monoid / partial_monoid is set, and the matching act.
    MonoidPtr                    monoid;
    ActPtr                       act;
    PartialMonoidPtr             partial_monoid;
    PartialActPtr                partial_act;
    std::map<std::string, Index> marked;
    std::vector<Fact>            expected;
    std::optional<ReesMatrixSpec> rees;  // rees_diagonal only

    // e.g. "kozhukhov_n=3"; parameters in name order
    std::string id() const;
    std::string element_label(Index x) const;
  };

  struct FamilyInfo {
    std::string                                       name;
    // parameter name, default, least, greatest
    std::vector<std::tuple<std::string, long, long, long>> params;
    std::string                                       summary;
  };

  std::vector<FamilyInfo> family_list();

  // Missing parameters take their defaults. Throws UnknownFamily, or
  // ParamOutOfRange for unknown names and out-of-range values.
  FamilyInstance build_family(std::string const& name, Params const& params);

  struct FactResult {
    bool        pass = false;
    std::string line;  // stable one-line rendering used for golden files
  };

  std::vector<FactResult> verify_family(FamilyInstance const& inst);

  // Square-free words over {a, b, c} of length 1..n, found by filtering all
  // words (used as the expected count for squarefree(n)).
  std::size_t count_square_free_words(std::size_t n);

}  // namespace actsep
