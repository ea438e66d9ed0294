#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "actsep/act.hpp"
#include "actsep/congruence.hpp"
#include "actsep/rees.hpp"

namespace actsep {

  // Bracket sets [a,b] = {m : b*m = a} for every b.
  struct BracketProfile {
    ActPtr                  act;
    Index                   element = 0;
    std::vector<ElementSet> brackets;  // indexed by b
    std::size_t             distinct_count = 0;
  };

  BracketProfile bracket_profile(ActPtr const& a, Index element);

  // b ~ c iff [a,b] = [a,c]. Always a congruence with {a} as a's block; a
  // failure of either is reported as InternalInvariantViolation.
  Congruence sigma_a(ActPtr const& a, Index element);

  struct SeparationCertificate {
    ActPtr     act;
    Index      element = 0;
    ElementSet forbidden;
    Congruence congruence;

    std::size_t quotient_size() const {
      return congruence.index();
    }
  };

  // True if no member of x shares a block with a.
  bool separates(Congruence const& rho, Index a, ElementSet const& x);

  // Least-index congruence separating a from x (ties: earliest in
  // restricted-growth order), limited to index <= max_index when given.
  // Throws PreconditionViolated if x is empty or contains a.
  std::optional<SeparationCertificate> separate(
      ActPtr const&              a,
      Index                      element,
      ElementSet const&          x,
      std::optional<std::size_t> max_index = std::nullopt);

  enum class Condition { rf, wss, sss, cs };

  std::string to_string(Condition c);
  // Accepts rf|wss|sss|cs (case-insensitive); throws ParseError otherwise.
  Condition parse_condition(std::string const& s);

  struct ConditionInstance {
    Index                                element = 0;
    ElementSet                           forbidden;
    std::optional<SeparationCertificate> certificate;
  };

  struct ConditionReport {
    Condition                                   condition = Condition::rf;
    ActPtr                                      act;
    bool                                        holds = true;
    std::vector<ConditionInstance>              instances;
    std::optional<std::pair<Index, ElementSet>> counterexample;
  };

  // The (element, forbidden set) pairs a condition quantifies over:
  // rf: a < b, forbidden {b}; wss: cyclic subacts <x> and a outside;
  // sss: all subacts and a outside; cs: a and A \ {a}.
  std::vector<std::pair<Index, ElementSet>> condition_instances(
      FiniteAct const& a,
      Condition        c,
      std::size_t      subact_cap = std::size_t(1) << 16);

  // Solves every instance; a one-element act gets a single universal
  // certificate with an empty forbidden set.
  ConditionReport check_condition(ActPtr const&              a,
                                  Condition                  c,
                                  std::optional<std::size_t> max_index
                                  = std::nullopt,
                                  std::size_t subact_cap = std::size_t(1)
                                                           << 16);

  // Witness constructions ///////////////////////////////////////////////////

  // Blocks {zero} and the fibres on A \ {zero} of x -> (x R_i = {zero})_i
  // over the R-classes R_i of the monoid. Separates a from zero.
  SeparationCertificate rclass_witness(ActPtr const& a, Index zero, Index element);

  // Over a Clifford monoid, for a, b not R_A-related: blocks
  // {x : a <= x} and {x : a not <= x} (after swapping a and b if a <= b).
  SeparationCertificate clifford_witness(ActPtr const& a, Index x, Index y);

  // rho is a right congruence on the regular act of the Rees monoid of spec.
  // On A = M/rho, with zero 0 != [1]: blocks {[1]}, {0}, rest. The
  // certificate separates 0 from every other element.
  SeparationCertificate rees_cyclic_sss_witness(ReesMatrixSpec const& spec,
                                                Congruence const&     rho);

  // blocks must be subacts partitioning A. Two classes: the block holding
  // a and its complement. Throws XMeetsBlock if x meets that block.
  SeparationCertificate disjoint_union_witness(
      ActPtr const&                  a,
      std::vector<ElementSet> const& blocks,
      Index                          element,
      ElementSet const&              x);

  // The general case: separate inside the block of a, then send the
  // complement of that block to one extra class.
  SeparationCertificate disjoint_union_fallback_witness(
      ActPtr const&                  a,
      std::vector<ElementSet> const& blocks,
      Index                          element,
      ElementSet const&              x);

  // Rees bracket decomposition ////////////////////////////////////////////

  struct ReesBracketDecomposition {
    std::vector<std::pair<Index, Index>> U_b;      // (row, group element)
    ElementSet                           J_prime;  // columns
    std::optional<ElementSet>            Z_b;      // group elements
    ElementSet                           product;  // U_b x J' as indices
    ElementSet                           bracket;  // [a,b] without 1
    bool                                 identity_holds = false;
  };

  // A is an act over rees_matrix_monoid(spec) whose column i0 of P is all e;
  // a <= b and a != b. Throws NotNormalized / NotComparable / MonoidMismatch.
  ReesBracketDecomposition rees_bracket_decomposition(
      ActPtr const&         a,
      ReesMatrixSpec const& spec,
      Index                 i0,
      Index                 x,
      Index                 y);

  // Same, on A = M/rho, also computing Z_b = {h : a = [(i_b, h, j_a)]} from
  // the least non-identity representatives of a and b.
  ReesBracketDecomposition rees_bracket_decomposition(
      ReesMatrixSpec const& spec,
      Congruence const&     rho,
      Index                 i0,
      Index                 x,
      Index                 y);

  // Act / monoid comparison //////////////////////////////////////////////////

  struct CorrespondenceRow {
    Condition condition    = Condition::rf;
    bool      act_side     = false;
    bool      monoid_side  = false;
  };

  struct CorrespondenceReport {
    bool                           two_sided     = false;
    bool                           subacts_match = false;
    std::vector<ElementSet>        subacts;
    std::vector<ElementSet>        right_ideals;
    std::vector<CorrespondenceRow> rows;

    bool all_agree() const;
  };

  // rho is a right congruence on the regular act of m. The subact / right
  // ideal comparison needs rho two-sided; so do the condition rows, which are
  // skipped for one-sided rho unless require_two_sided (then it throws
  // NotTwoSidedCongruence).
  CorrespondenceReport act_monoid_correspondence(MonoidPtr const&  m,
                                                 Congruence const& rho,
                                                 bool require_two_sided = true);

}  // namespace actsep
