#pragma once

#include <cstddef>
#include <limits>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "actsep/monoid.hpp"

namespace actsep {

  class FiniteAct;
  using ActPtr = std::shared_ptr<FiniteAct const>;

  // A right action of a finite monoid on {0..K-1}: entry (a, m) is a*m.
  class FiniteAct {
   public:
    // Validates dimensions, ranges, a*1 = a and a*(mn) = (a*m)*n.
    static ActPtr from_table(MonoidPtr                monoid,
                             Table const&             table,
                             std::vector<std::string> labels = {});

    MonoidPtr const& monoid() const noexcept {
      return _monoid;
    }
    std::size_t size() const noexcept {
      return _k;
    }
    Index act(Index a, Index m) const {
      return _table[a * _n + m];
    }
    Table table() const;

    bool has_labels() const noexcept {
      return !_labels.empty();
    }
    std::vector<std::string> const& labels() const noexcept {
      return _labels;
    }
    std::string label(Index a) const;

   private:
    FiniteAct() = default;

    MonoidPtr                _monoid;
    std::size_t              _k = 0;
    std::size_t              _n = 0;
    std::vector<Index>       _table;
    std::vector<std::string> _labels;
  };

  // Marker for an undefined table entry in partial structures.
  inline constexpr Index undefined = std::numeric_limits<Index>::max();

  // A multiplication table with undefined entries, used for windows of
  // infinite monoids. Identity entries must be defined.
  class PartialMonoid;
  using PartialMonoidPtr = std::shared_ptr<PartialMonoid const>;

  class PartialMonoid {
   public:
    // Checks x*1 = 1*x = x and associativity wherever all four products
    // involved are defined.
    static PartialMonoidPtr from_table(Table const&             table,
                                       Index                    identity,
                                       std::vector<std::string> labels = {});
    static PartialMonoidPtr from_monoid(FiniteMonoid const& m);

    std::size_t order() const noexcept {
      return _n;
    }
    Index identity() const noexcept {
      return _identity;
    }
    Index mul(Index x, Index y) const {
      return _table[x][y];
    }
    Table const& table() const noexcept {
      return _table;
    }
    std::vector<std::string> const& labels() const noexcept {
      return _labels;
    }
    std::string label(Index x) const;

   private:
    PartialMonoid() = default;

    std::size_t              _n        = 0;
    Index                    _identity = 0;
    Table                    _table;
    std::vector<std::string> _labels;
  };

  class PartialAct;
  using PartialActPtr = std::shared_ptr<PartialAct const>;

  class PartialAct {
   public:
    // Checks a*1 = a where defined, and a*(mn) = (a*m)*n wherever a*m, mn,
    // (a*m)*n and a*(mn) are all defined.
    static PartialActPtr from_table(PartialMonoidPtr         monoid,
                                    Table const&             table,
                                    std::vector<std::string> labels = {});
    static PartialActPtr from_act(FiniteAct const& a);

    PartialMonoidPtr const& monoid() const noexcept {
      return _monoid;
    }
    std::size_t size() const noexcept {
      return _table.size();
    }
    Index act(Index a, Index m) const {
      return _table[a][m];
    }
    Table const& table() const noexcept {
      return _table;
    }
    std::vector<std::string> const& labels() const noexcept {
      return _labels;
    }
    std::string label(Index a) const;

   private:
    PartialAct() = default;

    PartialMonoidPtr         _monoid;
    Table                    _table;
    std::vector<std::string> _labels;
  };

  // Map between acts over the same monoid with (a*m)f = (af)*m.
  class ActHomomorphism {
   public:
    // Throws NotAHomomorphism / MonoidMismatch.
    static ActHomomorphism make(ActPtr             source,
                                ActPtr             target,
                                std::vector<Index> map);

    ActPtr const& source() const noexcept {
      return _source;
    }
    ActPtr const& target() const noexcept {
      return _target;
    }
    std::vector<Index> const& map() const noexcept {
      return _map;
    }
    Index operator()(Index a) const {
      return _map[a];
    }
    ElementSet image() const;

   private:
    ActHomomorphism() = default;

    ActPtr             _source;
    ActPtr             _target;
    std::vector<Index> _map;
  };

  // Constructions /////////////////////////////////////////////////////////

  ActPtr regular_act(MonoidPtr const& m);
  // One-element act.
  ActPtr trivial_act(MonoidPtr const& m);
  // Right cosets Hg of a subgroup H, acted on by right multiplication.
  // Labels are "H*<label of least coset member>".
  ActPtr coset_act(MonoidPtr const& g, ElementSet const& h);
  // Disjoint union of `rank` copies of the regular act.
  ActPtr free_act(MonoidPtr const& m, std::size_t rank);

  struct QuotientAct {
    ActPtr          act;
    ActHomomorphism projection;
  };

  struct DisjointUnion {
    ActPtr                       act;
    std::vector<ActHomomorphism> injections;
    std::vector<ElementSet>      parts;  // image of each injection
  };

  DisjointUnion disjoint_union(std::vector<ActPtr> const& parts);

  // Queries ////////////////////////////////////////////////////////////////

  // Smallest subact containing u. Throws EmptyGeneratorSet.
  ElementSet subact_generated(FiniteAct const& a, ElementSet const& u);
  bool       is_subact(FiniteAct const& a, ElementSet const& b);
  // Throws NotASubact with the first witness (b, m) with b*m outside.
  void require_subact(FiniteAct const& a, ElementSet const& b);

  struct PreorderAndGreen {
    // leq[a][b] iff <a> is contained in <b>
    std::vector<std::vector<bool>> leq;
    Partition                      r_classes;
  };
  PreorderAndGreen preorder_and_green(FiniteAct const& a);

  ElementSet zeros(FiniteAct const& a);
  bool       is_faithful(FiniteAct const& a);

  // Connected components of the graph with edges {a, a*m}; sorted by least
  // element.
  std::vector<ElementSet> decompose(FiniteAct const& a);

  // All subacts, sorted. Throws RightIdealEnumerationTooLarge past cap.
  std::vector<ElementSet> subacts(FiniteAct const& a,
                                  std::size_t      cap = std::size_t(1) << 16);

  // Subact b as an act in its own right, elements in sorted order of b.
  ActPtr sub_act(FiniteAct const& a, ElementSet const& b);

  // Quotients and transports ////////////////////////////////////////////////

  // A/B: elements outside B keep their relative order, the class of B is
  // appended last with label "0_B".
  QuotientAct rees_quotient(ActPtr const& a, ElementSet const& b);

  // The act over M on A plus a fresh "0" (appended last): a*m is computed in A
  // when m lies in the image of the embedding, and is 0 otherwise.
  ActPtr transport_along_ideal_complement(FiniteAct const&          a,
                                          MonoidPtr const&          m,
                                          std::vector<Index> const& embedding);

  // The act over M on A with x*m = x*(m phi), where phi: M -> N fixes the
  // embedded copy of N.
  ActPtr transport_along_retraction(FiniteAct const&          a,
                                    MonoidPtr const&          m,
                                    std::vector<Index> const& embedding,
                                    std::vector<Index> const& phi);

  // Restriction of an act over M along an embedding N -> M.
  ActPtr restrict_scalars(FiniteAct const&          a,
                          MonoidPtr const&          n,
                          std::vector<Index> const& embedding);

  // Smallest equivalence containing the seeds that is closed under every
  // defined action entry.
  Partition closure_partial(PartialAct const&                        p,
                            std::vector<std::pair<Index, Index>> const& seeds);

}  // namespace actsep
