#include "actsep/separability.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <string>

#include "actsep/structure.hpp"

namespace actsep {

  BracketProfile bracket_profile(ActPtr const& a, Index element) {
    if (element >= a->size()) {
      throw PreconditionViolated("element out of range");
    }
    BracketProfile out;
    out.act     = a;
    out.element = element;
    out.brackets.resize(a->size());
    std::size_t const n = a->monoid()->order();
    for (Index b = 0; b < a->size(); ++b) {
      for (Index m = 0; m < n; ++m) {
        if (a->act(b, m) == element) {
          out.brackets[b].push_back(m);
        }
      }
    }
    std::set<ElementSet> distinct(out.brackets.begin(), out.brackets.end());
    out.distinct_count = distinct.size();
    return out;
  }

  Congruence sigma_a(ActPtr const& a, Index element) {
    BracketProfile const            prof = bracket_profile(a, element);
    std::map<ElementSet, Index>     ids;
    std::vector<Index>              labels(a->size());
    for (Index b = 0; b < a->size(); ++b) {
      labels[b] = ids.emplace(prof.brackets[b], ids.size()).first->second;
    }
    Partition p = Partition::from_labels(labels);
    if (find_incompatibility(*a, p)) {
      throw InternalInvariantViolation("bracket partition is not a congruence");
    }
    for (Index b = 0; b < a->size(); ++b) {
      if (b != element && p.same_block(b, element)) {
        throw InternalInvariantViolation(
            "bracket partition does not isolate the element");
      }
    }
    return verify_congruence(a, std::move(p));
  }

  bool separates(Congruence const& rho, Index a, ElementSet const& x) {
    return std::none_of(
        x.begin(), x.end(), [&](Index y) { return rho.same_block(a, y); });
  }

  namespace {
    void check_instance(FiniteAct const& a, Index element, ElementSet const& x) {
      if (element >= a.size()) {
        throw PreconditionViolated("element out of range");
      }
      if (x.empty()) {
        throw PreconditionViolated("forbidden set is empty");
      }
      for (Index y : x) {
        if (y >= a.size()) {
          throw PreconditionViolated("forbidden element out of range");
        }
        if (y == element) {
          throw PreconditionViolated("forbidden set contains the element");
        }
      }
    }
  }  // namespace

  std::optional<SeparationCertificate> separate(
      ActPtr const&              a,
      Index                      element,
      ElementSet const&          x,
      std::optional<std::size_t> max_index) {
    ElementSet const forbidden = normalize_set(x);
    check_instance(*a, element, forbidden);
    SearchOptions opts;
    opts.max_index = max_index;
    for (Index y : forbidden) {
      opts.must_separate.emplace_back(element, y);
    }
    auto rho = min_index_congruence(a, opts);
    if (!rho) {
      return std::nullopt;
    }
    return SeparationCertificate{a, element, forbidden, std::move(*rho)};
  }

  std::string to_string(Condition c) {
    switch (c) {
      case Condition::rf: return "rf";
      case Condition::wss: return "wss";
      case Condition::sss: return "sss";
      case Condition::cs: return "cs";
    }
    return "?";
  }

  Condition parse_condition(std::string const& s) {
    std::string t;
    for (char ch : s) {
      t += static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
    }
    if (t == "rf") {
      return Condition::rf;
    }
    if (t == "wss") {
      return Condition::wss;
    }
    if (t == "sss") {
      return Condition::sss;
    }
    if (t == "cs") {
      return Condition::cs;
    }
    throw ParseError("unknown condition '" + s + "'", 0);
  }

  std::vector<std::pair<Index, ElementSet>> condition_instances(
      FiniteAct const& a,
      Condition        c,
      std::size_t      subact_cap) {
    std::vector<std::pair<Index, ElementSet>> out;
    std::size_t const                         k = a.size();
    auto outside = [&](std::vector<ElementSet> const& sets) {
      for (auto const& s : sets) {
        for (Index x = 0; x < k; ++x) {
          if (!set_contains(s, x)) {
            out.emplace_back(x, s);
          }
        }
      }
    };
    switch (c) {
      case Condition::rf:
        for (Index x = 0; x < k; ++x) {
          for (Index y = x + 1; y < k; ++y) {
            out.emplace_back(x, ElementSet{y});
          }
        }
        break;
      case Condition::wss: {
        std::set<ElementSet> cyclic;
        for (Index x = 0; x < k; ++x) {
          cyclic.insert(subact_generated(a, {x}));
        }
        outside({cyclic.begin(), cyclic.end()});
        break;
      }
      case Condition::sss: outside(subacts(a, subact_cap)); break;
      case Condition::cs:
        if (k > 1) {
          for (Index x = 0; x < k; ++x) {
            out.emplace_back(x, set_difference(full_set(k), {x}));
          }
        }
        break;
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  ConditionReport check_condition(ActPtr const&              a,
                                  Condition                  c,
                                  std::optional<std::size_t> max_index,
                                  std::size_t                subact_cap) {
    ConditionReport report;
    report.condition = c;
    report.act       = a;
    if (a->size() == 1) {
      report.instances.push_back(
          {0, {}, SeparationCertificate{a, 0, {}, universal_congruence(a)}});
      return report;
    }
    auto const instances = condition_instances(*a, c, subact_cap);

    std::size_t const max_blocks
        = max_index ? std::min(*max_index, a->size()) : a->size();
    // Small carriers: enumerate every congruence once and scan. The list is
    // in restricted-growth order, so a stable sort by index reproduces the
    // choice made by the per-instance search.
    std::optional<std::vector<Partition>> all;
    if (partition_count(a->size(), max_blocks) <= 1e5) {
      SearchOptions opts;
      opts.max_index = max_index;
      all.emplace();
      for_each_congruence(*a, opts, [&](Partition const& p) {
        all->push_back(p);
        return true;
      });
      std::stable_sort(all->begin(),
                       all->end(),
                       [](Partition const& x, Partition const& y) {
                         return x.index() < y.index();
                       });
    }

    for (auto const& [x, forbidden] : instances) {
      ConditionInstance inst{x, forbidden, std::nullopt};
      if (all) {
        for (auto const& p : *all) {
          bool ok = std::none_of(forbidden.begin(),
                                 forbidden.end(),
                                 [&](Index y) { return p.same_block(x, y); });
          if (ok) {
            inst.certificate
                = SeparationCertificate{a, x, forbidden, verify_congruence(a, p)};
            break;
          }
        }
      } else {
        inst.certificate = separate(a, x, forbidden, max_index);
      }
      if (!inst.certificate && report.holds) {
        report.holds          = false;
        report.counterexample = std::make_pair(x, forbidden);
      }
      report.instances.push_back(std::move(inst));
    }
    return report;
  }

  // Witnesses //////////////////////////////////////////////////////////////

  SeparationCertificate rclass_witness(ActPtr const& a, Index zero, Index element) {
    if (zero >= a->size() || element >= a->size()) {
      throw PreconditionViolated("element out of range");
    }
    std::size_t const n = a->monoid()->order();
    for (Index m = 0; m < n; ++m) {
      if (a->act(zero, m) != zero) {
        throw NotAZero(zero);
      }
    }
    if (zero == element) {
      throw PreconditionViolated("element equals the zero");
    }
    auto const                    r = a->monoid()->r_classes().blocks();
    std::map<std::vector<bool>, Index> ids;
    std::vector<Index>            labels(a->size());
    labels[zero] = 0;
    ids[{}]      = 0;  // reserved for the zero class
    for (Index x = 0; x < a->size(); ++x) {
      if (x == zero) {
        continue;
      }
      std::vector<bool> key;
      for (auto const& cls : r) {
        key.push_back(std::all_of(cls.begin(), cls.end(), [&](Index m) {
          return a->act(x, m) == zero;
        }));
      }
      labels[x] = ids.emplace(key, ids.size()).first->second;
    }
    return SeparationCertificate{
        a, element, {zero}, verify_congruence(a, Partition::from_labels(labels))};
  }

  SeparationCertificate clifford_witness(ActPtr const& a, Index x, Index y) {
    if (!is_clifford(*a->monoid())) {
      throw NotClifford();
    }
    if (x >= a->size() || y >= a->size()) {
      throw PreconditionViolated("element out of range");
    }
    auto const pg = preorder_and_green(*a);
    if (pg.r_classes.same_block(x, y)) {
      throw RRelated(x, y);
    }
    if (pg.leq[x][y]) {
      std::swap(x, y);
    }
    std::vector<Index> labels(a->size());
    for (Index z = 0; z < a->size(); ++z) {
      labels[z] = pg.leq[x][z] ? 0 : 1;
    }
    return SeparationCertificate{
        a, x, {y}, verify_congruence(a, Partition::from_labels(labels))};
  }

  namespace {
    bool is_regular_act_of(FiniteAct const& a, FiniteMonoid const& m) {
      if (a.size() != m.order() || a.monoid()->table() != m.table()) {
        return false;
      }
      for (Index x = 0; x < a.size(); ++x) {
        for (Index y = 0; y < m.order(); ++y) {
          if (a.act(x, y) != m.mul(x, y)) {
            return false;
          }
        }
      }
      return true;
    }
  }  // namespace

  SeparationCertificate rees_cyclic_sss_witness(ReesMatrixSpec const& spec,
                                                Congruence const&     rho) {
    MonoidPtr const m = rees_matrix_monoid(spec);
    if (!is_regular_act_of(*rho.act(), *m)) {
      throw PreconditionViolated(
          "congruence must live on the regular act of the Rees monoid");
    }
    ActPtr const     q   = quotient(rho).act;
    ElementSet const zs  = zeros(*q);
    Index const      one = rho.partition().block_of(0);
    auto             z   = std::find_if(
        zs.begin(), zs.end(), [&](Index v) { return v != one; });
    if (z == zs.end()) {
      throw PreconditionViolated("quotient has no zero other than [1]");
    }
    for (Index x = 1; x < m->order(); ++x) {
      if (rho.same_block(0, x)) {
        throw InternalInvariantViolation("class of 1 is not a singleton");
      }
    }
    std::vector<Index> labels(q->size(), 2);
    labels[one] = 0;
    labels[*z]  = 1;
    return SeparationCertificate{q,
                                 *z,
                                 set_difference(full_set(q->size()), {*z}),
                                 verify_congruence(q, Partition::from_labels(labels))};
  }

  namespace {
    Index block_holding(FiniteAct const&               a,
                        std::vector<ElementSet> const& blocks,
                        Index                          element) {
    std::vector<int> seen(a.size(), 0);
      Index            found = undefined;
      for (Index i = 0; i < blocks.size(); ++i) {
        require_subact(a, blocks[i]);
        for (Index x : blocks[i]) {
          if (x >= a.size() || seen[x]++) {
            throw PreconditionViolated("blocks do not partition the act");
          }
        }
        if (set_contains(blocks[i], element)) {
          found = i;
        }
      }
      if (std::count(seen.begin(), seen.end(), 0) != 0 || found == undefined) {
        throw PreconditionViolated("blocks do not partition the act");
      }
      return found;
    }
  }  // namespace

  SeparationCertificate disjoint_union_witness(
      ActPtr const&                  a,
      std::vector<ElementSet> const& blocks,
      Index                          element,
      ElementSet const&              x) {
    ElementSet const forbidden = normalize_set(x);
    check_instance(*a, element, forbidden);
    Index const i = block_holding(*a, blocks, element);
    for (Index y : forbidden) {
      if (set_contains(blocks[i], y)) {
        throw XMeetsBlock();
      }
    }
    std::vector<Index> labels(a->size(), 1);
    for (Index y : blocks[i]) {
      labels[y] = 0;
    }
    return SeparationCertificate{
        a, element, forbidden, verify_congruence(a, Partition::from_labels(labels))};
  }

  SeparationCertificate disjoint_union_fallback_witness(
      ActPtr const&                  a,
      std::vector<ElementSet> const& blocks,
      Index                          element,
      ElementSet const&              x) {
    ElementSet const forbidden = normalize_set(x);
    check_instance(*a, element, forbidden);
    Index const       i     = block_holding(*a, blocks, element);
    ElementSet const& block = blocks[i];
    auto local = [&](Index v) {
      return static_cast<Index>(std::lower_bound(block.begin(), block.end(), v)
                                - block.begin());
    };
    std::vector<Index> labels(a->size(), block.size());
    ElementSet         inner;
    for (Index y : forbidden) {
      if (set_contains(block, y)) {
        inner.push_back(local(y));
      }
    }
    if (inner.empty()) {
      for (Index y : block) {
        labels[y] = 0;
      }
    } else {
      ActPtr const sub  = sub_act(*a, block);
      auto         cert = separate(sub, local(element), inner);
      if (!cert) {
        throw InternalInvariantViolation("no separating congruence in block");
      }
      for (Index y : block) {
        labels[y] = cert->congruence.partition().block_of(local(y));
      }
    }
    return SeparationCertificate{
        a, element, forbidden, verify_congruence(a, Partition::from_labels(labels))};
  }

  // Rees bracket decomposition ////////////////////////////////////////////

  ReesBracketDecomposition rees_bracket_decomposition(
      ActPtr const&         a,
      ReesMatrixSpec const& spec,
      Index                 i0,
      Index                 x,
      Index                 y) {
    spec.validate();
    MonoidPtr const m = rees_matrix_monoid(spec);
    if (a->monoid()->table() != m->table()) {
      throw MonoidMismatch();
    }
    Index const e = spec.group->identity();
    if (i0 >= spec.rows) {
      throw PreconditionViolated("anchor row out of range");
    }
    for (Index j = 0; j < spec.cols; ++j) {
      if (spec.entry(j, i0) != e) {
        throw NotNormalized();
      }
    }
    if (x >= a->size() || y >= a->size() || x == y
        || !preorder_and_green(*a).leq[x][y]) {
      throw NotComparable();
    }
    ReesBracketDecomposition out;
    std::size_t const        g = spec.group->order();
    for (Index i = 0; i < spec.rows; ++i) {
      for (Index h = 0; h < g; ++h) {
        for (Index j = 0; j < spec.cols; ++j) {
          if (a->act(y, rees_index(spec, i, h, j)) == x) {
            out.U_b.emplace_back(i, h);
            break;
          }
        }
      }
    }
    for (Index j = 0; j < spec.cols; ++j) {
      if (a->act(x, rees_index(spec, i0, e, j)) == x) {
        out.J_prime.push_back(j);
      }
    }
    for (auto const& [i, h] : out.U_b) {
      for (Index j : out.J_prime) {
        out.product.push_back(rees_index(spec, i, h, j));
      }
    }
    out.product = normalize_set(out.product);
    for (Index s = 1; s < m->order(); ++s) {
      if (a->act(y, s) == x) {
        out.bracket.push_back(s);
      }
    }
    out.identity_holds = out.product == out.bracket;
    return out;
  }

  ReesBracketDecomposition rees_bracket_decomposition(
      ReesMatrixSpec const& spec,
      Congruence const&     rho,
      Index                 i0,
      Index                 x,
      Index                 y) {
    MonoidPtr const m = rees_matrix_monoid(spec);
    if (!is_regular_act_of(*rho.act(), *m)) {
      throw PreconditionViolated(
          "congruence must live on the regular act of the Rees monoid");
    }
    ActPtr const q   = quotient(rho).act;
    auto         out = rees_bracket_decomposition(q, spec, i0, x, y);
    auto const   blocks = rho.partition().blocks();
    auto         rep    = [&](Index b) -> std::optional<ReesTriple> {
      for (Index s : blocks[b]) {
        if (s != 0) {
          return rees_triple(spec, s);
        }
      }
      return std::nullopt;
    };
    auto ra = rep(x), rb = rep(y);
    if (ra && rb) {
      ElementSet z;
      for (Index h = 0; h < spec.group->order(); ++h) {
        if (rho.partition().block_of(rees_index(spec, rb->i, h, ra->j)) == x) {
          z.push_back(h);
        }
      }
      out.Z_b = std::move(z);
    }
    return out;
  }

  // Act / monoid comparison //////////////////////////////////////////////////

  bool CorrespondenceReport::all_agree() const {
    if (two_sided && !subacts_match) {
      return false;
    }
    return std::all_of(rows.begin(), rows.end(), [](auto const& r) {
      return r.act_side == r.monoid_side;
    });
  }

  namespace {
    // Every two-sided congruence of n by plain enumeration of partitions.
    std::vector<Partition> monoid_congruences(FiniteMonoid const& n) {
      double const count = partition_count(n.order(), n.order());
      if (count > 1e6) {
        throw SearchSpaceTooLarge(count);
      }
      std::vector<Partition> out;
      std::vector<Index>     rgs(n.order(), 0);
      auto rec = [&](auto&& self, Index i, Index used) -> void {
        if (i == n.order()) {
          Partition p = Partition::from_labels(rgs);
          if (is_monoid_congruence(n, p)) {
            out.push_back(std::move(p));
          }
          return;
        }
        for (Index b = 0; b <= used; ++b) {
          rgs[i] = b;
          self(self, i + 1, std::max(used, b + 1));
        }
      };
      if (n.order() > 0) {
        rec(rec, 1, 1);
      }
      return out;
    }

    bool monoid_condition(FiniteMonoid const&            n,
                          Condition                      c,
                          std::vector<Partition> const&  congs,
                          std::vector<ElementSet> const& ideals) {
      auto separable = [&](Index y, ElementSet const& x) {
        return std::any_of(congs.begin(), congs.end(), [&](Partition const& p) {
          return std::none_of(
              x.begin(), x.end(), [&](Index z) { return p.same_block(y, z); });
        });
      };
      auto outside = [&](std::vector<ElementSet> const& sets) {
        for (auto const& s : sets) {
          for (Index y = 0; y < n.order(); ++y) {
            if (!set_contains(s, y) && !separable(y, s)) {
              return false;
            }
          }
        }
        return true;
      };
      switch (c) {
        case Condition::rf:
          for (Index y = 0; y < n.order(); ++y) {
            for (Index z = y + 1; z < n.order(); ++z) {
              if (!separable(y, {z})) {
                return false;
              }
            }
          }
          return true;
        case Condition::wss: {
          std::vector<ElementSet> principal;
          for (Index x = 0; x < n.order(); ++x) {
            principal.push_back(n.right_ideal_of(x));
          }
          return outside(principal);
        }
        case Condition::sss: return outside(ideals);
        case Condition::cs:
          if (n.order() == 1) {
            return true;
          }
          for (Index y = 0; y < n.order(); ++y) {
            if (!separable(y, set_difference(full_set(n.order()), {y}))) {
              return false;
            }
          }
          return true;
      }
      return false;
    }
  }  // namespace

  CorrespondenceReport act_monoid_correspondence(MonoidPtr const&  m,
                                                 Congruence const& rho,
                                                 bool require_two_sided) {
    if (!is_regular_act_of(*rho.act(), *m)) {
      throw PreconditionViolated("congruence must live on the regular act");
    }
    CorrespondenceReport out;
    out.two_sided = is_monoid_congruence(*m, rho.partition());
    if (!out.two_sided) {
      if (require_two_sided) {
        throw NotTwoSidedCongruence();
      }
      return out;
    }
    ActPtr const    a = quotient(rho).act;
    MonoidPtr const n = quotient_monoid(*m, rho.partition());
    out.subacts       = subacts(*a);
    out.right_ideals  = right_ideals(*n);
    out.subacts_match = out.subacts == out.right_ideals;
    auto const congs  = monoid_congruences(*n);
    for (Condition c :
         {Condition::rf, Condition::wss, Condition::sss, Condition::cs}) {
      CorrespondenceRow row;
      row.condition   = c;
      row.act_side    = check_condition(a, c).holds;
      row.monoid_side = monoid_condition(*n, c, congs, out.right_ideals);
      out.rows.push_back(row);
    }
    return out;
  }

}  // namespace actsep
