#include "actsep/act.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <numeric>

#include "actsep/structure.hpp"

namespace actsep {

  namespace {
    bool same_monoid(FiniteMonoid const& a, FiniteMonoid const& b) {
      if (&a == &b) {
        return true;
      }
      if (a.order() != b.order() || a.identity() != b.identity()) {
        return false;
      }
      for (Index x = 0; x < a.order(); ++x) {
        for (Index y = 0; y < a.order(); ++y) {
          if (a.mul(x, y) != b.mul(x, y)) {
            return false;
          }
        }
      }
      return true;
    }

    void check_act_labels(std::vector<std::string> const& labels,
                          std::size_t                     k) {
      if (labels.empty()) {
        return;
      }
      if (labels.size() != k) {
        throw MalformedTable("expected " + std::to_string(k) + " labels, got "
                             + std::to_string(labels.size()));
      }
      for (auto const& l : labels) {
        if (l.empty()
            || std::any_of(l.begin(), l.end(), [](unsigned char c) {
                 return std::isspace(c) || !std::isprint(c);
               })) {
          throw MalformedTable("label '" + l
                               + "' is empty or contains whitespace");
        }
      }
    }

    void check_partial_shape(Table const& table,
                             std::size_t  cols,
                             std::size_t  range,
                             char const*  what) {
      if (table.empty()) {
        throw MalformedTable(std::string(what) + " table is empty");
      }
      for (Index r = 0; r < table.size(); ++r) {
        if (table[r].size() != cols) {
          throw MalformedTable(std::string(what) + " row "
                               + std::to_string(r) + " has "
                               + std::to_string(table[r].size())
                               + " entries, expected " + std::to_string(cols));
        }
        for (Index x : table[r]) {
          if (x != undefined && x >= range) {
            throw MalformedTable(std::string(what) + " entry "
                                 + std::to_string(x) + " out of range");
          }
        }
      }
    }

    std::vector<std::string> inherit_labels(FiniteAct const&  a,
                                            ElementSet const& keep) {
      std::vector<std::string> out;
      for (Index x : keep) {
        out.push_back(a.label(x));
      }
      return out;
    }
  }  // namespace

  // FiniteAct ///////////////////////////////////////////////////////////////

  ActPtr FiniteAct::from_table(MonoidPtr                monoid,
                               Table const&             table,
                               std::vector<std::string> labels) {
    if (!monoid) {
      throw MalformedTable("act has no monoid");
    }
    FiniteMonoid const& M = *monoid;
    std::size_t const   n = M.order();
    std::size_t const   k = table.size();
    if (k == 0) {
      throw MalformedTable("act carrier must be nonempty");
    }
    for (Index a = 0; a < k; ++a) {
      if (table[a].size() != n) {
        throw MalformedTable("act row " + std::to_string(a) + " has "
                             + std::to_string(table[a].size())
                             + " entries, expected " + std::to_string(n));
      }
      for (Index x : table[a]) {
        if (x >= k) {
          throw MalformedTable("act entry " + std::to_string(x)
                               + " out of range");
        }
      }
    }
    check_act_labels(labels, k);
    for (Index a = 0; a < k; ++a) {
      if (table[a][M.identity()] != a) {
        throw IdentityLawViolation(a);
      }
    }
    for (Index a = 0; a < k; ++a) {
      for (Index m = 0; m < n; ++m) {
        Index const am = table[a][m];
        for (Index p = 0; p < n; ++p) {
          if (table[a][M.mul(m, p)] != table[am][p]) {
            throw AssociativityViolation(a, m, p);
          }
        }
      }
    }
    std::shared_ptr<FiniteAct> act(new FiniteAct());
    act->_monoid = std::move(monoid);
    act->_k      = k;
    act->_n      = n;
    act->_labels = std::move(labels);
    act->_table.reserve(k * n);
    for (auto const& row : table) {
      act->_table.insert(act->_table.end(), row.begin(), row.end());
    }
    return act;
  }

  Table FiniteAct::table() const {
    Table t(_k, std::vector<Index>(_n));
    for (Index a = 0; a < _k; ++a) {
      for (Index m = 0; m < _n; ++m) {
        t[a][m] = act(a, m);
      }
    }
    return t;
  }

  std::string FiniteAct::label(Index a) const {
    return _labels.empty() ? std::to_string(a) : _labels[a];
  }

  // Partial structures //////////////////////////////////////////////////////

  PartialMonoidPtr PartialMonoid::from_table(Table const&             table,
                                             Index                    identity,
                                             std::vector<std::string> labels) {
    std::size_t const n = table.size();
    check_partial_shape(table, n, n, "partial monoid");
    check_act_labels(labels, n);
    if (identity >= n) {
      throw MalformedTable("identity index out of range");
    }
    for (Index x = 0; x < n; ++x) {
      if (table[identity][x] != x || table[x][identity] != x) {
        throw BadIdentity(x);
      }
    }
    for (Index x = 0; x < n; ++x) {
      for (Index y = 0; y < n; ++y) {
        Index const xy = table[x][y];
        if (xy == undefined) {
          continue;
        }
        for (Index z = 0; z < n; ++z) {
          Index const yz = table[y][z];
          if (yz == undefined) {
            continue;
          }
          Index const l = table[xy][z], r = table[x][yz];
          if (l != undefined && r != undefined && l != r) {
            throw NotAssociative(x, y, z);
          }
        }
      }
    }
    std::shared_ptr<PartialMonoid> m(new PartialMonoid());
    m->_n        = n;
    m->_identity = identity;
    m->_table    = table;
    m->_labels   = std::move(labels);
    return m;
  }

  PartialMonoidPtr PartialMonoid::from_monoid(FiniteMonoid const& m) {
    return from_table(m.table(), m.identity(), m.labels());
  }

  std::string PartialMonoid::label(Index x) const {
    return _labels.empty() ? std::to_string(x) : _labels[x];
  }

  PartialActPtr PartialAct::from_table(PartialMonoidPtr         monoid,
                                       Table const&             table,
                                       std::vector<std::string> labels) {
    if (!monoid) {
      throw MalformedTable("partial act has no monoid");
    }
    PartialMonoid const& M = *monoid;
    std::size_t const    n = M.order();
    std::size_t const    k = table.size();
    check_partial_shape(table, n, k, "partial act");
    check_act_labels(labels, k);
    for (Index a = 0; a < k; ++a) {
      Index const a1 = table[a][M.identity()];
      if (a1 != undefined && a1 != a) {
        throw IdentityLawViolation(a);
      }
    }
    for (Index a = 0; a < k; ++a) {
      for (Index m = 0; m < n; ++m) {
        Index const am = table[a][m];
        if (am == undefined) {
          continue;
        }
        for (Index p = 0; p < n; ++p) {
          Index const mp = M.mul(m, p);
          if (mp == undefined) {
            continue;
          }
          Index const l = table[am][p], r = table[a][mp];
          if (l != undefined && r != undefined && l != r) {
            throw AssociativityViolation(a, m, p);
          }
        }
      }
    }
    std::shared_ptr<PartialAct> act(new PartialAct());
    act->_monoid = std::move(monoid);
    act->_table  = table;
    act->_labels = std::move(labels);
    return act;
  }

  PartialActPtr PartialAct::from_act(FiniteAct const& a) {
    return from_table(
        PartialMonoid::from_monoid(*a.monoid()), a.table(), a.labels());
  }

  std::string PartialAct::label(Index a) const {
    return _labels.empty() ? std::to_string(a) : _labels[a];
  }

  // Homomorphisms ///////////////////////////////////////////////////////////

  ActHomomorphism ActHomomorphism::make(ActPtr             source,
                                        ActPtr             target,
                                        std::vector<Index> map) {
    if (!same_monoid(*source->monoid(), *target->monoid())) {
      throw MonoidMismatch();
    }
    if (map.size() != source->size()) {
      throw NotAHomomorphism("map has " + std::to_string(map.size())
                             + " entries, source has "
                             + std::to_string(source->size()));
    }
    for (Index x : map) {
      if (x >= target->size()) {
        throw NotAHomomorphism("map entry out of range");
      }
    }
    std::size_t const n = source->monoid()->order();
    for (Index a = 0; a < source->size(); ++a) {
      for (Index m = 0; m < n; ++m) {
        if (map[source->act(a, m)] != target->act(map[a], m)) {
          throw NotAHomomorphism("(a*m)f != (af)*m for a = "
                                 + std::to_string(a)
                                 + ", m = " + std::to_string(m));
        }
      }
    }
    ActHomomorphism h;
    h._source = std::move(source);
    h._target = std::move(target);
    h._map    = std::move(map);
    return h;
  }

  ElementSet ActHomomorphism::image() const {
    return normalize_set(_map);
  }

  // Constructions ///////////////////////////////////////////////////////////

  ActPtr regular_act(MonoidPtr const& m) {
    return FiniteAct::from_table(m, m->table(), m->labels());
  }

  ActPtr trivial_act(MonoidPtr const& m) {
    return FiniteAct::from_table(
        m, Table{std::vector<Index>(m->order(), 0)}, {});
  }

  ActPtr coset_act(MonoidPtr const& g, ElementSet const& h) {
    ElementSet const hs     = normalize_set(h);
    Partition const  cosets = right_coset_partition(*g, hs);
    auto const       blocks = cosets.blocks();
    Table            t(blocks.size(), std::vector<Index>(g->order()));
    std::vector<std::string> labels;
    for (Index c = 0; c < blocks.size(); ++c) {
      labels.push_back("H*" + g->label(blocks[c][0]));
      for (Index x = 0; x < g->order(); ++x) {
        t[c][x] = cosets.block_of(g->mul(blocks[c][0], x));
      }
    }
    return FiniteAct::from_table(g, t, std::move(labels));
  }

  ActPtr free_act(MonoidPtr const& m, std::size_t rank) {
    if (rank == 0) {
      throw MalformedTable("free act rank must be positive");
    }
    return disjoint_union(std::vector<ActPtr>(rank, regular_act(m))).act;
  }

  DisjointUnion disjoint_union(std::vector<ActPtr> const& parts) {
    if (parts.empty()) {
      throw MalformedTable("disjoint union needs at least one part");
    }
    MonoidPtr const& M = parts[0]->monoid();
    for (auto const& p : parts) {
      if (!same_monoid(*p->monoid(), *M)) {
        throw MonoidMismatch();
      }
    }
    Table                    t;
    std::vector<std::string> labels;
    std::vector<Index>       offset;
    for (Index i = 0; i < parts.size(); ++i) {
      Index const off = t.size();
      offset.push_back(off);
      for (Index a = 0; a < parts[i]->size(); ++a) {
        std::vector<Index> row(M->order());
        for (Index m = 0; m < M->order(); ++m) {
          row[m] = off + parts[i]->act(a, m);
        }
        t.push_back(std::move(row));
        labels.push_back(std::to_string(i) + ":" + parts[i]->label(a));
      }
    }
    DisjointUnion out;
    out.act = FiniteAct::from_table(M, t, std::move(labels));
    for (Index i = 0; i < parts.size(); ++i) {
      std::vector<Index> map(parts[i]->size());
      std::iota(map.begin(), map.end(), offset[i]);
      out.parts.emplace_back(map.begin(), map.end());
      out.injections.push_back(
          ActHomomorphism::make(parts[i], out.act, std::move(map)));
    }
    return out;
  }

  // Queries /////////////////////////////////////////////////////////////////

  ElementSet subact_generated(FiniteAct const& a, ElementSet const& u) {
    if (u.empty()) {
      throw EmptyGeneratorSet();
    }
    std::vector<bool> in(a.size(), false);
    for (Index x : u) {
      if (x >= a.size()) {
        throw MalformedTable("generator " + std::to_string(x)
                             + " out of range");
      }
      for (Index m = 0; m < a.monoid()->order(); ++m) {
        in[a.act(x, m)] = true;
      }
    }
    ElementSet out;
    for (Index x = 0; x < a.size(); ++x) {
      if (in[x]) {
        out.push_back(x);
      }
    }
    return out;
  }

  bool is_subact(FiniteAct const& a, ElementSet const& b) {
    if (b.empty()) {
      return false;
    }
    for (Index x : b) {
      if (x >= a.size()) {
        return false;
      }
      for (Index m = 0; m < a.monoid()->order(); ++m) {
        if (!set_contains(b, a.act(x, m))) {
          return false;
        }
      }
    }
    return true;
  }

  void require_subact(FiniteAct const& a, ElementSet const& b) {
    if (b.empty()) {
      throw EmptyGeneratorSet();
    }
    if (!std::is_sorted(b.begin(), b.end())
        || std::adjacent_find(b.begin(), b.end()) != b.end()) {
      throw MalformedTable("element set must be sorted and duplicate-free");
    }
    for (Index x : b) {
      if (x >= a.size()) {
        throw MalformedTable("element " + std::to_string(x)
                             + " out of range");
      }
      for (Index m = 0; m < a.monoid()->order(); ++m) {
        if (!set_contains(b, a.act(x, m))) {
          throw NotASubact(x, m);
        }
      }
    }
  }

  PreorderAndGreen preorder_and_green(FiniteAct const& a) {
    std::size_t const k = a.size();
    PreorderAndGreen  out;
    out.leq.assign(k, std::vector<bool>(k, false));
    for (Index b = 0; b < k; ++b) {
      for (Index m = 0; m < a.monoid()->order(); ++m) {
        out.leq[a.act(b, m)][b] = true;
      }
    }
    UnionFind uf(k);
    for (Index x = 0; x < k; ++x) {
      for (Index y = x + 1; y < k; ++y) {
        if (out.leq[x][y] && out.leq[y][x]) {
          uf.unite(x, y);
        }
      }
    }
    out.r_classes = uf.to_partition();
    return out;
  }

  ElementSet zeros(FiniteAct const& a) {
    ElementSet out;
    for (Index x = 0; x < a.size(); ++x) {
      bool z = true;
      for (Index m = 0; m < a.monoid()->order() && z; ++m) {
        z = a.act(x, m) == x;
      }
      if (z) {
        out.push_back(x);
      }
    }
    return out;
  }

  bool is_faithful(FiniteAct const& a) {
    std::size_t const n = a.monoid()->order();
    for (Index m = 0; m < n; ++m) {
      for (Index p = m + 1; p < n; ++p) {
        bool differ = false;
        for (Index x = 0; x < a.size() && !differ; ++x) {
          differ = a.act(x, m) != a.act(x, p);
        }
        if (!differ) {
          return false;
        }
      }
    }
    return true;
  }

  std::vector<ElementSet> decompose(FiniteAct const& a) {
    UnionFind uf(a.size());
    for (Index x = 0; x < a.size(); ++x) {
      for (Index m = 0; m < a.monoid()->order(); ++m) {
        uf.unite(x, a.act(x, m));
      }
    }
    return uf.to_partition().blocks();
  }

  std::vector<ElementSet> subacts(FiniteAct const& a, std::size_t cap) {
    PreorderAndGreen const pg = preorder_and_green(a);
    Partition const&       r  = pg.r_classes;
    std::size_t const      k  = r.index();
    std::vector<Index>     rep(k);
    std::vector<std::size_t> orbit(k, 0);
    for (Index x = a.size(); x-- > 0;) {
      rep[r.block_of(x)] = x;
    }
    for (Index c = 0; c < k; ++c) {
      for (Index y = 0; y < a.size(); ++y) {
        orbit[c] += pg.leq[y][rep[c]];
      }
    }
    std::vector<Index> order(k);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](Index x, Index y) {
      return orbit[x] < orbit[y];
    });
    std::vector<std::vector<Index>> below(k);
    for (Index c = 0; c < k; ++c) {
      for (Index d = 0; d < c; ++d) {
        if (pg.leq[rep[order[d]]][rep[order[c]]]) {
          below[c].push_back(d);
        }
      }
    }
    std::vector<std::vector<Index>> members(k);
    for (Index x = 0; x < a.size(); ++x) {
      members[r.block_of(x)].push_back(x);
    }
    std::vector<ElementSet> out;
    for_each_down_set(below, cap, [&](std::vector<bool> const& in) {
      ElementSet s;
      for (Index c = 0; c < k; ++c) {
        if (in[c]) {
          auto const& mem = members[order[c]];
          s.insert(s.end(), mem.begin(), mem.end());
        }
      }
      out.push_back(normalize_set(std::move(s)));
    });
    std::sort(out.begin(), out.end());
    return out;
  }

  ActPtr sub_act(FiniteAct const& a, ElementSet const& b) {
    require_subact(a, b);
    std::vector<Index> local(a.size(), undefined);
    for (Index i = 0; i < b.size(); ++i) {
      local[b[i]] = i;
    }
    Table t(b.size(), std::vector<Index>(a.monoid()->order()));
    for (Index i = 0; i < b.size(); ++i) {
      for (Index m = 0; m < a.monoid()->order(); ++m) {
        t[i][m] = local[a.act(b[i], m)];
      }
    }
    return FiniteAct::from_table(a.monoid(), t, inherit_labels(a, b));
  }

  QuotientAct rees_quotient(ActPtr const& a, ElementSet const& b) {
    require_subact(*a, b);
    ElementSet const   rest = set_difference(full_set(a->size()), b);
    Index const        zero = rest.size();
    std::vector<Index> proj(a->size(), zero);
    for (Index i = 0; i < rest.size(); ++i) {
      proj[rest[i]] = i;
    }
    std::size_t const n = a->monoid()->order();
    Table             t(rest.size() + 1, std::vector<Index>(n, zero));
    for (Index i = 0; i < rest.size(); ++i) {
      for (Index m = 0; m < n; ++m) {
        t[i][m] = proj[a->act(rest[i], m)];
      }
    }
    auto labels = inherit_labels(*a, rest);
    labels.push_back("0_B");
    ActPtr q = FiniteAct::from_table(a->monoid(), t, std::move(labels));
    return {q, ActHomomorphism::make(a, q, std::move(proj))};
  }

  ActPtr transport_along_ideal_complement(FiniteAct const&          a,
                                          MonoidPtr const&          m,
                                          std::vector<Index> const& embedding) {
    FiniteMonoid const& N = *a.monoid();
    if (embedding.size() != N.order()) {
      throw MonoidMismatch();
    }
    if (!is_monoid_homomorphism(N, *m, embedding)
        || normalize_set(embedding).size() != embedding.size()) {
      throw NotAHomomorphism("embedding is not an injective homomorphism");
    }
    std::vector<Index> pre(m->order(), undefined);
    for (Index x = 0; x < embedding.size(); ++x) {
      pre[embedding[x]] = x;
    }
    for (Index x = 0; x < m->order(); ++x) {
      if (pre[x] != undefined) {
        continue;
      }
      for (Index y = 0; y < m->order(); ++y) {
        if (pre[m->mul(x, y)] != undefined) {
          throw ComplementNotIdeal(x, y);
        }
        if (pre[m->mul(y, x)] != undefined) {
          throw ComplementNotIdeal(y, x);
        }
      }
    }
    Index const zero = a.size();
    Table       t(a.size() + 1, std::vector<Index>(m->order(), zero));
    for (Index x = 0; x < a.size(); ++x) {
      for (Index p = 0; p < m->order(); ++p) {
        if (pre[p] != undefined) {
          t[x][p] = a.act(x, pre[p]);
        }
      }
    }
    auto labels = inherit_labels(a, full_set(a.size()));
    labels.push_back("0");
    return FiniteAct::from_table(m, t, std::move(labels));
  }

  ActPtr transport_along_retraction(FiniteAct const&          a,
                                    MonoidPtr const&          m,
                                    std::vector<Index> const& embedding,
                                    std::vector<Index> const& phi) {
    FiniteMonoid const& N = *a.monoid();
    if (embedding.size() != N.order()) {
      throw MonoidMismatch();
    }
    if (!is_monoid_homomorphism(N, *m, embedding)) {
      throw NotAHomomorphism("embedding is not a homomorphism");
    }
    if (phi.size() != m->order()) {
      throw NotARetraction("map has wrong length", phi.size());
    }
    if (!is_monoid_homomorphism(*m, N, phi)) {
      throw NotARetraction("map is not a homomorphism", 0);
    }
    for (Index x = 0; x < N.order(); ++x) {
      if (phi[embedding[x]] != x) {
        throw NotARetraction("map does not fix the submonoid", x);
      }
    }
    Table t(a.size(), std::vector<Index>(m->order()));
    for (Index x = 0; x < a.size(); ++x) {
      for (Index p = 0; p < m->order(); ++p) {
        t[x][p] = a.act(x, phi[p]);
      }
    }
    return FiniteAct::from_table(m, t, a.labels());
  }

  ActPtr restrict_scalars(FiniteAct const&          a,
                          MonoidPtr const&          n,
                          std::vector<Index> const& embedding) {
    if (embedding.size() != n->order()) {
      throw MonoidMismatch();
    }
    if (!is_monoid_homomorphism(*n, *a.monoid(), embedding)) {
      throw NotAHomomorphism("embedding is not a homomorphism");
    }
    Table t(a.size(), std::vector<Index>(n->order()));
    for (Index x = 0; x < a.size(); ++x) {
      for (Index p = 0; p < n->order(); ++p) {
        t[x][p] = a.act(x, embedding[p]);
      }
    }
    return FiniteAct::from_table(n, t, a.labels());
  }

  Partition closure_partial(PartialAct const&                           p,
                            std::vector<std::pair<Index, Index>> const& seeds) {
    std::size_t const k = p.size();
    std::size_t const n = p.monoid()->order();
    UnionFind         uf(k);
    // per root, one member's image under each m (undefined if no member of
    // the class has a defined image); all defined images of a class are kept
    // equivalent, so one witness per (class, m) suffices.
    std::vector<std::vector<Index>> witness(k, std::vector<Index>(n));
    for (Index x = 0; x < k; ++x) {
      for (Index m = 0; m < n; ++m) {
        witness[x][m] = p.act(x, m);
      }
    }
    std::deque<std::pair<Index, Index>> queue;
    for (auto const& [x, y] : seeds) {
      if (x >= k || y >= k) {
        throw MalformedTable("seed out of range");
      }
      queue.emplace_back(x, y);
    }
    while (!queue.empty()) {
      auto [x, y] = queue.front();
      queue.pop_front();
      Index rx = uf.find(x), ry = uf.find(y);
      if (rx == ry) {
        continue;
      }
      uf.unite(rx, ry);
      Index const root  = uf.find(rx);
      Index const other = root == rx ? ry : rx;
      for (Index m = 0; m < n; ++m) {
        Index const wr = witness[root][m], wo = witness[other][m];
        if (wr == undefined) {
          witness[root][m] = wo;
        } else if (wo != undefined) {
          queue.emplace_back(wr, wo);
        }
      }
    }
    return uf.to_partition();
  }

}  // namespace actsep
