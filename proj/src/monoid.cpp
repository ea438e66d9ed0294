#include "actsep/monoid.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <limits>
#include <map>
#include <numeric>

namespace actsep {

  namespace {
    void check_labels(std::vector<std::string> const& labels, std::size_t n) {
      if (labels.empty()) {
        return;
      }
      if (labels.size() != n) {
        throw MalformedTable("expected " + std::to_string(n) + " labels, got "
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

    void check_shape(Table const& table, Index identity) {
      std::size_t const n = table.size();
      if (n == 0) {
        throw MalformedTable("empty table");
      }
      for (std::size_t i = 0; i < n; ++i) {
        if (table[i].size() != n) {
          throw MalformedTable("row " + std::to_string(i) + " has "
                               + std::to_string(table[i].size())
                               + " entries, expected " + std::to_string(n));
        }
        for (Index x : table[i]) {
          if (x >= n) {
            throw MalformedTable("entry " + std::to_string(x)
                                 + " out of range in row "
                                 + std::to_string(i));
          }
        }
      }
      if (identity >= n) {
        throw MalformedTable("identity index out of range");
      }
    }

    // Transformation closures are associative by construction; above this
    // order the cubic check is skipped for them.
    constexpr std::size_t trusted_check_limit = 256;
  }  // namespace

  std::optional<Index> find_identity_violation(Table const& table,
                                               Index        identity) {
    for (Index i = 0; i < table.size(); ++i) {
      if (table[identity][i] != i || table[i][identity] != i) {
        return i;
      }
    }
    return std::nullopt;
  }

  std::optional<std::vector<Index>> find_associativity_violation(
      Table const& table) {
    std::size_t const n = table.size();
    for (Index i = 0; i < n; ++i) {
      for (Index j = 0; j < n; ++j) {
        Index const ij = table[i][j];
        for (Index k = 0; k < n; ++k) {
          if (table[ij][k] != table[i][table[j][k]]) {
            return std::vector<Index>{i, j, k};
          }
        }
      }
    }
    return std::nullopt;
  }

  MonoidPtr FiniteMonoid::from_table(Table const&             table,
                                     Index                    identity,
                                     std::vector<std::string> labels) {
    return make(table, identity, std::move(labels), true);
  }

  MonoidPtr FiniteMonoid::from_trusted_table(Table const&             table,
                                             Index                    identity,
                                             std::vector<std::string> labels) {
    return make(table,
                identity,
                std::move(labels),
                table.size() <= trusted_check_limit);
  }

  MonoidPtr FiniteMonoid::make(Table const&             table,
                               Index                    identity,
                               std::vector<std::string> labels,
                               bool                     check_assoc) {
    check_shape(table, identity);
    check_labels(labels, table.size());
    if (auto bad = find_identity_violation(table, identity)) {
      throw BadIdentity(*bad);
    }
    if (check_assoc) {
      if (auto bad = find_associativity_violation(table)) {
        throw NotAssociative((*bad)[0], (*bad)[1], (*bad)[2]);
      }
    }
    std::shared_ptr<FiniteMonoid> m(new FiniteMonoid());
    m->_n        = table.size();
    m->_identity = identity;
    m->_labels   = std::move(labels);
    m->_table.reserve(m->_n * m->_n);
    for (auto const& row : table) {
      m->_table.insert(m->_table.end(), row.begin(), row.end());
    }
    m->compute_green();
    return m;
  }

  Table FiniteMonoid::table() const {
    Table t(_n, std::vector<Index>(_n));
    for (Index i = 0; i < _n; ++i) {
      for (Index j = 0; j < _n; ++j) {
        t[i][j] = mul(i, j);
      }
    }
    return t;
  }

  std::string FiniteMonoid::label(Index x) const {
    return _labels.empty() ? std::to_string(x) : _labels[x];
  }

  void FiniteMonoid::compute_green() {
    _principal.resize(_n);
    for (Index x = 0; x < _n; ++x) {
      ElementSet s(_table.begin() + x * _n, _table.begin() + (x + 1) * _n);
      _principal[x] = normalize_set(std::move(s));
    }
    std::map<ElementSet, Index> ids;
    std::vector<Index>          labels(_n);
    for (Index x = 0; x < _n; ++x) {
      labels[x] = ids.emplace(_principal[x], ids.size()).first->second;
    }
    _r_classes = Partition::from_labels(labels);
  }

  TransformationMonoid transformation_closure_elements(
      std::size_t                        degree,
      std::vector<Transformation> const& gens,
      std::size_t                        cap) {
    if (degree == 0) {
      throw MalformedTable("transformation degree must be positive");
    }
    for (auto const& g : gens) {
      if (g.size() != degree
          || std::any_of(
              g.begin(), g.end(), [&](Index x) { return x >= degree; })) {
        throw MalformedTable("generator is not a map on [0, "
                             + std::to_string(degree) + ")");
      }
    }
    Transformation id(degree);
    std::iota(id.begin(), id.end(), 0);

    std::vector<Transformation> elts{id};
    std::map<Transformation, Index> pos{{id, 0}};
    // right Cayley graph and a spanning tree: elts[x] = elts[parent[x]] * gen
    std::vector<std::vector<Index>> right;
    std::vector<Index>              parent{0}, via{0};

    for (Index x = 0; x < elts.size(); ++x) {
      right.emplace_back(gens.size());
      for (Index k = 0; k < gens.size(); ++k) {
        Transformation y(degree);
        for (Index p = 0; p < degree; ++p) {
          y[p] = gens[k][elts[x][p]];
        }
        auto it = pos.find(y);
        if (it == pos.end()) {
          if (elts.size() >= cap) {
            throw ClosureTooLarge(cap);
          }
          it = pos.emplace(y, elts.size()).first;
          elts.push_back(std::move(y));
          parent.push_back(x);
          via.push_back(k);
        }
        right[x][k] = it->second;
      }
    }
    std::size_t const n = elts.size();
    Table             table(n, std::vector<Index>(n));
    for (Index x = 0; x < n; ++x) {
      table[x][0] = x;
      // BFS order guarantees parent[y] < y
      for (Index y = 1; y < n; ++y) {
        table[x][y] = right[table[x][parent[y]]][via[y]];
      }
    }
    return {FiniteMonoid::from_trusted_table(table, 0), std::move(elts)};
  }

  MonoidPtr transformation_closure(std::size_t                        degree,
                                   std::vector<Transformation> const& gens,
                                   std::size_t                        cap) {
    return transformation_closure_elements(degree, gens, cap).monoid;
  }

  MonoidPtr adjoin_identity(Table const&             semigroup,
                            std::vector<std::string> labels) {
    std::size_t const n = semigroup.size();
    if (n == 0) {
      throw MalformedTable("empty semigroup table");
    }
    check_shape(semigroup, 0);
    check_labels(labels, n);
    if (auto bad = find_associativity_violation(semigroup)) {
      throw NotAssociative((*bad)[0], (*bad)[1], (*bad)[2]);
    }
    Table t(n + 1, std::vector<Index>(n + 1));
    for (Index i = 0; i <= n; ++i) {
      t[0][i] = i;
      t[i][0] = i;
    }
    for (Index i = 0; i < n; ++i) {
      for (Index j = 0; j < n; ++j) {
        t[i + 1][j + 1] = semigroup[i][j] + 1;
      }
    }
    if (!labels.empty()) {
      labels.insert(labels.begin(), "1");
    }
    return FiniteMonoid::from_trusted_table(t, 0, std::move(labels));
  }

  MonoidPtr cyclic_group(std::size_t n) {
    if (n == 0) {
      throw MalformedTable("cyclic group order must be positive");
    }
    Table                    t(n, std::vector<Index>(n));
    std::vector<std::string> labels(n);
    for (Index i = 0; i < n; ++i) {
      for (Index j = 0; j < n; ++j) {
        t[i][j] = (i + j) % n;
      }
      labels[i] = i == 0 ? "e" : (i == 1 ? "g" : "g^" + std::to_string(i));
    }
    return FiniteMonoid::from_trusted_table(t, 0, std::move(labels));
  }

  MonoidPtr trivial_monoid() {
    return FiniteMonoid::from_table({{0}}, 0, {"1"});
  }

  MonoidPtr direct_product(MonoidPtr const& a, MonoidPtr const& b) {
    std::size_t const na = a->order(), nb = b->order(), n = na * nb;
    Table             t(n, std::vector<Index>(n));
    std::vector<std::string> labels(n);
    for (Index x = 0; x < n; ++x) {
      labels[x] = "(" + a->label(x / nb) + "," + b->label(x % nb) + ")";
      for (Index y = 0; y < n; ++y) {
        t[x][y] = a->mul(x / nb, y / nb) * nb + b->mul(x % nb, y % nb);
      }
    }
    return FiniteMonoid::from_trusted_table(
        t, a->identity() * nb + b->identity(), std::move(labels));
  }

  std::optional<Index> inverse(FiniteMonoid const& m, Index x) {
    for (Index y = 0; y < m.order(); ++y) {
      if (m.mul(x, y) == m.identity() && m.mul(y, x) == m.identity()) {
        return y;
      }
    }
    return std::nullopt;
  }

  bool is_group(FiniteMonoid const& m) {
    for (Index x = 0; x < m.order(); ++x) {
      if (!inverse(m, x)) {
        return false;
      }
    }
    return true;
  }

  bool is_subgroup(FiniteMonoid const& g, ElementSet const& h) {
    if (h.empty() || !set_contains(h, g.identity())) {
      return false;
    }
    for (Index x : h) {
      if (x >= g.order()) {
        return false;
      }
      auto inv = inverse(g, x);
      if (!inv || !set_contains(h, *inv)) {
        return false;
      }
      for (Index y : h) {
        if (!set_contains(h, g.mul(x, y))) {
          return false;
        }
      }
    }
    return true;
  }

  bool is_normal_subgroup(FiniteMonoid const& g, ElementSet const& h) {
    if (!is_group(g) || !is_subgroup(g, h)) {
      return false;
    }
    for (Index y = 0; y < g.order(); ++y) {
      Index const yi = *inverse(g, y);
      for (Index x : h) {
        if (!set_contains(h, g.mul(g.mul(yi, x), y))) {
          return false;
        }
      }
    }
    return true;
  }

  Partition right_coset_partition(FiniteMonoid const& g, ElementSet const& h) {
    if (!is_group(g)) {
      throw NotAGroup("right cosets need a group");
    }
    if (!is_subgroup(g, h)) {
      throw NotAGroup("not a subgroup");
    }
    std::vector<Index> labels(g.order());
    for (Index y = 0; y < g.order(); ++y) {
      Index least = std::numeric_limits<Index>::max();
      for (Index x : h) {
        least = std::min(least, g.mul(x, y));
      }
      labels[y] = least;
    }
    return Partition::from_labels(labels);
  }

  bool is_monoid_homomorphism(FiniteMonoid const&       source,
                              FiniteMonoid const&       target,
                              std::vector<Index> const& map) {
    if (map.size() != source.order()) {
      return false;
    }
    for (Index x : map) {
      if (x >= target.order()) {
        return false;
      }
    }
    if (map[source.identity()] != target.identity()) {
      return false;
    }
    for (Index x = 0; x < source.order(); ++x) {
      for (Index y = 0; y < source.order(); ++y) {
        if (map[source.mul(x, y)] != target.mul(map[x], map[y])) {
          return false;
        }
      }
    }
    return true;
  }

  Submonoid submonoid(MonoidPtr const& m, ElementSet const& elems) {
    ElementSet const e = normalize_set(elems);
    if (!set_contains(e, m->identity())) {
      throw MalformedTable("submonoid must contain the identity");
    }
    std::vector<Index> local(m->order(), std::numeric_limits<Index>::max());
    for (Index k = 0; k < e.size(); ++k) {
      if (e[k] >= m->order()) {
        throw MalformedTable("submonoid element out of range");
      }
      local[e[k]] = k;
    }
    Table t(e.size(), std::vector<Index>(e.size()));
    for (Index i = 0; i < e.size(); ++i) {
      for (Index j = 0; j < e.size(); ++j) {
        Index p = m->mul(e[i], e[j]);
        if (local[p] == std::numeric_limits<Index>::max()) {
          throw MalformedTable("set is not closed under multiplication");
        }
        t[i][j] = local[p];
      }
    }
    std::vector<std::string> labels;
    if (m->has_labels()) {
      for (Index x : e) {
        labels.push_back(m->label(x));
      }
    }
    return {FiniteMonoid::from_trusted_table(
                t, local[m->identity()], std::move(labels)),
            e};
  }

  bool is_monoid_congruence(FiniteMonoid const& m, Partition const& p) {
    if (p.size() != m.order()) {
      return false;
    }
    std::vector<Index> rep(p.index(), std::numeric_limits<Index>::max());
    for (Index x = 0; x < m.order(); ++x) {
      if (rep[p.block_of(x)] == std::numeric_limits<Index>::max()) {
        rep[p.block_of(x)] = x;
      }
    }
    for (Index x = 0; x < m.order(); ++x) {
      Index const r = rep[p.block_of(x)];
      for (Index y = 0; y < m.order(); ++y) {
        if (!p.same_block(m.mul(x, y), m.mul(r, y))
            || !p.same_block(m.mul(y, x), m.mul(y, r))) {
          return false;
        }
      }
    }
    return true;
  }

  MonoidPtr quotient_monoid(FiniteMonoid const& m, Partition const& p) {
    if (!is_monoid_congruence(m, p)) {
      throw NotTwoSidedCongruence();
    }
    std::vector<Index> rep(p.index(), std::numeric_limits<Index>::max());
    for (Index x = 0; x < m.order(); ++x) {
      if (rep[p.block_of(x)] == std::numeric_limits<Index>::max()) {
        rep[p.block_of(x)] = x;
      }
    }
    std::size_t const        k = p.index();
    Table                    t(k, std::vector<Index>(k));
    std::vector<std::string> labels(k);
    for (Index b = 0; b < k; ++b) {
      labels[b] = "[" + m.label(rep[b]) + "]";
      for (Index c = 0; c < k; ++c) {
        t[b][c] = p.block_of(m.mul(rep[b], rep[c]));
      }
    }
    return FiniteMonoid::from_trusted_table(
        t, p.block_of(m.identity()), std::move(labels));
  }

}  // namespace actsep
