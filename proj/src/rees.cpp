#include "actsep/rees.hpp"

#include <algorithm>
#include <numeric>

namespace actsep {

  void ReesMatrixSpec::validate() const {
    if (!group) {
      throw MalformedTable("Rees spec has no group");
    }
    if (!is_group(*group)) {
      throw NotAGroup("Rees spec group is not a group");
    }
    if (rows == 0 || cols == 0) {
      throw MalformedTable("Rees spec needs at least one row and column");
    }
    if (sandwich.size() != cols) {
      throw MalformedTable("sandwich matrix must have " + std::to_string(cols)
                           + " rows (one per J index)");
    }
    for (auto const& row : sandwich) {
      if (row.size() != rows) {
        throw MalformedTable("sandwich row must have " + std::to_string(rows)
                             + " entries (one per I index)");
      }
      for (Index x : row) {
        if (x >= group->order()) {
          throw MalformedTable("sandwich entry " + std::to_string(x)
                               + " is not a group element");
        }
      }
    }
  }

  Index rees_index(ReesMatrixSpec const& spec, Index i, Index g, Index j) {
    return 1 + (i * spec.group->order() + g) * spec.cols + j;
  }

  std::optional<ReesTriple> rees_triple(ReesMatrixSpec const& spec, Index x) {
    if (x == 0) {
      return std::nullopt;
    }
    Index const r = x - 1;
    Index const j = r % spec.cols;
    Index const q = r / spec.cols;
    return ReesTriple{q / spec.group->order(), q % spec.group->order(), j};
  }

  MonoidPtr rees_matrix_monoid(ReesMatrixSpec const& spec) {
    spec.validate();
    FiniteMonoid const& G = *spec.group;
    std::size_t const   n = spec.rows * G.order() * spec.cols + 1;
    Table               t(n, std::vector<Index>(n));
    std::vector<std::string> labels(n);
    labels[0] = "1";
    for (Index x = 0; x < n; ++x) {
      t[0][x] = x;
      t[x][0] = x;
    }
    for (Index x = 1; x < n; ++x) {
      auto const a = *rees_triple(spec, x);
      labels[x]    = "(" + std::to_string(a.i) + "," + G.label(a.g) + ","
                  + std::to_string(a.j) + ")";
      for (Index y = 1; y < n; ++y) {
        auto const  b = *rees_triple(spec, y);
        Index const g = G.mul(G.mul(a.g, spec.entry(a.j, b.i)), b.g);
        t[x][y]       = rees_index(spec, a.i, g, b.j);
      }
    }
    return FiniteMonoid::from_trusted_table(t, 0, std::move(labels));
  }

  ReesMatrixSpec normalize_sandwich(ReesMatrixSpec const& spec,
                                    Index                 i0,
                                    Index                 j0) {
    spec.validate();
    if (i0 >= spec.rows || j0 >= spec.cols) {
      throw MalformedTable("normalization anchor out of range");
    }
    FiniteMonoid const& G   = *spec.group;
    auto                inv = [&](Index x) { return *inverse(G, x); };
    ReesMatrixSpec      out = spec;
    for (Index j = 0; j < spec.cols; ++j) {
      for (Index i = 0; i < spec.rows; ++i) {
        Index q = G.mul(inv(spec.entry(j, i0)), spec.entry(j, i));
        q       = G.mul(q, inv(spec.entry(j0, i)));
        q       = G.mul(q, spec.entry(j0, i0));
        out.sandwich[j][i] = q;
      }
    }
    return out;
  }

  bool is_normalized(ReesMatrixSpec const& spec, Index i0, Index j0) {
    if (i0 >= spec.rows || j0 >= spec.cols) {
      return false;
    }
    Index const e = spec.group->identity();
    for (Index i = 0; i < spec.rows; ++i) {
      if (spec.entry(j0, i) != e) {
        return false;
      }
    }
    for (Index j = 0; j < spec.cols; ++j) {
      if (spec.entry(j, i0) != e) {
        return false;
      }
    }
    return true;
  }

  namespace {
    // Equivalence on `count` indices: x ~ y iff some g has
    // value(t, x) = combine(value(t, y), g) for every t < range.
    template <typename Value, typename Combine>
    Partition relate(FiniteMonoid const& G,
                     std::size_t         count,
                     std::size_t         range,
                     Value&&             value,
                     Combine&&           combine) {
      UnionFind uf(count);
      for (Index x = 0; x < count; ++x) {
        for (Index y = x + 1; y < count; ++y) {
          for (Index g = 0; g < G.order(); ++g) {
            bool ok = true;
            for (Index t = 0; t < range && ok; ++t) {
              ok = value(t, x) == combine(value(t, y), g);
            }
            if (ok) {
              uf.unite(x, y);
              break;
            }
          }
        }
      }
      return uf.to_partition();
    }
  }  // namespace

  RankReport sandwich_rank(ReesMatrixSpec const&            spec,
                           std::optional<ElementSet> const& normal_subgroup) {
    spec.validate();
    MonoidPtr          G = spec.group;
    std::vector<Index> to_quotient(G->order());
    std::iota(to_quotient.begin(), to_quotient.end(), 0);
    if (normal_subgroup) {
      ElementSet const N = normalize_set(*normal_subgroup);
      if (!is_normal_subgroup(*G, N)) {
        throw NotNormalSubgroup("given set is not a normal subgroup");
      }
      Partition const cosets = right_coset_partition(*G, N);
      G                      = quotient_monoid(*spec.group, cosets);
      to_quotient            = cosets.block_ids();
    }
    auto p = [&](Index j, Index i) { return to_quotient[spec.entry(j, i)]; };
    FiniteMonoid const& Q = *G;

    RankReport r;
    r.classes_I = relate(
        Q,
        spec.rows,
        spec.cols,
        [&](Index j, Index i) { return p(j, i); },
        [&](Index x, Index g) { return Q.mul(x, g); });
    r.classes_J = relate(
        Q,
        spec.cols,
        spec.rows,
        [&](Index i, Index j) { return p(j, i); },
        [&](Index x, Index g) { return Q.mul(g, x); });
    r.r_I  = r.classes_I.index();
    r.r_J  = r.classes_J.index();
    r.rank = std::max(r.r_I, r.r_J);
    return r;
  }

}  // namespace actsep
