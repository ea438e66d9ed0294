#include "actsep/semilattice.hpp"

#include <numeric>

#include "actsep/structure.hpp"

namespace actsep {

  namespace {
    bool geq(FiniteMonoid const& Y, Index a, Index b) {
      return Y.mul(a, b) == b;
    }
  }  // namespace

  SemilatticeMonoid strong_semilattice(StrongSemilatticeSpec const& spec) {
    if (!spec.semilattice) {
      throw MalformedTable("strong semilattice spec has no semilattice");
    }
    FiniteMonoid const& Y = *spec.semilattice;
    std::size_t const   k = Y.order();
    if (!is_commutative(Y) || idempotents(Y).size() != k) {
      throw MalformedTable("semilattice must be commutative and idempotent");
    }
    if (spec.components.size() != k) {
      throw MalformedTable("need one group per semilattice element");
    }
    for (auto const& G : spec.components) {
      if (!G || !is_group(*G)) {
        throw NotAGroup("semilattice component is not a group");
      }
    }

    // link(a, b) for a >= b, defaulting the diagonal to the identity map
    std::map<std::pair<Index, Index>, std::vector<Index>> link;
    for (Index a = 0; a < k; ++a) {
      for (Index b = 0; b < k; ++b) {
        if (!geq(Y, a, b)) {
          continue;
        }
        auto it = spec.links.find({a, b});
        if (it == spec.links.end()) {
          if (a != b) {
            throw MalformedTable("missing link " + std::to_string(a) + " -> "
                                 + std::to_string(b));
          }
          std::vector<Index> id(spec.components[a]->order());
          std::iota(id.begin(), id.end(), 0);
          link[{a, b}] = id;
        } else {
          link[{a, b}] = it->second;
        }
        if (!is_monoid_homomorphism(
                *spec.components[a], *spec.components[b], link[{a, b}])) {
          throw LinkNotHomomorphism(a, b);
        }
        if (a == b) {
          for (Index g = 0; g < link[{a, a}].size(); ++g) {
            if (link[{a, a}][g] != g) {
              throw LinkCoherenceViolation(a, a, a);
            }
          }
        }
      }
    }
    for (auto const& [key, _] : spec.links) {
      if (key.first >= k || key.second >= k || !geq(Y, key.first, key.second)) {
        throw MalformedTable("link given for a pair that is not comparable");
      }
    }
    for (Index a = 0; a < k; ++a) {
      for (Index b = 0; b < k; ++b) {
        for (Index c = 0; c < k; ++c) {
          if (!geq(Y, a, b) || !geq(Y, b, c)) {
            continue;
          }
          auto const& ab = link[{a, b}];
          auto const& bc = link[{b, c}];
          auto const& ac = link[{a, c}];
          for (Index g = 0; g < ab.size(); ++g) {
            if (bc[ab[g]] != ac[g]) {
              throw LinkCoherenceViolation(a, b, c);
            }
          }
        }
      }
    }

    SemilatticeMonoid out;
    std::size_t       n = 0;
    for (Index a = 0; a < k; ++a) {
      out.offset.push_back(n);
      n += spec.components[a]->order();
      out.component.insert(out.component.end(), spec.components[a]->order(), a);
    }
    Table                    t(n, std::vector<Index>(n));
    std::vector<std::string> labels(n);
    for (Index x = 0; x < n; ++x) {
      Index const a  = out.component[x];
      Index const gx = x - out.offset[a];
      labels[x]      = Y.label(a) + ":" + spec.components[a]->label(gx);
      for (Index y = 0; y < n; ++y) {
        Index const b  = out.component[y];
        Index const gy = y - out.offset[b];
        Index const d  = Y.mul(a, b);
        Index const p
            = spec.components[d]->mul(link[{a, d}][gx], link[{b, d}][gy]);
        t[x][y] = out.offset[d] + p;
      }
    }
    Index const top = Y.identity();
    out.monoid      = FiniteMonoid::from_table(
        t, out.offset[top] + spec.components[top]->identity(), labels);
    if (!has_central_idempotents(*out.monoid)) {
      throw InternalInvariantViolation(
          "strong semilattice has non-central idempotents");
    }
    return out;
  }

  MonoidPtr strong_semilattice_monoid(StrongSemilatticeSpec const& spec) {
    return strong_semilattice(spec).monoid;
  }

}  // namespace actsep
