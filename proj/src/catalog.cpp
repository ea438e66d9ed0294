#include "actsep/catalog.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <deque>
#include <map>
#include <numeric>
#include <set>

#include "actsep/rees.hpp"
#include "actsep/semilattice.hpp"

namespace actsep {

  Table canonical_table(FiniteMonoid const& m) {
    std::size_t const  n = m.order();
    std::vector<Index> rest;
    for (Index x = 0; x < n; ++x) {
      if (x != m.identity()) {
        rest.push_back(x);
      }
    }
    std::vector<Index> best;
    std::vector<Index> pi(n), flat(n * n);
    do {
      pi[m.identity()] = 0;
      for (Index k = 0; k < rest.size(); ++k) {
        pi[rest[k]] = k + 1;
      }
      for (Index x = 0; x < n; ++x) {
        for (Index y = 0; y < n; ++y) {
          flat[pi[x] * n + pi[y]] = pi[m.mul(x, y)];
        }
      }
      if (best.empty() || flat < best) {
        best = flat;
      }
    } while (std::next_permutation(rest.begin(), rest.end()));
    Table t(n, std::vector<Index>(n));
    for (Index x = 0; x < n; ++x) {
      for (Index y = 0; y < n; ++y) {
        t[x][y] = best[x * n + y];
      }
    }
    return t;
  }

  namespace {
    using Map = std::vector<Index>;

    // Right actions: (p)(f g) = g(f(p)).
    Map compose(Map const& f, Map const& g) {
      Map out(f.size());
      for (Index p = 0; p < f.size(); ++p) {
        out[p] = g[f[p]];
      }
      return out;
    }

    // Closure of gens under composition; empty if it grows past cap.
    std::set<Map> close(std::set<Map> gens, std::size_t cap) {
      std::set<Map>   out = gens;
      std::deque<Map> todo(gens.begin(), gens.end());
      while (!todo.empty()) {
        Map x = todo.front();
        todo.pop_front();
        for (auto const& g : gens) {
          Map y = compose(x, g);
          if (out.insert(y).second) {
            if (out.size() > cap) {
              return {};
            }
            todo.push_back(std::move(y));
          }
        }
      }
      return out;
    }

    Table table_of(std::vector<Map> const& elems, Index& identity) {
      std::map<Map, Index> pos;
      for (Index k = 0; k < elems.size(); ++k) {
        pos[elems[k]] = k;
      }
      Map id(elems[0].size());
      std::iota(id.begin(), id.end(), 0);
      identity = pos.at(id);
      Table t(elems.size(), std::vector<Index>(elems.size()));
      for (Index x = 0; x < elems.size(); ++x) {
        for (Index y = 0; y < elems.size(); ++y) {
          t[x][y] = pos.at(compose(elems[x], elems[y]));
        }
      }
      return t;
    }

    std::vector<Map> all_maps(std::size_t degree) {
      std::vector<Map> out;
      Map              f(degree, 0);
      while (true) {
        out.push_back(f);
        Index k = 0;
        while (k < degree && ++f[k] == degree) {
          f[k++] = 0;
        }
        if (k == degree) {
          break;
        }
      }
      return out;
    }
  }  // namespace

  std::vector<CatalogMonoid> small_monoids(std::size_t max_order) {
    if (max_order == 0) {
      return {};
    }
    std::size_t const d = std::max<std::size_t>(max_order, 1);
    auto const        maps = all_maps(d);
    Map               id(d);
    std::iota(id.begin(), id.end(), 0);

    // grow submonoids one generator at a time
    std::set<std::set<Map>>  seen{{id}};
    std::deque<std::set<Map>> todo{{id}};
    std::set<Table>          tables;
    while (!todo.empty()) {
      std::set<Map> s = todo.front();
      todo.pop_front();
      std::vector<Map> elems(s.begin(), s.end());
      Index            identity = 0;
      Table const      t        = table_of(elems, identity);
      tables.insert(
          canonical_table(*FiniteMonoid::from_trusted_table(t, identity)));
      if (s.size() == max_order) {
        continue;
      }
      for (auto const& f : maps) {
        if (s.count(f)) {
          continue;
        }
        std::set<Map> gens = s;
        gens.insert(f);
        std::set<Map> c = close(std::move(gens), max_order);
        if (!c.empty() && seen.insert(c).second) {
          todo.push_back(std::move(c));
        }
      }
    }

    std::vector<Table> sorted(tables.begin(), tables.end());
    std::stable_sort(sorted.begin(), sorted.end(), [](auto const& a, auto const& b) {
      return a.size() < b.size();
    });
    std::vector<CatalogMonoid> out;
    std::map<std::size_t, std::size_t> counter;
    for (auto const& t : sorted) {
      std::string name = "m" + std::to_string(t.size()) + "_"
                         + std::to_string(++counter[t.size()]);
      out.push_back({std::move(name), FiniteMonoid::from_table(t, 0)});
    }
    return out;
  }

  std::vector<CatalogMonoid> named_monoids() {
    std::vector<CatalogMonoid> out;
    // {1, s, 0} with every product of non-identity elements equal to 0
    out.push_back({"null3", adjoin_identity({{1, 1}, {1, 1}}, {"s", "0"})});
    // chain 1 > e > 0
    out.push_back({"chain3",
                   FiniteMonoid::from_table(
                       {{0, 1, 2}, {1, 1, 2}, {2, 2, 2}}, 0, {"1", "e", "0"})});
    out.push_back({"z2", cyclic_group(2)});
    out.push_back({"z3", cyclic_group(3)});
    {
      // Y = {1 > 0}, both components Z2, identity link
      StrongSemilatticeSpec spec;
      spec.semilattice = FiniteMonoid::from_table({{0, 1}, {1, 1}}, 0, {"1", "0"});
      spec.components  = {cyclic_group(2), cyclic_group(2)};
      spec.links[{0, 1}] = {0, 1};
      out.push_back({"clifford_z2_z2", strong_semilattice_monoid(spec)});
    }
    {
      ReesMatrixSpec spec;
      spec.group    = trivial_monoid();
      spec.rows     = 2;
      spec.cols     = 2;
      spec.sandwich = {{0, 0}, {0, 0}};
      out.push_back({"rect_band_2x2", rees_matrix_monoid(spec)});
    }
    {
      ReesMatrixSpec spec;
      spec.group    = cyclic_group(2);
      spec.rows     = 2;
      spec.cols     = 2;
      spec.sandwich = {{0, 0}, {0, 1}};
      out.push_back({"rees_z2_2x2", rees_matrix_monoid(spec)});
    }
    return out;
  }

  std::vector<CatalogMonoid> monoid_catalog() {
    auto out   = small_monoids(4);
    auto named = named_monoids();
    out.insert(out.end(), named.begin(), named.end());
    return out;
  }

  std::vector<Index> generating_set(FiniteMonoid const& m) {
    std::vector<Index> gens;
    std::vector<bool>  in(m.order(), false);
    in[m.identity()] = true;
    for (Index x = 0; x < m.order(); ++x) {
      if (in[x]) {
        continue;
      }
      gens.push_back(x);
      std::deque<Index> todo;
      for (Index y = 0; y < m.order(); ++y) {
        if (in[y]) {
          todo.push_back(y);
        }
      }
      in[x] = true;
      todo.push_back(x);
      while (!todo.empty()) {
        Index const y = todo.front();
        todo.pop_front();
        for (Index g : gens) {
          Index const z = m.mul(y, g);
          if (!in[z]) {
            in[z] = true;
            todo.push_back(z);
          }
        }
      }
    }
    return gens;
  }

  namespace {
    constexpr std::size_t max_carrier = 8;
    using Small                       = std::array<std::uint8_t, max_carrier>;

    class HomSearch {
     public:
      HomSearch(FiniteMonoid const& m, std::size_t k)
          : _m(m), _k(k), _gens(generating_set(m)), _img(m.order()),
            _set(m.order(), false) {
        Small f{};
        while (true) {
          _maps.push_back(f);
          Index i = 0;
          while (i < k && ++f[i] == k) {
            f[i++] = 0;
          }
          if (i == k) {
            break;
          }
        }
      }

      template <typename Emit>
      void run(Emit&& emit) {
        rec(0, emit);
      }

     private:
      Small compose(Small const& f, Small const& g) const {
        Small out{};
        for (Index p = 0; p < _k; ++p) {
          out[p] = g[f[p]];
        }
        return out;
      }

      // Propagate images through <g_0..g_t>; false on a clash.
      bool propagate(std::size_t t) {
        std::fill(_set.begin(), _set.end(), false);
        Small id{};
        for (Index p = 0; p < _k; ++p) {
          id[p] = static_cast<std::uint8_t>(p);
        }
        Index const one = _m.identity();
        _img[one]       = id;
        _set[one]       = true;
        _queue.assign(1, one);
        for (std::size_t h = 0; h < _queue.size(); ++h) {
          Index const x = _queue[h];
          for (std::size_t s = 0; s <= t; ++s) {
            Index const y = _m.mul(x, _gens[s]);
            Small const v = compose(_img[x], _chosen[s]);
            if (!_set[y]) {
              _set[y] = true;
              _img[y] = v;
              _queue.push_back(y);
            } else if (_img[y] != v) {
              return false;
            }
          }
        }
        return true;
      }

      template <typename Emit>
      void rec(std::size_t t, Emit& emit) {
        if (t == _gens.size()) {
          if (propagate_all()) {
            emit(_img);
          }
          return;
        }
        _chosen.resize(t + 1);
        for (auto const& f : _maps) {
          _chosen[t] = f;
          if (propagate(t)) {
            rec(t + 1, emit);
            _chosen.resize(t + 1);
          }
        }
      }

      bool propagate_all() {
        if (_gens.empty()) {
          return propagate_none();
        }
        return propagate(_gens.size() - 1);
      }

      bool propagate_none() {
        Small id{};
        for (Index p = 0; p < _k; ++p) {
          id[p] = static_cast<std::uint8_t>(p);
        }
        _img[_m.identity()] = id;
        return true;
      }

      FiniteMonoid const& _m;
      std::size_t         _k;
      std::vector<Index>  _gens;
      std::vector<Small>  _maps;
      std::vector<Small>  _chosen;
      std::vector<Small>  _img;
      std::vector<bool>   _set;
      std::vector<Index>  _queue;
    };

    // Least act table over all relabelings of the carrier, flattened.
    std::vector<std::uint8_t> canonical_act(std::vector<Small> const& img,
                                            std::size_t               k) {
      std::size_t const         n = img.size();
      std::vector<std::uint8_t> best, cur(k * n);
      std::vector<std::uint8_t> pi(k), inv(k);
      std::iota(pi.begin(), pi.end(), 0);
      do {
        for (Index p = 0; p < k; ++p) {
          inv[pi[p]] = static_cast<std::uint8_t>(p);
        }
        // new element q is old element inv[q]
        bool greater = false, less = best.empty();
        for (Index q = 0; q < k && !greater; ++q) {
          for (Index m = 0; m < n; ++m) {
            std::uint8_t const v = pi[img[m][inv[q]]];
            cur[q * n + m]       = v;
            if (!less) {
              std::uint8_t const b = best[q * n + m];
              if (v < b) {
                less = true;
              } else if (v > b) {
                greater = true;
                break;
              }
            }
          }
        }
        if (less && !greater) {
          best = cur;
        }
      } while (std::next_permutation(pi.begin(), pi.end()));
      return best;
    }
  }  // namespace

  std::vector<ActPtr> acts_of(MonoidPtr const& m,
                              std::size_t      carrier,
                              bool             up_to_isomorphism) {
    if (carrier == 0 || carrier > max_carrier) {
      throw PreconditionViolated("act carrier must be between 1 and "
                                 + std::to_string(max_carrier));
    }
    std::size_t const                     n = m->order();
    std::set<std::vector<std::uint8_t>>   found;
    HomSearch                             search(*m, carrier);
    search.run([&](std::vector<Small> const& img) {
      if (up_to_isomorphism) {
        found.insert(canonical_act(img, carrier));
      } else {
        std::vector<std::uint8_t> flat(carrier * n);
        for (Index a = 0; a < carrier; ++a) {
          for (Index x = 0; x < n; ++x) {
            flat[a * n + x] = img[x][a];
          }
        }
        found.insert(std::move(flat));
      }
    });
    std::vector<ActPtr> out;
    for (auto const& flat : found) {
      Table t(carrier, std::vector<Index>(n));
      for (Index a = 0; a < carrier; ++a) {
        for (Index x = 0; x < n; ++x) {
          t[a][x] = flat[a * n + x];
        }
      }
      out.push_back(FiniteAct::from_table(m, t));
    }
    return out;
  }

  std::vector<ActPtr> act_corpus(MonoidPtr const& m, std::size_t max_carrier_size) {
    std::vector<ActPtr> out;
    for (std::size_t k = 1; k <= max_carrier_size; ++k) {
      auto acts = acts_of(m, k);
      out.insert(out.end(), acts.begin(), acts.end());
    }
    return out;
  }

}  // namespace actsep
