#include "actsep/families.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <sstream>
#include <tuple>

#include "actsep/separability.hpp"
#include "actsep/semilattice.hpp"

namespace actsep {

  std::string FamilyInstance::id() const {
    std::string out = name;
    for (auto const& [k, v] : params) {
      out += "_" + k + "=" + std::to_string(v);
    }
    return out;
  }

  std::string FamilyInstance::element_label(Index x) const {
    if (act) {
      return act->label(x);
    }
    return partial_act->label(x);
  }

  namespace {
    using Builder = std::function<FamilyInstance(Params const&)>;

    struct Entry {
      FamilyInfo info;
      Builder    build;
    };

    std::vector<std::string> numbered(std::string const& stem,
                                      long               first,
                                      long               last) {
      std::vector<std::string> out;
      for (long i = first; i <= last; ++i) {
        out.push_back(stem + std::to_string(i));
      }
      return out;
    }

    std::string power_label(std::string const& x, std::size_t k) {
      if (k == 0) {
        return "1";
      }
      return k == 1 ? x : x + "^" + std::to_string(k);
    }

    Fact forcing(Index s1, Index s2, Index t1, Index t2) {
      Fact f;
      f.kind   = FactKind::forcing_chain;
      f.seed   = {s1, s2};
      f.target = {t1, t2};
      return f;
    }

    Fact min_index(Index e, ElementSet x, std::optional<std::size_t> value) {
      Fact f;
      f.kind    = FactKind::min_index;
      f.element = e;
      f.subset  = std::move(x);
      f.value   = value;
      return f;
    }

    Fact count(std::string name, std::size_t expected) {
      Fact f;
      f.kind           = FactKind::structural_count;
      f.count_name     = std::move(name);
      f.count_expected = expected;
      return f;
    }

    Fact witness(WitnessSpec w) {
      Fact f;
      f.kind    = FactKind::witness_congruence;
      f.witness = std::move(w);
      return f;
    }

    ElementSet all_but(std::size_t k, Index x) {
      return set_difference(full_set(k), {x});
    }

    // Null semigroup with identity: 1, s_1..s_n, z ////////////////////////////

    FamilyInstance kozhukhov(Params const& p) {
      long const n = p.at("n");
      Table      null(n + 1, std::vector<Index>(n + 1, n));
      auto       labels = numbered("s_", 1, n);
      labels.push_back("z");
      FamilyInstance inst;
      inst.monoid = adjoin_identity(null, labels);
      // a_1..a_n, b, 0
      Index const b = n, zero = n + 1;
      Table       t(n + 2, std::vector<Index>(n + 2, zero));
      for (Index x = 0; x < static_cast<Index>(n + 2); ++x) {
        t[x][0] = x;
      }
      for (Index i = 0; i < static_cast<Index>(n); ++i) {
        t[i][i + 1] = b;
      }
      auto act_labels = numbered("a_", 1, n);
      act_labels.push_back("b");
      act_labels.push_back("0");
      inst.act           = FiniteAct::from_table(inst.monoid, t, act_labels);
      inst.marked["b"]    = b;
      inst.marked["zero"] = zero;
      for (Index i = 0; i < static_cast<Index>(n); ++i) {
        inst.marked["a_" + std::to_string(i + 1)] = i;
        for (Index j = 0; j < static_cast<Index>(n); ++j) {
          if (i != j) {
            inst.expected.push_back(forcing(i, j, b, zero));
          }
        }
      }
      inst.expected.push_back(min_index(b, {zero}, n + 2));
      return inst;
    }

    // Left zero semigroup with identity ////////////////////////////////////

    FamilyInstance leftzero(Params const& p) {
      long const n = p.at("n");
      Table      lz(n, std::vector<Index>(n));
      for (Index x = 0; x < static_cast<Index>(n); ++x) {
        std::fill(lz[x].begin(), lz[x].end(), x);
      }
      FamilyInstance inst;
      inst.monoid = adjoin_identity(lz, numbered("y_", 1, n));
      Index const b = n, c = n + 1;
      Table       t(n + 2, std::vector<Index>(n + 1));
      for (Index x = 0; x < static_cast<Index>(n + 2); ++x) {
        t[x][0] = x;
        for (Index y = 0; y < static_cast<Index>(n); ++y) {
          t[x][y + 1] = x < static_cast<Index>(n) ? (x == y ? b : c) : x;
        }
      }
      auto labels = numbered("a_", 1, n);
      labels.push_back("b");
      labels.push_back("c");
      inst.act         = FiniteAct::from_table(inst.monoid, t, labels);
      inst.marked["b"] = b;
      inst.marked["c"] = c;
      for (Index x = 0; x < static_cast<Index>(n); ++x) {
        inst.marked["a_" + std::to_string(x + 1)] = x;
        for (Index y = 0; y < static_cast<Index>(n); ++y) {
          if (x != y) {
            inst.expected.push_back(forcing(x, y, b, c));
          }
        }
      }
      inst.expected.push_back(min_index(b, {c}, n + 2));
      return inst;
    }

    // Window of the free monogenic act a_i x^j = a_{i-j} or 0 ///////////////

    FamilyInstance free_monogenic_act(Params const& p) {
      long const w = p.at("w");
      Table      m(w + 1, std::vector<Index>(w + 1, undefined));
      std::vector<std::string> mlabels;
      for (long j = 0; j <= w; ++j) {
        mlabels.push_back(power_label("x", j));
        for (long k = 0; j + k <= w; ++k) {
          m[j][k] = j + k;
        }
      }
      FamilyInstance inst;
      inst.partial_monoid = PartialMonoid::from_table(m, 0, mlabels);
      Index const zero    = w + 1;
      Table       t(w + 2, std::vector<Index>(w + 1, zero));
      for (long i = 0; i <= w; ++i) {
        for (long j = 0; j <= i; ++j) {
          t[i][j] = i - j;
        }
      }
      auto labels = numbered("a_", 0, w);
      labels.push_back("0");
      inst.partial_act = PartialAct::from_table(inst.partial_monoid, t, labels);
      inst.marked["a_0"]  = 0;
      inst.marked["zero"] = zero;
      for (long i = 0; i <= w; ++i) {
        for (long j = i + 1; j <= w; ++j) {
          inst.expected.push_back(forcing(i, j, zero, 0));
        }
      }
      return inst;
    }

    // Window of the monoid {a^i} u {b_j : j in Z} u {0} //////////////////////

    struct BzLayout {
      long  w;
      Index a(long i) const {
        return i;
      }
      Index b(long j) const {
        return w + 1 + (j + w);
      }
      Index zero() const {
        return 3 * w + 2;
      }
      std::size_t size() const {
        return 3 * w + 3;
      }
    };

    std::pair<PartialMonoidPtr, PartialActPtr> bz_window_act(long w) {
      BzLayout const           L{w};
      Table                    t(L.size(), std::vector<Index>(L.size(), undefined));
      std::vector<std::string> labels;
      for (long i = 0; i <= w; ++i) {
        labels.push_back(power_label("a", i));
      }
      for (long j = -w; j <= w; ++j) {
        labels.push_back("b_" + std::to_string(j));
      }
      labels.push_back("0");
      for (long i = 0; i <= w; ++i) {
        for (long k = 0; i + k <= w; ++k) {
          t[L.a(i)][L.a(k)] = L.a(i + k);
        }
        for (long j = -w; j <= w; ++j) {
          if (i + j <= w) {
            t[L.a(i)][L.b(j)] = t[L.b(j)][L.a(i)] = L.b(i + j);
          }
        }
      }
      for (Index x = 0; x < L.size(); ++x) {
        t[x][L.zero()] = t[L.zero()][x] = L.zero();
      }
      for (long j = -w; j <= w; ++j) {
        for (long k = -w; k <= w; ++k) {
          t[L.b(j)][L.b(k)] = L.zero();
        }
      }
      auto m = PartialMonoid::from_table(t, 0, labels);
      return {m, PartialAct::from_table(m, t, labels)};
    }

    FamilyInstance bz_window(Params const& p) {
      long const     w = p.at("w");
      BzLayout const L{w};
      FamilyInstance inst;
      std::tie(inst.partial_monoid, inst.partial_act) = bz_window_act(w);
      inst.marked["b0"]   = L.b(0);
      inst.marked["zero"] = L.zero();
      for (long i = 1; i <= w; ++i) {
        for (long j = i + 1; j <= w; ++j) {
          inst.expected.push_back(forcing(L.b(-i), L.b(-j), L.b(0), L.b(j - i)));
        }
      }
      return inst;
    }

    // Quotient with classes {0}, C_m, D_m (residues mod n)
    MonoidPtr bz_mod(long n) {
      std::size_t const        k = 2 * n + 1;
      Table                    t(k, std::vector<Index>(k, 2 * n));
      std::vector<std::string> labels;
      for (long r = 0; r < n; ++r) {
        labels.push_back("C_" + std::to_string(r));
      }
      for (long r = 0; r < n; ++r) {
        labels.push_back("D_" + std::to_string(r));
      }
      labels.push_back("0");
      for (long r = 0; r < n; ++r) {
        for (long s = 0; s < n; ++s) {
          t[r][s]         = (r + s) % n;
          t[r][n + s]     = n + (r + s) % n;
          t[n + s][r]     = n + (r + s) % n;
        }
      }
      return FiniteMonoid::from_table(t, 0, labels);
    }

    FamilyInstance bz_quotient(Params const& p) {
      long const     n = p.at("n");
      FamilyInstance inst;
      inst.monoid = bz_mod(n);
      inst.act    = regular_act(inst.monoid);
      inst.marked["zero"] = 2 * n;
      inst.marked["D_0"]  = n;

      // cover: residues mod 2n, partitioned by residue mod n
      {
        long const         c     = 2 * n;
        MonoidPtr const    cover = bz_mod(c);
        std::vector<Index> labels(2 * c + 1);
        for (long r = 0; r < c; ++r) {
          labels[r]     = r % n;
          labels[c + r] = n + r % n;
        }
        labels[2 * c] = 2 * n;
        WitnessSpec w;
        w.name      = "cover_mod_" + std::to_string(n);
        w.act       = regular_act(cover);
        w.partition = Partition::from_labels(labels);
        w.two_sided = true;
        for (long r = 0; r < c; ++r) {
          ElementSet apart;
          for (long s = 0; s < c; ++s) {
            if ((s - r + c) % n != 0) {
              apart.push_back(c + s);
            }
          }
          if (!apart.empty()) {
            w.separations.emplace_back(c + r, apart);
          }
        }
        inst.expected.push_back(witness(std::move(w)));
      }
      // window of width 3n, partitioned the same way
      {
        long const     wd = 3 * n;
        BzLayout const L{wd};
        WitnessSpec    w;
        w.name    = "window_mod_" + std::to_string(n);
        w.partial = bz_window_act(wd).second;
        std::vector<Index> labels(L.size());
        for (long i = 0; i <= wd; ++i) {
          labels[L.a(i)] = i % n;
        }
        for (long j = -wd; j <= wd; ++j) {
          labels[L.b(j)] = n + ((j % n) + n) % n;
        }
        labels[L.zero()] = 2 * n;
        w.partition      = Partition::from_labels(labels);
        for (long i = -wd; i <= wd; ++i) {
          ElementSet apart;
          for (long j = -wd; j <= wd; ++j) {
            if (i != j && std::abs(i - j) < n) {
              apart.push_back(L.b(j));
            }
          }
          if (!apart.empty()) {
            w.separations.emplace_back(L.b(i), normalize_set(apart));
          }
        }
        inst.expected.push_back(witness(std::move(w)));
      }
      inst.expected.push_back(count("order", 2 * n + 1));
      return inst;
    }

    // Square-free words over {a, b, c} //////////////////////////////////////

    bool has_square(std::string const& w) {
      for (std::size_t len = 1; 2 * len <= w.size(); ++len) {
        for (std::size_t s = 0; s + 2 * len <= w.size(); ++s) {
          if (w.compare(s, len, w, s + len, len) == 0) {
            return true;
          }
        }
      }
      return false;
    }

    // Extends square-free words letter by letter; only suffixes can create a
    // new square.
    std::vector<std::string> square_free_words(std::size_t n) {
      std::vector<std::string> out, layer{""};
      for (std::size_t len = 1; len <= n; ++len) {
        std::vector<std::string> next;
        for (auto const& w : layer) {
          for (char ch : {'a', 'b', 'c'}) {
            std::string v      = w + ch;
            bool        square = false;
            for (std::size_t h = 1; 2 * h <= v.size() && !square; ++h) {
              square = v.compare(v.size() - 2 * h, h, v, v.size() - h, h) == 0;
            }
            if (!square) {
              next.push_back(v);
            }
          }
        }
        out.insert(out.end(), next.begin(), next.end());
        layer = std::move(next);
      }
      return out;
    }

    FamilyInstance squarefree(Params const& p) {
      long const n     = p.at("n");
      auto const words = square_free_words(n);
      std::map<std::string, Index> pos;
      std::vector<std::string>     labels{"1"};
      for (auto const& w : words) {
        pos[w] = labels.size();
        labels.push_back(w);
      }
      Index const       zero = labels.size();
      std::size_t const k    = zero + 1;
      labels.push_back("0");
      Table t(k, std::vector<Index>(k, zero));
      for (Index x = 0; x < k; ++x) {
        t[0][x] = t[x][0] = x;
      }
      for (auto const& u : words) {
        for (auto const& v : words) {
          std::string const uv = u + v;
          if (static_cast<long>(uv.size()) <= n && !has_square(uv)) {
            t[pos[u]][pos[v]] = pos.at(uv);
          }
        }
      }
      FamilyInstance inst;
      inst.monoid         = FiniteMonoid::from_table(t, 0, labels);
      inst.act            = regular_act(inst.monoid);
      inst.marked["zero"] = zero;
      inst.expected.push_back(count("order", 2 + count_square_free_words(n)));
      for (long len = 1; len < n; ++len) {
        std::vector<Index> cls(k);
        for (Index x = 0; x < k; ++x) {
          bool const long_word
              = x == zero || (x != 0 && static_cast<long>(labels[x].size()) > len);
          cls[x] = long_word ? zero : x;
        }
        WitnessSpec w;
        w.name      = "length_ideal_" + std::to_string(len);
        w.act       = inst.act;
        w.partition = Partition::from_labels(cls);
        w.two_sided = true;
        for (auto const& u : words) {
          if (static_cast<long>(u.size()) != len) {
            continue;
          }
          // the largest right ideal avoiding u
          Index const ui = pos[u];
          ElementSet  avoid;
          for (Index x = 0; x < k; ++x) {
            if (!set_contains(inst.monoid->right_ideal_of(x), ui)) {
              avoid.push_back(x);
            }
          }
          w.separations.emplace_back(ui, avoid);
        }
        inst.expected.push_back(witness(std::move(w)));
      }
      return inst;
    }

    // (N_n x G)^1 ///////////////////////////////////////////////////////////

    FamilyInstance n_times_g(Params const& p) {
      long const        n = p.at("n");
      MonoidPtr const   g = cyclic_group(p.at("g"));
      std::size_t const q = g->order();
      // levels 1..n, then level 0 for the collapsed ideal
      auto idx = [&](long level, Index u) -> Index {
        return 1 + (level == 0 ? n : level - 1) * q + u;
      };
      std::size_t const        k = 1 + (n + 1) * q;
      std::vector<long>        level_of(k, -1);
      std::vector<Index>       unit_of(k, 0);
      std::vector<std::string> labels{"1"};
      for (long l = 1; l <= n + 1; ++l) {
        long const lv = l == n + 1 ? 0 : l;
        for (Index u = 0; u < q; ++u) {
          level_of[idx(lv, u)] = lv;
          unit_of[idx(lv, u)]  = u;
          labels.push_back("(" + (lv == 0 ? std::string("0J") : std::to_string(lv))
                           + "," + g->label(u) + ")");
        }
      }
      Table t(k, std::vector<Index>(k));
      for (Index x = 0; x < k; ++x) {
        for (Index y = 0; y < k; ++y) {
          if (x == 0 || y == 0) {
            t[x][y] = x == 0 ? y : x;
            continue;
          }
          long const s  = level_of[x] + level_of[y];
          long const lv = (level_of[x] == 0 || level_of[y] == 0 || s > n) ? 0 : s;
          t[x][y]       = idx(lv, g->mul(unit_of[x], unit_of[y]));
        }
      }
      FamilyInstance inst;
      inst.monoid = FiniteMonoid::from_table(t, 0, labels);
      inst.act    = regular_act(inst.monoid);
      Index const e = g->identity();
      if (n >= 2) {
        for (Index a = 0; a < q; ++a) {
          for (Index b = 0; b < q; ++b) {
            if (a != b) {
              Index const ainv = *inverse(*g, a);
              inst.expected.push_back(forcing(
                  idx(1, a), idx(1, b), idx(2, e), idx(2, g->mul(b, ainv))));
            }
          }
        }
      }

      // theta_m: (p, u) -> [p]_{J_m}; psi_m: (p, u) -> ([p]_{J_m}, u)
      auto theta = [&](long m, bool keep_unit) {
        std::vector<Index> cls(k);
        for (Index x = 0; x < k; ++x) {
          if (x == 0) {
            cls[x] = 0;
            continue;
          }
          long const lv = level_of[x] > m || level_of[x] == 0 ? 0 : level_of[x];
          cls[x]        = 1 + lv * q + (keep_unit ? unit_of[x] : 0);
        }
        return Partition::from_labels(cls);
      };
      std::vector<WitnessSpec> thetas(n + 1), psis(n + 1);
      WitnessSpec              unit;
      unit.name = "unit";
      unit.act  = inst.act;
      unit.partition
          = Partition::from_labels([&] {
              std::vector<Index> cls(k, 1);
              cls[0] = 0;
              return cls;
            }());
      unit.two_sided = true;
      for (long m = 1; m <= n; ++m) {
        thetas[m].name      = "theta_" + std::to_string(m);
        thetas[m].act       = inst.act;
        thetas[m].partition = theta(m, false);
        thetas[m].two_sided = true;
        psis[m].name        = "psi_" + std::to_string(m);
        psis[m].act         = inst.act;
        psis[m].partition   = theta(m, true);
        psis[m].two_sided   = true;
      }
      for (long pl = 1; pl <= n; ++pl) {
        for (Index u = 0; u < q; ++u) {
          ElementSet const& ideal = inst.monoid->right_ideal_of(idx(pl, u));
          for (Index b = 0; b < k; ++b) {
            if (set_contains(ideal, b)) {
              continue;
            }
            if (b == 0) {
              unit.separations.emplace_back(b, ideal);
            } else if (level_of[b] < pl) {
              thetas[level_of[b]].separations.emplace_back(b, ideal);
            } else {
              psis[level_of[b]].separations.emplace_back(b, ideal);
            }
          }
        }
      }
      inst.expected.push_back(witness(std::move(unit)));
      for (long m = 1; m <= n; ++m) {
        inst.expected.push_back(witness(std::move(thetas[m])));
        inst.expected.push_back(witness(std::move(psis[m])));
      }
      return inst;
    }

    // Tower of cyclic 2-groups ///////////////////////////////////////////////

    FamilyInstance clifford_tower(Params const& p) {
      long const            n = p.at("n");
      StrongSemilatticeSpec spec;
      Table                 y(n, std::vector<Index>(n));
      for (long i = 0; i < n; ++i) {
        for (long j = 0; j < n; ++j) {
          y[i][j] = std::max(i, j);
        }
      }
      spec.semilattice = FiniteMonoid::from_table(y, 0, numbered("", 1, n));
      for (long i = 0; i < n; ++i) {
        spec.components.push_back(cyclic_group(std::size_t(2) << i));
      }
      for (long i = 0; i < n; ++i) {
        for (long j = i; j < n; ++j) {
          std::size_t const  oi = std::size_t(2) << i, oj = std::size_t(2) << j;
          std::vector<Index> link(oi);
          for (Index k = 0; k < oi; ++k) {
            link[k] = (k << (j - i)) % oj;
          }
          spec.links[{i, j}] = link;
        }
      }
      SemilatticeMonoid const sm = strong_semilattice(spec);
      std::size_t const       k  = sm.monoid->order();
      // rho: compare images in the top level
      std::vector<Index> key(k);
      for (Index x = 0; x < k; ++x) {
        Index const lvl = sm.component[x];
        key[x]          = (x - sm.offset[lvl]) << (n - 1 - lvl);
      }
      ActPtr const   reg = regular_act(sm.monoid);
      Congruence     rho = verify_congruence(reg, Partition::from_labels(key));
      FamilyInstance inst;
      inst.monoid       = sm.monoid;
      inst.act          = quotient(rho).act;
      Index const e1    = rho.partition().block_of(sm.monoid->identity());
      inst.marked["e1"] = e1;
      ElementSet identities;
      for (long i = 0; i < n; ++i) {
        identities.push_back(sm.offset[i]);
      }
      WitnessSpec w;
      w.name           = "rho";
      w.act            = reg;
      w.partition      = rho.partition();
      w.two_sided      = true;
      w.expected_block = std::make_pair(sm.monoid->identity(), identities);
      inst.expected.push_back(witness(std::move(w)));
      Fact none;
      none.kind    = FactKind::no_separation_up_to;
      none.element = e1;
      none.subset  = all_but(inst.act->size(), e1);
      none.value   = n;
      inst.expected.push_back(none);
      inst.expected.push_back(min_index(e1, all_but(inst.act->size(), e1), {}));
      return inst;
    }

    // Semilattices //////////////////////////////////////////////////////////

    // {1, x_1..x_n, 0} with x_i x_j = 0 for i != j
    MonoidPtr star(long n) {
      std::size_t const k = n + 2;
      Table             t(k, std::vector<Index>(k, n + 1));
      for (Index x = 0; x < k; ++x) {
        t[0][x] = t[x][0] = x;
      }
      for (long i = 1; i <= n; ++i) {
        t[i][i] = i;
      }
      auto labels = numbered("x_", 1, n);
      labels.insert(labels.begin(), "1");
      labels.push_back("0");
      return FiniteMonoid::from_table(t, 0, labels);
    }

    FamilyInstance star_semilattice(Params const& p) {
      long const     n = p.at("n");
      FamilyInstance inst;
      inst.monoid      = star(n);
      inst.act         = regular_act(inst.monoid);
      Index const zero = n + 1;
      inst.marked["zero"] = zero;
      for (long i = 1; i <= n; ++i) {
        for (long j = 1; j <= n; ++j) {
          if (i != j) {
            inst.expected.push_back(forcing(i, j, i, zero));
          }
        }
      }
      inst.expected.push_back(min_index(zero, all_but(n + 2, zero), {}));
      return inst;
    }

    FamilyInstance semilattice_act(Params const& p) {
      long const n = p.at("n");
      MonoidPtr  y;
      if (p.at("star") != 0) {
        if (n < 3) {
          throw ParamOutOfRange("semilattice_act with star=1 needs n >= 3");
        }
        y = star(n - 2);
      } else {
        Table t(n, std::vector<Index>(n));
        for (long i = 0; i < n; ++i) {
          for (long j = 0; j < n; ++j) {
            t[i][j] = std::max(i, j);
          }
        }
        y = FiniteMonoid::from_table(t, 0, numbered("y_", 1, n));
      }
      // x_alpha m = x_alpha if alpha <= m, else 0
      Index const zero = n;
      Table       t(n + 1, std::vector<Index>(n, zero));
      for (long a = 0; a < n; ++a) {
        for (long m = 0; m < n; ++m) {
          if (y->mul(a, m) == static_cast<Index>(a)) {
            t[a][m] = a;
          }
        }
      }
      std::vector<std::string> labels;
      for (long a = 0; a < n; ++a) {
        labels.push_back("x_" + std::to_string(a + 1));
      }
      labels.push_back("0");
      FamilyInstance inst;
      inst.monoid         = y;
      inst.act            = FiniteAct::from_table(y, t, labels);
      inst.marked["zero"] = zero;
      for (long a = 0; a < n; ++a) {
        for (long b = 0; b < n; ++b) {
          if (y->mul(a, b) != static_cast<Index>(a)) {
            inst.expected.push_back(forcing(a, b, zero, b));
          }
        }
      }
      inst.expected.push_back(min_index(zero, all_but(n + 1, zero), {}));
      return inst;
    }

    // Rees monoid over Z2 with a diagonal sandwich matrix ///////////////////

    FamilyInstance rees_diagonal(Params const& p) {
      long const     n = p.at("n");
      ReesMatrixSpec spec;
      spec.group = cyclic_group(2);
      spec.rows = spec.cols = n;
      spec.sandwich.assign(n, std::vector<Index>(n, 0));
      for (long i = 1; i < n; ++i) {
        spec.sandwich[i][i] = 1;
      }
      FamilyInstance inst;
      inst.monoid = rees_matrix_monoid(spec);
      inst.act    = regular_act(inst.monoid);
      inst.rees   = spec;
      inst.expected.push_back(count("rank", n));
      inst.expected.push_back(count("rank_mod_G", 1));
      inst.expected.push_back(count("rank_all_identity", 1));
      return inst;
    }

    std::vector<Entry> const& registry() {
      static std::vector<Entry> const entries = {
          {{"bz_quotient", {{"n", 3, 1, 12}}, "finite quotient {0, C_m, D_m} of the a/b monoid"},
           bz_quotient},
          {{"bz_window", {{"w", 12, 1, 40}}, "window of the a/b monoid as a partial regular act"},
           bz_window},
          {{"clifford_tower", {{"n", 3, 1, 5}}, "tower of cyclic 2-groups and its quotient act"},
           clifford_tower},
          {{"free_monogenic_act", {{"w", 10, 1, 40}}, "window of a_i x^j = a_{i-j} or 0"},
           free_monogenic_act},
          {{"kozhukhov", {{"n", 3, 1, 8}}, "null semigroup act a_i s_j = b or 0"},
           kozhukhov},
          {{"leftzero", {{"n", 3, 1, 8}}, "left zero act a_x y = b or c"},
           leftzero},
          {{"n_times_g", {{"g", 2, 1, 4}, {"n", 3, 1, 6}}, "(N_n x Z_g)^1 with its separating maps"},
           n_times_g},
          {{"rees_diagonal", {{"n", 4, 1, 8}}, "Z2 Rees monoid with diagonal sandwich matrix"},
           rees_diagonal},
          {{"semilattice_act", {{"n", 3, 1, 8}, {"star", 0, 0, 1}}, "act x_alpha m = x_alpha or 0 over a semilattice"},
           semilattice_act},
          {{"squarefree", {{"n", 3, 1, 8}}, "square-free words over {a,b,c} with zero"},
           squarefree},
          {{"star_semilattice", {{"n", 3, 1, 8}}, "semilattice {1, x_i, 0} with x_i x_j = 0"},
           star_semilattice},
      };
      return entries;
    }

    std::string join_labels(FamilyInstance const& inst, ElementSet const& s) {
      std::string out;
      for (Index x : s) {
        out += (out.empty() ? "" : ",") + inst.element_label(x);
      }
      return out.empty() ? "{}" : out;
    }

    std::optional<std::string> check_witness(WitnessSpec const& w) {
      Partition const& p = w.partition;
      if (w.act) {
        if (p.size() != w.act->size()) {
          return "size mismatch";
        }
        if (auto bad = find_incompatibility(*w.act, p)) {
          return "not compatible at " + std::to_string((*bad)[0]) + ","
                 + std::to_string((*bad)[1]) + " under "
                 + std::to_string((*bad)[2]);
        }
        if (w.two_sided && !is_monoid_congruence(*w.act->monoid(), p)) {
          return "not two-sided";
        }
      } else {
        PartialAct const& a = *w.partial;
        if (p.size() != a.size()) {
          return "size mismatch";
        }
        std::vector<Index> rep(p.index(), undefined);
        for (Index x = 0; x < a.size(); ++x) {
          Index& r = rep[p.block_of(x)];
          if (r == undefined) {
            r = x;
          }
        }
        // every pair in a block, since undefined entries break transitivity
        for (Index x = 0; x < a.size(); ++x) {
          for (Index y = x + 1; y < a.size(); ++y) {
            if (!p.same_block(x, y)) {
              continue;
            }
            for (Index m = 0; m < a.monoid()->order(); ++m) {
              Index const u = a.act(x, m), v = a.act(y, m);
              if (u != undefined && v != undefined && !p.same_block(u, v)) {
                return "not compatible at " + std::to_string(x) + ","
                       + std::to_string(y) + " under " + std::to_string(m);
              }
            }
          }
        }
      }
      for (auto const& [a, x] : w.separations) {
        for (Index y : x) {
          if (p.same_block(a, y)) {
            return "does not separate " + std::to_string(a) + " from "
                   + std::to_string(y);
          }
        }
      }
      if (w.expected_block) {
        auto const& [x, members] = *w.expected_block;
        if (p.blocks()[p.block_of(x)] != members) {
          return "unexpected block of " + std::to_string(x);
        }
      }
      return std::nullopt;
    }

    std::size_t count_value(FamilyInstance const& inst, std::string const& name) {
      if (name == "order") {
        return inst.monoid->order();
      }
      ReesMatrixSpec const& spec = inst.rees.value();
      if (name == "rank") {
        return sandwich_rank(spec).rank;
      }
      if (name == "rank_mod_G") {
        return sandwich_rank(spec, full_set(spec.group->order())).rank;
      }
      if (name == "rank_all_identity") {
        ReesMatrixSpec flat = spec;
        for (auto& row : flat.sandwich) {
          std::fill(row.begin(), row.end(), spec.group->identity());
        }
        return sandwich_rank(flat).rank;
      }
      throw InternalInvariantViolation("unknown count " + name);
    }
  }  // namespace

  std::vector<FamilyInfo> family_list() {
    std::vector<FamilyInfo> out;
    for (auto const& e : registry()) {
      out.push_back(e.info);
    }
    return out;
  }

  FamilyInstance build_family(std::string const& name, Params const& params) {
    for (auto const& e : registry()) {
      if (e.info.name != name) {
        continue;
      }
      Params full;
      for (auto const& [pname, def, lo, hi] : e.info.params) {
        auto it = params.find(pname);
        long v  = it == params.end() ? def : it->second;
        if (v < lo || v > hi) {
          throw ParamOutOfRange(name + ": " + pname + " must be in [" + std::to_string(lo)
                                + ", " + std::to_string(hi) + "]");
        }
        full[pname] = v;
      }
      for (auto const& [pname, v] : params) {
        if (!full.count(pname)) {
          throw ParamOutOfRange(name + ": unknown parameter " + pname);
        }
      }
      FamilyInstance inst = e.build(full);
      inst.name           = name;
      inst.params         = full;
      return inst;
    }
    throw UnknownFamily(name);
  }

  std::vector<FactResult> verify_family(FamilyInstance const& inst) {
    std::vector<FactResult> out;
    PartialActPtr const     partial
        = inst.partial_act ? inst.partial_act : PartialAct::from_act(*inst.act);
    auto label = [&](Index x) { return inst.element_label(x); };
    for (auto const& f : inst.expected) {
      FactResult r;
      std::ostringstream line;
      switch (f.kind) {
        case FactKind::forcing_chain: {
          Partition const p = closure_partial(*partial, {f.seed});
          r.pass            = p.same_block(f.target.first, f.target.second);
          line << "forcing " << label(f.seed.first) << ' ' << label(f.seed.second)
               << " -> " << label(f.target.first) << ' ' << label(f.target.second)
               << (r.pass ? " merged" : " separate");
          break;
        }
        case FactKind::min_index: {
          auto cert = separate(inst.act, f.element, f.subset);
          line << "min_index " << label(f.element) << " from "
               << join_labels(inst, f.subset) << " = ";
          if (cert) {
            line << cert->quotient_size();
            r.pass = !f.value || *f.value == cert->quotient_size();
          } else {
            line << "none";
          }
          break;
        }
        case FactKind::no_separation_up_to: {
          auto cert = separate(inst.act, f.element, f.subset, f.value);
          r.pass    = !cert;
          line << "no_separation " << label(f.element) << " from "
               << join_labels(inst, f.subset) << " up_to " << *f.value
               << (r.pass ? " holds" : " fails");
          break;
        }
        case FactKind::witness_congruence: {
          auto const problem = check_witness(*f.witness);
          r.pass             = !problem;
          line << "witness " << f.witness->name
               << (problem ? " failed: " + *problem : std::string(" verified"));
          break;
        }
        case FactKind::structural_count: {
          std::size_t const v = count_value(inst, f.count_name);
          r.pass              = v == f.count_expected;
          line << "count " << f.count_name << " = " << v;
          if (!r.pass) {
            line << " (expected " << f.count_expected << ")";
          }
          break;
        }
      }
      r.line = line.str();
      out.push_back(std::move(r));
    }
    return out;
  }

  std::size_t count_square_free_words(std::size_t n) {
    std::size_t total = 0;
    for (std::size_t len = 1; len <= n; ++len) {
      std::size_t words = 1;
      for (std::size_t i = 0; i < len; ++i) {
        words *= 3;
      }
      for (std::size_t code = 0; code < words; ++code) {
        std::string w;
        for (std::size_t c = code, i = 0; i < len; ++i, c /= 3) {
          w += static_cast<char>('a' + c % 3);
        }
        total += !has_square(w);
      }
    }
    return total;
  }

}  // namespace actsep
