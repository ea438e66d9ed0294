#include "catch_amalgamated.hpp"

#include <set>

#include "actsep/act.hpp"
#include "actsep/catalog.hpp"
#include "actsep/congruence.hpp"
#include "actsep/families.hpp"
#include "actsep/rees.hpp"
#include "actsep/structure.hpp"
#include "oracles.hpp"

using namespace actsep;

namespace {

  MonoidPtr null_monoid() {
    return adjoin_identity({{1, 1}, {1, 1}}, {"s", "0"});
  }

  MonoidPtr catalog_monoid(std::string const& name) {
    for (auto const& c : monoid_catalog()) {
      if (c.name == name) {
        return c.monoid;
      }
    }
    FAIL("no catalog monoid " << name);
    return nullptr;
  }

  Index label_index(std::vector<std::string> const& labels,
                    std::string const&              l) {
    auto it = std::find(labels.begin(), labels.end(), l);
    REQUIRE(it != labels.end());
    return it - labels.begin();
  }

  void check_act_axioms(FiniteAct const& a) {
    auto const& m = *a.monoid();
    for (Index x = 0; x < a.size(); ++x) {
      REQUIRE(a.act(x, m.identity()) == x);
      for (Index s = 0; s < m.order(); ++s) {
        for (Index t = 0; t < m.order(); ++t) {
          REQUIRE(a.act(x, m.mul(s, t)) == a.act(a.act(x, s), t));
        }
      }
    }
  }

  // a few acts per monoid, for property tests
  std::vector<ActPtr> small_corpus() {
    std::vector<ActPtr> out;
    for (auto const& c : monoid_catalog()) {
      if (c.monoid->order() > 5) {
        continue;
      }
      for (auto const& a : act_corpus(c.monoid, 3)) {
        out.push_back(a);
      }
    }
    return out;
  }

}  // namespace

TEST_CASE("act_from_table", "[act]") {
  auto n = null_monoid();
  CHECK(FiniteAct::from_table(n, n->table())->size() == 3);
  CHECK(FiniteAct::from_table(n, {{0, 0, 0}})->size() == 1);

  auto z2 = cyclic_group(2);
  CHECK_THROWS_AS(FiniteAct::from_table(z2, {{1, 0}, {0, 1}}),
                  IdentityLawViolation);
  // 0*(s s) = 0*0 = 0 but (0*s)*s = 1*s = 1
  CHECK_THROWS_AS(FiniteAct::from_table(n, {{0, 1, 0}, {1, 1, 1}}),
                  AssociativityViolation);
  CHECK_THROWS_AS(FiniteAct::from_table(n, {{0, 1}}), MalformedTable);
}

TEST_CASE("regular acts", "[act]") {
  CHECK(regular_act(trivial_monoid())->size() == 1);
  auto r = regular_act(null_monoid());
  CHECK(subacts(*r) == std::vector<ElementSet>{{0, 1, 2}, {1, 2}, {2}});
  CHECK(subacts(*regular_act(cyclic_group(2))) == std::vector<ElementSet>{{0, 1}});
}

TEST_CASE("subacts of the regular act are the right ideals",
          "[act][property]") {
  for (auto const& [name, m] : monoid_catalog()) {
    if (m->order() > 5) {
      continue;
    }
    auto s = subacts(*regular_act(m));
    CHECK(s == right_ideals(*m));
  }
}

TEST_CASE("subact_generated", "[act]") {
  auto r = regular_act(null_monoid());
  CHECK(subact_generated(*r, {2}) == ElementSet{2});
  CHECK(subact_generated(*r, {1}) == ElementSet{1, 2});
  CHECK(subact_generated(*r, {0, 1, 2}) == ElementSet{0, 1, 2});
  CHECK_THROWS_AS(subact_generated(*r, {}), EmptyGeneratorSet);
}

TEST_CASE("subact_generated is a closure operator", "[act][property]") {
  for (auto const& a : small_corpus()) {
    std::size_t k = a->size();
    for (std::size_t mask = 1; mask < (std::size_t(1) << k); ++mask) {
      ElementSet u;
      for (Index x = 0; x < k; ++x) {
        if (mask >> x & 1) {
          u.push_back(x);
        }
      }
      auto gen = subact_generated(*a, u);
      REQUIRE(is_subact(*a, gen));
      REQUIRE(std::includes(gen.begin(), gen.end(), u.begin(), u.end()));
      REQUIRE(subact_generated(*a, gen) == gen);
      ElementSet pieces;
      for (auto x : u) {
        pieces = set_union(pieces, subact_generated(*a, {x}));
      }
      REQUIRE(pieces == gen);
      // monotone: adding an element never shrinks the result
      for (Index y = 0; y < k; ++y) {
        auto bigger = subact_generated(*a, set_union(u, {y}));
        REQUIRE(std::includes(
            bigger.begin(), bigger.end(), gen.begin(), gen.end()));
      }
    }
  }
}

TEST_CASE("closed subsets match subacts", "[act][property]") {
  for (auto const& a : small_corpus()) {
    auto s = subacts(*a);
    CHECK(std::set<ElementSet>(s.begin(), s.end())
          == oracle::closed_subsets(a->table()));
  }
}

TEST_CASE("preorder and R_A", "[act]") {
  // commutative idempotent monoid: R_A is equality
  auto chain = catalog_monoid("chain3");
  for (auto const& a : act_corpus(chain, 4)) {
    CHECK(preorder_and_green(*a).r_classes.index() == a->size());
  }
  CHECK(preorder_and_green(*regular_act(cyclic_group(3))).r_classes.index()
        == 1);

  auto r  = regular_act(null_monoid());
  auto pg = preorder_and_green(*r);
  CHECK(zeros(*r) == ElementSet{2});
  for (Index b = 0; b < 3; ++b) {
    CHECK(pg.leq[2][b]);
  }
  CHECK(pg.r_classes.block_containing(2) == ElementSet{2});
  CHECK(pg.leq[1][0]);
  CHECK_FALSE(pg.leq[0][1]);
}

TEST_CASE("Rees quotients", "[act]") {
  auto r = regular_act(null_monoid());
  CHECK(rees_quotient(r, {0, 1, 2}).act->size() == 1);

  auto q0 = rees_quotient(r, {2});
  CHECK(q0.act->size() == 3);
  CHECK(q0.act->label(2) == "0_B");

  auto q = rees_quotient(r, {1, 2});
  REQUIRE(q.act->size() == 2);
  CHECK(q.act->act(0, 1) == 1);
  CHECK(q.projection.map() == std::vector<Index>{0, 1, 1});

  CHECK_THROWS_AS(rees_quotient(r, {1}), NotASubact);
}

TEST_CASE("disjoint unions and decomposition", "[act]") {
  auto n   = null_monoid();
  auto one = trivial_act(n);
  auto du  = disjoint_union({one, one});
  CHECK(du.act->size() == 2);
  CHECK(zeros(*du.act) == ElementSet{0, 1});
  CHECK(decompose(*du.act).size() == 2);

  auto r    = regular_act(n);
  auto copy = disjoint_union({r});
  CHECK(copy.act->table() == r->table());

  auto free3 = disjoint_union({r, r, r});
  CHECK(free3.act->table() == free_act(n, 3)->table());
  CHECK(decompose(*free3.act) == free3.parts);

  CHECK(decompose(*r).size() == 1);
  auto z4 = cyclic_group(4);
  CHECK(decompose(*coset_act(z4, {0, 2})).size() == 1);

  CHECK_THROWS_AS(disjoint_union({r, regular_act(cyclic_group(2))}),
                  MonoidMismatch);
}

TEST_CASE("decomposition blocks are indecomposable subacts",
          "[act][property]") {
  for (auto const& a : small_corpus()) {
    auto blocks = decompose(*a);
    for (std::size_t i = 0; i < blocks.size(); ++i) {
      REQUIRE(is_subact(*a, blocks[i]));
      REQUIRE(decompose(*sub_act(*a, blocks[i])).size() == 1);
      for (std::size_t j = i + 1; j < blocks.size(); ++j) {
        auto u = set_union(blocks[i], blocks[j]);
        REQUIRE(decompose(*sub_act(*a, u)).size() == 2);
      }
    }
  }
}

TEST_CASE("cyclic acts from right congruences", "[act]") {
  auto n = null_monoid();
  auto r = regular_act(n);
  CHECK(cyclic_act_from_right_congruence(equality_congruence(r))->table()
        == r->table());
  CHECK(cyclic_act_from_right_congruence(universal_congruence(r))->size() == 1);

  auto z4  = cyclic_group(4);
  auto rz  = regular_act(z4);
  auto rho = verify_congruence(rz, right_coset_partition(*z4, {0, 2}));
  auto c   = cyclic_act_from_right_congruence(rho);
  auto h   = coset_act(z4, {0, 2});
  CHECK(c->table() == h->table());
  CHECK(h->label(0) == "H*e");
  CHECK(h->label(1) == "H*g");
}

TEST_CASE("transport along an ideal complement", "[act]") {
  auto n = null_monoid();
  auto r = regular_act(n);
  auto same = transport_along_ideal_complement(*r, n, {0, 1, 2});
  REQUIRE(same->size() == 4);
  CHECK(zeros(*same) == ElementSet{2, 3});
  check_act_axioms(*same);

  auto units = submonoid(n, {0});
  auto point = trivial_act(units.monoid);
  auto t     = transport_along_ideal_complement(*point, n, units.embedding);
  REQUIRE(t->size() == 2);
  CHECK(t->act(0, 1) == 1);
  CHECK(t->act(0, 2) == 1);
  CHECK(t->act(0, 0) == 0);

  auto cl = catalog_monoid("clifford_z2_z2");
  ElementSet group_of_units;
  for (Index x = 0; x < cl->order(); ++x) {
    if (inverse(*cl, x)) {
      group_of_units.push_back(x);
    }
  }
  auto g  = submonoid(cl, group_of_units);
  auto tg = transport_along_ideal_complement(*regular_act(g.monoid), cl,
                                             g.embedding);
  check_act_axioms(*tg);

  // {1, s} is a submonoid? no: s*s = 0 lies outside
  CHECK_THROWS(submonoid(n, {0, 1}));
}

TEST_CASE("transport along a retraction", "[act]") {
  auto n  = null_monoid();
  auto r  = regular_act(n);
  auto id = transport_along_retraction(*r, n, {0, 1, 2}, {0, 1, 2});
  CHECK(id->table() == r->table());

  // rectangular band with identity; N = {1} u {(i, e, 0)}
  ReesMatrixSpec band;
  band.group    = trivial_monoid();
  band.rows     = 2;
  band.cols     = 2;
  band.sandwich = {{0, 0}, {0, 0}};
  auto m        = rees_matrix_monoid(band);
  ElementSet left{0, rees_index(band, 0, 0, 0), rees_index(band, 1, 0, 0)};
  auto l = submonoid(m, left);
  std::vector<Index> phi(m->order());
  phi[0] = 0;
  for (Index x = 1; x < m->order(); ++x) {
    auto t = *rees_triple(band, x);
    phi[x] = std::find(l.embedding.begin(), l.embedding.end(),
                       rees_index(band, t.i, 0, 0))
             - l.embedding.begin();
  }
  for (auto const& a : act_corpus(l.monoid, 3)) {
    auto t = transport_along_retraction(*a, m, l.embedding, phi);
    check_act_axioms(*t);
    CHECK(restrict_scalars(*t, l.monoid, l.embedding)->table() == a->table());
  }

  // Clifford monoid onto its idempotents via m -> m m^-1
  auto cl = catalog_monoid("clifford_z2_z2");
  auto e  = submonoid(cl, idempotents(*cl));
  std::vector<Index> to_idem(cl->order());
  for (Index x = 0; x < cl->order(); ++x) {
    Index ee = cl->mul(x, *semigroup_inverse(*cl, x));
    to_idem[x] = std::find(e.embedding.begin(), e.embedding.end(), ee)
                 - e.embedding.begin();
  }
  for (auto const& a : act_corpus(e.monoid, 3)) {
    auto t = transport_along_retraction(*a, cl, e.embedding, to_idem);
    check_act_axioms(*t);
    CHECK(restrict_scalars(*t, e.monoid, e.embedding)->table() == a->table());
  }

  std::vector<Index> not_fixing = phi;
  std::swap(not_fixing[l.embedding[1]], not_fixing[l.embedding[2]]);
  CHECK_THROWS_AS(
      transport_along_retraction(*regular_act(l.monoid), m, l.embedding,
                                 not_fixing),
      NotARetraction);
}

TEST_CASE("closure_partial", "[act]") {
  auto r = PartialAct::from_act(*regular_act(null_monoid()));
  CHECK(closure_partial(*r, {}) == Partition::discrete(3));

  auto bz = build_family("bz_window", {{"w", 12}});
  auto const& labels = bz.partial_act->labels();
  auto p = closure_partial(*bz.partial_act, {{label_index(labels, "b_-2"),
                                              label_index(labels, "b_-5")}});
  CHECK(p.same_block(label_index(labels, "b_0"), label_index(labels, "b_3")));

  auto koz = build_family("kozhukhov", {{"n", 3}});
  auto pk  = closure_partial(*PartialAct::from_act(*koz.act),
                            {{koz.marked.at("a_1"), koz.marked.at("a_2")}});
  CHECK(pk.same_block(koz.marked.at("b"), koz.marked.at("zero")));
}

TEST_CASE("closure_partial is a fixed point on its own output",
          "[act][property]") {
  auto bz = build_family("bz_window", {{"w", 8}});
  auto const& p = *bz.partial_act;
  for (Index x = 0; x < p.size(); x += 3) {
    for (Index y = x + 1; y < p.size(); y += 5) {
      auto part = closure_partial(p, {{x, y}});
      std::vector<std::pair<Index, Index>> pairs;
      for (auto const& block : part.blocks()) {
        for (auto z : block) {
          pairs.emplace_back(block.front(), z);
        }
      }
      REQUIRE(closure_partial(p, pairs) == part);
      // closed under defined entries
      for (Index a = 0; a < p.size(); ++a) {
        for (Index b = 0; b < p.size(); ++b) {
          if (!part.same_block(a, b)) {
            continue;
          }
          for (Index m = 0; m < p.monoid()->order(); ++m) {
            Index am = p.act(a, m), bm = p.act(b, m);
            if (am != undefined && bm != undefined) {
              REQUIRE(part.same_block(am, bm));
            }
          }
        }
      }
    }
  }
}

TEST_CASE("faithfulness", "[act]") {
  auto n = null_monoid();
  CHECK(is_faithful(*regular_act(n)));
  CHECK_FALSE(is_faithful(*trivial_act(n)));
}
