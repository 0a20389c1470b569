#include <doctest.h>

#include <deque>
#include <functional>
#include <map>
#include <set>
#include <unordered_set>

#include "hc/group.hpp"
#include "hc/group_build.hpp"
#include "hc/subgroup.hpp"
#include "hc/tables.hpp"

using namespace hc;

namespace {

GroupHandle z4_amalgam_z2_z4(std::vector<AmalgamGenSpec> gens = {{0, 1}, {1, 1}}) {
  // Z4 *_{Z2} Z4, core = {0, 2} in both factors
  return make_amalgam(cyclic_table(4), cyclic_table(4), 2, {0, 2}, {0, 2}, gens);
}

GroupHandle z6_amalgam_z3_z6() {
  // Z6 *_{Z3} Z6 with the involutions and a core generator as generating set
  return make_amalgam(cyclic_table(6), cyclic_table(6), 3, {0, 2, 4}, {0, 2, 4},
                      {{0, 3}, {1, 3}, {2, 1}});
}

}  // namespace

TEST_CASE("groups: dihedral examples") {
  GroupHandle D = make_dinf({DihElt{1, 0}, DihElt{0, 1}});
  // (a^2 b)(a^3 b) = a^-1
  Element x = D.mul(DihElt{2, 1}, DihElt{3, 1});
  CHECK(x == Element{DihElt{-1, 0}});
  CHECK(D.inv(Element{DihElt{3, 1}}) == Element{DihElt{3, 1}});
  // evaluate [b, a, b] = a^-1
  int b = D.find_gen(dih_refl(0));
  int a = D.find_gen(dih_a(1));
  REQUIRE(a >= 0);
  REQUIRE(b >= 0);
  CHECK(D.evaluate({b, a, b}) == Element{DihElt{-1, 0}});
}

TEST_CASE("groups: integer evaluate") {
  GroupHandle Z = make_integers({2, 3});
  int g2 = Z.find_gen(IntElt{2});
  int g3 = Z.find_gen(IntElt{3});
  int g2i = Z.inverse_gen(g2);
  CHECK(Z.evaluate({g2, g3, g2i}) == Element{IntElt{3}});
}

TEST_CASE("groups: free group inversion") {
  GroupHandle F = make_free_standard(2);
  Element ab = F.mul(FreeElt{{1}}, FreeElt{{-2}});
  CHECK(F.inv(ab) == Element{FreeElt{{2, -1}}});
  CHECK(F.mul(ab, F.inv(ab)) == F.identity());
}

TEST_CASE("groups: HNN twisted product") {
  GroupHandle G = make_hnn(5, 2, {HnnElt{1, 0}, HnnElt{0, 1}});
  // (k^1 t^1)(k^1 t^0) = k^3 t^1  since t k t^-1 = k^2
  CHECK(G.mul(HnnElt{1, 1}, HnnElt{1, 0}) == Element{HnnElt{3, 1}});
  Element g{HnnElt{2, 3}};
  CHECK(G.mul(g, G.inv(g)) == G.identity());
}

TEST_CASE("groups: HNN arithmetic agrees with the relator rewriting oracle") {
  GroupHandle G = make_hnn(5, 2, {HnnElt{1, 0}, HnnElt{0, 1}});
  // presentation <k, t | k^5, t k t' k^-2>
  Presentation p = parse_presentation("gen: k t ; rel: k^5, t k t' k^-2");
  RewriteSystem rs = complete(p);
  REQUIRE(rs.complete());
  // map alphabet symbols to HNN elements
  std::vector<Element> sym_elt = {Element{HnnElt{1, 0}}, Element{HnnElt{4, 0}},
                                  Element{HnnElt{0, 1}}, Element{HnnElt{0, -1}}};
  std::map<Word, Element> nf2elt;
  std::function<void(const Word&, const Element&, int)> walk = [&](const Word& nf,
                                                                   const Element& e, int depth) {
    auto it = nf2elt.find(nf);
    if (it != nf2elt.end()) {
      CHECK(it->second == e);
    } else {
      nf2elt[nf] = e;
    }
    if (depth == 0) return;
    for (Sym s = 0; s < 4; ++s) {
      Word next = nf;
      next.push_back(s);
      walk(normalize(rs, next), G.mul(e, sym_elt[s]), depth - 1);
    }
  };
  walk(Word{}, G.identity(), 6);
}

TEST_CASE("groups: amalgam normal form arithmetic") {
  GroupHandle G = z4_amalgam_z2_z4();
  int g1 = 0, g2 = 1;  // generator slots: left 1, right 1
  // (g1)^4 = identity
  Element e = G.identity();
  for (int i = 0; i < 4; ++i) e = G.mul(e, G.gen(g1).elt);
  CHECK(e == G.identity());
  // g1^2 = core generator = g2^2
  Element c1 = G.mul(G.gen(g1).elt, G.gen(g1).elt);
  Element c2 = G.mul(G.gen(g2).elt, G.gen(g2).elt);
  CHECK(c1 == c2);
  CHECK(c1 == Element{amalgam_core(G, 1)});
  // g1 g2 has infinite order at desk scale
  CHECK(infinite_order(G, G.mul(G.gen(g1).elt, G.gen(g2).elt)));
}

TEST_CASE("groups: group laws on sampled words across families") {
  std::vector<GroupHandle> handles;
  handles.push_back(make_integers({2, 3}));
  handles.push_back(make_dinf({DihElt{1, 0}, DihElt{0, 1}, DihElt{2, 1}}));
  handles.push_back(make_free_standard(2));
  handles.push_back(make_hnn(3, 2, {HnnElt{1, 0}, HnnElt{0, 1}}));
  handles.push_back(z4_amalgam_z2_z4());
  handles.push_back(make_finite(named_table("S3"), {1, 3}));
  uint64_t state = 99;
  auto rnd = [&state](int n) {
    state = state * 6364136223846793005ull + 1442695040888963407ull;
    return static_cast<int>((state >> 33) % n);
  };
  for (const GroupHandle& G : handles) {
    int ng = static_cast<int>(G.gens().size());
    auto random_elt = [&] {
      GenWord w;
      int len = rnd(7);
      for (int i = 0; i < len; ++i) w.push_back(rnd(ng));
      return G.evaluate(w);
    };
    for (int trial = 0; trial < 60; ++trial) {
      Element a = random_elt(), b = random_elt(), c = random_elt();
      CHECK(G.mul(G.mul(a, b), c) == G.mul(a, G.mul(b, c)));
      CHECK(G.mul(a, G.identity()) == a);
      CHECK(G.mul(a, G.inv(a)) == G.identity());
      CHECK(G.inv(G.inv(a)) == a);
    }
  }
}

TEST_CASE("groups: subgroup membership closed forms") {
  GroupHandle Z = make_integers({1});
  CHECK(subgroup_membership(Z, SubgroupSpec::generated_by({IntElt{3}}), IntElt{9}) == Tri::Yes);
  CHECK(subgroup_membership(Z, SubgroupSpec::generated_by({IntElt{3}}), IntElt{8}) == Tri::No);

  GroupHandle D = make_dinf({DihElt{1, 0}, DihElt{0, 1}});
  SubgroupSpec rot = SubgroupSpec::generated_by({dih_a(1)});
  CHECK(subgroup_membership(D, rot, DihElt{2, 1}) == Tri::No);
  CHECK(subgroup_membership(D, rot, DihElt{5, 0}) == Tri::Yes);
  SubgroupSpec refl = SubgroupSpec::generated_by({dih_a(2), dih_refl(1)});
  CHECK(subgroup_membership(D, refl, DihElt{3, 1}) == Tri::Yes);
  CHECK(subgroup_membership(D, refl, DihElt{2, 1}) == Tri::No);

  GroupHandle H = make_hnn(3, 1, {HnnElt{1, 0}, HnnElt{0, 1}});
  CHECK(subgroup_membership(H, SubgroupSpec::core(), HnnElt{2, 0}) == Tri::Yes);
  CHECK(subgroup_membership(H, SubgroupSpec::core(), HnnElt{0, 1}) == Tri::No);
  SubgroupSpec tline = SubgroupSpec::generated_by({HnnElt{0, 1}});
  CHECK(subgroup_membership(H, tline, HnnElt{0, -4}) == Tri::Yes);
  CHECK(subgroup_membership(H, tline, HnnElt{1, 2}) == Tri::No);
}

TEST_CASE("groups: free and presented membership") {
  GroupHandle F = make_free_standard(3);
  SubgroupSpec sub = SubgroupSpec::generated_by({FreeElt{{1}}, FreeElt{{2}}});
  CHECK(subgroup_membership(F, sub, FreeElt{{1, 2, -1}}) == Tri::Yes);
  CHECK(subgroup_membership(F, sub, FreeElt{{3}}) == Tri::No);
  SubgroupSpec cyc = SubgroupSpec::generated_by({FreeElt{{1, 2}}});
  CHECK(subgroup_membership(F, cyc, FreeElt{{1, 2, 1, 2}}) == Tri::Yes);
  CHECK(subgroup_membership(F, cyc, FreeElt{{2, 1}}) == Tri::No);

  // F2 x Z2 presented; membership in <x, y> decided by letter closure
  Presentation p = parse_presentation("gen: x y z ; rel: z^2, z x z' x^-1, z y z' y^-1");
  RewriteSystem rs = complete(p);
  REQUIRE(rs.complete());
  GroupHandle P = make_presented(rs);
  SubgroupSpec f2 = SubgroupSpec::generated_by({P.gen(0).elt, P.gen(1).elt});
  CHECK(subgroup_membership(P, f2, P.evaluate({0, 1, 0})) == Tri::Yes);
  CHECK(subgroup_membership(P, f2, P.evaluate({0, 2})) == Tri::No);
}

TEST_CASE("groups: coset transversals") {
  GroupHandle Z = make_integers({1});
  Transversal t = coset_transversal(Z, SubgroupSpec::generated_by({IntElt{3}}));
  REQUIRE(t.reps.size() == 3);
  CHECK(t.reps[0] == Z.identity());

  GroupHandle D = make_dinf({DihElt{1, 0}, DihElt{0, 1}});
  Transversal td = coset_transversal(D, SubgroupSpec::generated_by({dih_a(1)}));
  CHECK(td.reps.size() == 2);

  GroupHandle S3 = make_finite(named_table("S3"), {1, 3});
  // subgroup generated by a 3-cycle has index 2
  int three_cycle = -1;
  const auto& tab = S3.as<FiniteFam>().table;
  for (int i = 1; i < 6; ++i) {
    if (tab.mul[i][i] != 0 && tab.mul[tab.mul[i][i]][i] == 0) three_cycle = i;
  }
  REQUIRE(three_cycle > 0);
  Transversal ts = coset_transversal(S3, SubgroupSpec::generated_by({TableElt{three_cycle}}));
  CHECK(ts.reps.size() == 2);

  // transversal factorization property on a ball: g = h * t uniquely
  SubgroupSpec H3 = SubgroupSpec::generated_by({IntElt{3}});
  Transversal tz = coset_transversal(Z, H3, Side::Right);
  std::set<int64_t> seen;
  for (int64_t g = -6; g <= 6; ++g) {
    int idx = coset_index(Z, H3, tz, IntElt{g});
    CHECK(idx >= 0);
    seen.insert(idx);
  }
  CHECK(seen.size() == 3);
}

TEST_CASE("groups: quotients") {
  GroupHandle Z = make_integers({1});
  QuotientResult q = quotient(Z, SubgroupSpec::generated_by({IntElt{4}}));
  CHECK(q.quotient.as<FiniteFam>().table.order() == 4);
  // projection is a homomorphism on sampled pairs
  for (int64_t a = -5; a <= 5; ++a)
    for (int64_t b = -5; b <= 5; ++b)
      CHECK(q.project(IntElt{a + b}) ==
            q.quotient.mul(q.project(IntElt{a}), q.project(IntElt{b})));

  GroupHandle A = z4_amalgam_z2_z4();
  QuotientResult qa = quotient(A, SubgroupSpec::core());
  CHECK(qa.quotient.is<DihedralFam>());
  // images of the two order-4 generators are distinct reflections
  REQUIRE(qa.quotient.gens().size() == 2);
  CHECK(std::get<DihElt>(qa.quotient.gen(0).elt).eps == 1);
  CHECK(std::get<DihElt>(qa.quotient.gen(1).elt).eps == 1);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      CHECK(qa.project(A.mul(A.gen(i).elt, A.gen(j).elt)) ==
            qa.quotient.mul(qa.project(A.gen(i).elt), qa.project(A.gen(j).elt)));

  GroupHandle Hn = make_hnn(3, 2, {HnnElt{1, 0}, HnnElt{0, 1}});
  QuotientResult qh = quotient(Hn, SubgroupSpec::core());
  CHECK(qh.quotient.is<IntegersFam>());
  CHECK(qh.project(Element{HnnElt{2, 5}}) == Element{IntElt{5}});
}

TEST_CASE("groups: index-two subgroups") {
  GroupHandle D = make_dinf({DihElt{1, 0}, DihElt{0, 1}});
  SubgroupSpec hd = index_two_subgroup(D);
  CHECK(subgroup_membership(D, hd, dih_a(7)) == Tri::Yes);
  CHECK(subgroup_membership(D, hd, dih_refl(2)) == Tri::No);

  GroupHandle Z = make_integers({1});
  SubgroupSpec hz = index_two_subgroup(Z);
  CHECK(subgroup_membership(Z, hz, IntElt{2}) == Tri::Yes);
  CHECK(subgroup_membership(Z, hz, IntElt{5}) == Tri::No);

  GroupHandle A = z4_amalgam_z2_z4();
  SubgroupSpec ha = index_two_subgroup(A);
  Transversal ta = coset_transversal(A, ha);
  CHECK(ta.reps.size() == 2);
}

TEST_CASE("groups: core normality checks") {
  CHECK(check_amalgam_core_normal(z4_amalgam_z2_z4()));
  CHECK(check_amalgam_core_normal(z6_amalgam_z3_z6()));
  CHECK(check_amalgam_core_normal(make_hnn(5, 2, {HnnElt{1, 0}, HnnElt{0, 1}})));
  // Z6 *_{Z2} Z6 has factor index 3: precondition rejected
  GroupHandle bad =
      make_amalgam(cyclic_table(6), cyclic_table(6), 2, {0, 3}, {0, 3}, {{0, 1}, {1, 1}});
  CHECK_THROWS_AS((void)check_amalgam_core_normal(bad), Error);
}

TEST_CASE("groups: virtually free parameters") {
  // Z x Z2 as an HNN family over Z2 with trivial twist; F = <t>
  GroupHandle G = make_hnn(2, 1, {HnnElt{1, 0}, HnnElt{0, 1}});
  SubgroupSpec F = SubgroupSpec::generated_by({HnnElt{0, 1}});
  VirtuallyFreeParams vp = virtually_free_params(G, F);
  CHECK(vp.index == 2);
  CHECK(vp.rank == 1);

  GroupHandle D = make_dinf({DihElt{1, 0}, DihElt{0, 1}});
  VirtuallyFreeParams vd = virtually_free_params(D, SubgroupSpec::generated_by({dih_a(1)}));
  CHECK(vd.index == 2);
  CHECK(vd.rank == 1);

  // F2 x Z2 with the designated F2
  Presentation p = parse_presentation("gen: x y z ; rel: z^2, z x z' x^-1, z y z' y^-1");
  RewriteSystem rs = complete(p);
  REQUIRE(rs.complete());
  GroupHandle P = make_presented(rs);
  SubgroupSpec F2 = SubgroupSpec::generated_by({P.gen(0).elt, P.gen(1).elt});
  F2.declared_rank = 2;
  VirtuallyFreeParams vf = virtually_free_params(P, F2);
  CHECK(vf.index == 2);
  CHECK(vf.rank == 2);

  CHECK_THROWS_AS((void)virtually_free_params(G, SubgroupSpec::generated_by({HnnElt{1, 0}})),
                  Error);
}

TEST_CASE("groups: canonical uniqueness against the rewrite engine on the amalgam") {
  // the three-involution presentation (a b c)^2 is the V4 *_{Z2} V4 amalgam
  Presentation p = parse_presentation("gen: a b c ; rel: a^2, b^2, c^2, (a b)^2, (a b c)^2");
  RewriteSystem rs = complete(p);
  REQUIRE(rs.complete());
  CayleyTable v4 = named_table("Z2xZ2");
  // core = the diagonal element of each V4 copy
  GroupHandle A = make_amalgam(v4, v4, 2, {0, 3}, {0, 3}, {{0, 1}, {0, 2}, {1, 1}});
  // a -> left element 1, b -> left element 2, c -> right element 1
  std::vector<Element> sym_elt = {A.gen(0).elt, A.gen(0).elt, A.gen(1).elt,
                                  A.gen(1).elt, A.gen(2).elt, A.gen(2).elt};
  std::map<Word, Element> nf2elt;
  std::map<Element, Word> elt2nf;
  int checked = 0;
  std::function<void(const Word&, const Element&, int)> walk = [&](const Word& nf,
                                                                   const Element& e, int depth) {
    ++checked;
    auto it = nf2elt.find(nf);
    if (it != nf2elt.end()) {
      CHECK(it->second == e);
    } else {
      nf2elt[nf] = e;
      auto jt = elt2nf.find(e);
      if (jt != elt2nf.end())
        CHECK(jt->second == nf);
      else
        elt2nf[e] = nf;
    }
    if (depth == 0) return;
    for (Sym s = 0; s < 6; ++s) {
      Word next = nf;
      next.push_back(s);
      walk(normalize(rs, next), A.mul(e, sym_elt[s]), depth - 1);
    }
  };
  walk(Word{}, A.identity(), 8);
  CHECK(checked > 100000);
}
