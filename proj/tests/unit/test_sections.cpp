#include <gtest/gtest.h>

#include <set>

#include "sbw/error.hpp"
#include "sbw/linkage.hpp"
#include "sbw/morphisms.hpp"
#include "sbw/sections.hpp"

using namespace sbw;

namespace {

Subgroup diagonal(const GroupPtr& g) {
  const auto x = direct_product(g, g);
  ElementSet s(x->order());
  for (Elem a = 0; a < g->order(); ++a) s.insert(x->pair(a, a));
  return Subgroup(x, s);
}

Subgroup gen(const GroupPtr& g, std::vector<Elem> elems) { return generate(g, elems); }

// Counts simultaneous-conjugacy orbits of sections by explicit orbit sweeps
// over every pair of subgroups.
std::pair<std::size_t, std::size_t> brute_section_counts(const GroupPtr& g) {
  const auto subs = enumerate_subgroups(g);
  std::set<std::pair<std::vector<Elem>, std::vector<Elem>>> seen;
  std::size_t orbits = 0, total = 0;
  for (const auto& t : subs)
    for (const auto& s : subs) {
      if (!s.is_subgroup_of(t)) continue;
      bool normal = true;
      for (Elem a : t.elements())
        for (Elem b : s.elements())
          if (!s.contains(g->conj(a, b))) normal = false;
      if (!normal) continue;
      ++total;
      if (seen.count({t.elements(), s.elements()})) continue;
      ++orbits;
      for (Elem x = 0; x < g->order(); ++x)
        seen.insert({conjugate(t, x).elements(), conjugate(s, x).elements()});
    }
  return {orbits, total};
}

std::vector<GroupPtr> small_groups() {
  return {cyclic_group(1), cyclic_group(2), cyclic_group(3), cyclic_group(4),
          direct_product(cyclic_group(2), cyclic_group(2)), symmetric_group(3)};
}

struct QdData {
  GroupPtr q8, d8, x;
  Section section;
};

QdData q8_d8_section() {
  QdData r{quaternion_group(8), dihedral_group(8), nullptr, {}};
  r.x = direct_product(r.q8, r.d8);
  const Elem xa = r.x->pair(1, 1), yb = r.x->pair(4, 4);
  r.section = make_section(gen(r.x, {xa, yb}), gen(r.x, {xa}));
  return r;
}

}  // namespace

TEST(Sections, EnumerationCounts) {
  EXPECT_EQ(enumerate_sections(cyclic_group(1))->size(), 1u);
  EXPECT_EQ(enumerate_sections(symmetric_group(3))->size(), 8u);
  EXPECT_EQ(enumerate_sections(direct_product(cyclic_group(2), cyclic_group(2)))->size(), 12u);
}

TEST(Sections, EnumerationMatchesOrbitSweep) {
  std::vector<GroupPtr> groups = small_groups();
  groups.push_back(dihedral_group(8));
  groups.push_back(quaternion_group(8));
  groups.push_back(direct_product(symmetric_group(3), cyclic_group(2)));
  for (const auto& g : groups) {
    const auto [orbits, total] = brute_section_counts(g);
    const auto classes = enumerate_sections(g);
    EXPECT_EQ(classes->size(), orbits) << g->name();
    std::size_t sum = 0;
    for (const auto& c : *classes) {
      sum += c.orbit_size;
      EXPECT_EQ(canonical(c.canonical), c.canonical);
    }
    EXPECT_EQ(sum, total) << g->name();
    EXPECT_EQ(all_sections(g).size(), total);
  }
}

TEST(Sections, CanonicalFormSeparatesOrbits) {
  const auto g = direct_product(symmetric_group(3), cyclic_group(2));
  for (const auto& s : all_sections(g)) {
    const auto c = canonical(s);
    for (Elem x = 0; x < g->order(); ++x)
      EXPECT_EQ(canonical(make_section(conjugate(s.T, x), conjugate(s.S, x))), c);
  }
  std::set<std::pair<std::vector<Elem>, std::vector<Elem>>> keys;
  for (const auto& c : *enumerate_sections(g))
    keys.insert({c.canonical.T.elements(), c.canonical.S.elements()});
  EXPECT_EQ(keys.size(), enumerate_sections(g)->size());
}

TEST(Sections, GoursatRoundTrip) {
  for (const auto& g : small_groups())
    for (const auto& h : small_groups()) {
      const auto x = direct_product(g, h);
      if (x->order() > 36) continue;
      for (const auto& u : enumerate_subgroups(x)) EXPECT_EQ(subgroup_from_goursat(goursat(u)), u);
    }
}

TEST(Sections, GoursatExamples) {
  const auto s3 = symmetric_group(3);
  const auto q = goursat(diagonal(s3));
  EXPECT_TRUE(q.P.is_whole());
  EXPECT_TRUE(q.K.is_trivial());
  EXPECT_TRUE(q.L.is_trivial());
  EXPECT_TRUE(q.Q.is_whole());
  for (Elem a = 0; a < s3->order(); ++a) EXPECT_EQ(q.eta(a), a);

  const auto r = q8_d8_section();
  const auto t = goursat(r.section.T);
  EXPECT_TRUE(t.P.is_whole());
  EXPECT_EQ(t.K, gen(r.q8, {2}));
  EXPECT_EQ(t.L, gen(r.d8, {2}));
  EXPECT_TRUE(t.Q.is_whole());
}

TEST(Sections, QuaternionDihedralInvariants) {
  const auto r = q8_d8_section();
  EXPECT_EQ(r.section.T.order(), 16u);
  EXPECT_EQ(r.section.S.order(), 4u);
  const auto inv = invariants(r.section);
  EXPECT_TRUE(inv.l.pT.is_whole());
  EXPECT_EQ(inv.l.kT, gen(r.q8, {2}));
  EXPECT_EQ(inv.l.pS, gen(r.q8, {1}));
  EXPECT_TRUE(inv.l.kS.is_trivial());
  EXPECT_TRUE(inv.r.pT.is_whole());
  EXPECT_EQ(inv.r.kT, gen(r.d8, {2}));
  EXPECT_EQ(inv.r.pS, gen(r.d8, {1}));
  EXPECT_TRUE(inv.r.kS.is_trivial());

  const auto op = invariants(opposite(r.section));
  EXPECT_EQ(op.l.kT, inv.r.kT);
  EXPECT_EQ(op.r.pS, inv.l.pS);
  EXPECT_EQ(opposite(opposite(r.section)), r.section);

  const auto rebuilt = section_from_goursat_pair(goursat(r.section.T), goursat(r.section.S));
  EXPECT_EQ(rebuilt, r.section);

  const auto ss = star(r.section.S, opposite(r.section.S));
  EXPECT_EQ(ss.order(), 4u);
  EXPECT_EQ(p1(ss).order(), 4u);
  EXPECT_TRUE(k1(ss).is_trivial());
}

TEST(Sections, ConditionsCharacterizeNormality) {
  bool found_s5 = false;
  for (const auto& g : small_groups())
    for (const auto& h : small_groups()) {
      const auto x = direct_product(g, h);
      if (x->order() > 24) continue;
      const auto subs = enumerate_subgroups(x);
      for (const auto& t : subs) {
        const auto q1 = goursat(t);
        for (const auto& s : subgroups_of(t)) {
          const auto q2 = goursat(s);
          const auto tag = first_failed_condition(q1, q2);
          EXPECT_EQ(!tag.has_value(), is_normal(s, t));
          if (condition_s3(q1, q2) && condition_s4(q1, q2))
            EXPECT_EQ(condition_s5(q1, q2), condition_s5_prime(q1, q2));
          if (tag == "S5") {
            found_s5 = true;
            EXPECT_TRUE(condition_s3(q1, q2));
            EXPECT_TRUE(condition_s4(q1, q2));
            try {
              section_from_goursat_pair(q1, q2);
              ADD_FAILURE() << "expected ConditionViolated";
            } catch (const Error& e) {
              EXPECT_EQ(e.code(), ErrorCode::ConditionViolated);
              EXPECT_EQ(e.tag(), "S5");
            }
          }
        }
      }
    }
  EXPECT_TRUE(found_s5);
}

TEST(Sections, OrderEqualities) {
  auto idx = [](const Subgroup& a, const Subgroup& b) { return a.order() / b.order(); };
  for (const auto& g : small_groups())
    for (const auto& h : small_groups()) {
      const auto x = direct_product(g, h);
      if (x->order() > 36) continue;
      for (const auto& c : *enumerate_sections(x)) {
        const auto v = invariants(c.canonical);
        const auto& l = v.l;
        const auto& r = v.r;
        const auto pk = meet(l.pS, l.kT), ql = meet(r.pS, r.kT);
        EXPECT_EQ(idx(l.pS, pk), idx(r.pS, ql));
        EXPECT_EQ(idx(l.pT, join(l.pS, l.kT)), idx(r.pT, join(r.pS, r.kT)));
        EXPECT_EQ(idx(pk, l.kS), idx(ql, r.kS));
        if (l.pT.is_whole() && l.kS.is_trivial() && l.kT.is_subgroup_of(l.pS))
          EXPECT_LE(g->order(), h->order());
      }
    }
}

TEST(Sections, StarProduct) {
  const auto c4 = cyclic_group(4), c2 = cyclic_group(2);
  const auto gk = direct_product(c4, c2);
  for (const auto& a : enumerate_subgroups(gk)) EXPECT_EQ(star(diagonal(c4), a), a);
  const auto g1 = direct_product(c4, c2);
  ElementSet left(g1->order()), right(direct_product(c2, c2)->order());
  for (Elem g = 0; g < 4; ++g) left.insert(g1->pair(g, 0));
  for (Elem k = 0; k < 2; ++k) right.insert(direct_product(c2, c2)->pair(0, k));
  const auto st = star(Subgroup(g1, left), Subgroup(direct_product(c2, c2), right));
  EXPECT_TRUE(st.is_whole());
  EXPECT_THROW(star(diagonal(c4), diagonal(c2)), Error);
}

TEST(Sections, Errors) {
  const auto s3 = symmetric_group(3);
  EXPECT_THROW(p1(whole_group(s3)), Error);
  const auto c2 = gen(s3, {3});
  if (!is_normal_in_parent(c2)) EXPECT_THROW(make_section(whole_group(s3), c2), Error);
}

TEST(CrossedModules, FromPair) {
  const auto s3 = symmetric_group(3);
  const auto x = from_pair(trivial_subgroup(s3), whole_group(s3));
  EXPECT_EQ(x.A->order(), 6u);
  EXPECT_EQ(x.B->order(), 6u);
  EXPECT_TRUE(check_axioms(x).empty());

  const auto q8 = quaternion_group(8);
  const auto y = from_pair(gen(q8, {2}), gen(q8, {1}));
  EXPECT_EQ(y.A->order(), 4u);
  EXPECT_EQ(y.B->order(), 4u);
  EXPECT_EQ(y.B->exponent(), 2u);
  EXPECT_EQ(fingerprint(y).image_order, 2u);

  const auto z = from_pair(whole_group(s3), trivial_subgroup(s3));
  EXPECT_EQ(z.A->order(), 1u);
  EXPECT_EQ(z.B->order(), 1u);
  EXPECT_THROW(from_pair(whole_group(s3), whole_group(s3)), Error);
}

TEST(CrossedModules, IsoSearch) {
  const auto c2 = cyclic_group(2);
  const auto x = from_pair(trivial_subgroup(c2), whole_group(c2));
  const auto id = iso_search(x, x);
  ASSERT_TRUE(id);
  EXPECT_EQ(id->alpha.images, (std::vector<Elem>{0, 1}));

  CrossedModule trivial_boundary{c2, c2, Hom{c2, c2, {0, 0}}, {{0, 1}, {0, 1}}};
  EXPECT_TRUE(check_axioms(trivial_boundary).empty());
  EXPECT_FALSE(iso_search(x, trivial_boundary));

  const auto q8 = quaternion_group(8), d8 = dihedral_group(8);
  const auto xq = from_pair(gen(q8, {2}), gen(q8, {1}));
  const auto xd = from_pair(gen(d8, {2}), gen(d8, {1}));
  const auto m = iso_search(xd, xq);
  ASSERT_TRUE(m);
  EXPECT_TRUE(is_isomorphism(xd, xq, *m));
  EXPECT_TRUE(is_isomorphism(xq, xd, inverse(*m)));
}

TEST(CrossedModules, OuterAutomorphisms) {
  const auto s3 = symmetric_group(3);
  EXPECT_EQ(aut_out(from_pair(trivial_subgroup(s3), whole_group(s3))).out_group->order(), 1u);
  const auto c3 = cyclic_group(3);
  const auto a3 = aut_out(from_pair(trivial_subgroup(c3), whole_group(c3)));
  EXPECT_EQ(a3.aut_group->order(), 2u);
  EXPECT_EQ(a3.out_group->order(), 2u);
  const auto v4 = direct_product(cyclic_group(2), cyclic_group(2));
  const auto av = aut_out(from_pair(trivial_subgroup(v4), trivial_subgroup(v4)));
  EXPECT_EQ(av.out_group->order(), 6u);
  EXPECT_EQ(av.inn.order(), 1u);
}

TEST(Linkage, ThetaIdentityIsDiagonalSection) {
  const auto q8 = quaternion_group(8);
  const auto k = gen(q8, {2}), p = gen(q8, {1});
  const auto x = from_pair(k, p);
  const auto s = theta(k, p, identity_morphism(x));
  const auto inv = invariants(s);
  EXPECT_TRUE(inv.l.pT.is_whole());
  EXPECT_EQ(inv.l.kT, k);
  EXPECT_EQ(inv.l.pS, p);
  EXPECT_TRUE(inv.l.kS.is_trivial());
  for (Elem a : s.S.elements()) EXPECT_EQ(s.ambient->left_of(a), s.ambient->right_of(a));
  std::set<std::pair<std::vector<Elem>, std::vector<Elem>>> classes;
  const auto out = aut_out(x);
  for (const auto& m : out.out_reps) {
    const auto c = canonical(theta(k, p, m));
    classes.insert({c.T.elements(), c.S.elements()});
  }
  EXPECT_EQ(classes.size(), out.out_group->order());
}

TEST(Linkage, QuaternionDihedralPairsLinked) {
  const auto q8 = quaternion_group(8), d8 = dihedral_group(8);
  const auto w = linked(gen(q8, {2}), gen(q8, {1}), gen(d8, {2}), gen(d8, {1}));
  ASSERT_TRUE(w);
  const auto inv = invariants(w->section);
  EXPECT_EQ(inv.l.kT, gen(q8, {2}));
  EXPECT_EQ(inv.l.pS, gen(q8, {1}));
  EXPECT_TRUE(inv.l.kS.is_trivial());
  EXPECT_EQ(inv.r.kT, gen(d8, {2}));
  EXPECT_EQ(inv.r.pS, gen(d8, {1}));
  EXPECT_TRUE(inv.r.pT.is_whole());
  EXPECT_FALSE(linked(trivial_subgroup(q8), whole_group(q8), trivial_subgroup(d8), whole_group(d8)));
}
