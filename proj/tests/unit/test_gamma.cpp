#include <gtest/gtest.h>

#include <map>
#include <random>

#include "sbw/error.hpp"
#include "sbw/gamma.hpp"
#include "support/mackey_oracle.hpp"

using namespace sbw;

namespace {

using oracle::oracle_compose;

GroupPtr v4() { return direct_product(cyclic_group(2), cyclic_group(2)); }

std::vector<GroupPtr> tiny_groups() { return {cyclic_group(1), cyclic_group(2), cyclic_group(3)}; }

std::vector<SectionKey> keys(const GroupPtr& g, const GroupPtr& h) {
  std::vector<SectionKey> out;
  for (const auto& c : *enumerate_sections(direct_product(g, h))) out.push_back(key_of(c.canonical));
  return out;
}

Subgroup sub(const GroupPtr& g, std::vector<Elem> gens) { return generate(g, gens); }

}  // namespace

TEST(Gamma, BasisSizes) {
  const auto c1 = cyclic_group(1), c2 = cyclic_group(2);
  EXPECT_EQ(basis(c1, c1).size(), 1u);
  EXPECT_EQ(basis(c2, c1).size(), 3u);
  EXPECT_EQ(basis(c2, c2).size(), 12u);
}

TEST(Gamma, ComposeMatchesFibreProductOracle) {
  std::vector<GroupPtr> groups = tiny_groups();
  groups.push_back(cyclic_group(4));
  groups.push_back(v4());
  groups.push_back(symmetric_group(3));
  std::mt19937 rng(7);
  std::size_t checked = 0;
  for (const auto& g : groups)
    for (const auto& h : groups)
      for (const auto& k : groups) {
        if (g->order() * h->order() > 24 || h->order() * k->order() > 24) continue;
        const auto ka = keys(g, h), kb = keys(h, k);
        for (int trial = 0; trial < 20; ++trial) {
          const auto& a = ka[rng() % ka.size()];
          const auto& b = kb[rng() % kb.size()];
          const auto r = compose_classes(g, h, k, a, b);
          const auto o = oracle_compose(g, h, k, a, b);
          ASSERT_EQ(r.size(), o.size());
          for (const auto& [key, m] : r) EXPECT_EQ(o.at(key), m);
          ++checked;
        }
      }
  EXPECT_GT(checked, 500u);
}

TEST(Gamma, IdentityIsTwoSided) {
  for (const auto& [g, h] : std::vector<std::pair<GroupPtr, GroupPtr>>{
           {symmetric_group(3), symmetric_group(3)}, {cyclic_group(4), cyclic_group(2)}, {v4(), cyclic_group(3)}}) {
    const auto ig = identity(g), ih = identity(h);
    EXPECT_EQ(compose(ig, ig), ig);
    for (const auto& x : basis(g, h)) {
      EXPECT_EQ(compose(ig, x), x);
      EXPECT_EQ(compose(x, ih), x);
    }
  }
  EXPECT_EQ(identity(cyclic_group(1)).coeffs.size(), 1u);
}

TEST(Gamma, AssociativityOnTinyGroups) {
  const auto groups = tiny_groups();
  for (const auto& g : groups)
    for (const auto& h : groups)
      for (const auto& k : groups)
        for (const auto& l : groups) {
          const auto ba = basis(g, h), bb = basis(h, k), bc = basis(k, l);
          for (const auto& a : ba)
            for (const auto& b : bb)
              for (const auto& c : bc) EXPECT_EQ(compose(compose(a, b), c), compose(a, compose(b, c)));
        }
}

TEST(Gamma, OppositeIsAntiMultiplicative) {
  const auto g = symmetric_group(3), h = cyclic_group(2), k = cyclic_group(3);
  for (const auto& a : basis(g, h))
    for (const auto& b : basis(h, k)) EXPECT_EQ(opposite(compose(a, b)), compose(opposite(b), opposite(a)));
}

TEST(Gamma, EIdempotents) {
  for (const auto& g : {cyclic_group(4), v4(), symmetric_group(3), quaternion_group(8)}) {
    const auto lat = subgroup_lattice(g);
    std::vector<std::pair<Subgroup, Subgroup>> pairs;
    for (auto ki : lat->normal)
      for (auto pi : lat->normal)
        if (in_pair_poset(lat->all[ki], lat->all[pi])) pairs.push_back({lat->all[ki], lat->all[pi]});
    EXPECT_EQ(e_idempotent(trivial_subgroup(g), whole_group(g)), identity(g));
    for (const auto& [k, p] : pairs) {
      const auto e = e_idempotent(k, p);
      EXPECT_EQ(compose(e, e), e);
      const auto inv = invariants(e_section_of(k, p));
      EXPECT_TRUE(inv.l.pT.is_whole());
      EXPECT_EQ(inv.l.kT, k);
      EXPECT_EQ(inv.l.pS, p);
      EXPECT_TRUE(inv.l.kS.is_trivial());
      EXPECT_EQ(inv.r.kT, k);
      EXPECT_EQ(inv.r.pS, p);
      for (const auto& [k2, p2] : pairs) {
        const auto dc = double_cosets(p, p2).size();
        EXPECT_EQ(compose(e_class(k, p), e_class(k2, p2)),
                  Rational(static_cast<long>(dc)) * e_class(join(k, k2), meet(p, p2)));
        EXPECT_EQ(compose(e, e_idempotent(k2, p2)), e_idempotent(join(k, k2), meet(p, p2)));
      }
    }
  }
  const auto c4 = cyclic_group(4);
  const auto c2 = sub(c4, {2});
  EXPECT_EQ(compose(e_class(trivial_subgroup(c4), c2), e_class(trivial_subgroup(c4), c2)),
            Rational(2) * e_class(trivial_subgroup(c4), c2));
  const auto s3 = symmetric_group(3);
  EXPECT_THROW(e_class(trivial_subgroup(s3), subgroups_of(whole_group(s3))[1]),
               Error);
}

TEST(Gamma, ElementaryBisets) {
  const auto c4 = cyclic_group(4);
  const auto n = sub(c4, {2});
  const auto q = quotient(n).group;
  EXPECT_EQ(induction(whole_group(c4)), identity(c4));
  EXPECT_EQ(compose(deflation(n), inflation(n)), identity(q));
  const auto inf = inflation(n);
  ASSERT_EQ(inf.coeffs.size(), 1u);
  const auto& key = inf.coeffs.begin()->first;
  EXPECT_EQ(key.T, key.S);
  EXPECT_EQ(key.T.count(), 4u);
  const auto s3 = symmetric_group(3);
  const auto c3 = sub(s3, {1});
  EXPECT_EQ(compose(restriction(c3), induction(c3)).coeffs.size(), 2u);
  EXPECT_THROW(isomorphism(Hom{c4, c4, {0, 0, 0, 0}}), Error);
  EXPECT_THROW(inflation(subgroups_of(whole_group(s3))[1]), Error);
}

TEST(Gamma, FactorizationRecomposes) {
  for (const auto& [g, h] : std::vector<std::pair<GroupPtr, GroupPtr>>{{symmetric_group(3), cyclic_group(2)},
                                                                       {cyclic_group(4), v4()},
                                                                       {cyclic_group(2), symmetric_group(3)},
                                                                       {cyclic_group(3), cyclic_group(3)}}) {
    const auto x = direct_product(g, h);
    for (const auto& c : *enumerate_sections(x)) {
      const auto f = factorize(c.canonical);
      const auto mid = section_from_key(f[2].ambient(), f[2].coeffs.begin()->first);
      const auto inv = invariants(mid);
      EXPECT_TRUE(inv.l.pT.is_whole());
      EXPECT_TRUE(inv.r.pT.is_whole());
      EXPECT_TRUE(inv.l.kS.is_trivial());
      EXPECT_TRUE(inv.r.kS.is_trivial());
      const auto whole = compose(compose(compose(compose(f[0], f[1]), f[2]), f[3]), f[4]);
      EXPECT_EQ(whole, class_element(c.canonical));
    }
  }
}

TEST(Gamma, SpaceErrors) {
  const auto c2 = cyclic_group(2), c3 = cyclic_group(3);
  EXPECT_THROW(identity(c2) + identity(c3), Error);
  EXPECT_THROW(compose(identity(c2), identity(c3)), Error);
}
