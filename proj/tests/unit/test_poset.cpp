#include <gtest/gtest.h>

#include "sbw/error.hpp"
#include "sbw/poset.hpp"

using namespace sbw;

namespace {

GroupPtr v4() { return direct_product(cyclic_group(2), cyclic_group(2)); }

std::size_t normal_count(const GroupPtr& g) { return subgroup_lattice(g)->normal.size(); }

GammaElement sum_f(const GroupPtr& g) {
  GammaElement s = zero_element(g, g);
  for (const auto& f : *f_family_of(g)) s += f;
  return s;
}

// Brute-force commuting check for the pairs of normal subgroups.
std::size_t brute_pair_count(const GroupPtr& g) {
  std::size_t n = 0;
  for (const auto& k : normal_subgroups(g))
    for (const auto& p : normal_subgroups(g)) {
      bool ok = true;
      for (Elem a : k.elements())
        for (Elem b : p.elements())
          if (g->mul(a, b) != g->mul(b, a)) ok = false;
      n += ok;
    }
  return n;
}

}  // namespace

TEST(Poset, GenericMobius) {
  FinitePoset chain(2, [](std::size_t x, std::size_t y) { return x <= y; });
  MobiusTable mu(chain);
  EXPECT_EQ(mu(0, 1), -1);
  EXPECT_EQ(mu(1, 0), 0);
  EXPECT_TRUE(mu.satisfies_recursion(chain));
  // Boolean lattice on three atoms: mu(x, y) = (-1)^{|y \ x|}.
  FinitePoset cube(8, [](std::size_t x, std::size_t y) { return (x & y) == x; });
  MobiusTable mc(cube);
  for (std::size_t x = 0; x < 8; ++x)
    for (std::size_t y = 0; y < 8; ++y)
      if ((x & y) == x) EXPECT_EQ(mc(x, y), (std::popcount(y & ~x) % 2) ? -1 : 1);
  EXPECT_THROW(FinitePoset(2, [](std::size_t, std::size_t) { return true; }), Error);
}

TEST(Poset, FormalIdempotentsWithMissingJoins) {
  // b < a1, b < a2 with no common upper bound; and a disjoint union of a
  // chain and a diamond.
  std::vector<FinitePoset> posets;
  posets.emplace_back(3, [](std::size_t x, std::size_t y) { return x == y || x == 0; });
  posets.emplace_back(6, [](std::size_t x, std::size_t y) {
    if (x == y) return true;
    if (x < 2 && y < 2) return x < y;
    if (x < 2 || y < 2) return false;
    return x == 2 || y == 5;
  });
  bool missing = false;
  for (const auto& p : posets) {
    for (std::size_t x = 0; x < p.size(); ++x)
      for (std::size_t y = 0; y < p.size(); ++y) missing |= !p.join(x, y).has_value();
    std::vector<FormalElement> e;
    for (std::size_t x = 0; x < p.size(); ++x) e.push_back(formal_e(p, x));
    for (std::size_t x = 0; x < p.size(); ++x)
      for (std::size_t y = 0; y < p.size(); ++y)
        for (std::size_t z = 0; z < p.size(); ++z)
          ASSERT_EQ(formal_mul(p, formal_mul(p, e[x], e[y]), e[z]), formal_mul(p, e[x], formal_mul(p, e[y], e[z])));
    MobiusTable mu(p);
    const auto f = f_family(p, mu, e, formal_zero(p));
    auto mul = [&](const FormalElement& a, const FormalElement& b) { return formal_mul(p, a, b); };
    EXPECT_EQ(count_ortho_failures(p, e, f, formal_zero(p), mul), 0u);
  }
  EXPECT_TRUE(missing);
}

TEST(Poset, BuildPosetG) {
  EXPECT_EQ(build_poset(cyclic_group(1))->size(), 1u);
  const auto s3 = build_poset(symmetric_group(3));
  EXPECT_EQ(s3->size(), 6u);
  for (const auto& g : {cyclic_group(4), v4(), cyclic_group(6), direct_product(cyclic_group(4), cyclic_group(2))})
    EXPECT_EQ(build_poset(g)->size(), normal_count(g) * normal_count(g));
  for (const auto& g : {symmetric_group(3), dihedral_group(8), quaternion_group(8)}) {
    const auto p = build_poset(g);
    EXPECT_EQ(p->size(), brute_pair_count(g));
    EXPECT_TRUE(p->pairs[p->minimum].K.is_trivial());
    EXPECT_TRUE(p->pairs[p->minimum].P.is_whole());
    for (std::size_t x = 0; x < p->size(); ++x) {
      EXPECT_TRUE(p->order.le(p->minimum, x));
      EXPECT_TRUE(p->order.le(x, p->maximum));
      for (std::size_t y = 0; y < p->size(); ++y) EXPECT_EQ(p->order.join(x, y), p->join(x, y));
    }
  }
}

TEST(Poset, MobiusOnPosetG) {
  const auto c2 = cyclic_group(2);
  const auto p = build_poset(c2);
  const auto& mu = *poset_mobius(c2);
  EXPECT_EQ(mu(p->minimum, p->maximum), 1);
  EXPECT_TRUE(poset_mobius(quaternion_group(8))->satisfies_recursion(build_poset(quaternion_group(8))->order));
}

TEST(Poset, FIdempotents) {
  const auto c2 = cyclic_group(2);
  const auto one = trivial_subgroup(c2), all = whole_group(c2);
  EXPECT_EQ(f_idempotent(all, one), e_idempotent(all, one));
  const GammaElement expected =
      e_idempotent(one, all) - e_idempotent(all, all) - e_idempotent(one, one) + e_idempotent(all, one);
  EXPECT_EQ(f_idempotent(one, all), expected);
  for (const auto& g : {cyclic_group(1), c2, cyclic_group(4), v4(), symmetric_group(3)}) {
    EXPECT_EQ(sum_f(g), identity(g));
    const auto poset = build_poset(g);
    const auto& e = *e_family(g);
    const auto& f = *f_family_of(g);
    // e_x is the sum of f_y over y >= x.
    for (std::size_t x = 0; x < poset->size(); ++x) {
      GammaElement s = zero_element(g, g);
      for (std::size_t y = 0; y < poset->size(); ++y)
        if (poset->order.le(x, y)) s += f[y];
      EXPECT_EQ(s, e[x]);
    }
    EXPECT_EQ(count_ortho_failures(poset->order, e, f, zero_element(g, g),
                                   [](const GammaElement& a, const GammaElement& b) { return compose(a, b); }),
              0u);
  }
}

TEST(Poset, ClassIdempotents) {
  const auto c4 = cyclic_group(4);
  const auto n = build_poset(c4)->size();
  std::vector<std::vector<std::size_t>> singletons;
  for (std::size_t i = 0; i < n; ++i) singletons.push_back({i});
  const auto cls = class_idempotents(c4, singletons);
  for (std::size_t i = 0; i < n; ++i) EXPECT_EQ(cls[i].e, (*e_family(c4))[i]);
  std::vector<std::vector<std::size_t>> halves(2);
  for (std::size_t i = 0; i < n; ++i) halves[i % 2].push_back(i);
  const auto h = class_idempotents(c4, halves);
  EXPECT_EQ(h[0].f + h[1].f, identity(c4));
  EXPECT_TRUE(compose(h[0].f, h[1].f).is_zero());
  EXPECT_THROW(class_idempotents(c4, {{0}}), Error);
  EXPECT_THROW(class_idempotents(c4, {singletons[0], singletons[0]}), Error);
}
