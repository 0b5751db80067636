#include <gtest/gtest.h>

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <set>

#include "sbw/error.hpp"
#include "sbw/group.hpp"
#include "sbw/morphisms.hpp"
#include "sbw/subgroup.hpp"

using namespace sbw;

namespace {

std::map<std::size_t, std::size_t> census(const Group& g) {
  std::map<std::size_t, std::size_t> c;
  for (Elem a = 0; a < g.order(); ++a) ++c[g.element_order(a)];
  return c;
}

// Unit quaternions as (sign, unit) with unit in {1, i, j, k}.
struct Quat {
  int sign;
  int unit;
};
Quat qmul(Quat a, Quat b) {
  static const int unit[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static const int sign[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
  return {a.sign * b.sign * sign[a.unit][b.unit], unit[a.unit][b.unit]};
}

std::map<std::size_t, std::size_t> quaternion_census_oracle() {
  std::map<std::size_t, std::size_t> c;
  for (int s : {1, -1})
    for (int u = 0; u < 4; ++u) {
      Quat q{s, u}, x = q;
      std::size_t k = 1;
      while (!(x.sign == 1 && x.unit == 0)) {
        x = qmul(x, q);
        ++k;
      }
      ++c[k];
    }
  return c;
}

// Symmetries of a square acting on its vertices.
std::map<std::size_t, std::size_t> square_census_oracle() {
  std::map<std::size_t, std::size_t> c;
  std::array<int, 4> p{0, 1, 2, 3};
  do {
    bool ok = true;
    for (int v = 0; v < 4; ++v) {
      const int d = (p[(v + 1) % 4] - p[v] + 4) % 4;
      if (d != 1 && d != 3) ok = false;
    }
    if (!ok) continue;
    std::array<int, 4> x = p;
    std::size_t k = 1;
    while (x != std::array<int, 4>{0, 1, 2, 3}) {
      std::array<int, 4> y;
      for (int i = 0; i < 4; ++i) y[i] = p[x[i]];
      x = y;
      ++k;
    }
    ++c[k];
  } while (std::next_permutation(p.begin(), p.end()));
  return c;
}

bool brute_is_subgroup(const Group& g, unsigned mask) {
  if (!(mask & 1u)) return false;
  for (Elem a = 0; a < g.order(); ++a)
    for (Elem b = 0; b < g.order(); ++b)
      if ((mask >> a & 1u) && (mask >> b & 1u) && !(mask >> g.mul(a, b) & 1u)) return false;
  return true;
}

std::vector<unsigned> brute_subgroups(const Group& g) {
  std::vector<unsigned> out;
  for (unsigned m = 0; m < (1u << g.order()); ++m)
    if (brute_is_subgroup(g, m)) out.push_back(m);
  return out;
}

std::size_t brute_class_count(const Group& g) {
  auto subs = brute_subgroups(g);
  std::set<unsigned> seen;
  std::size_t classes = 0;
  for (unsigned m : subs) {
    if (seen.count(m)) continue;
    ++classes;
    for (Elem x = 0; x < g.order(); ++x) {
      unsigned c = 0;
      for (Elem a = 0; a < g.order(); ++a)
        if (m >> a & 1u) c |= 1u << g.conj(x, a);
      seen.insert(c);
    }
  }
  return classes;
}

std::size_t brute_automorphism_count(const Group& g) {
  std::vector<Elem> p(g.order());
  std::iota(p.begin(), p.end(), Elem{0});
  std::size_t count = 0;
  do {
    bool ok = true;
    for (Elem a = 0; a < g.order() && ok; ++a)
      for (Elem b = 0; b < g.order() && ok; ++b)
        if (p[g.mul(a, b)] != g.mul(p[a], p[b])) ok = false;
    count += ok;
  } while (std::next_permutation(p.begin() + 1, p.end()));
  return count;
}

}  // namespace

TEST(Group, TrivialGroup) {
  auto g = cyclic_group(1);
  EXPECT_EQ(g->order(), 1u);
  EXPECT_EQ(g->table_rows(), (std::vector<std::vector<Elem>>{{0}}));
}

TEST(Group, QuaternionCensusMatchesQuaternionArithmetic) {
  auto q8 = quaternion_group(8);
  EXPECT_EQ(census(*q8), quaternion_census_oracle());
  EXPECT_EQ(census(*q8)[2], 1u);
  EXPECT_EQ(census(*q8)[4], 6u);
}

TEST(Group, DihedralCensusMatchesSquareSymmetries) {
  auto d8 = dihedral_group(8);
  EXPECT_EQ(census(*d8), square_census_oracle());
  EXPECT_EQ(census(*d8)[2], 5u);
}

TEST(Group, PresentationRelations) {
  auto q8 = quaternion_group(8);
  const Elem x = 1, y = 4;
  EXPECT_EQ(q8->element_order(x), 4u);
  EXPECT_EQ(q8->mul(x, x), q8->mul(y, y));
  EXPECT_EQ(q8->conj(y, x), q8->inv(x));
  auto d8 = dihedral_group(8);
  const Elem a = 1, b = 4;
  EXPECT_EQ(d8->element_order(a), 4u);
  EXPECT_EQ(d8->element_order(b), 2u);
  EXPECT_EQ(d8->conj(b, a), d8->inv(a));
}

TEST(Group, TableValidationErrors) {
  auto code = [](const std::vector<std::vector<Elem>>& t) {
    try {
      group_from_table("t", t);
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::InvalidArgument;
  };
  EXPECT_EQ(code({{1, 0}, {0, 1}}), ErrorCode::NoIdentity);
  EXPECT_EQ(code({{0, 1}, {1, 1}}), ErrorCode::NotClosed);
  EXPECT_EQ(code({{0, 1, 2}, {1, 5, 0}, {2, 0, 1}}), ErrorCode::NotClosed);
  // A Latin square with identity that is not associative.
  EXPECT_EQ(code({{0, 1, 2, 3, 4},
                  {1, 0, 3, 4, 2},
                  {2, 4, 0, 1, 3},
                  {3, 2, 4, 0, 1},
                  {4, 3, 1, 2, 0}}),
            ErrorCode::NonAssociative);
  EXPECT_NO_THROW(group_from_table("c3", {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}}));
}

TEST(Group, OrderCap) {
  const auto old = order_cap();
  set_order_cap(16);
  EXPECT_THROW(cyclic_group(17), Error);
  try {
    direct_product(cyclic_group(5), cyclic_group(4));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::OrderLimitExceeded);
  }
  set_order_cap(old);
}

TEST(Group, PermutationGenerators) {
  auto s3 = group_from_permutations("S3", {{1, 0, 2}, {1, 2, 0}});
  EXPECT_EQ(s3->order(), 6u);
  EXPECT_FALSE(s3->is_abelian());
  EXPECT_EQ(s3->perm_gens().size(), 2u);
  auto s4 = symmetric_group(4);
  EXPECT_EQ(s4->order(), 24u);
  EXPECT_EQ(census(*s4)[2], 9u);
  EXPECT_TRUE(are_isomorphic(s3, dihedral_group(6)));
}

TEST(Group, DirectProducts) {
  auto c2 = cyclic_group(2);
  auto v4 = direct_product(c2, c2);
  EXPECT_EQ(v4->order(), 4u);
  EXPECT_EQ(v4->exponent(), 2u);
  EXPECT_EQ(direct_product(c2, c2).get(), v4.get());

  auto big = direct_product(quaternion_group(8), dihedral_group(8));
  EXPECT_EQ(big->order(), 64u);

  auto g = symmetric_group(3);
  auto p = direct_product(cyclic_group(1), g);
  for (Elem h = 0; h < g->order(); ++h)
    for (Elem k = 0; k < g->order(); ++k) EXPECT_EQ(p->mul(h, k), g->mul(h, k));

  auto maps = product_maps(big);
  EXPECT_TRUE(maps.proj_left.is_homomorphism());
  EXPECT_TRUE(maps.proj_right.is_homomorphism());
  EXPECT_TRUE(maps.inj_left.is_homomorphism());
  EXPECT_TRUE(maps.inj_right.is_homomorphism());
  EXPECT_THROW(product_maps(g), Error);
}

TEST(Group, Quotients) {
  auto q8 = quaternion_group(8);
  auto triv = quotient(trivial_subgroup(q8));
  EXPECT_TRUE(triv.proj.is_bijective());
  EXPECT_TRUE(are_isomorphic(triv.group, q8));

  const Elem x2[] = {2};
  auto z = generate(q8, x2);
  auto qz = quotient(z);
  EXPECT_EQ(qz.group->order(), 4u);
  EXPECT_EQ(qz.group->exponent(), 2u);
  EXPECT_TRUE(qz.proj.is_homomorphism());

  EXPECT_EQ(quotient(whole_group(q8)).group->order(), 1u);

  auto s3 = symmetric_group(3);
  const Elem t[] = {1};
  try {
    quotient(generate(s3, t));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotNormal);
  }

  for (const auto& g : {q8, dihedral_group(8), s3, direct_product(cyclic_group(4), cyclic_group(2))})
    for (const auto& n : normal_subgroups(g)) {
      auto q = quotient(n);
      EXPECT_EQ(q.group->order() * n.order(), g->order());
      EXPECT_TRUE(q.proj.is_homomorphism());
      EXPECT_EQ(kernel(q.proj), n);
      EXPECT_NO_THROW(validate_table(q.group->table_rows()));
    }
}

TEST(Group, SubgroupEnumerationMatchesBruteForce) {
  auto c2 = cyclic_group(2);
  const std::vector<GroupPtr> groups{cyclic_group(1), direct_product(c2, c2), symmetric_group(3),
                                     dihedral_group(8), quaternion_group(8), cyclic_group(6),
                                     direct_product(direct_product(c2, c2), c2)};
  for (const auto& g : groups) {
    auto lat = subgroup_lattice(g);
    EXPECT_EQ(lat->all.size(), brute_subgroups(*g).size()) << g->name();
    EXPECT_EQ(lat->classes.size(), brute_class_count(*g)) << g->name();
    for (std::size_t i = 1; i < lat->all.size(); ++i)
      EXPECT_TRUE(subgroup_less(lat->all[i - 1], lat->all[i]));
  }
  auto v4 = subgroup_lattice(direct_product(c2, c2));
  EXPECT_EQ(v4->all.size(), 5u);
  EXPECT_EQ(v4->classes.size(), 5u);
  auto s3 = subgroup_lattice(symmetric_group(3));
  EXPECT_EQ(s3->all.size(), 6u);
  ASSERT_EQ(s3->classes.size(), 4u);
  EXPECT_EQ(s3->classes[1].members.size(), 3u);
  EXPECT_EQ(subgroup_lattice(cyclic_group(1))->all.size(), 1u);
}

TEST(Group, StructureOperations) {
  auto c4 = cyclic_group(4);
  auto all = whole_group(c4);
  EXPECT_TRUE(commutator(all, all).is_trivial());

  auto q8 = quaternion_group(8);
  auto z = center(q8);
  ElementSet brute(8);
  for (Elem a = 0; a < 8; ++a) {
    bool central = true;
    for (Elem b = 0; b < 8; ++b) central = central && q8->mul(a, b) == q8->mul(b, a);
    if (central) brute.insert(a);
  }
  EXPECT_EQ(z.elems(), brute);
  EXPECT_EQ(z.order(), 2u);
  EXPECT_TRUE(z.contains(2));

  auto s3 = symmetric_group(3);
  Subgroup c3;
  for (const auto& s : enumerate_subgroups(s3))
    if (s.order() == 3) c3 = s;
  EXPECT_EQ(centralizer(c3), c3);
  EXPECT_TRUE(is_normal_in_parent(c3));
  EXPECT_EQ(commutator(whole_group(s3), whole_group(s3)), c3);
  EXPECT_EQ(normal_subgroups(s3).size(), 3u);

  EXPECT_THROW(commutator(c3, whole_group(q8)), Error);
}

TEST(Group, DoubleCosets) {
  auto c4 = cyclic_group(4);
  EXPECT_EQ(double_cosets(whole_group(c4), whole_group(c4)), std::vector<Elem>{0});
  EXPECT_EQ(double_cosets(trivial_subgroup(c4), trivial_subgroup(c4)), (std::vector<Elem>{0, 1, 2, 3}));
  const Elem two[] = {2};
  auto p = generate(c4, two);
  EXPECT_EQ(double_cosets(p, p).size(), 2u);

  auto s4 = symmetric_group(4);
  auto subs = enumerate_subgroups(s4);
  for (std::size_t i = 0; i < subs.size(); i += 3)
    for (std::size_t j = 0; j < subs.size(); j += 5) {
      const auto reps = double_cosets(subs[i], subs[j]);
      std::vector<int> hits(s4->order());
      for (Elem t : reps) {
        std::set<Elem> coset;
        for (Elem a : subs[i].elements())
          for (Elem b : subs[j].elements()) coset.insert(s4->mul(s4->mul(a, t), b));
        EXPECT_EQ(*coset.begin(), t);
        for (Elem e : coset) ++hits[e];
      }
      EXPECT_TRUE(std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; }));
    }
}

TEST(Group, Isomorphisms) {
  EXPECT_TRUE(isomorphisms(quaternion_group(8), dihedral_group(8)).empty());
  EXPECT_EQ(automorphisms(cyclic_group(3))->homs.size(), 2u);
  for (const auto& g : {symmetric_group(3), dihedral_group(8), quaternion_group(8), cyclic_group(6)}) {
    const auto isos = isomorphisms(g, g);
    EXPECT_TRUE(std::any_of(isos.begin(), isos.end(),
                            [&](const Hom& h) { return h.images == Hom::identity(g).images; }));
    const auto aut = automorphisms(g);
    EXPECT_EQ(aut->homs.size(), brute_automorphism_count(*g)) << g->name();
    EXPECT_NO_THROW(validate_table(aut->group->table_rows()));
    EXPECT_EQ(aut->homs.front().images, Hom::identity(g).images);
    for (const auto& h : aut->homs) {
      EXPECT_TRUE(h.is_homomorphism());
      EXPECT_TRUE(h.is_bijective());
    }
  }
  EXPECT_EQ(automorphisms(quaternion_group(8))->homs.size(), 24u);
  auto c2 = cyclic_group(2);
  EXPECT_EQ(automorphisms(direct_product(c2, c2))->homs.size(), 6u);
  EXPECT_TRUE(are_isomorphic(direct_product(cyclic_group(2), cyclic_group(3)), cyclic_group(6)));
  EXPECT_EQ(isomorphisms(cyclic_group(5), cyclic_group(5), 2).size(), 2u);
}

TEST(Group, IsomorphismBetweenDistinctTrivialGroups) {
  const auto a = cyclic_group(1);
  const auto b = quotient(whole_group(cyclic_group(3))).group;
  ASSERT_NE(a.get(), b.get());
  const auto isos = isomorphisms(a, b);
  ASSERT_EQ(isos.size(), 1u);
  EXPECT_EQ(isos[0].source.get(), a.get());
  EXPECT_EQ(isos[0].target.get(), b.get());
}
