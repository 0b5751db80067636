#include <gtest/gtest.h>

#include "sbw/error.hpp"
#include "sbw_tools/json_io.hpp"

using namespace sbw;
using io::json;

TEST(JsonIo, GroupForms) {
  for (const char* name : {"C1", "C6", "S3", "D8", "Q8", "C2xC2", "C4xC2"}) {
    const auto g = named_group(name);
    const auto back = io::group_from_json(io::group_to_json(*g));
    ASSERT_EQ(back->order(), g->order());
    for (Elem a = 0; a < g->order(); ++a)
      for (Elem b = 0; b < g->order(); ++b) EXPECT_EQ(back->mul(a, b), g->mul(a, b));
    EXPECT_EQ(io::group_from_json(io::group_ref(g)).get(), g.get());
    EXPECT_EQ(io::group_from_json(json(name)).get(), g.get());
  }
  EXPECT_EQ(io::group_from_json(json::parse(R"({"perm_gens": [[1, 2, 3, 0], [3, 2, 1, 0]]})"))->order(), 8u);
  EXPECT_THROW(io::group_from_json(json::parse(R"({"table": [[0, 1], [0, 1]]})")), Error);
  EXPECT_THROW(io::group_from_json(json::parse(R"({"nothing": 1})")), Error);
}

TEST(JsonIo, SectionsAndElements) {
  const auto g = named_group("S3"), h = named_group("C2");
  for (const auto& c : *enumerate_sections(direct_product(g, h))) {
    const auto back = io::section_from_json(io::section_to_json(c.canonical));
    EXPECT_EQ(back.T, c.canonical.T);
    EXPECT_EQ(back.S, c.canonical.S);
  }
  const auto q8 = named_group("Q8");
  for (const auto& e : *f_family_of(q8)) {
    const auto back = io::element_from_json(io::element_to_json(e));
    EXPECT_EQ(back, e);
  }
  const auto id = identity(h);
  EXPECT_EQ(io::element_from_json(io::element_to_json(id)), id);
}

TEST(JsonIo, CatalogRoundTrip) {
  const auto cat = builtin_catalog(8);
  const auto j = io::catalog_to_json(cat);
  const auto back = io::catalog_from_json(j);
  ASSERT_EQ(back.groups.size(), 14u);
  EXPECT_EQ(back.complete_through, 8u);
  for (std::size_t i = 0; i < cat.groups.size(); ++i) {
    EXPECT_EQ(back.groups[i].id, cat.groups[i].id);
    EXPECT_EQ(back.groups[i].group.get(), cat.groups[i].group.get());
  }
  EXPECT_EQ(io::dump(io::catalog_to_json(back)), io::dump(j));
}

TEST(JsonIo, ReportShape) {
  const auto cat = builtin_catalog(8);
  const auto r = io::group_report(named_group("C2"), cat);
  EXPECT_EQ(r["covering_dim"], 4);
  EXPECT_EQ(r["essential_dim"], 3);
  EXPECT_EQ(r["blocks"].size(), 4u);
  const auto s = io::suite_to_json(run_suite("groups", VerifyOptions{.max_order = 4}));
  EXPECT_TRUE(s["pass"].get<bool>());
  EXPECT_FALSE(s.contains("seconds"));
}
