#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "sbw_tools/cli.hpp"
#include "sbw_tools/json_io.hpp"

using sbw::io::json;

namespace {

struct Run {
  int code = 0;
  std::string out, err;
  json doc() const { return json::parse(out); }
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "sbw");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  Run r;
  r.code = sbw::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("sbw_test_" + name)).string();
}

}  // namespace

TEST(Cli, SectionsOfS3) {
  const auto r = run({"sections", "list", "--group", "S3"});
  ASSERT_EQ(r.code, 0) << r.out;
  const auto d = r.doc();
  EXPECT_EQ(d["result"]["sections"].size(), 8u);
  EXPECT_EQ(d["command"], "sections list --group S3");
  EXPECT_EQ(d["inputs_digest"].get<std::string>().size(), 16u);
}

TEST(Cli, SeedsMergeQuaternionAndDihedral) {
  const auto r = run({"seeds", "--max-order", "8"});
  ASSERT_EQ(r.code, 0) << r.out;
  const auto d = r.doc();
  EXPECT_EQ(d["result"]["undetermined"], 0);
  bool found = false;
  for (const auto& row : d["result"]["rows"]) {
    std::set<std::string> groups;
    for (const auto& m : row["members"]) groups.insert(m["group"].get<std::string>());
    if (!groups.count("Q8") || !groups.count("D8")) continue;
    found = true;
    EXPECT_TRUE(row["merged"].get<bool>());
    EXPECT_EQ(row["order"], 8);
    for (const auto& m : row["members"]) {
      EXPECT_EQ(m["gamma_order"], row["members"][0]["gamma_order"]);
      EXPECT_EQ(m["irr_count"], row["members"][0]["irr_count"]);
    }
  }
  EXPECT_TRUE(found);
}

TEST(Cli, VerifyMackeyAtOrderFour) {
  const auto r = run({"verify", "--suite", "mackey", "--max-order", "4"});
  EXPECT_EQ(r.code, 0) << r.out;
  const auto d = r.doc();
  ASSERT_EQ(d["result"]["suites"].size(), 1u);
  EXPECT_TRUE(d["result"]["pass"].get<bool>());
  for (const auto& c : d["result"]["suites"][0]["checks"]) EXPECT_TRUE(c["pass"].get<bool>()) << c.dump();
}

TEST(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"bogus"}).code, 2);
  EXPECT_EQ(run({"sections", "list", "--group"}).code, 2);
  EXPECT_EQ(run({"verify", "--suite", "nope"}).code, 2);
  EXPECT_EQ(run({"--format", "xml", "group", "info", "--group", "C2"}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, ComputationErrorsExitOne) {
  for (const auto& args : std::vector<std::vector<std::string>>{{"group", "info", "--group", "Z9"},
                                                                {"group", "info"},
                                                                {"seeds", "--max-order", "4096"},
                                                                {"gamma-group", "--group", "C2", "--pair", "99"},
                                                                {"group", "info", "--group-file", "/nonexistent"}}) {
    const auto r = run(args);
    EXPECT_EQ(r.code, 1) << r.out;
    const auto d = r.doc();
    ASSERT_TRUE(d.contains("error")) << r.out;
    EXPECT_TRUE(d["error"]["code"].is_string());
    EXPECT_TRUE(d["error"]["message"].is_string());
  }
  EXPECT_EQ(run({"seeds", "--max-order", "4096"}).doc()["error"]["code"], "OrderLimitExceeded");
}

TEST(Cli, Deterministic) {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"seeds", "--max-order", "6"},
           {"verify", "--suite", "goursat", "--max-order", "3"},
           {"essential", "--group", "V4", "--oracle"},
           {"--seed-order", "17", "linkage", "--group", "Q8", "--other", "D8", "--witness"}}) {
    const auto a = run(args), b = run(args);
    EXPECT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out);
  }
  auto with_seed = run({"--seed-order", "5", "decompose", "--group", "S3"}).doc();
  auto without = run({"decompose", "--group", "S3"}).doc();
  EXPECT_EQ(with_seed["result"], without["result"]);
}

TEST(Cli, CatalogSizesAndRoundTrip) {
  const auto eight = run({"catalog", "build", "--max-order", "8"}).doc();
  EXPECT_EQ(eight["result"]["groups"].size(), 14u);
  EXPECT_EQ(eight["result"]["complete_through"], 8);
  EXPECT_EQ(run({"catalog", "build", "--max-order", "1"}).doc()["result"]["groups"].size(), 1u);
  const auto a = temp_path("cat_a.json"), b = temp_path("cat_b.json");
  ASSERT_EQ(run({"catalog", "build", "--max-order", "8", "--out", a}).code, 0);
  ASSERT_EQ(run({"catalog", "show", "--file", a, "--out", b}).code, 0);
  EXPECT_EQ(slurp(a), slurp(b));
  const auto seeded = run({"seeds", "--max-order", "8", "--catalog", a});
  EXPECT_EQ(seeded.doc()["result"], run({"seeds", "--max-order", "8"}).doc()["result"]);
  std::remove(a.c_str());
  std::remove(b.c_str());
}

TEST(Cli, DigestCoversFileContents) {
  const auto path = temp_path("group.json");
  auto write = [&](const std::string& text) { std::ofstream(path) << text; };
  write(R"({"perm_gens": [[1, 2, 0]]})");
  const auto a = run({"group", "info", "--group-file", path}).doc();
  write(R"({"perm_gens": [[1, 0, 2]]})");
  const auto b = run({"group", "info", "--group-file", path}).doc();
  EXPECT_EQ(a["result"]["order"], 3);
  EXPECT_EQ(b["result"]["order"], 2);
  EXPECT_NE(a["inputs_digest"], b["inputs_digest"]);
  std::remove(path.c_str());
}

TEST(Cli, Subcommands) {
  const auto info = run({"group", "info", "--group", "Q8"}).doc()["result"];
  EXPECT_EQ(info["order"], 8);
  EXPECT_EQ(info["conjugacy_classes"], 5);
  EXPECT_EQ(info["automorphisms"], 24);
  EXPECT_EQ(run({"sections", "list", "--group", "C2", "--right", "C2"}).doc()["result"]["sections"].size(), 12u);

  const auto comp = run({"compose", "--left", "C2", "--middle", "C1", "--right", "C2", "--a", "0", "--b", "0"});
  ASSERT_EQ(comp.code, 0) << comp.out;
  EXPECT_FALSE(comp.doc()["result"]["product"]["terms"].empty());

  const auto idem = run({"idempotents", "--group", "C2"}).doc()["result"];
  EXPECT_EQ(idem["poset_size"], 4);
  EXPECT_EQ(idem["pairs"].size(), 4u);

  const auto gamma = run({"gamma-group", "--group", "Q8", "--pair", "0"});
  EXPECT_EQ(gamma.code, 0);
  EXPECT_EQ(gamma.doc()["result"]["gamma_order"], 6);
  EXPECT_EQ(gamma.doc()["result"]["out_order"], 6);

  const auto dec = run({"decompose", "--group", "C2"});
  EXPECT_EQ(dec.code, 0);
  EXPECT_EQ(dec.doc()["result"]["covering_dim"], 4);

  const auto ess = run({"essential", "--group", "C2", "--oracle"});
  EXPECT_EQ(ess.code, 0);
  EXPECT_EQ(ess.doc()["result"]["essential_dim"], 3);
  EXPECT_TRUE(ess.doc()["result"]["oracle"]["matches"].get<bool>());

  const auto link = run({"linkage", "--group", "Q8", "--other", "D8", "--witness"}).doc()["result"];
  EXPECT_FALSE(link["linked"].empty());
  for (const auto& l : link["linked"]) {
    const auto s = sbw::io::section_from_json(l["section"]);
    EXPECT_TRUE(sbw::is_normal(s.S, s.T));
  }
}

TEST(Cli, TableRendersSameData) {
  const auto r = run({"--format", "table", "sections", "list", "--group", "S3"});
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("sections:"), std::string::npos);
  std::size_t lines = 0;
  for (char c : r.out) lines += c == '\n';
  EXPECT_EQ(lines, 3u + 3u + 1u + 8u);
}
