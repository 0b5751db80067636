#include "sbw_tools/cli.hpp"

#include <cstdio>
#include <fstream>
#include <functional>
#include <limits>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "sbw/error.hpp"
#include "sbw/linkage.hpp"
#include "sbw/morphisms.hpp"
#include "sbw_tools/json_io.hpp"

namespace sbw::cli {

namespace {

using io::json;

constexpr std::size_t kUnsafeCap = std::size_t{1} << 20;

// Contents of every input file read during one run, folded into the digest.
std::string g_inputs;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::InvalidArgument, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  g_inputs += ss.str();
  return ss.str();
}

json parse_file(const std::string& path) {
  try {
    return json::parse(read_file(path));
  } catch (const json::parse_error& e) {
    fail(ErrorCode::ParseError, path + ": " + e.what());
  }
}

std::string fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

// ---------------------------------------------------------------- tables

std::string cell(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_object()) {
    std::string s;
    for (const auto& [k, x] : v.items()) s += (s.empty() ? "" : " ") + k + "=" + cell(x);
    return s;
  }
  if (v.is_array() && !v.empty() && v.front().is_object()) {
    std::string s;
    for (const auto& x : v) s += (s.empty() ? "" : " | ") + cell(x);
    return s;
  }
  return v.dump();
}

void render(const json& j, std::ostream& out, const std::string& indent);

bool is_row_list(const json& v) {
  return v.is_array() && !v.empty() && std::all_of(v.begin(), v.end(), [](const json& x) { return x.is_object(); });
}

void render_rows(const json& arr, std::ostream& out, const std::string& indent) {
  std::vector<std::string> cols, nested;
  for (const auto& row : arr)
    for (const auto& [k, v] : row.items()) {
      auto& dst = is_row_list(v) ? nested : cols;
      if (std::find(dst.begin(), dst.end(), k) == dst.end()) dst.push_back(k);
    }
  std::erase_if(cols, [&](const std::string& c) { return std::find(nested.begin(), nested.end(), c) != nested.end(); });
  std::vector<std::size_t> width(cols.size());
  std::vector<std::vector<std::string>> cells;
  for (std::size_t c = 0; c < cols.size(); ++c) width[c] = cols[c].size();
  for (const auto& row : arr) {
    std::vector<std::string> line;
    for (std::size_t c = 0; c < cols.size(); ++c) {
      line.push_back(row.contains(cols[c]) ? cell(row.at(cols[c])) : "");
      width[c] = std::max(width[c], line.back().size());
    }
    cells.push_back(std::move(line));
  }
  auto emit = [&](const std::vector<std::string>& line) {
    out << indent;
    for (std::size_t c = 0; c < line.size(); ++c) {
      out << line[c];
      if (c + 1 < line.size()) out << std::string(width[c] - line[c].size() + 2, ' ');
    }
    out << "\n";
  };
  if (!cols.empty()) {
    emit(cols);
    for (const auto& line : cells) emit(line);
  }
  for (std::size_t r = 0; r < arr.size(); ++r)
    for (const auto& key : nested) {
      if (!arr[r].contains(key) || !is_row_list(arr[r].at(key))) continue;
      std::string label = std::to_string(r);
      for (const char* id : {"id", "name", "suite", "check", "index", "class"})
        if (arr[r].contains(id)) {
          label = cell(arr[r].at(id));
          break;
        }
      out << indent << key << " [" << label << "]:\n";
      render_rows(arr[r].at(key), out, indent + "  ");
    }
}

void render(const json& j, std::ostream& out, const std::string& indent) {
  for (const auto& [k, v] : j.items()) {
    if (v.is_object()) {
      out << indent << k << ":\n";
      render(v, out, indent + "  ");
    } else if (is_row_list(v)) {
      out << indent << k << ":\n";
      render_rows(v, out, indent + "  ");
    } else {
      out << indent << k << ": " << cell(v) << "\n";
    }
  }
}

// ---------------------------------------------------------------- inputs

struct GroupArg {
  std::string name;
  std::string file;
  GroupPtr resolve(const char* what) const {
    if (!file.empty()) return io::group_from_json(parse_file(file));
    if (!name.empty()) return named_group(name);
    fail(ErrorCode::InvalidArgument, std::string("missing ") + what);
  }
};

void add_group_option(CLI::App* cmd, GroupArg& arg, const std::string& flag, const std::string& what) {
  cmd->add_option("--" + flag, arg.name, what + " by name (C4, D8, Q8, S3, V4, C2xC3, ...)");
  cmd->add_option("--" + flag + "-file", arg.file, what + " as group JSON");
}

std::size_t resolve_pair(const GroupPtr& g, std::optional<std::size_t> index, const std::vector<Elem>& k,
                         const std::vector<Elem>& p) {
  const auto poset = build_poset(g);
  if (index) {
    if (*index >= poset->size()) fail(ErrorCode::InvalidArgument, "pair index out of range");
    return *index;
  }
  if (k.empty() || p.empty()) fail(ErrorCode::InvalidArgument, "give --pair or both --K and --P");
  return poset->index_of(subgroup_from_elements(g, k), subgroup_from_elements(g, p));
}

Catalog catalog_for(const std::string& file, std::size_t max_order) {
  if (!file.empty()) return io::catalog_from_json(parse_file(file));
  return builtin_catalog(max_order);
}

json catalog_summary(const Catalog& cat) {
  json ids = json::array();
  std::map<std::size_t, std::size_t> counts;
  for (const auto& e : cat.groups) {
    ids.push_back({{"id", e.id}, {"order", e.group->order()}});
    ++counts[e.group->order()];
  }
  json orders = json::array();
  for (const auto& [n, c] : counts) orders.push_back({{"order", n}, {"groups", c}, {"complete", cat.complete_for(n)}});
  return {{"complete_through", cat.complete_through}, {"orders", std::move(orders)}, {"groups", std::move(ids)}};
}

json sections_rows(const GroupPtr& x) {
  json rows = json::array();
  const auto classes = enumerate_sections(x);
  for (std::size_t i = 0; i < classes->size(); ++i) {
    const auto& c = (*classes)[i];
    rows.push_back({{"index", i},
                    {"T_order", c.canonical.T.order()},
                    {"S_order", c.canonical.S.order()},
                    {"orbit", c.orbit_size},
                    {"T", c.canonical.T.elements()},
                    {"S", c.canonical.S.elements()}});
  }
  return rows;
}

GammaElement element_arg(const std::string& file, std::optional<std::size_t> index, const GroupPtr& g,
                         const GroupPtr& h, const char* what) {
  if (!file.empty()) return io::element_from_json(parse_file(file));
  if (!index) fail(ErrorCode::InvalidArgument, std::string("missing ") + what);
  const auto classes = enumerate_sections(direct_product(g, h));
  if (*index >= classes->size()) fail(ErrorCode::InvalidArgument, std::string(what) + " index out of range");
  return class_element((*classes)[*index].canonical);
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Section Burnside ring workbench"};
  app.name("sbw");
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "json";
  std::uint64_t seed_order = 0;
  bool unsafe = false;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "table"}));
  app.add_option("--seed-order", seed_order, "Accepted for compatibility; all computations are deterministic");
  app.add_flag("--unsafe-order", unsafe, "Lift the group order cap");

  // Each command fills `result` and returns whether it passed.
  std::function<bool(json&)> action;

  auto* group_cmd = app.add_subcommand("group", "Group commands")->require_subcommand(1);
  auto* group_info = group_cmd->add_subcommand("info", "Basic invariants of a group");
  GroupArg info_g;
  add_group_option(group_info, info_g, "group", "group");
  group_info->callback([&] {
    action = [&](json& r) {
      const auto g = info_g.resolve("--group");
      const auto lat = subgroup_lattice(g);
      r = {{"group", io::group_ref(g)},
           {"order", g->order()},
           {"abelian", g->is_abelian()},
           {"exponent", g->exponent()},
           {"element_orders", order_census(*g)},
           {"subgroups", lat->all.size()},
           {"subgroup_classes", lat->classes.size()},
           {"normal_subgroups", normal_subgroups(g).size()},
           {"conjugacy_classes", conjugacy_class_count(*g)},
           {"automorphisms", automorphisms(g)->homs.size()},
           {"poset_size", build_poset(g)->size()}};
      return true;
    };
  });

  auto* sections_cmd = app.add_subcommand("sections", "Section commands")->require_subcommand(1);
  auto* sections_list = sections_cmd->add_subcommand("list", "Section classes of a group or of G x H");
  GroupArg sl_g, sl_h;
  add_group_option(sections_list, sl_g, "group", "group");
  add_group_option(sections_list, sl_h, "right", "right factor");
  sections_list->callback([&] {
    action = [&](json& r) {
      auto x = sl_g.resolve("--group");
      if (!sl_h.name.empty() || !sl_h.file.empty()) x = direct_product(x, sl_h.resolve("--right"));
      r = {{"ambient", io::group_ref(x)}, {"sections", sections_rows(x)}};
      return true;
    };
  });

  auto* compose_cmd = app.add_subcommand("compose", "Compose two elements");
  GroupArg c_left, c_mid, c_right;
  std::optional<std::size_t> c_a, c_b;
  std::string c_afile, c_bfile;
  add_group_option(compose_cmd, c_left, "left", "left group G");
  add_group_option(compose_cmd, c_mid, "middle", "middle group H");
  add_group_option(compose_cmd, c_right, "right", "right group K");
  compose_cmd->add_option("--a", c_a, "Section class index in G x H");
  compose_cmd->add_option("--b", c_b, "Section class index in H x K");
  compose_cmd->add_option("--a-file", c_afile, "First element as JSON");
  compose_cmd->add_option("--b-file", c_bfile, "Second element as JSON");
  compose_cmd->callback([&] {
    action = [&](json& r) {
      GroupPtr g, h, k;
      if (c_afile.empty() || c_bfile.empty()) {
        g = c_left.resolve("--left");
        h = c_mid.resolve("--middle");
        k = c_right.resolve("--right");
      }
      const auto a = element_arg(c_afile, c_a, g, h, "--a");
      const auto b = element_arg(c_bfile, c_b, h, k, "--b");
      r = {{"a", io::element_to_json(a)}, {"b", io::element_to_json(b)}, {"product", io::element_to_json(compose(a, b))}};
      return true;
    };
  });

  auto* idem_cmd = app.add_subcommand("idempotents", "Pairs, Moebius function and e, f idempotents");
  GroupArg id_g;
  std::optional<std::size_t> id_pair;
  add_group_option(idem_cmd, id_g, "group", "group");
  idem_cmd->add_option("--pair", id_pair, "Only this pair index");
  idem_cmd->callback([&] {
    action = [&](json& r) {
      const auto g = id_g.resolve("--group");
      const auto poset = build_poset(g);
      const auto mu = poset_mobius(g);
      const auto& e = *e_family(g);
      const auto& f = *f_family_of(g);
      json pairs = json::array();
      for (std::size_t i = 0; i < poset->size(); ++i) {
        if (id_pair && *id_pair != i) continue;
        json mob = json::array();
        for (std::size_t y = 0; y < poset->size(); ++y)
          if ((*mu)(i, y) != 0) mob.push_back({{"to", y}, {"mu", (*mu)(i, y)}});
        pairs.push_back({{"index", i},
                         {"K", io::subgroup_to_json(poset->pairs[i].K)},
                         {"P", io::subgroup_to_json(poset->pairs[i].P)},
                         {"mobius", std::move(mob)},
                         {"e", io::element_to_json(e[i])},
                         {"f", io::element_to_json(f[i])}});
      }
      if (id_pair && pairs.empty()) fail(ErrorCode::InvalidArgument, "pair index out of range");
      r = {{"group", io::group_ref(g)}, {"poset_size", poset->size()}, {"pairs", std::move(pairs)}};
      return true;
    };
  });

  auto* link_cmd = app.add_subcommand("linkage", "Linkage classes, or linked pairs between two groups");
  GroupArg lk_g, lk_h;
  bool lk_witness = false;
  add_group_option(link_cmd, lk_g, "group", "group");
  add_group_option(link_cmd, lk_h, "other", "second group");
  link_cmd->add_flag("--witness", lk_witness, "Include linking sections");
  link_cmd->callback([&] {
    action = [&](json& r) {
      const auto g = lk_g.resolve("--group");
      const auto pg = build_poset(g);
      if (lk_h.name.empty() && lk_h.file.empty()) {
        const auto part = linkage_partition(g);
        json order = json::array();
        for (std::size_t a = 0; a < part->classes.size(); ++a)
          for (std::size_t b = 0; b < part->classes.size(); ++b)
            if (a != b && part->le(a, b)) order.push_back({a, b});
        r = {{"group", io::group_ref(g)}, {"classes", part->classes}, {"class_order", std::move(order)}};
        return true;
      }
      const auto h = lk_h.resolve("--other");
      const auto ph = build_poset(h);
      json links = json::array();
      for (std::size_t a = 0; a < pg->size(); ++a)
        for (std::size_t b = 0; b < ph->size(); ++b) {
          const auto w = linked(pg->pairs[a].K, pg->pairs[a].P, ph->pairs[b].K, ph->pairs[b].P);
          if (!w) continue;
          json l = {{"pair", a}, {"other_pair", b}};
          if (lk_witness) l["section"] = io::section_to_json(w->section);
          links.push_back(std::move(l));
        }
      r = {{"group", io::group_ref(g)}, {"other", io::group_ref(h)}, {"linked", std::move(links)}};
      return true;
    };
  });

  auto* gamma_cmd = app.add_subcommand("gamma-group", "The group Gamma of a pair and its outer automorphisms");
  GroupArg gm_g;
  std::optional<std::size_t> gm_pair;
  std::vector<Elem> gm_k, gm_p;
  add_group_option(gamma_cmd, gm_g, "group", "group");
  gamma_cmd->add_option("--pair", gm_pair, "Pair index");
  gamma_cmd->add_option("--K", gm_k, "Elements of K")->delimiter(',');
  gamma_cmd->add_option("--P", gm_p, "Elements of P")->delimiter(',');
  gamma_cmd->callback([&] {
    action = [&](json& r) {
      const auto g = gm_g.resolve("--group");
      const std::size_t i = resolve_pair(g, gm_pair, gm_k, gm_p);
      const auto gg = gamma_group(g, i);
      const auto tc = theta_check(g, i);
      const auto x = direct_product(g, g);
      json elems = json::array();
      for (const auto& k : gg->elements) elems.push_back(io::section_to_json(section_from_key(x, k)));
      json table = json::array();
      for (Elem a = 0; a < gg->group->order(); ++a) {
        json row = json::array();
        for (Elem b = 0; b < gg->group->order(); ++b) row.push_back(gg->group->mul(a, b));
        table.push_back(std::move(row));
      }
      r = {{"group", io::group_ref(g)},
           {"pair", io::pair_to_json(build_poset(g)->pairs[i])},
           {"gamma_order", tc.gamma_order},
           {"out_order", tc.out_order},
           {"theta_bijective", tc.bijective},
           {"theta_multiplicative", tc.multiplicative},
           {"theta_kernel_inner", tc.kernel_is_inner},
           {"irr_count", conjugacy_class_count(*gg->group)},
           {"elements", std::move(elems)},
           {"table", std::move(table)}};
      return tc.ok();
    };
  });

  auto* dec_cmd = app.add_subcommand("decompose", "Block decomposition of the covering algebra");
  GroupArg dc_g;
  add_group_option(dec_cmd, dc_g, "group", "group");
  dec_cmd->callback([&] {
    action = [&](json& r) {
      const auto g = dc_g.resolve("--group");
      const auto rep = matrix_decomposition(g);
      json blocks = json::array();
      for (const auto& b : rep.blocks)
        blocks.push_back({{"class", b.linkage_class},
                          {"n", b.n},
                          {"gamma_order", b.gamma_order},
                          {"ideal_dim", b.ideal_dim},
                          {"submodule_dim", b.submodule_dim},
                          {"omega_rank", b.omega_rank}});
      r = {{"group", io::group_ref(g)},
           {"covering_dim", rep.covering_dim},
           {"block_sum", rep.block_sum},
           {"blocks", std::move(blocks)},
           {"failures", rep.failures},
           {"pass", rep.ok()}};
      return rep.ok();
    };
  });

  auto* ess_cmd = app.add_subcommand("essential", "Reduced pairs and the essential algebra");
  GroupArg es_g;
  std::string es_catalog;
  bool es_oracle = false;
  add_group_option(ess_cmd, es_g, "group", "group");
  ess_cmd->add_option("--catalog", es_catalog, "Catalog JSON (default: built-in through order 8)");
  ess_cmd->add_flag("--oracle", es_oracle, "Also span all products through smaller groups");
  ess_cmd->callback([&] {
    action = [&](json& r) {
      const auto g = es_g.resolve("--group");
      const auto cat = catalog_for(es_catalog, std::max<std::size_t>(8, g->order()));
      r = io::group_report(g, cat);
      const auto rep = essential_report(g, cat);
      json statuses = json::array();
      for (const auto& s : rep.statuses) statuses.push_back(io::status_to_json(s));
      r["statuses"] = std::move(statuses);
      r["basis_dim"] = rep.basis_dim;
      r["simple_modules"] = rep.determined ? json(rep.simple_lower) : json({rep.simple_lower, rep.simple_upper});
      if (!es_oracle) return true;
      const auto o = essential_ideal_oracle(g, cat);
      r["oracle"] = {{"rank", o.rank},
                     {"predicted", rep.predicted_ideal.size()},
                     {"matches", o.matches_or_reading},
                     {"matches_literal_and_reading", o.matches_and_reading}};
      return o.matches_or_reading;
    };
  });

  auto* seeds_cmd = app.add_subcommand("seeds", "Reduced linkage classes across a catalog");
  std::size_t sd_max = 8;
  std::string sd_catalog;
  bool sd_witness = false;
  seeds_cmd->add_option("--max-order", sd_max, "Largest group order");
  seeds_cmd->add_flag("--witness", sd_witness, "Include linking sections for merged rows");
  seeds_cmd->add_option("--catalog", sd_catalog, "Catalog JSON instead of the built-in one");
  seeds_cmd->callback([&] {
    action = [&](json& r) {
      check_order(sd_max, "seeds");
      r = io::seeds_to_json(seeds(catalog_for(sd_catalog, sd_max)), sd_witness);
      return true;
    };
  });

  auto* cat_cmd = app.add_subcommand("catalog", "Group catalogs")->require_subcommand(1);
  auto* cat_build = cat_cmd->add_subcommand("build", "Built-in catalog");
  std::size_t cb_max = 8;
  std::string cb_out;
  cat_build->add_option("--max-order", cb_max, "Largest group order");
  cat_build->add_option("--out", cb_out, "Write the catalog JSON here");
  cat_build->callback([&] {
    action = [&](json& r) {
      check_order(cb_max, "catalog build");
      const auto cat = builtin_catalog(cb_max);
      if (!cb_out.empty()) io::save_catalog(cat, cb_out);
      r = catalog_summary(cat);
      return true;
    };
  });
  auto* cat_show = cat_cmd->add_subcommand("show", "Summarize a catalog file");
  std::string cs_file, cs_out;
  cat_show->add_option("--file", cs_file, "Catalog JSON")->required();
  cat_show->add_option("--out", cs_out, "Write the loaded catalog back out here");
  cat_show->callback([&] {
    action = [&](json& r) {
      const auto cat = io::catalog_from_json(parse_file(cs_file));
      if (!cs_out.empty()) io::save_catalog(cat, cs_out);
      r = catalog_summary(cat);
      return true;
    };
  });

  auto* verify_cmd = app.add_subcommand("verify", "Run property suites");
  std::vector<std::string> vf_suites;
  VerifyOptions vf;
  verify_cmd->add_option("--suite", vf_suites, "Suite name (repeatable; default all)")
      ->check(CLI::IsMember(suite_names()));
  verify_cmd->add_option("--max-order", vf.max_order, "Largest group order");
  verify_cmd->add_option("--random-triples", vf.random_triples, "Random associativity triples");
  verify_cmd->callback([&] {
    action = [&](json& r) {
      check_order(vf.max_order, "verify");
      const auto names = vf_suites.empty() ? suite_names() : vf_suites;
      json suites = json::array();
      bool pass = true;
      for (const auto& n : names) {
        const auto s = run_suite(n, vf);
        pass = pass && s.ok();
        suites.push_back(io::suite_to_json(s));
      }
      r = {{"max_order", vf.max_order}, {"pass", pass}, {"suites", std::move(suites)}};
      return pass;
    };
  });

  std::string command;
  for (int i = 1; i < argc; ++i) command += (i > 1 ? " " : "") + std::string(argv[i]);
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  const std::size_t saved_cap = order_cap();
  if (unsafe) set_order_cap(kUnsafeCap);
  g_inputs.clear();
  json doc = {{"command", command}};
  int code = 0;
  try {
    json result;
    const bool pass = action(result);
    doc["result"] = std::move(result);
    code = pass ? 0 : 1;
  } catch (const Error& e) {
    doc["error"] = {{"code", std::string(to_string(e.code()))}, {"message", e.what()}};
    if (!e.tag().empty()) doc["error"]["tag"] = e.tag();
    code = 1;
  } catch (const json::exception& e) {
    doc["error"] = {{"code", "ParseError"}, {"message", e.what()}};
    code = 1;
  }
  doc["inputs_digest"] = fnv1a(command + '\0' + g_inputs);
  set_order_cap(saved_cap);
  if (format == "table")
    render(doc, out, "");
  else
    out << io::dump(doc);
  return code;
}

}  // namespace sbw::cli
