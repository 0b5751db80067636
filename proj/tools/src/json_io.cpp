#include "sbw_tools/json_io.hpp"

#include <fstream>
#include <sstream>

#include "sbw/error.hpp"
#include "sbw/morphisms.hpp"

namespace sbw::io {

namespace {

[[noreturn]] void parse_fail(const std::string& what) { fail(ErrorCode::ParseError, what); }

template <class T>
T get(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) parse_fail(std::string("missing field \"") + key + "\"");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    parse_fail(std::string("field \"") + key + "\": " + e.what());
  }
}

std::vector<Elem> elems_of(const ElementSet& s) { return s.to_vector(); }

ElementSet set_from(const GroupPtr& g, const std::vector<Elem>& v) {
  ElementSet s(g->order());
  for (Elem e : v) {
    if (e >= g->order()) parse_fail("element " + std::to_string(e) + " out of range");
    s.insert(e);
  }
  return s;
}

}  // namespace

json group_to_json(const Group& g) {
  json table = json::array();
  for (Elem a = 0; a < g.order(); ++a) {
    json row = json::array();
    for (Elem b = 0; b < g.order(); ++b) row.push_back(g.mul(a, b));
    table.push_back(std::move(row));
  }
  return {{"name", g.name()}, {"order", g.order()}, {"table", std::move(table)}};
}

json group_ref(const GroupPtr& g) {
  try {
    if (named_group(g->name()) == g) return {{"name", g->name()}};
  } catch (const Error&) {
  }
  return group_to_json(*g);
}

GroupPtr group_from_json(const json& j) {
  if (j.is_string()) return named_group(j.get<std::string>());
  if (!j.is_object()) parse_fail("group must be an object or a name");
  if (j.contains("table")) {
    const auto table = get<std::vector<std::vector<Elem>>>(j, "table");
    const std::string name = j.contains("name") ? get<std::string>(j, "name") : "G";
    if (j.contains("order") && get<std::size_t>(j, "order") != table.size()) parse_fail("order does not match table");
    return group_from_table(name, table);
  }
  if (j.contains("perm_gens"))
    return group_from_permutations(j.contains("name") ? get<std::string>(j, "name") : "G",
                                   get<std::vector<std::vector<Elem>>>(j, "perm_gens"));
  if (j.contains("construct")) {
    const auto kind = get<std::string>(j, "construct");
    const json args = j.contains("args") ? j.at("args") : json::array();
    if (!args.is_array()) parse_fail("args must be an array");
    auto num = [&](std::size_t i) {
      if (i >= args.size() || !args[i].is_number_unsigned()) parse_fail(kind + " expects a positive integer");
      return args[i].get<std::size_t>();
    };
    if (kind == "cyclic") return cyclic_group(num(0));
    if (kind == "dihedral") return dihedral_group(num(0));
    if (kind == "quaternion") return quaternion_group(num(0));
    if (kind == "symmetric") return symmetric_group(num(0));
    if (kind == "product") {
      if (args.size() < 2) parse_fail("product expects at least two groups");
      GroupPtr out = group_from_json(args[0]);
      for (std::size_t i = 1; i < args.size(); ++i) out = direct_product(out, group_from_json(args[i]));
      return out;
    }
    parse_fail("unknown construct " + kind);
  }
  if (j.contains("name")) return named_group(get<std::string>(j, "name"));
  parse_fail("group needs table, perm_gens, construct or name");
}

json subgroup_to_json(const Subgroup& s) { return s.elements(); }

Subgroup subgroup_from_json(const GroupPtr& g, const json& j) {
  if (!j.is_array()) parse_fail("subgroup must be an array of elements");
  return subgroup_from_elements(g, j.get<std::vector<Elem>>());
}

json section_to_json(const Section& s) {
  const auto& x = *s.ambient;
  json factors = json::array();
  if (x.factors()) factors = {x.factors()->left->order(), x.factors()->right->order()};
  return {{"ambient", group_ref(s.ambient)},
          {"factors", std::move(factors)},
          {"T", elems_of(s.T.elems())},
          {"S", elems_of(s.S.elems())}};
}

Section section_from_json(const json& j) {
  const auto x = group_from_json(get<json>(j, "ambient"));
  const auto t = get<std::vector<Elem>>(j, "T"), s = get<std::vector<Elem>>(j, "S");
  return make_section(subgroup_from_elements(x, t), subgroup_from_elements(x, s));
}

json element_to_json(const GammaElement& a) {
  const auto x = a.ambient();
  json terms = json::array();
  for (const auto& [k, c] : a.coeffs) {
    const auto num = numerator(c), den = denominator(c);
    terms.push_back({{"class", section_to_json(section_from_key(x, k))},
                     {"num", num.convert_to<long long>()},
                     {"den", den.convert_to<long long>()}});
  }
  return {{"left", group_ref(a.left)}, {"right", group_ref(a.right)}, {"terms", std::move(terms)}};
}

GammaElement element_from_json(const json& j) {
  const auto g = group_from_json(get<json>(j, "left")), h = group_from_json(get<json>(j, "right"));
  GammaElement out = zero_element(g, h);
  const auto x = direct_product(g, h);
  for (const auto& t : get<json>(j, "terms")) {
    const auto s = section_from_json(get<json>(t, "class"));
    if (s.ambient != x) parse_fail("term ambient differs from left x right");
    const auto den = get<long long>(t, "den");
    if (den == 0) parse_fail("zero denominator");
    out.add_term(key_of(s), Rational(get<long long>(t, "num"), den));
  }
  return out;
}

json catalog_to_json(const Catalog& c) {
  json groups = json::array();
  for (const auto& e : c.groups) groups.push_back({{"id", e.id}, {"group", group_to_json(*e.group)}});
  return {{"complete_through", c.complete_through}, {"groups", std::move(groups)}};
}

Catalog catalog_from_json(const json& j) {
  Catalog c;
  c.complete_through = get<std::size_t>(j, "complete_through");
  for (const auto& e : get<json>(j, "groups")) {
    const auto id = get<std::string>(e, "id");
    auto g = group_from_json(get<json>(e, "group"));
    // Reuse the named instance so that ids and memoized data are shared.
    try {
      if (auto named = named_group(g->name()); named->same_as(*g)) g = named;
    } catch (const Error&) {
    }
    c.groups.push_back({id, std::move(g)});
  }
  return c;
}

void save_catalog(const Catalog& c, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(ErrorCode::InvalidArgument, "cannot write " + path);
  out << dump(catalog_to_json(c));
}

Catalog load_catalog(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::InvalidArgument, "cannot read " + path);
  try {
    return catalog_from_json(json::parse(in));
  } catch (const json::parse_error& e) {
    parse_fail(e.what());
  }
}

json pair_to_json(const PairKP& p) { return {{"K", subgroup_to_json(p.K)}, {"P", subgroup_to_json(p.P)}}; }

json status_to_json(const ReducedStatus& s) {
  json j = {{"pair", s.pair}, {"verdict", to_string(s.verdict)}, {"rule", to_string(s.rule)}};
  if (s.rule == Rule::SmallerLinked) j["witness"] = {{"group", s.witness_group}, {"pair", s.witness_pair}};
  return j;
}

json suite_to_json(const SuiteResult& r) {
  json checks = json::array();
  for (const auto& c : r.checks) checks.push_back({{"check", c.name}, {"pass", c.passed}, {"detail", c.detail}});
  return {{"suite", r.suite}, {"tag", r.tag}, {"pass", r.ok()}, {"checks", std::move(checks)}};
}

json group_report(const GroupPtr& g, const Catalog& catalog) {
  const auto poset = build_poset(g);
  const auto part = linkage_partition(g);
  const auto cb = covering_basis(g);
  const auto rep = essential_report(g, catalog);
  json pairs = json::array();
  for (const auto& p : poset->pairs) pairs.push_back(pair_to_json(p));
  json blocks = json::array();
  for (std::size_t c = 0; c < part->classes.size(); ++c) {
    const auto& members = part->classes[c];
    const auto gg = gamma_group(g, members.front());
    blocks.push_back({{"class", c},
                      {"members", members},
                      {"n", members.size()},
                      {"gamma_order", gg->elements.size()},
                      {"reduced", status_to_json(rep.statuses[members.front()])},
                      {"irr_count", conjugacy_class_count(*gg->group)}});
  }
  json j = {{"group", group_ref(g)},
            {"poset", std::move(pairs)},
            {"partition", part->classes},
            {"covering_dim", cb->classes.size()},
            {"blocks", std::move(blocks)}};
  if (rep.determined)
    j["essential_dim"] = rep.dim_lower;
  else
    j["essential_dim"] = {rep.dim_lower, rep.dim_upper};
  return j;
}

json seeds_to_json(const SeedTable& t, bool witnesses) {
  json rows = json::array();
  for (const auto& r : t.rows) {
    json members = json::array();
    for (const auto& m : r.members) {
      json mj = {{"group", m.group_id},       {"pair", m.pair},           {"class_size", m.class_size},
                 {"gamma_order", m.gamma_order}, {"irr_count", m.irr_count}, {"irr_transport", m.irr_transport}};
      if (witnesses && m.witness) mj["witness"] = section_to_json(*m.witness);
      members.push_back(std::move(mj));
    }
    rows.push_back({{"order", r.order}, {"merged", r.members.size() > 1}, {"members", std::move(members)}});
  }
  return {{"rows", std::move(rows)}, {"undetermined", t.undetermined}};
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace sbw::io
