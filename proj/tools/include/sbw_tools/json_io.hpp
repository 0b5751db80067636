#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "sbw/catalog.hpp"
#include "sbw/classification.hpp"
#include "sbw/verify.hpp"

namespace sbw::io {

using nlohmann::json;

// Full group JSON: {"name", "order", "table"}.
json group_to_json(const Group& g);
// Short reference: {"name"} when the name resolves to the same group, the
// full form otherwise.
json group_ref(const GroupPtr& g);
// Accepts table, perm_gens, construct, or a bare name; throws ParseError.
GroupPtr group_from_json(const json& j);

json subgroup_to_json(const Subgroup& s);
Subgroup subgroup_from_json(const GroupPtr& g, const json& j);

// {"ambient", "factors": [|G|, |H|], "T", "S"}.
json section_to_json(const Section& s);
Section section_from_json(const json& j);

// {"left", "right", "terms": [{"class", "num", "den"}]}.
json element_to_json(const GammaElement& a);
GammaElement element_from_json(const json& j);

json catalog_to_json(const Catalog& c);
Catalog catalog_from_json(const json& j);
void save_catalog(const Catalog& c, const std::string& path);
Catalog load_catalog(const std::string& path);

json pair_to_json(const PairKP& p);
json status_to_json(const ReducedStatus& s);
json suite_to_json(const SuiteResult& r);

// Per-group report: poset, partition, covering dimension, blocks with
// reduced verdicts and irreducible counts, essential dimension.
json group_report(const GroupPtr& g, const Catalog& catalog);
json seeds_to_json(const SeedTable& t, bool witnesses = false);

// Canonical text: two-space indent, trailing newline.
std::string dump(const json& j);

}  // namespace sbw::io
