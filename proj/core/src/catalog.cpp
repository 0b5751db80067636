#include "sbw/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <utility>

#include "sbw/error.hpp"

namespace sbw {

const CatalogEntry& Catalog::find(const std::string& id) const {
  for (const auto& e : groups)
    if (e.id == id) return e;
  fail(ErrorCode::InvalidArgument, "unknown catalog id " + id);
}

const CatalogEntry* Catalog::find_group(const Group& g) const {
  for (const auto& e : groups)
    if (e.group.get() == &g) return &e;
  return nullptr;
}

std::vector<const CatalogEntry*> Catalog::of_order_below(std::size_t order) const {
  std::vector<const CatalogEntry*> out;
  for (const auto& e : groups)
    if (e.group->order() < order) out.push_back(&e);
  return out;
}

namespace {

GroupPtr product(std::initializer_list<GroupPtr> factors) {
  GroupPtr out;
  for (const auto& f : factors) out = out ? direct_product(out, f) : f;
  return out;
}

}  // namespace

Catalog builtin_catalog(std::size_t max_order) {
  check_order(max_order, "catalog");
  const auto c = [](std::size_t n) { return cyclic_group(n); };
  const std::vector<std::pair<std::string, std::function<GroupPtr()>>> small = {
      {"C1", [&] { return c(1); }},
      {"C2", [&] { return c(2); }},
      {"C3", [&] { return c(3); }},
      {"C4", [&] { return c(4); }},
      {"C2xC2", [&] { return product({c(2), c(2)}); }},
      {"C5", [&] { return c(5); }},
      {"C6", [&] { return c(6); }},
      {"S3", [] { return symmetric_group(3); }},
      {"C7", [&] { return c(7); }},
      {"C8", [&] { return c(8); }},
      {"C4xC2", [&] { return product({c(4), c(2)}); }},
      {"C2xC2xC2", [&] { return product({c(2), c(2), c(2)}); }},
      {"D8", [] { return dihedral_group(8); }},
      {"Q8", [] { return quaternion_group(8); }},
  };
  Catalog cat;
  for (const auto& [id, make] : small) {
    auto g = make();
    if (g->order() <= max_order) cat.groups.push_back({id, std::move(g)});
  }
  for (std::size_t n = 9; n <= max_order; ++n) cat.groups.push_back({"C" + std::to_string(n), c(n)});
  cat.complete_through = std::min<std::size_t>(max_order, 8);
  return cat;
}

GroupPtr named_group(const std::string& name) {
  if (const auto x = name.rfind('x'); x != std::string::npos)
    return direct_product(named_group(name.substr(0, x)), named_group(name.substr(x + 1)));
  if (name == "V4") return named_group("C2xC2");
  if (name.size() < 2 || !std::all_of(name.begin() + 1, name.end(), [](unsigned char ch) { return std::isdigit(ch); }))
    fail(ErrorCode::InvalidArgument, "unknown group name " + name);
  const std::size_t n = std::stoul(name.substr(1));
  switch (name[0]) {
    case 'C': return cyclic_group(n);
    case 'D': return dihedral_group(n);
    case 'Q': return quaternion_group(n);
    case 'S': return symmetric_group(n);
    default: fail(ErrorCode::InvalidArgument, "unknown group name " + name);
  }
}

}  // namespace sbw
