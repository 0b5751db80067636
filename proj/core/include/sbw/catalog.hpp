#pragma once

#include <string>
#include <vector>

#include "sbw/group.hpp"

namespace sbw {

struct CatalogEntry {
  std::string id;
  GroupPtr group;
};

// Groups with ids; every isomorphism type of order <= complete_through is
// present.
struct Catalog {
  std::vector<CatalogEntry> groups;
  std::size_t complete_through = 0;

  bool complete_for(std::size_t order) const { return order <= complete_through; }
  // Throws InvalidArgument for an unknown id.
  const CatalogEntry& find(const std::string& id) const;
  const CatalogEntry* find_group(const Group& g) const;
  std::vector<const CatalogEntry*> of_order_below(std::size_t order) const;
};

// All groups of order <= max_order from the built-in generators: every type
// up to order 8, cyclic groups beyond (marked incomplete).
Catalog builtin_catalog(std::size_t max_order);

// Named group: C<n>, D<2n>, Q<4m>, S<n>, V4, or a product "AxB" of names.
GroupPtr named_group(const std::string& name);

}  // namespace sbw
