#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "sbw/group.hpp"

namespace sbw {

// Extends generator images to a homomorphism on the whole source. Returns
// nullopt when the assignment does not define a homomorphism.
std::optional<Hom> extend_to_hom(const GroupPtr& source, const GroupPtr& target,
                                 std::span<const Elem> gens, std::span<const Elem> images);

// Enumerates isomorphisms G -> H in a fixed order: generators of G in the
// order returned by Group::generators(), candidate images ascending by index
// among elements of the same order. `visit` returns false to stop early.
// `allowed` optionally restricts the image of each generator.
void for_each_isomorphism(const GroupPtr& g, const GroupPtr& h,
                          const std::function<bool(const Hom&)>& visit,
                          const std::function<bool(std::size_t gen, Elem image)>& allowed = {});

std::vector<Hom> isomorphisms(const GroupPtr& g, const GroupPtr& h,
                              std::optional<std::size_t> limit = std::nullopt);
std::optional<Hom> find_isomorphism(const GroupPtr& g, const GroupPtr& h);
bool are_isomorphic(const GroupPtr& g, const GroupPtr& h);

// Aut(G) with homs sorted lexicographically by image array; the identity is
// element 0 and the group law is composition (a * b = a after b).
struct AutGroup {
  GroupPtr group;
  std::vector<Hom> homs;
  std::size_t index_of(const Hom& h) const;
};
std::shared_ptr<const AutGroup> automorphisms(const GroupPtr& g);

// Inner automorphism x -> g x g^-1.
Hom inner_automorphism(const GroupPtr& g, Elem x);

// Number of conjugacy classes.
std::size_t conjugacy_class_count(const Group& g);
// Class index of each element; classes numbered by least member, ascending.
std::vector<std::size_t> conjugacy_class_ids(const Group& g);

// Cheap isomorphism invariant: sorted element-order census.
std::vector<std::size_t> order_census(const Group& g);

}  // namespace sbw
