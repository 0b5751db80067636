#pragma once

#include <memory>
#include <span>
#include <unordered_map>
#include <vector>

#include "sbw/group.hpp"

namespace sbw {

// A subgroup stored as a membership set inside its parent group.
class Subgroup {
 public:
  Subgroup() = default;
  // Trusted constructor: elems must already be closed.
  Subgroup(GroupPtr parent, ElementSet elems);

  const GroupPtr& parent() const { return parent_; }
  const ElementSet& elems() const { return elems_; }
  std::size_t order() const { return order_; }
  bool contains(Elem e) const { return elems_.contains(e); }
  std::vector<Elem> elements() const { return elems_.to_vector(); }
  bool is_trivial() const { return order_ == 1; }
  bool is_whole() const { return parent_ && order_ == parent_->order(); }
  bool is_subgroup_of(const Subgroup& other) const;

  bool operator==(const Subgroup& o) const {
    return parent_.get() == o.parent_.get() && elems_ == o.elems_;
  }

 private:
  GroupPtr parent_;
  ElementSet elems_;
  std::size_t order_ = 0;
};

// Orders by size first, then lexicographically on the sorted element list.
bool subgroup_less(const Subgroup& a, const Subgroup& b);
int set_compare(const ElementSet& a, const ElementSet& b);

void require_same_parent(const Subgroup& a, const Subgroup& b);

Subgroup trivial_subgroup(const GroupPtr& g);
Subgroup whole_group(const GroupPtr& g);
Subgroup generate(const GroupPtr& g, std::span<const Elem> gens);
// Closure of an arbitrary element set.
Subgroup generate_from(const GroupPtr& g, const ElementSet& seed);
// Validating constructor; throws NotSubgroup.
Subgroup subgroup_from_elements(const GroupPtr& g, std::span<const Elem> elems);

Subgroup join(const Subgroup& a, const Subgroup& b);
Subgroup meet(const Subgroup& a, const Subgroup& b);
Subgroup conjugate(const Subgroup& a, Elem g);
ElementSet conjugate_set(const Group& g, const ElementSet& s, Elem x);

// A normal in B (false when A is not contained in B).
bool is_normal(const Subgroup& a, const Subgroup& b);
bool is_normal_in_parent(const Subgroup& a);

Subgroup centralizer(const Subgroup& x);
Subgroup centralizer_in(const Subgroup& b, const Subgroup& x);
Subgroup normalizer(const Subgroup& x);
Subgroup commutator(const Subgroup& a, const Subgroup& b);
Subgroup center(const GroupPtr& g);
Subgroup normal_closure(const Subgroup& x, const Subgroup& b);

struct SubgroupClass {
  Subgroup rep;                       // lexicographically least member
  std::vector<std::size_t> members;   // indices into SubgroupLattice::all
};

struct SubgroupLattice {
  std::vector<Subgroup> all;          // sorted by subgroup_less
  std::vector<SubgroupClass> classes; // sorted by representative
  std::vector<std::size_t> normal;    // indices of normal subgroups
  std::vector<std::size_t> class_of;  // subgroup index -> class index
  std::unordered_map<ElementSet, std::size_t, ElementSetHash> index;

  // Throws NotSubgroup when s is not a subgroup.
  std::size_t index_of(const ElementSet& s) const;
};

// Memoized per group.
std::shared_ptr<const SubgroupLattice> subgroup_lattice(const GroupPtr& g);
std::vector<Subgroup> enumerate_subgroups(const GroupPtr& g);
std::vector<Subgroup> normal_subgroups(const GroupPtr& g);
// Subgroups of the parent contained in a, in lattice order.
std::vector<Subgroup> subgroups_of(const Subgroup& a);
std::vector<Subgroup> normal_subgroups_of(const Subgroup& a);

// One representative (least index) per double coset A g B, ascending.
std::vector<Elem> double_cosets(const Subgroup& a, const Subgroup& b);

// top/bottom materialized as a group. Coset representatives are least
// elements, ordered ascending, so index 0 is the identity coset.
struct SubQuotient {
  Subgroup top;
  Subgroup bottom;
  GroupPtr group;
  std::vector<Elem> proj;  // parent element -> coset index, kNoElem outside top
  std::vector<Elem> lift;  // coset index -> representative in parent
};
using SubQuotientPtr = std::shared_ptr<const SubQuotient>;

// Memoized. When top is the whole parent and bottom is trivial the parent
// itself is returned as the group.
SubQuotientPtr subquotient(const Subgroup& top, const Subgroup& bottom);
SubQuotientPtr materialize(const Subgroup& a);

struct Quotient {
  GroupPtr group;
  Hom proj;
};
Quotient quotient(const Subgroup& n);

Subgroup image(const Hom& h, const Subgroup& a);
Subgroup preimage(const Hom& h, const Subgroup& b);
Subgroup kernel(const Hom& h);

}  // namespace sbw
