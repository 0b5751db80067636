#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "sbw/element_set.hpp"

namespace sbw {

// Largest group order the library will materialize. Defaults to 512 and can
// be overridden by the SBW_MAX_ORDER environment variable or set_order_cap().
std::size_t order_cap();
void set_order_cap(std::size_t cap);
void check_order(std::size_t order, const std::string& what);

class Group;
using GroupPtr = std::shared_ptr<const Group>;

struct ProductFactors {
  GroupPtr left;
  GroupPtr right;
};

// A finite group given by its multiplication table. Element 0 is the
// identity. Instances are immutable and shared through GroupPtr.
class Group {
 public:
  struct Token;  // restricts construction to the factory functions

  Group(const Token&, std::string name, std::size_t order, std::vector<Elem> table,
        std::optional<ProductFactors> factors, std::vector<std::vector<Elem>> perm_gens);

  std::size_t order() const { return order_; }
  const std::string& name() const { return name_; }
  std::size_t id() const { return id_; }

  Elem mul(Elem a, Elem b) const { return table_[a * order_ + b]; }
  Elem inv(Elem a) const { return inverse_[a]; }
  // g x g^-1
  Elem conj(Elem g, Elem x) const { return mul(mul(g, x), inverse_[g]); }
  std::size_t element_order(Elem a) const { return element_order_[a]; }

  const std::vector<Elem>& table() const { return table_; }
  std::vector<std::vector<Elem>> table_rows() const;
  const std::vector<Elem>& generators() const { return generators_; }
  const std::vector<std::vector<Elem>>& perm_gens() const { return perm_gens_; }
  bool is_abelian() const { return abelian_; }
  std::size_t exponent() const;

  // Direct-product metadata: element (g, h) has index g * |H| + h.
  const std::optional<ProductFactors>& factors() const { return factors_; }
  bool is_product() const { return factors_.has_value(); }
  Elem left_of(Elem x) const { return static_cast<Elem>(x / right_order_); }
  Elem right_of(Elem x) const { return static_cast<Elem>(x % right_order_); }
  Elem pair(Elem g, Elem h) const { return static_cast<Elem>(g * right_order_ + h); }

  ElementSet all() const { return ElementSet::full(order_); }

  // Same object, or the same multiplication table.
  bool same_as(const Group& other) const;

 private:
  std::string name_;
  std::size_t order_;
  std::size_t id_;
  std::vector<Elem> table_;
  std::vector<Elem> inverse_;
  std::vector<std::size_t> element_order_;
  std::vector<Elem> generators_;
  std::optional<ProductFactors> factors_;
  std::size_t right_order_ = 1;
  std::vector<std::vector<Elem>> perm_gens_;
  bool abelian_ = true;
};

// Checks the group axioms on a square table; throws NoIdentity, NotClosed or
// NonAssociative.
void validate_table(const std::vector<std::vector<Elem>>& table);

GroupPtr group_from_table(std::string name, const std::vector<std::vector<Elem>>& table);
GroupPtr group_from_permutations(std::string name, const std::vector<std::vector<Elem>>& gens);

// Builds an already-valid table without re-checking associativity.
GroupPtr group_from_trusted_table(std::string name, std::size_t order, std::vector<Elem> table);

GroupPtr cyclic_group(std::size_t n);
GroupPtr dihedral_group(std::size_t order);    // order 2n, <r, s | r^n, s^2, srs^-1 = r^-1>
GroupPtr quaternion_group(std::size_t order);  // order 4m, <x, y | x^2m, y^2 = x^m, yxy^-1 = x^-1>
GroupPtr symmetric_group(std::size_t n);

// Memoized per (G, H) so repeated requests return the same object.
GroupPtr direct_product(const GroupPtr& g, const GroupPtr& h);

// Homomorphism given by the image of every source element.
struct Hom {
  GroupPtr source;
  GroupPtr target;
  std::vector<Elem> images;

  Elem operator()(Elem a) const { return images[a]; }
  bool is_homomorphism() const;
  bool is_bijective() const;
  Hom inverse() const;
  static Hom identity(const GroupPtr& g);
};

// (this after first): x -> second(first(x))
Hom compose_homs(const Hom& second, const Hom& first);

struct ProductMaps {
  Hom proj_left, proj_right, inj_left, inj_right;
};
ProductMaps product_maps(const GroupPtr& product);

}  // namespace sbw
