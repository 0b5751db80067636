#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sbw/group.hpp"
#include "sbw/subgroup.hpp"

namespace sbw {

// (A, B, d) with B acting on A: action[b][a] = ^b a.
struct CrossedModule {
  GroupPtr A;
  GroupPtr B;
  Hom boundary;
  std::vector<std::vector<Elem>> action;

  Elem act(Elem b, Elem a) const { return action[b][a]; }
};

struct CMorphism {
  Hom alpha;  // on A
  Hom beta;   // on B
};

// Empty string when every axiom holds, otherwise a description of the first
// failure.
std::string check_axioms(const CrossedModule& x);
// Throws AxiomFailed.
void validate(const CrossedModule& x);

// Square d' alpha = beta d and equivariance alpha(^g a) = ^{beta g} alpha(a).
bool is_morphism(const CrossedModule& x, const CrossedModule& y, const CMorphism& m);
bool is_isomorphism(const CrossedModule& x, const CrossedModule& y, const CMorphism& m);
CMorphism compose(const CMorphism& second, const CMorphism& first);
CMorphism inverse(const CMorphism& m);
CMorphism identity_morphism(const CrossedModule& x);

// (top_a / bottom_a, top_b / bottom_b, xA -> xB) with conjugation action,
// all four subgroups in one parent group.
CrossedModule crossed_module_from_subquotients(const Subgroup& top_a, const Subgroup& bottom_a,
                                               const Subgroup& top_b, const Subgroup& bottom_b);

bool in_pair_poset(const Subgroup& k, const Subgroup& p);

// (P, G/K, i_P); throws NotInPoset unless K, P normal with [K, P] = 1.
CrossedModule from_pair(const Subgroup& k, const Subgroup& p);

// First isomorphism X -> Y in a deterministic order.
std::optional<CMorphism> iso_search(const CrossedModule& x, const CrossedModule& y);

// Cheap invariant; equal fingerprints are necessary for isomorphism.
struct CrossedFingerprint {
  std::vector<std::size_t> census_a, census_b;
  std::size_t image_order = 0;
  std::vector<std::size_t> orbit_census;
  auto operator<=>(const CrossedFingerprint&) const = default;
};
CrossedFingerprint fingerprint(const CrossedModule& x);

struct CrossedAut {
  GroupPtr aut_group;             // composition table over `auts`
  std::vector<CMorphism> auts;    // sorted by (alpha images, beta images)
  Subgroup inn;                   // inside aut_group
  GroupPtr out_group;
  std::vector<Elem> out_proj;     // aut index -> out index
  std::vector<CMorphism> out_reps;  // least automorphism in each coset
};
CrossedAut aut_out(const CrossedModule& x);

}  // namespace sbw
