#pragma once

#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "sbw/catalog.hpp"
#include "sbw/linalg.hpp"
#include "sbw/poset.hpp"

namespace sbw {

// p1(T) = G, p2(T) = H, k1(S) = k2(S) = 1.
bool is_covering(const Section& s);

struct CoveringClass {
  SectionKey key;
  std::size_t l0 = 0;  // poset index of (k1(T), p1(S))
  std::size_t r0 = 0;  // poset index of (k2(T), p2(S))
};

struct CoveringBasis {
  GroupPtr group;
  std::vector<CoveringClass> classes;  // in section class order
  std::unordered_map<SectionKey, std::size_t, SectionKeyHash> index;

  // Throws DecompositionMismatch when a term is not covering.
  SparseVec coords(const GammaElement& a) const;
  GammaElement element(const SparseVec& v) const;
};
// Memoized.
std::shared_ptr<const CoveringBasis> covering_basis(const GroupPtr& g);

// e_y b and b e_y for every poset element y and covering class b, in covering
// coordinates. Memoized.
struct CoveringTables {
  std::vector<std::vector<SparseVec>> left;   // [y][b] = e_y b
  std::vector<std::vector<SparseVec>> right;  // [y][b] = b e_y
};
std::shared_ptr<const CoveringTables> covering_tables(const GroupPtr& g);

// Products of covering classes whose support leaves the covering classes.
// Exhaustive when the number of pairs is at most max_pairs, otherwise a fixed
// pseudo-random sample of max_pairs pairs.
std::size_t covering_closure_violations(const GroupPtr& g, std::size_t max_pairs);

// Linkage classes of the poset, found with crossed-module isomorphism.
struct LinkagePartition {
  std::vector<std::vector<std::size_t>> classes;  // sorted members, classes by least member
  std::vector<std::size_t> class_of;
  std::vector<char> class_le;  // classes^2, induced order

  bool le(std::size_t a, std::size_t b) const { return class_le[a * classes.size() + b]; }
};
std::shared_ptr<const LinkagePartition> linkage_partition(const GroupPtr& g);

// The group of classes with l = r = (G, K, P, 1) under x.y = [x][y] / |G:P|.
struct GammaGroup {
  GroupPtr g;
  std::size_t pair = 0;
  std::vector<SectionKey> elements;  // identity (E_(K,P)) first, then class order
  GroupPtr group;                    // multiplication table over `elements`
  Rational scale;                    // 1 / |G:P|

  GammaElement element(std::size_t i) const;
};
// Memoized; throws NotInPoset.
std::shared_ptr<const GammaGroup> gamma_group(const Subgroup& k, const Subgroup& p);
std::shared_ptr<const GammaGroup> gamma_group(const GroupPtr& g, std::size_t pair);

struct ThetaCheck {
  std::size_t gamma_order = 0;
  std::size_t out_order = 0;
  bool bijective = false;       // Out reps land on distinct elements covering Gamma
  bool multiplicative = false;  // Theta(m) Theta(m') = |G:P| Theta(m m') on all of Aut
  bool kernel_is_inner = false;
  bool ok() const { return gamma_order == out_order && bijective && multiplicative && kernel_is_inner; }
};
ThetaCheck theta_check(const GroupPtr& g, std::size_t pair);

// Classes of G x H with l = (G, K, P, 1) and r = (H, L, Q, 1), found by
// running over isomorphisms H/L -> G/K and Q -> P and testing normality.
std::vector<SectionKey> bimodule_set(const Subgroup& k, const Subgroup& p, const Subgroup& l, const Subgroup& q,
                                     bool first_only = false);
bool section_linked(const Subgroup& k, const Subgroup& p, const Subgroup& l, const Subgroup& q);

struct BimoduleCheck {
  std::size_t size = 0;
  bool left_free = false, left_transitive = false;
  bool right_free = false, right_transitive = false;
  bool ok() const { return left_free && left_transitive && right_free && right_transitive; }
};
BimoduleCheck check_bimodule(const Subgroup& k, const Subgroup& p, const Subgroup& l, const Subgroup& q);

struct BlockReport {
  std::size_t linkage_class = 0;
  std::size_t n = 0;
  std::size_t gamma_order = 0;
  std::size_t ideal_dim = 0;      // dim f_class E^c
  std::size_t submodule_dim = 0;  // classes with l0 in the class
  std::size_t omega_rank = 0;     // rank of b -> b f_class on the submodule
};
struct MatrixReport {
  std::size_t covering_dim = 0;
  std::size_t block_sum = 0;
  std::vector<BlockReport> blocks;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty() && covering_dim == block_sum; }
};
MatrixReport matrix_decomposition(const GroupPtr& g);

enum class Verdict { Reduced, NotReduced, Undetermined };
enum class Rule { KleP, PltK, PKeqG, NecessaryViolated, SmallerLinked, Exhausted };
std::string to_string(Verdict v);
std::string to_string(Rule r);

struct ReducedStatus {
  std::size_t pair = 0;
  Verdict verdict = Verdict::Undetermined;
  Rule rule = Rule::Exhausted;
  std::string witness_group;  // catalog id for SmallerLinked
  std::size_t witness_pair = 0;
};

// Every rule evaluated independently.
struct RuleFirings {
  bool k_le_p = false;
  bool p_lt_k = false;
  bool pk_eq_g = false;
  bool necessary_violated = false;
  std::optional<std::pair<std::string, std::size_t>> smaller_linked;
  bool positive() const { return k_le_p; }
  bool negative() const { return p_lt_k || pk_eq_g || necessary_violated || smaller_linked.has_value(); }
};
// Throws IncompleteCatalog when the catalog misses an order below |G|.
RuleFirings evaluate_rules(const GroupPtr& g, std::size_t pair, const Catalog& catalog);
ReducedStatus reduced_status(const GroupPtr& g, std::size_t pair, const Catalog& catalog);
std::vector<ReducedStatus> reduced_statuses(const GroupPtr& g, const Catalog& catalog);

struct EssentialReport {
  std::vector<ReducedStatus> statuses;
  std::vector<std::size_t> predicted_ideal;      // section class indices of G x G, "or" reading
  std::vector<std::size_t> predicted_ideal_and;  // "and" reading of condition (i)
  std::size_t basis_dim = 0;
  bool determined = false;
  std::size_t dim_lower = 0, dim_upper = 0;          // dim of the essential algebra
  std::size_t simple_lower = 0, simple_upper = 0;    // number of simple modules
};
EssentialReport essential_report(const GroupPtr& g, const Catalog& catalog);

// Span of all products through strictly smaller catalog groups.
struct IdealOracle {
  std::size_t rank = 0;
  bool matches_or_reading = false;
  bool matches_and_reading = false;
  std::vector<char> e_in_ideal;  // per poset pair
};
IdealOracle essential_ideal_oracle(const GroupPtr& g, const Catalog& catalog);

struct SeedMember {
  std::string group_id;
  std::size_t pair = 0;
  std::size_t class_size = 0;   // size of the G-linkage class
  std::size_t gamma_order = 0;
  std::size_t irr_count = 0;
  // Conjugacy class of Gamma of this member -> conjugacy class of Gamma of
  // the first member, transported along the least bimodule element.
  std::vector<std::size_t> irr_transport;
  std::optional<Section> witness;  // linking section to the first member
};
struct SeedRow {
  std::size_t order = 0;
  std::vector<SeedMember> members;
};
struct SeedTable {
  std::vector<SeedRow> rows;
  std::size_t undetermined = 0;  // reduced-status gaps (rows are then lower bounds)
};
SeedTable seeds(const Catalog& catalog);

}  // namespace sbw
