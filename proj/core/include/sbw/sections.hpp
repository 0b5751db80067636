#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sbw/crossed_module.hpp"
#include "sbw/subgroup.hpp"

namespace sbw {

// A pair S normal in T inside an ambient group (usually a direct product).
struct Section {
  GroupPtr ambient;
  Subgroup T;
  Subgroup S;

  bool operator==(const Section& o) const {
    return ambient.get() == o.ambient.get() && T == o.T && S == o.S;
  }
};

// Validating constructor; throws NotNormal or MixedParents.
Section make_section(const Subgroup& t, const Subgroup& s);

// Ordering used for section classes: |T|, T, |S|, S.
struct SectionKey {
  ElementSet T;
  ElementSet S;
  bool operator==(const SectionKey&) const = default;
};
struct SectionKeyLess {
  bool operator()(const SectionKey& a, const SectionKey& b) const;
};
struct SectionKeyHash {
  std::size_t operator()(const SectionKey& k) const {
    return k.T.hash() * 31u ^ (k.S.hash() + 0x9e3779b97f4a7c15ull);
  }
};
inline SectionKey key_of(const Section& s) { return {s.T.elems(), s.S.elems()}; }
Section section_from_key(const GroupPtr& ambient, const SectionKey& k);

// Projections and kernels for subgroups of a direct product.
Subgroup p1(const Subgroup& u);
Subgroup k1(const Subgroup& u);
Subgroup p2(const Subgroup& u);
Subgroup k2(const Subgroup& u);

struct Invariants4 {
  Subgroup pT, kT, pS, kS;
};
struct SectionInvariants {
  Invariants4 l, r;
  std::pair<Subgroup, Subgroup> l0, r0;
};
SectionInvariants invariants(const Section& s);

// (P, K, eta, L, Q) with eta : Q/L -> P/K.
struct GoursatQuintuple {
  Subgroup P, K, L, Q;
  SubQuotientPtr pk;  // P/K
  SubQuotientPtr ql;  // Q/L
  Hom eta;
};

GoursatQuintuple goursat(const Subgroup& u);
// Validates K normal in P, L normal in Q and eta bijective; throws NotNormal or NotIso.
GoursatQuintuple make_quintuple(const Subgroup& p, const Subgroup& k, const Hom& eta,
                                const Subgroup& l, const Subgroup& q);
Subgroup subgroup_from_goursat(const GoursatQuintuple& q);

// Section conditions for the Goursat correspondents q1 (of T) and q2 (of S).
bool condition_s3(const GoursatQuintuple& q1, const GoursatQuintuple& q2);
bool condition_s4(const GoursatQuintuple& q1, const GoursatQuintuple& q2);
bool condition_s5(const GoursatQuintuple& q1, const GoursatQuintuple& q2);
// Centralizer form, evaluated in the quotients P1/K2 and Q1/L2.
bool condition_s5_prime(const GoursatQuintuple& q1, const GoursatQuintuple& q2);
// The two crossed modules of condition S6 (valid once S3-S5 hold).
std::pair<CrossedModule, CrossedModule> s6_crossed_modules(const GoursatQuintuple& q1,
                                                           const GoursatQuintuple& q2);
// Tag of the first failing condition among S3..S7, or nullopt.
std::optional<std::string> first_failed_condition(const GoursatQuintuple& q1,
                                                  const GoursatQuintuple& q2);
// Throws ConditionViolated with the tag of the first failing condition.
Section section_from_goursat_pair(const GoursatQuintuple& q1, const GoursatQuintuple& q2);

Subgroup opposite(const Subgroup& u);
Section opposite(const Section& s);

// Relational composition of A <= G x H and B <= H x K; throws MiddleMismatch.
Subgroup star(const Subgroup& a, const Subgroup& b);
// Bare-set variant on a fixed output ambient (G x K).
ElementSet star_sets(const Group& gh, const ElementSet& a, const Group& hk, const ElementSet& b,
                     const Group& gk);

// Least (T, S) in the simultaneous conjugation orbit.
SectionKey canonical_key(const GroupPtr& ambient, const SectionKey& k);
Section canonical(const Section& s);

struct SectionClass {
  Section canonical;
  std::size_t orbit_size = 1;
};
SectionClass section_class(const Section& s);

// All classes of sections of the group, sorted by SectionKeyLess. Memoized.
std::shared_ptr<const std::vector<SectionClass>> enumerate_sections(const GroupPtr& x);

// Every section (not up to conjugacy), in lattice order of T then S.
std::vector<Section> all_sections(const GroupPtr& x);

}  // namespace sbw
