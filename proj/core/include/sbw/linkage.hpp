#pragma once

#include <optional>

#include "sbw/crossed_module.hpp"
#include "sbw/sections.hpp"

namespace sbw {

// Section of G x G attached to an automorphism of (P, G/K, i_P).
Section theta(const Subgroup& k, const Subgroup& p, const CMorphism& m);

struct LinkWitness {
  CMorphism iso;     // (Q, H/L, i_Q) -> (P, G/K, i_P)
  Section section;   // canonical, l = (G, K, P, 1), r = (H, L, Q, 1)
};
// Linkage of (G, K, P) with (H, L, Q); G and H are the parents.
std::optional<LinkWitness> linked(const Subgroup& k, const Subgroup& p, const Subgroup& l,
                                  const Subgroup& q);

// Section built from a crossed-module isomorphism (Q, H/L) -> (P, G/K).
Section linking_section(const Subgroup& k, const Subgroup& p, const Subgroup& l, const Subgroup& q,
                        const CMorphism& iso);

}  // namespace sbw
