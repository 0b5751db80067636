#pragma once

#include <array>
#include <map>
#include <ostream>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "sbw/sections.hpp"

namespace sbw {

using Rational = boost::multiprecision::cpp_rational;

// Exact rational combination of section classes of G x H.
struct GammaElement {
  GroupPtr left;
  GroupPtr right;
  std::map<SectionKey, Rational, SectionKeyLess> coeffs;

  GroupPtr ambient() const { return direct_product(left, right); }
  bool is_zero() const { return coeffs.empty(); }
  bool operator==(const GammaElement& o) const {
    return left.get() == o.left.get() && right.get() == o.right.get() && coeffs == o.coeffs;
  }
  // Adds c times the class of k; k need not be canonical.
  void add_term(const SectionKey& k, const Rational& c);
  GammaElement& operator+=(const GammaElement& o);
  GammaElement& operator-=(const GammaElement& o);
  GammaElement& operator*=(const Rational& c);
};

// "c*[T|S] + ..." with element lists, for diagnostics.
std::string to_string(const GammaElement& a);
inline void PrintTo(const GammaElement& a, std::ostream* os) { *os << to_string(a); }

GammaElement operator+(GammaElement a, const GammaElement& b);
GammaElement operator-(GammaElement a, const GammaElement& b);
GammaElement operator*(const Rational& c, GammaElement a);

GammaElement zero_element(const GroupPtr& g, const GroupPtr& h);
// Class of a section of G x H with coefficient 1.
GammaElement class_element(const GroupPtr& g, const GroupPtr& h, const SectionKey& k);
GammaElement class_element(const Section& s);

// Unit-coefficient element of each section class of G x H, in class order.
std::vector<GammaElement> basis(const GroupPtr& g, const GroupPtr& h);

// Mackey product of two basis classes: class -> multiplicity. Memoized.
std::vector<std::pair<SectionKey, std::size_t>> compose_classes(const GroupPtr& g, const GroupPtr& h,
                                                                const GroupPtr& k, const SectionKey& a,
                                                                const SectionKey& b);
// a in Gamma(G, H), b in Gamma(H, K); throws MiddleMismatch.
GammaElement compose(const GammaElement& a, const GammaElement& b);

GammaElement opposite(const GammaElement& a);
GammaElement identity(const GroupPtr& g);

// Elementary bisets. Subgroups are materialized with subquotient(h, 1).
GammaElement induction(const Subgroup& h);   // Gamma(G, H)
GammaElement restriction(const Subgroup& h); // Gamma(H, G)
GammaElement inflation(const Subgroup& n);   // Gamma(G, G/N)
GammaElement deflation(const Subgroup& n);   // Gamma(G/N, G)
GammaElement inflation_along(const Hom& pi); // Gamma(X, Y) for a surjection pi : X -> Y
GammaElement deflation_along(const Hom& pi); // Gamma(Y, X)
GammaElement isomorphism(const Hom& f);      // Gamma(target, source); throws NotIso

// E_(K,P) = (Delta(P) normal in Delta_K(G)); throws NotInPoset.
Section e_section_of(const Subgroup& k, const Subgroup& p);
GammaElement e_class(const Subgroup& k, const Subgroup& p);       // [E_(K,P)]
GammaElement e_idempotent(const Subgroup& k, const Subgroup& p);  // [E_(K,P)] / |G:P|

// Ind, Inf, middle covering section, Def, Res; their composite is the class.
std::array<GammaElement, 5> factorize(const Section& s);

}  // namespace sbw
