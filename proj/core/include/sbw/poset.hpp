#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <vector>

#include "sbw/gamma.hpp"

namespace sbw {

// Finite poset on 0..n-1 given by its order relation.
class FinitePoset {
 public:
  // Throws InvalidArgument unless le is reflexive, antisymmetric and transitive.
  FinitePoset(std::size_t n, const std::function<bool(std::size_t, std::size_t)>& le);
  std::size_t size() const { return n_; }
  bool le(std::size_t x, std::size_t y) const { return rel_[x * n_ + y]; }
  // Least upper bound when it exists.
  std::optional<std::size_t> join(std::size_t x, std::size_t y) const;
  // Elements ordered so that x precedes every strict upper bound of x.
  const std::vector<std::size_t>& linear_extension() const { return ext_; }

 private:
  std::size_t n_;
  std::vector<char> rel_;
  std::vector<std::size_t> ext_;
};

class MobiusTable {
 public:
  explicit MobiusTable(const FinitePoset& p);
  long operator()(std::size_t x, std::size_t y) const { return mu_[x * n_ + y]; }
  // True when mu(x,x) = 1 and the sum of mu(x,z) over x <= z <= y vanishes for x < y.
  bool satisfies_recursion(const FinitePoset& p) const;

 private:
  std::size_t n_;
  std::vector<long> mu_;
};

// f_x = sum over y >= x of mu(x,y) e_y, as (y, mu) terms.
std::vector<std::vector<std::pair<std::size_t, long>>> f_expansion(const FinitePoset& p, const MobiusTable& mu);

template <class T>
std::vector<T> f_family(const FinitePoset& p, const MobiusTable& mu, const std::vector<T>& e, const T& zero) {
  std::vector<T> out;
  for (const auto& terms : f_expansion(p, mu)) {
    T f = zero;
    for (const auto& [y, c] : terms) f += Rational(c) * e[y];
    out.push_back(std::move(f));
  }
  return out;
}

// Checks e_x f_y = f_y e_x = (x <= y ? f_y : 0) and f_x f_y = delta_xy f_x.
// Returns the number of failing identities.
template <class T, class Mul>
std::size_t count_ortho_failures(const FinitePoset& p, const std::vector<T>& e, const std::vector<T>& f,
                                 const T& zero, Mul mul) {
  std::size_t bad = 0;
  for (std::size_t x = 0; x < p.size(); ++x)
    for (std::size_t y = 0; y < p.size(); ++y) {
      const T& want = p.le(x, y) ? f[y] : zero;
      if (!(mul(e[x], f[y]) == want)) ++bad;
      if (!(mul(f[y], e[x]) == want)) ++bad;
      if (!(mul(f[x], f[y]) == (x == y ? f[x] : zero))) ++bad;
    }
  return bad;
}

// Formal algebra spanned by e_x with e_x e_y = e_{x v y}, or 0 when no join exists.
struct FormalElement {
  std::vector<Rational> c;
  bool operator==(const FormalElement&) const = default;
  FormalElement& operator+=(const FormalElement& o);
};
FormalElement operator*(const Rational& s, FormalElement a);
FormalElement formal_e(const FinitePoset& p, std::size_t x);
FormalElement formal_zero(const FinitePoset& p);
FormalElement formal_mul(const FinitePoset& p, const FormalElement& a, const FormalElement& b);

struct PairKP {
  Subgroup K;
  Subgroup P;
};

// Poset of pairs (K, P) of normal subgroups with [K, P] = 1, ordered by
// K <= L and P >= Q.
struct PosetG {
  GroupPtr group;
  std::vector<PairKP> pairs;  // ordered by lattice index of K, then of P
  FinitePoset order;
  std::vector<std::size_t> join_table;  // n * n
  std::size_t minimum = 0, maximum = 0;

  std::size_t size() const { return pairs.size(); }
  std::size_t join(std::size_t x, std::size_t y) const { return join_table[x * pairs.size() + y]; }
  // Throws NotInPoset.
  std::size_t index_of(const Subgroup& k, const Subgroup& p) const;
};

// Memoized per group.
std::shared_ptr<const PosetG> build_poset(const GroupPtr& g);
std::shared_ptr<const MobiusTable> poset_mobius(const GroupPtr& g);

// e_(K,P) and f_(K,P) for every pair, in poset order. Memoized.
std::shared_ptr<const std::vector<GammaElement>> e_family(const GroupPtr& g);
std::shared_ptr<const std::vector<GammaElement>> f_family_of(const GroupPtr& g);
GammaElement f_idempotent(const Subgroup& k, const Subgroup& p);

struct ClassIdempotent {
  std::vector<std::size_t> members;
  GammaElement e;
  GammaElement f;
};
// Throws PartitionMismatch unless the classes partition the poset.
std::vector<ClassIdempotent> class_idempotents(const GroupPtr& g,
                                               const std::vector<std::vector<std::size_t>>& partition);

}  // namespace sbw
