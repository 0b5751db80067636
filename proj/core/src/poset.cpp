#include "sbw/poset.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "sbw/crossed_module.hpp"
#include "sbw/error.hpp"

namespace sbw {

FinitePoset::FinitePoset(std::size_t n, const std::function<bool(std::size_t, std::size_t)>& le)
    : n_(n), rel_(n * n) {
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) rel_[x * n + y] = le(x, y) ? 1 : 0;
  for (std::size_t x = 0; x < n; ++x) {
    if (!this->le(x, x)) fail(ErrorCode::InvalidArgument, "order relation is not reflexive");
    for (std::size_t y = 0; y < n; ++y) {
      if (x != y && this->le(x, y) && this->le(y, x))
        fail(ErrorCode::InvalidArgument, "order relation is not antisymmetric");
      if (!this->le(x, y)) continue;
      for (std::size_t z = 0; z < n; ++z)
        if (this->le(y, z) && !this->le(x, z)) fail(ErrorCode::InvalidArgument, "order relation is not transitive");
    }
  }
  std::vector<std::size_t> below(n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) below[x] += this->le(y, x);
  ext_.resize(n);
  for (std::size_t i = 0; i < n; ++i) ext_[i] = i;
  std::stable_sort(ext_.begin(), ext_.end(), [&](std::size_t a, std::size_t b) { return below[a] < below[b]; });
}

std::optional<std::size_t> FinitePoset::join(std::size_t x, std::size_t y) const {
  std::vector<std::size_t> ub;
  for (std::size_t z = 0; z < n_; ++z)
    if (le(x, z) && le(y, z)) ub.push_back(z);
  for (std::size_t u : ub)
    if (std::all_of(ub.begin(), ub.end(), [&](std::size_t v) { return le(u, v); })) return u;
  return std::nullopt;
}

MobiusTable::MobiusTable(const FinitePoset& p) : n_(p.size()), mu_(n_ * n_) {
  const auto& ext = p.linear_extension();
  for (std::size_t x = 0; x < n_; ++x) {
    mu_[x * n_ + x] = 1;
    for (std::size_t y : ext) {
      if (y == x || !p.le(x, y)) continue;
      long s = 0;
      for (std::size_t z = 0; z < n_; ++z)
        if (z != y && p.le(x, z) && p.le(z, y)) s += mu_[x * n_ + z];
      mu_[x * n_ + y] = -s;
    }
  }
}

bool MobiusTable::satisfies_recursion(const FinitePoset& p) const {
  for (std::size_t x = 0; x < n_; ++x) {
    if ((*this)(x, x) != 1) return false;
    for (std::size_t y = 0; y < n_; ++y) {
      if (x == y || !p.le(x, y)) {
        if (x != y && (*this)(x, y) != 0) return false;
        continue;
      }
      long s = 0;
      for (std::size_t z = 0; z < n_; ++z)
        if (p.le(x, z) && p.le(z, y)) s += (*this)(x, z);
      if (s != 0) return false;
    }
  }
  return true;
}

std::vector<std::vector<std::pair<std::size_t, long>>> f_expansion(const FinitePoset& p, const MobiusTable& mu) {
  std::vector<std::vector<std::pair<std::size_t, long>>> out(p.size());
  for (std::size_t x = 0; x < p.size(); ++x)
    for (std::size_t y = 0; y < p.size(); ++y)
      if (p.le(x, y) && mu(x, y) != 0) out[x].push_back({y, mu(x, y)});
  return out;
}

FormalElement& FormalElement::operator+=(const FormalElement& o) {
  for (std::size_t i = 0; i < c.size(); ++i) c[i] += o.c[i];
  return *this;
}

FormalElement operator*(const Rational& s, FormalElement a) {
  for (auto& v : a.c) v *= s;
  return a;
}

FormalElement formal_zero(const FinitePoset& p) { return FormalElement{std::vector<Rational>(p.size())}; }

FormalElement formal_e(const FinitePoset& p, std::size_t x) {
  FormalElement e = formal_zero(p);
  e.c[x] = 1;
  return e;
}

FormalElement formal_mul(const FinitePoset& p, const FormalElement& a, const FormalElement& b) {
  FormalElement out = formal_zero(p);
  for (std::size_t x = 0; x < p.size(); ++x) {
    if (a.c[x] == 0) continue;
    for (std::size_t y = 0; y < p.size(); ++y) {
      if (b.c[y] == 0) continue;
      if (const auto j = p.join(x, y)) out.c[*j] += a.c[x] * b.c[y];
    }
  }
  return out;
}

std::size_t PosetG::index_of(const Subgroup& k, const Subgroup& p) const {
  for (std::size_t i = 0; i < pairs.size(); ++i)
    if (pairs[i].K == k && pairs[i].P == p) return i;
  fail(ErrorCode::NotInPoset, "pair is not in the poset of normal commuting pairs");
}

namespace {

template <class V, int Tag = 0>
std::shared_ptr<const V> memo_by_group(const GroupPtr& g, const std::function<V()>& make) {
  static std::mutex mutex;
  static std::map<std::size_t, std::shared_ptr<const V>> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(g->id()); it != cache.end()) return it->second;
  }
  auto v = std::make_shared<const V>(make());
  std::lock_guard lock(mutex);
  return cache.emplace(g->id(), std::move(v)).first->second;
}

PosetG make_poset_g(const GroupPtr& g) {
  const auto lat = subgroup_lattice(g);
  std::vector<PairKP> pairs;
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> index;
  for (std::size_t ki : lat->normal)
    for (std::size_t pi : lat->normal)
      if (in_pair_poset(lat->all[ki], lat->all[pi])) {
        index[{ki, pi}] = pairs.size();
        pairs.push_back({lat->all[ki], lat->all[pi]});
      }
  FinitePoset order(pairs.size(), [&](std::size_t x, std::size_t y) {
    return pairs[x].K.is_subgroup_of(pairs[y].K) && pairs[y].P.is_subgroup_of(pairs[x].P);
  });
  const std::size_t n = pairs.size();
  std::vector<std::size_t> joins(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      const auto k = join(pairs[x].K, pairs[y].K);
      const auto p = meet(pairs[x].P, pairs[y].P);
      joins[x * n + y] = index.at({lat->index_of(k.elems()), lat->index_of(p.elems())});
    }
  const std::size_t triv = lat->index_of(trivial_subgroup(g).elems());
  const std::size_t whole = lat->index_of(whole_group(g).elems());
  PosetG out{g, std::move(pairs), std::move(order), std::move(joins), 0, 0};
  out.minimum = index.at({triv, whole});
  out.maximum = index.at({whole, triv});
  return out;
}

}  // namespace

std::shared_ptr<const PosetG> build_poset(const GroupPtr& g) {
  return memo_by_group<PosetG>(g, [&] { return make_poset_g(g); });
}

std::shared_ptr<const MobiusTable> poset_mobius(const GroupPtr& g) {
  return memo_by_group<MobiusTable>(g, [&] { return MobiusTable(build_poset(g)->order); });
}

std::shared_ptr<const std::vector<GammaElement>> e_family(const GroupPtr& g) {
  return memo_by_group<std::vector<GammaElement>>(g, [&] {
    std::vector<GammaElement> out;
    for (const auto& pr : build_poset(g)->pairs) out.push_back(e_idempotent(pr.K, pr.P));
    return out;
  });
}

std::shared_ptr<const std::vector<GammaElement>> f_family_of(const GroupPtr& g) {
  return memo_by_group<std::vector<GammaElement>, 1>(
      g, [&] { return f_family(build_poset(g)->order, *poset_mobius(g), *e_family(g), zero_element(g, g)); });
}

GammaElement f_idempotent(const Subgroup& k, const Subgroup& p) {
  const GroupPtr& g = k.parent();
  return (*f_family_of(g))[build_poset(g)->index_of(k, p)];
}

std::vector<ClassIdempotent> class_idempotents(const GroupPtr& g,
                                               const std::vector<std::vector<std::size_t>>& partition) {
  const auto poset = build_poset(g);
  std::vector<int> seen(poset->size());
  for (const auto& cls : partition) {
    if (cls.empty()) fail(ErrorCode::PartitionMismatch, "empty class in partition");
    for (std::size_t i : cls) {
      if (i >= poset->size() || seen[i]++) fail(ErrorCode::PartitionMismatch, "classes do not partition the poset");
    }
  }
  if (std::count(seen.begin(), seen.end(), 1) != static_cast<long>(poset->size()))
    fail(ErrorCode::PartitionMismatch, "classes do not cover the poset");
  const auto& e = *e_family(g);
  const auto& f = *f_family_of(g);
  std::vector<ClassIdempotent> out;
  for (const auto& cls : partition) {
    ClassIdempotent c{cls, zero_element(g, g), zero_element(g, g)};
    for (std::size_t i : cls) {
      c.e += e[i];
      c.f += f[i];
    }
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace sbw
