#include "sbw/sections.hpp"

#include <map>
#include <mutex>
#include <set>
#include <unordered_map>

#include "sbw/error.hpp"

namespace sbw {

Section make_section(const Subgroup& t, const Subgroup& s) {
  require_same_parent(t, s);
  if (!is_normal(s, t)) fail(ErrorCode::NotNormal, "S is not a normal subgroup of T");
  return Section{t.parent(), t, s};
}

bool SectionKeyLess::operator()(const SectionKey& a, const SectionKey& b) const {
  if (const int c = set_compare(a.T, b.T); c != 0) return c < 0;
  return set_compare(a.S, b.S) < 0;
}

Section section_from_key(const GroupPtr& ambient, const SectionKey& k) {
  return Section{ambient, Subgroup(ambient, k.T), Subgroup(ambient, k.S)};
}

namespace {

const ProductFactors& factors_of(const Group& x) {
  if (!x.is_product()) fail(ErrorCode::NotAProduct, "ambient group carries no product structure");
  return *x.factors();
}

}  // namespace

Subgroup p1(const Subgroup& u) {
  const Group& x = *u.parent();
  const auto& f = factors_of(x);
  ElementSet s(f.left->order());
  u.elems().for_each([&](Elem e) { s.insert(x.left_of(e)); });
  return Subgroup(f.left, std::move(s));
}

Subgroup k1(const Subgroup& u) {
  const Group& x = *u.parent();
  const auto& f = factors_of(x);
  ElementSet s(f.left->order());
  u.elems().for_each([&](Elem e) {
    if (x.right_of(e) == 0) s.insert(x.left_of(e));
  });
  return Subgroup(f.left, std::move(s));
}

Subgroup p2(const Subgroup& u) {
  const Group& x = *u.parent();
  const auto& f = factors_of(x);
  ElementSet s(f.right->order());
  u.elems().for_each([&](Elem e) { s.insert(x.right_of(e)); });
  return Subgroup(f.right, std::move(s));
}

Subgroup k2(const Subgroup& u) {
  const Group& x = *u.parent();
  const auto& f = factors_of(x);
  ElementSet s(f.right->order());
  u.elems().for_each([&](Elem e) {
    if (x.left_of(e) == 0) s.insert(x.right_of(e));
  });
  return Subgroup(f.right, std::move(s));
}

SectionInvariants invariants(const Section& s) {
  SectionInvariants inv{{p1(s.T), k1(s.T), p1(s.S), k1(s.S)}, {p2(s.T), k2(s.T), p2(s.S), k2(s.S)}, {}, {}};
  inv.l0 = {inv.l.kT, inv.l.pS};
  inv.r0 = {inv.r.kT, inv.r.pS};
  return inv;
}

GoursatQuintuple goursat(const Subgroup& u) {
  const Group& x = *u.parent();
  factors_of(x);
  GoursatQuintuple q{p1(u), k1(u), k2(u), p2(u), nullptr, nullptr, {}};
  q.pk = subquotient(q.P, q.K);
  q.ql = subquotient(q.Q, q.L);
  q.eta = Hom{q.ql->group, q.pk->group, std::vector<Elem>(q.ql->lift.size(), kNoElem)};
  u.elems().for_each([&](Elem e) { q.eta.images[q.ql->proj[x.right_of(e)]] = q.pk->proj[x.left_of(e)]; });
  return q;
}

GoursatQuintuple make_quintuple(const Subgroup& p, const Subgroup& k, const Hom& eta, const Subgroup& l,
                                const Subgroup& q) {
  require_same_parent(p, k);
  require_same_parent(l, q);
  GoursatQuintuple g{p, k, l, q, subquotient(p, k), subquotient(q, l), eta};
  if (eta.source.get() != g.ql->group.get() || eta.target.get() != g.pk->group.get())
    fail(ErrorCode::NotIso, "eta does not map Q/L to P/K");
  if (!eta.is_homomorphism() || !eta.is_bijective()) fail(ErrorCode::NotIso, "eta is not an isomorphism");
  return g;
}

Subgroup subgroup_from_goursat(const GoursatQuintuple& q) {
  const auto x = direct_product(q.P.parent(), q.Q.parent());
  ElementSet u(x->order());
  q.P.elems().for_each([&](Elem g) {
    const Elem gk = q.pk->proj[g];
    q.Q.elems().for_each([&](Elem h) {
      if (q.eta(q.ql->proj[h]) == gk) u.insert(x->pair(g, h));
    });
  });
  return Subgroup(x, std::move(u));
}

namespace {

void require_compatible(const GoursatQuintuple& q1, const GoursatQuintuple& q2) {
  require_same_parent(q1.P, q2.P);
  require_same_parent(q1.Q, q2.Q);
}

bool commutator_inside(const Subgroup& a, const Subgroup& b, const Subgroup& c) {
  const Group& g = *a.parent();
  bool ok = true;
  a.elems().for_each([&](Elem x) {
    b.elems().for_each([&](Elem y) {
      if (ok && !c.contains(g.mul(g.mul(x, y), g.mul(g.inv(x), g.inv(y))))) ok = false;
    });
  });
  return ok;
}

// a/bottom centralizes b/bottom inside top/bottom.
bool centralizes_mod(const Subgroup& top, const Subgroup& bottom, const Subgroup& a, const Subgroup& b) {
  const auto sq = subquotient(top, bottom);
  const Group& q = *sq->group;
  ElementSet ia(q.order()), ib(q.order());
  a.elems().for_each([&](Elem x) { ia.insert(sq->proj[x]); });
  b.elems().for_each([&](Elem x) { ib.insert(sq->proj[x]); });
  bool ok = true;
  ia.for_each([&](Elem x) {
    ib.for_each([&](Elem y) {
      if (ok && q.mul(x, y) != q.mul(y, x)) ok = false;
    });
  });
  return ok;
}

}  // namespace

bool condition_s3(const GoursatQuintuple& q1, const GoursatQuintuple& q2) {
  require_compatible(q1, q2);
  return is_normal(q2.K, q1.K) && is_normal(q2.L, q1.L);
}

bool condition_s4(const GoursatQuintuple& q1, const GoursatQuintuple& q2) {
  require_compatible(q1, q2);
  return is_normal(q2.K, q1.P) && is_normal(q2.P, q1.P) && is_normal(q2.L, q1.Q) &&
         is_normal(q2.Q, q1.Q);
}

bool condition_s5(const GoursatQuintuple& q1, const GoursatQuintuple& q2) {
  require_compatible(q1, q2);
  return commutator_inside(q1.K, q2.P, q2.K) && commutator_inside(q1.L, q2.Q, q2.L);
}

bool condition_s5_prime(const GoursatQuintuple& q1, const GoursatQuintuple& q2) {
  require_compatible(q1, q2);
  if (!is_normal(q2.K, q1.P) || !is_normal(q2.L, q1.Q)) return false;
  if (!q1.K.is_subgroup_of(q1.P) || !q2.P.is_subgroup_of(q1.P)) return false;
  if (!q1.L.is_subgroup_of(q1.Q) || !q2.Q.is_subgroup_of(q1.Q)) return false;
  return centralizes_mod(q1.P, q2.K, q1.K, q2.P) && centralizes_mod(q1.Q, q2.L, q1.L, q2.Q);
}

std::pair<CrossedModule, CrossedModule> s6_crossed_modules(const GoursatQuintuple& q1,
                                                           const GoursatQuintuple& q2) {
  return {crossed_module_from_subquotients(q2.P, q2.K, q1.P, q1.K),
          crossed_module_from_subquotients(q2.Q, q2.L, q1.Q, q1.L)};
}

std::optional<std::string> first_failed_condition(const GoursatQuintuple& q1, const GoursatQuintuple& q2) {
  if (!condition_s3(q1, q2)) return "S3";
  if (!condition_s4(q1, q2)) return "S4";
  if (!condition_s5(q1, q2)) return "S5";
  std::optional<std::pair<CrossedModule, CrossedModule>> xs;
  try {
    xs = s6_crossed_modules(q1, q2);
  } catch (const Error&) {
    return "S6";
  }
  if (!check_axioms(xs->first).empty() || !check_axioms(xs->second).empty()) return "S6";
  const CMorphism m{q2.eta, q1.eta};
  if (!is_isomorphism(xs->second, xs->first, m)) return "S7";
  return std::nullopt;
}

Section section_from_goursat_pair(const GoursatQuintuple& q1, const GoursatQuintuple& q2) {
  if (auto tag = first_failed_condition(q1, q2))
    fail(ErrorCode::ConditionViolated, "section condition " + *tag + " fails", *tag);
  Subgroup t = subgroup_from_goursat(q1);
  Subgroup s = subgroup_from_goursat(q2);
  if (!is_normal(s, t)) fail(ErrorCode::AxiomFailed, "conditions hold but S is not normal in T");
  return Section{t.parent(), std::move(t), std::move(s)};
}

Subgroup opposite(const Subgroup& u) {
  const Group& x = *u.parent();
  const auto& f = factors_of(x);
  const auto y = direct_product(f.right, f.left);
  ElementSet s(y->order());
  u.elems().for_each([&](Elem e) { s.insert(y->pair(x.right_of(e), x.left_of(e))); });
  return Subgroup(y, std::move(s));
}

Section opposite(const Section& s) {
  Subgroup t = opposite(s.T);
  Subgroup u = opposite(s.S);
  return Section{t.parent(), std::move(t), std::move(u)};
}

ElementSet star_sets(const Group& gh, const ElementSet& a, const Group& hk, const ElementSet& b,
                     const Group& gk) {
  const std::size_t nh = factors_of(hk).left->order();
  std::vector<boost::container::small_vector<Elem, 8>> left(nh), right(nh);
  a.for_each([&](Elem e) { left[gh.right_of(e)].push_back(gh.left_of(e)); });
  b.for_each([&](Elem e) { right[hk.left_of(e)].push_back(hk.right_of(e)); });
  ElementSet out(gk.order());
  for (std::size_t h = 0; h < nh; ++h)
    for (Elem g : left[h])
      for (Elem k : right[h]) out.insert(gk.pair(g, k));
  return out;
}

Subgroup star(const Subgroup& a, const Subgroup& b) {
  const auto& fa = factors_of(*a.parent());
  const auto& fb = factors_of(*b.parent());
  if (fa.right.get() != fb.left.get()) fail(ErrorCode::MiddleMismatch, "middle factors differ");
  const auto gk = direct_product(fa.left, fb.right);
  return Subgroup(gk, star_sets(*a.parent(), a.elems(), *b.parent(), b.elems(), *gk));
}

namespace {

struct TInfo {
  ElementSet tmin;
  Elem g0 = 0;
  std::vector<Elem> normalizer;
};

struct AmbientCache {
  std::mutex mutex;
  std::unordered_map<ElementSet, std::shared_ptr<const TInfo>, ElementSetHash> tinfo;
  std::unordered_map<SectionKey, SectionKey, SectionKeyHash> canon;
};

std::shared_ptr<AmbientCache> cache_for(const Group& x) {
  static std::mutex mutex;
  static std::map<std::size_t, std::shared_ptr<AmbientCache>> caches;
  std::lock_guard lock(mutex);
  auto& c = caches[x.id()];
  if (!c) c = std::make_shared<AmbientCache>();
  return c;
}

std::shared_ptr<const TInfo> compute_tinfo(const Group& x, const ElementSet& t) {
  auto info = std::make_shared<TInfo>();
  info->tmin = t;
  for (Elem g = 1; g < x.order(); ++g) {
    ElementSet c = conjugate_set(x, t, g);
    if (lex_compare(c, info->tmin) < 0) {
      info->tmin = std::move(c);
      info->g0 = g;
    }
  }
  for (Elem g = 0; g < x.order(); ++g)
    if (conjugate_set(x, info->tmin, g) == info->tmin) info->normalizer.push_back(g);
  return info;
}

constexpr std::size_t kCanonMemoLimit = 1u << 21;

}  // namespace

SectionKey canonical_key(const GroupPtr& ambient, const SectionKey& k) {
  const Group& x = *ambient;
  if (x.is_abelian()) return k;
  const auto cache = cache_for(x);
  std::shared_ptr<const TInfo> info;
  {
    std::lock_guard lock(cache->mutex);
    if (auto it = cache->canon.find(k); it != cache->canon.end()) return it->second;
    if (auto it = cache->tinfo.find(k.T); it != cache->tinfo.end()) info = it->second;
  }
  if (!info) {
    info = compute_tinfo(x, k.T);
    std::lock_guard lock(cache->mutex);
    cache->tinfo.emplace(k.T, info);
  }
  const ElementSet s0 = conjugate_set(x, k.S, info->g0);
  ElementSet best = s0;
  for (Elem n : info->normalizer) {
    ElementSet c = conjugate_set(x, s0, n);
    if (lex_compare(c, best) < 0) best = std::move(c);
  }
  SectionKey result{info->tmin, std::move(best)};
  std::lock_guard lock(cache->mutex);
  if (cache->canon.size() > kCanonMemoLimit) cache->canon.clear();
  cache->canon.emplace(k, result);
  return result;
}

Section canonical(const Section& s) { return section_from_key(s.ambient, canonical_key(s.ambient, key_of(s))); }

SectionClass section_class(const Section& s) {
  SectionClass c{canonical(s), 1};
  const Group& x = *s.ambient;
  if (x.is_abelian()) return c;
  std::size_t stab = 0;
  for (Elem g = 0; g < x.order(); ++g)
    if (conjugate_set(x, s.T.elems(), g) == s.T.elems() && conjugate_set(x, s.S.elems(), g) == s.S.elems())
      ++stab;
  c.orbit_size = x.order() / stab;
  return c;
}

std::shared_ptr<const std::vector<SectionClass>> enumerate_sections(const GroupPtr& x) {
  static std::mutex mutex;
  static std::map<std::size_t, std::shared_ptr<const std::vector<SectionClass>>> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(x->id()); it != cache.end()) return it->second;
  }
  const auto lat = subgroup_lattice(x);
  std::set<SectionKey, SectionKeyLess> keys;
  for (const auto& cls : lat->classes)
    for (const auto& s : normal_subgroups_of(cls.rep)) keys.insert(canonical_key(x, {cls.rep.elems(), s.elems()}));
  auto out = std::make_shared<std::vector<SectionClass>>();
  out->reserve(keys.size());
  for (const auto& k : keys) out->push_back(section_class(section_from_key(x, k)));
  std::lock_guard lock(mutex);
  return cache.emplace(x->id(), std::move(out)).first->second;
}

std::vector<Section> all_sections(const GroupPtr& x) {
  std::vector<Section> out;
  for (const auto& t : subgroup_lattice(x)->all)
    for (auto& s : normal_subgroups_of(t)) out.push_back(Section{x, t, std::move(s)});
  return out;
}

}  // namespace sbw
