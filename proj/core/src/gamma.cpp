#include "sbw/gamma.hpp"

#include <mutex>
#include <unordered_map>

#include "sbw/crossed_module.hpp"
#include "sbw/error.hpp"

namespace sbw {

void GammaElement::add_term(const SectionKey& k, const Rational& c) {
  if (c == 0) return;
  const auto key = canonical_key(ambient(), k);
  auto [it, inserted] = coeffs.emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) coeffs.erase(it);
  }
}

namespace {

void require_same_space(const GammaElement& a, const GammaElement& b) {
  if (a.left.get() != b.left.get() || a.right.get() != b.right.get())
    fail(ErrorCode::SpaceMismatch, "elements live in different spaces");
}

}  // namespace

GammaElement& GammaElement::operator+=(const GammaElement& o) {
  require_same_space(*this, o);
  for (const auto& [k, c] : o.coeffs) {
    auto [it, inserted] = coeffs.emplace(k, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) coeffs.erase(it);
    }
  }
  return *this;
}

GammaElement& GammaElement::operator-=(const GammaElement& o) {
  require_same_space(*this, o);
  for (const auto& [k, c] : o.coeffs) {
    auto [it, inserted] = coeffs.emplace(k, -c);
    if (!inserted) {
      it->second -= c;
      if (it->second == 0) coeffs.erase(it);
    }
  }
  return *this;
}

GammaElement& GammaElement::operator*=(const Rational& c) {
  if (c == 0) {
    coeffs.clear();
    return *this;
  }
  for (auto& [k, v] : coeffs) v *= c;
  return *this;
}

GammaElement operator+(GammaElement a, const GammaElement& b) { return a += b; }
GammaElement operator-(GammaElement a, const GammaElement& b) { return a -= b; }
GammaElement operator*(const Rational& c, GammaElement a) { return a *= c; }

std::string to_string(const GammaElement& a) {
  if (a.coeffs.empty()) return "0";
  std::string out;
  auto list = [](const ElementSet& s) {
    std::string r = "{";
    s.for_each([&](Elem e) { r += (r.size() > 1 ? "," : "") + std::to_string(e); });
    return r + "}";
  };
  for (const auto& [k, c] : a.coeffs) {
    if (!out.empty()) out += " + ";
    out += c.str() + "*[" + list(k.T) + "|" + list(k.S) + "]";
  }
  return out;
}

GammaElement zero_element(const GroupPtr& g, const GroupPtr& h) { return GammaElement{g, h, {}}; }

GammaElement class_element(const GroupPtr& g, const GroupPtr& h, const SectionKey& k) {
  GammaElement e = zero_element(g, h);
  e.add_term(k, 1);
  return e;
}

GammaElement class_element(const Section& s) {
  const Group& x = *s.ambient;
  if (!x.is_product()) fail(ErrorCode::NotAProduct, "section ambient carries no product structure");
  return class_element(x.factors()->left, x.factors()->right, key_of(s));
}

std::vector<GammaElement> basis(const GroupPtr& g, const GroupPtr& h) {
  std::vector<GammaElement> out;
  for (const auto& c : *enumerate_sections(direct_product(g, h))) {
    GammaElement e = zero_element(g, h);
    e.coeffs.emplace(key_of(c.canonical), 1);
    out.push_back(std::move(e));
  }
  return out;
}

namespace {

struct ComposeKey {
  std::size_t g, h, k;
  SectionKey a, b;
  bool operator==(const ComposeKey&) const = default;
};

struct ComposeKeyHash {
  std::size_t operator()(const ComposeKey& c) const {
    std::size_t s = (c.g * 1000003u) ^ (c.h * 10007u) ^ c.k;
    s = s * 31u + SectionKeyHash{}(c.a);
    return s * 131u + SectionKeyHash{}(c.b);
  }
};

using ComposeResult = std::vector<std::pair<SectionKey, std::size_t>>;

constexpr std::size_t kComposeMemoLimit = 1u << 20;

ElementSet conjugate_left(const Group& hk, const ElementSet& u, const Group& h, Elem t) {
  ElementSet out(hk.order());
  u.for_each([&](Elem e) { out.insert(hk.pair(h.conj(t, hk.left_of(e)), hk.right_of(e))); });
  return out;
}

ComposeResult compute_compose(const GroupPtr& g, const GroupPtr& h, const GroupPtr& k, const SectionKey& a,
                              const SectionKey& b) {
  const auto gh = direct_product(g, h);
  const auto hk = direct_product(h, k);
  const auto gk = direct_product(g, k);
  ElementSet p2s(h->order()), p1u(h->order());
  a.S.for_each([&](Elem e) { p2s.insert(gh->right_of(e)); });
  b.S.for_each([&](Elem e) { p1u.insert(hk->left_of(e)); });
  std::map<SectionKey, std::size_t, SectionKeyLess> acc;
  for (Elem t : double_cosets(Subgroup(h, p2s), Subgroup(h, p1u))) {
    const ElementSet ut = conjugate_left(*hk, b.S, *h, t);
    const ElementSet vt = conjugate_left(*hk, b.T, *h, t);
    SectionKey c{star_sets(*gh, a.T, *hk, vt, *gk), star_sets(*gh, a.S, *hk, ut, *gk)};
    ++acc[canonical_key(gk, c)];
  }
  return ComposeResult(acc.begin(), acc.end());
}

}  // namespace

ComposeResult compose_classes(const GroupPtr& g, const GroupPtr& h, const GroupPtr& k, const SectionKey& a,
                              const SectionKey& b) {
  static std::mutex mutex;
  static std::unordered_map<ComposeKey, ComposeResult, ComposeKeyHash> memo;
  ComposeKey key{g->id(), h->id(), k->id(), a, b};
  {
    std::lock_guard lock(mutex);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
  }
  ComposeResult r = compute_compose(g, h, k, a, b);
  std::lock_guard lock(mutex);
  if (memo.size() > kComposeMemoLimit) memo.clear();
  memo.emplace(std::move(key), r);
  return r;
}

GammaElement compose(const GammaElement& a, const GammaElement& b) {
  if (a.right.get() != b.left.get()) fail(ErrorCode::MiddleMismatch, "middle groups differ");
  GammaElement out = zero_element(a.left, b.right);
  for (const auto& [ka, ca] : a.coeffs)
    for (const auto& [kb, cb] : b.coeffs) {
      const Rational c = ca * cb;
      for (const auto& [kc, m] : compose_classes(a.left, a.right, b.right, ka, kb)) {
        auto [it, inserted] = out.coeffs.emplace(kc, c * m);
        if (!inserted) it->second += c * m;
      }
    }
  std::erase_if(out.coeffs, [](const auto& kv) { return kv.second == 0; });
  return out;
}

GammaElement opposite(const GammaElement& a) {
  GammaElement out = zero_element(a.right, a.left);
  const auto x = a.ambient();
  for (const auto& [k, c] : a.coeffs) out.add_term(key_of(opposite(section_from_key(x, k))), c);
  return out;
}

namespace {

// Class of T = S = {(f(y), y)} in X x Y for a map f : Y -> X given on a subset.
GammaElement graph_class(const GroupPtr& x, const GroupPtr& y, const std::vector<Elem>& f) {
  const auto xy = direct_product(x, y);
  ElementSet s(xy->order());
  for (Elem i = 0; i < f.size(); ++i) s.insert(xy->pair(f[i], i));
  return class_element(x, y, {s, s});
}

GammaElement transpose_graph_class(const GroupPtr& x, const GroupPtr& y, const std::vector<Elem>& f) {
  const auto yx = direct_product(y, x);
  ElementSet s(yx->order());
  for (Elem i = 0; i < f.size(); ++i) s.insert(yx->pair(i, f[i]));
  return class_element(y, x, {s, s});
}

}  // namespace

GammaElement identity(const GroupPtr& g) {
  std::vector<Elem> id(g->order());
  for (Elem i = 0; i < id.size(); ++i) id[i] = i;
  return graph_class(g, g, id);
}

GammaElement induction(const Subgroup& h) {
  const auto m = materialize(h);
  return graph_class(h.parent(), m->group, m->lift);
}

GammaElement restriction(const Subgroup& h) {
  const auto m = materialize(h);
  return transpose_graph_class(h.parent(), m->group, m->lift);
}

GammaElement inflation_along(const Hom& pi) {
  if (!pi.is_homomorphism()) fail(ErrorCode::InvalidArgument, "inflation map is not a homomorphism");
  return transpose_graph_class(pi.target, pi.source, pi.images);
}

GammaElement deflation_along(const Hom& pi) {
  if (!pi.is_homomorphism()) fail(ErrorCode::InvalidArgument, "deflation map is not a homomorphism");
  return graph_class(pi.target, pi.source, pi.images);
}

GammaElement inflation(const Subgroup& n) { return inflation_along(quotient(n).proj); }
GammaElement deflation(const Subgroup& n) { return deflation_along(quotient(n).proj); }

GammaElement isomorphism(const Hom& f) {
  if (!f.is_homomorphism() || !f.is_bijective()) fail(ErrorCode::NotIso, "map is not an isomorphism");
  return graph_class(f.target, f.source, f.images);
}

Section e_section_of(const Subgroup& k, const Subgroup& p) {
  if (!in_pair_poset(k, p)) fail(ErrorCode::NotInPoset, "pair is not in the poset of normal commuting pairs");
  const GroupPtr& g = k.parent();
  const auto x = direct_product(g, g);
  ElementSet t(x->order()), s(x->order());
  for (Elem a = 0; a < g->order(); ++a)
    for (Elem b = 0; b < g->order(); ++b)
      if (k.contains(g->mul(g->inv(b), a))) t.insert(x->pair(a, b));
  p.elems().for_each([&](Elem a) { s.insert(x->pair(a, a)); });
  return Section{x, Subgroup(x, std::move(t)), Subgroup(x, std::move(s))};
}

GammaElement e_class(const Subgroup& k, const Subgroup& p) { return class_element(e_section_of(k, p)); }

GammaElement e_idempotent(const Subgroup& k, const Subgroup& p) {
  return Rational(static_cast<long>(p.order()), static_cast<long>(p.parent()->order())) * e_class(k, p);
}

std::array<GammaElement, 5> factorize(const Section& s) {
  const Group& x = *s.ambient;
  if (!x.is_product()) fail(ErrorCode::NotAProduct, "section ambient carries no product structure");
  const Subgroup pt = p1(s.T), qt = p2(s.T), ks = k1(s.S), ls = k2(s.S);
  const auto mp = materialize(pt), mq = materialize(qt);
  const auto sg = subquotient(pt, ks), sh = subquotient(qt, ls);
  Hom pig{mp->group, sg->group, std::vector<Elem>(mp->lift.size())};
  for (Elem i = 0; i < mp->lift.size(); ++i) pig.images[i] = sg->proj[mp->lift[i]];
  Hom pih{mq->group, sh->group, std::vector<Elem>(mq->lift.size())};
  for (Elem i = 0; i < mq->lift.size(); ++i) pih.images[i] = sh->proj[mq->lift[i]];
  const auto bar = direct_product(sg->group, sh->group);
  auto project = [&](const ElementSet& u) {
    ElementSet out(bar->order());
    u.for_each([&](Elem e) { out.insert(bar->pair(sg->proj[x.left_of(e)], sh->proj[x.right_of(e)])); });
    return out;
  };
  return {induction(pt), inflation_along(pig),
          class_element(sg->group, sh->group, {project(s.T.elems()), project(s.S.elems())}),
          deflation_along(pih), restriction(qt)};
}

}  // namespace sbw
