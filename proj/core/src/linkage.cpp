#include "sbw/linkage.hpp"

#include "sbw/error.hpp"

namespace sbw {

Section linking_section(const Subgroup& k, const Subgroup& p, const Subgroup& l, const Subgroup& q,
                        const CMorphism& iso) {
  require_same_parent(k, p);
  require_same_parent(l, q);
  const GroupPtr g = k.parent();
  const GroupPtr h = l.parent();
  const auto sp = subquotient(p, trivial_subgroup(g));
  const auto sgk = subquotient(whole_group(g), k);
  const auto sq = subquotient(q, trivial_subgroup(h));
  const auto shl = subquotient(whole_group(h), l);
  if (iso.alpha.source.get() != sq->group.get() || iso.alpha.target.get() != sp->group.get() ||
      iso.beta.source.get() != shl->group.get() || iso.beta.target.get() != sgk->group.get())
    fail(ErrorCode::NotIso, "morphism does not match the crossed modules of the triples");
  const auto x = direct_product(g, h);
  ElementSet t(x->order()), s(x->order());
  for (Elem a = 0; a < g->order(); ++a) {
    const Elem ak = sgk->proj[a];
    for (Elem b = 0; b < h->order(); ++b)
      if (iso.beta(shl->proj[b]) == ak) t.insert(x->pair(a, b));
  }
  q.elems().for_each([&](Elem b) { s.insert(x->pair(sp->lift[iso.alpha(sq->proj[b])], b)); });
  return make_section(Subgroup(x, std::move(t)), Subgroup(x, std::move(s)));
}

Section theta(const Subgroup& k, const Subgroup& p, const CMorphism& m) {
  const auto x = from_pair(k, p);
  if (!is_isomorphism(x, x, m)) fail(ErrorCode::NotAutomorphism, "not an automorphism of the crossed module");
  return linking_section(k, p, k, p, m);
}

std::optional<LinkWitness> linked(const Subgroup& k, const Subgroup& p, const Subgroup& l,
                                  const Subgroup& q) {
  const auto xg = from_pair(k, p);
  const auto xh = from_pair(l, q);
  auto iso = iso_search(xh, xg);
  if (!iso) return std::nullopt;
  Section s = canonical(linking_section(k, p, l, q, *iso));
  return LinkWitness{std::move(*iso), std::move(s)};
}

}  // namespace sbw
