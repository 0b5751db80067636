#include "sbw/crossed_module.hpp"

#include <algorithm>
#include <map>

#include "sbw/error.hpp"
#include "sbw/morphisms.hpp"

namespace sbw {

std::string check_axioms(const CrossedModule& x) {
  const Group& a = *x.A;
  const Group& b = *x.B;
  if (x.boundary.source.get() != x.A.get() || x.boundary.target.get() != x.B.get())
    return "boundary has the wrong source or target";
  if (!x.boundary.is_homomorphism()) return "boundary is not a homomorphism";
  if (x.action.size() != b.order()) return "action table has the wrong size";
  for (Elem g = 0; g < b.order(); ++g) {
    const auto& row = x.action[g];
    if (row.size() != a.order()) return "action row has the wrong size";
    std::vector<char> hit(a.order());
    for (Elem v : row) {
      if (v >= a.order() || hit[v]) return "action is not by bijections";
      hit[v] = 1;
    }
    for (Elem u = 0; u < a.order(); ++u)
      for (Elem w = 0; w < a.order(); ++w)
        if (row[a.mul(u, w)] != a.mul(row[u], row[w])) return "action is not by automorphisms";
  }
  for (Elem u = 0; u < a.order(); ++u)
    if (x.action[0][u] != u) return "identity does not act trivially";
  for (Elem g = 0; g < b.order(); ++g)
    for (Elem h = 0; h < b.order(); ++h) {
      const auto& gh = x.action[b.mul(g, h)];
      for (Elem u = 0; u < a.order(); ++u)
        if (gh[u] != x.action[g][x.action[h][u]]) return "action is not a homomorphism";
    }
  for (Elem g = 0; g < b.order(); ++g)
    for (Elem u = 0; u < a.order(); ++u)
      if (x.boundary(x.act(g, u)) != b.conj(g, x.boundary(u)))
        return "boundary is not equivariant";
  for (Elem v = 0; v < a.order(); ++v)
    for (Elem u = 0; u < a.order(); ++u)
      if (x.act(x.boundary(v), u) != a.conj(v, u)) return "Peiffer identity fails";
  return {};
}

void validate(const CrossedModule& x) {
  const auto why = check_axioms(x);
  if (!why.empty()) fail(ErrorCode::AxiomFailed, "crossed module axiom: " + why);
}

bool is_morphism(const CrossedModule& x, const CrossedModule& y, const CMorphism& m) {
  if (m.alpha.source.get() != x.A.get() || m.alpha.target.get() != y.A.get()) return false;
  if (m.beta.source.get() != x.B.get() || m.beta.target.get() != y.B.get()) return false;
  if (!m.alpha.is_homomorphism() || !m.beta.is_homomorphism()) return false;
  for (Elem a = 0; a < x.A->order(); ++a)
    if (y.boundary(m.alpha(a)) != m.beta(x.boundary(a))) return false;
  for (Elem g = 0; g < x.B->order(); ++g)
    for (Elem a = 0; a < x.A->order(); ++a)
      if (m.alpha(x.act(g, a)) != y.act(m.beta(g), m.alpha(a))) return false;
  return true;
}

bool is_isomorphism(const CrossedModule& x, const CrossedModule& y, const CMorphism& m) {
  return is_morphism(x, y, m) && m.alpha.is_bijective() && m.beta.is_bijective();
}

CMorphism compose(const CMorphism& second, const CMorphism& first) {
  return {compose_homs(second.alpha, first.alpha), compose_homs(second.beta, first.beta)};
}

CMorphism inverse(const CMorphism& m) { return {m.alpha.inverse(), m.beta.inverse()}; }

CMorphism identity_morphism(const CrossedModule& x) {
  return {Hom::identity(x.A), Hom::identity(x.B)};
}

CrossedModule crossed_module_from_subquotients(const Subgroup& top_a, const Subgroup& bottom_a,
                                               const Subgroup& top_b, const Subgroup& bottom_b) {
  const auto qa = subquotient(top_a, bottom_a);
  const auto qb = subquotient(top_b, bottom_b);
  const Group& g = *top_a.parent();
  CrossedModule x{qa->group, qb->group, Hom{qa->group, qb->group, {}}, {}};
  x.boundary.images.resize(qa->lift.size());
  for (std::size_t i = 0; i < qa->lift.size(); ++i) {
    const Elem v = qb->proj[qa->lift[i]];
    if (v == kNoElem) fail(ErrorCode::AxiomFailed, "boundary leaves the target group");
    x.boundary.images[i] = v;
  }
  x.action.assign(qb->lift.size(), std::vector<Elem>(qa->lift.size()));
  for (std::size_t b = 0; b < qb->lift.size(); ++b)
    for (std::size_t a = 0; a < qa->lift.size(); ++a) {
      const Elem v = qa->proj[g.conj(qb->lift[b], qa->lift[a])];
      if (v == kNoElem) fail(ErrorCode::AxiomFailed, "conjugation leaves the acted-on group");
      x.action[b][a] = v;
    }
  return x;
}

bool in_pair_poset(const Subgroup& k, const Subgroup& p) {
  if (k.parent().get() != p.parent().get()) return false;
  if (!is_normal_in_parent(k) || !is_normal_in_parent(p)) return false;
  const Group& g = *k.parent();
  bool ok = true;
  k.elems().for_each([&](Elem a) {
    p.elems().for_each([&](Elem b) {
      if (ok && g.mul(a, b) != g.mul(b, a)) ok = false;
    });
  });
  return ok;
}

CrossedModule from_pair(const Subgroup& k, const Subgroup& p) {
  if (!in_pair_poset(k, p)) fail(ErrorCode::NotInPoset, "pair is not in the poset of normal commuting pairs");
  auto x = crossed_module_from_subquotients(p, trivial_subgroup(p.parent()), whole_group(k.parent()), k);
  validate(x);
  return x;
}

namespace {

bool equivariant_on_generators(const CrossedModule& x, const CrossedModule& y, const Hom& alpha,
                               const Hom& beta) {
  for (Elem g : x.B->generators())
    for (Elem a : x.A->generators())
      if (alpha(x.act(g, a)) != y.act(beta(g), alpha(a))) return false;
  return true;
}

}  // namespace

std::optional<CMorphism> iso_search(const CrossedModule& x, const CrossedModule& y) {
  if (x.A->order() != y.A->order() || x.B->order() != y.B->order()) return std::nullopt;
  std::optional<CMorphism> found;
  const auto& gens_a = x.A->generators();
  for_each_isomorphism(x.B, y.B, [&](const Hom& beta) {
    for_each_isomorphism(
        x.A, y.A,
        [&](const Hom& alpha) {
          if (equivariant_on_generators(x, y, alpha, beta)) {
            found = CMorphism{alpha, beta};
            return false;
          }
          return true;
        },
        [&](std::size_t i, Elem img) {
          return y.boundary(img) == beta(x.boundary(gens_a[i]));
        });
    return !found;
  });
  return found;
}

CrossedFingerprint fingerprint(const CrossedModule& x) {
  CrossedFingerprint f;
  f.census_a = order_census(*x.A);
  f.census_b = order_census(*x.B);
  std::vector<char> in_image(x.B->order());
  for (Elem v : x.boundary.images) in_image[v] = 1;
  f.image_order = static_cast<std::size_t>(std::count(in_image.begin(), in_image.end(), 1));
  std::vector<char> seen(x.A->order());
  for (Elem a = 0; a < x.A->order(); ++a) {
    if (seen[a]) continue;
    std::size_t size = 0;
    for (Elem g = 0; g < x.B->order(); ++g) {
      const Elem v = x.act(g, a);
      if (!seen[v]) {
        seen[v] = 1;
        ++size;
      }
    }
    f.orbit_census.push_back(size);
  }
  std::sort(f.orbit_census.begin(), f.orbit_census.end());
  return f;
}

CrossedAut aut_out(const CrossedModule& x) {
  const auto aut_a = automorphisms(x.A);
  const auto aut_b = automorphisms(x.B);
  CrossedAut r;
  for (const auto& alpha : aut_a->homs) {
    for (const auto& beta : aut_b->homs) {
      bool square = true;
      for (Elem a : x.A->generators())
        if (x.boundary(alpha(a)) != beta(x.boundary(a))) {
          square = false;
          break;
        }
      if (square && equivariant_on_generators(x, x, alpha, beta)) r.auts.push_back({alpha, beta});
    }
  }
  std::sort(r.auts.begin(), r.auts.end(), [](const CMorphism& u, const CMorphism& v) {
    if (u.alpha.images != v.alpha.images) return u.alpha.images < v.alpha.images;
    return u.beta.images < v.beta.images;
  });
  const std::size_t n = r.auts.size();
  check_order(n, "crossed-module automorphism group");
  std::map<std::pair<std::vector<Elem>, std::vector<Elem>>, Elem> index;
  for (Elem i = 0; i < n; ++i) index.emplace(std::make_pair(r.auts[i].alpha.images, r.auts[i].beta.images), i);
  auto index_of = [&](const CMorphism& m) {
    auto it = index.find({m.alpha.images, m.beta.images});
    if (it == index.end()) fail(ErrorCode::AxiomFailed, "automorphisms not closed under composition");
    return it->second;
  };
  std::vector<Elem> table(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) table[i * n + j] = index_of(compose(r.auts[i], r.auts[j]));
  r.aut_group = group_from_trusted_table("Aut(crossed)", n, std::move(table));

  ElementSet inn(n);
  for (Elem g = 0; g < x.B->order(); ++g) {
    CMorphism m{Hom{x.A, x.A, x.action[g]}, inner_automorphism(x.B, g)};
    inn.insert(index_of(m));
  }
  r.inn = Subgroup(r.aut_group, std::move(inn));
  const auto q = quotient(r.inn);
  r.out_group = q.group;
  r.out_proj = q.proj.images;
  const auto sq = subquotient(whole_group(r.aut_group), r.inn);
  for (Elem rep : sq->lift) r.out_reps.push_back(r.auts[rep]);
  return r;
}

}  // namespace sbw
