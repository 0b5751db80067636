#pragma once

#include <map>
#include <numeric>

#include "sbw/gamma.hpp"

namespace sbw::oracle {

// Left cosets zA of a subgroup, labelled by least member.
struct Cosets {
  const Group* x;
  std::vector<Elem> of;     // element -> coset label
  std::vector<Elem> reps;   // labels in ascending order
  std::map<Elem, std::size_t> index;
  Cosets(const Group& g, const ElementSet& a) : x(&g), of(g.order()) {
    for (Elem z = 0; z < g.order(); ++z) {
      Elem least = kNoElem;
      a.for_each([&](Elem e) { least = std::min(least, g.mul(z, e)); });
      of[z] = least;
    }
    for (Elem z = 0; z < g.order(); ++z)
      if (of[z] == z) {
        index[z] = reps.size();
        reps.push_back(z);
      }
  }
  std::size_t act(Elem w, std::size_t c) const { return index.at(of[x->mul(w, reps[c])]); }
  std::size_t size() const { return reps.size(); }
};

struct UnionFind {
  std::vector<std::size_t> p;
  explicit UnionFind(std::size_t n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  std::size_t find(std::size_t a) { return p[a] == a ? a : p[a] = find(p[a]); }
  void unite(std::size_t a, std::size_t b) { p[find(a)] = find(b); }
};

// (G x H)/A  x_H  (H x K)/B as a G x K-set: class label of every pair.
struct TensorSet {
  std::size_t ny;
  UnionFind uf;
  TensorSet(const Group& gh, const Cosets& x, const Group& hk, const Cosets& y, const Group& h)
      : ny(y.size()), uf(x.size() * y.size()) {
    for (std::size_t i = 0; i < x.size(); ++i)
      for (std::size_t j = 0; j < y.size(); ++j)
        for (Elem t = 0; t < h.order(); ++t) {
          const std::size_t xi = x.act(gh.pair(0, h.inv(t)), i);
          const std::size_t yj = y.act(hk.pair(h.inv(t), 0), j);
          uf.unite(i * ny + j, xi * ny + yj);
        }
  }
  std::size_t label(std::size_t i, std::size_t j) { return uf.find(i * ny + j); }
};

// Mackey product computed on explicit fibre products of coset spaces.
inline std::map<SectionKey, std::size_t, SectionKeyLess> oracle_compose(const GroupPtr& g, const GroupPtr& h,
                                                                 const GroupPtr& k, const SectionKey& a,
                                                                 const SectionKey& b) {
  const auto gh = direct_product(g, h), hk = direct_product(h, k), gk = direct_product(g, k);
  Cosets xs(*gh, a.S), xt(*gh, a.T), yu(*hk, b.S), yv(*hk, b.T);
  TensorSet dom(*gh, xs, *hk, yu, *h), cod(*gh, xt, *hk, yv, *h);
  auto to_t = [&](const Cosets& from, const Cosets& to, std::size_t c) { return to.index.at(to.of[from.reps[c]]); };
  std::map<std::size_t, char> done;
  std::map<SectionKey, std::size_t, SectionKeyLess> out;
  for (std::size_t i = 0; i < xs.size(); ++i)
    for (std::size_t j = 0; j < yu.size(); ++j) {
      const std::size_t lab = dom.label(i, j);
      if (done.count(lab)) continue;
      const std::size_t ti = to_t(xs, xt, i), tj = to_t(yu, yv, j);
      const std::size_t tlab = cod.label(ti, tj);
      ElementSet stab_s(gk->order()), stab_t(gk->order());
      for (Elem w = 0; w < gk->order(); ++w) {
        const Elem gg = gk->left_of(w), kk = gk->right_of(w);
        const std::size_t i2 = xs.act(gh->pair(gg, 0), i), j2 = yu.act(hk->pair(0, kk), j);
        const std::size_t l2 = dom.label(i2, j2);
        done[l2] = 1;
        if (l2 == lab) stab_s.insert(w);
        const std::size_t ti2 = xt.act(gh->pair(gg, 0), ti), tj2 = yv.act(hk->pair(0, kk), tj);
        if (cod.label(ti2, tj2) == tlab) stab_t.insert(w);
      }
      ++out[canonical_key(gk, {stab_t, stab_s})];
    }
  return out;
}

}  // namespace sbw::oracle
