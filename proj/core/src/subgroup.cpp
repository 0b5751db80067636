#include "sbw/subgroup.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <tuple>

#include "sbw/error.hpp"

namespace sbw {

namespace {

// Closes `set` (which must contain the identity) under right multiplication
// by `gens`.
ElementSet close_right(const Group& g, ElementSet set, std::span<const Elem> gens) {
  std::vector<Elem> frontier = set.to_vector();
  std::vector<Elem> next;
  while (!frontier.empty()) {
    next.clear();
    for (Elem a : frontier)
      for (Elem x : gens) {
        const Elem p = g.mul(a, x);
        if (!set.contains(p)) {
          set.insert(p);
          next.push_back(p);
        }
      }
    frontier.swap(next);
  }
  return set;
}

}  // namespace

Subgroup::Subgroup(GroupPtr parent, ElementSet elems)
    : parent_(std::move(parent)), elems_(std::move(elems)), order_(elems_.count()) {}

bool Subgroup::is_subgroup_of(const Subgroup& other) const {
  return parent_.get() == other.parent_.get() && elems_.is_subset_of(other.elems_);
}

int set_compare(const ElementSet& a, const ElementSet& b) {
  const auto ca = a.count(), cb = b.count();
  if (ca != cb) return ca < cb ? -1 : 1;
  return lex_compare(a, b);
}

bool subgroup_less(const Subgroup& a, const Subgroup& b) {
  return set_compare(a.elems(), b.elems()) < 0;
}

void require_same_parent(const Subgroup& a, const Subgroup& b) {
  if (a.parent().get() != b.parent().get())
    fail(ErrorCode::MixedParents, "subgroups live in different groups");
}

Subgroup trivial_subgroup(const GroupPtr& g) {
  return Subgroup(g, ElementSet::singleton(g->order(), 0));
}

Subgroup whole_group(const GroupPtr& g) { return Subgroup(g, g->all()); }

Subgroup generate(const GroupPtr& g, std::span<const Elem> gens) {
  for (Elem x : gens)
    if (x >= g->order()) fail(ErrorCode::InvalidArgument, "generator index out of range");
  return Subgroup(g, close_right(*g, ElementSet::singleton(g->order(), 0), gens));
}

Subgroup generate_from(const GroupPtr& g, const ElementSet& seed) {
  const auto gens = seed.to_vector();
  return generate(g, gens);
}

Subgroup subgroup_from_elements(const GroupPtr& g, std::span<const Elem> elems) {
  ElementSet s(g->order());
  for (Elem e : elems) {
    if (e >= g->order()) fail(ErrorCode::NotSubgroup, "element index out of range");
    s.insert(e);
  }
  if (!s.contains(0)) fail(ErrorCode::NotSubgroup, "set does not contain the identity");
  bool closed = true;
  s.for_each([&](Elem a) {
    if (!closed) return;
    if (!s.contains(g->inv(a))) closed = false;
    s.for_each([&](Elem b) {
      if (closed && !s.contains(g->mul(a, b))) closed = false;
    });
  });
  if (!closed) fail(ErrorCode::NotSubgroup, "set is not closed under the group operation");
  return Subgroup(g, std::move(s));
}

Subgroup join(const Subgroup& a, const Subgroup& b) {
  require_same_parent(a, b);
  if (a.elems().is_subset_of(b.elems())) return b;
  if (b.elems().is_subset_of(a.elems())) return a;
  return generate_from(a.parent(), a.elems() | b.elems());
}

Subgroup meet(const Subgroup& a, const Subgroup& b) {
  require_same_parent(a, b);
  return Subgroup(a.parent(), a.elems() & b.elems());
}

ElementSet conjugate_set(const Group& g, const ElementSet& s, Elem x) {
  ElementSet out(s.universe());
  const Elem xi = g.inv(x);
  s.for_each([&](Elem e) { out.insert(g.mul(g.mul(x, e), xi)); });
  return out;
}

Subgroup conjugate(const Subgroup& a, Elem g) {
  return Subgroup(a.parent(), conjugate_set(*a.parent(), a.elems(), g));
}

bool is_normal(const Subgroup& a, const Subgroup& b) {
  require_same_parent(a, b);
  if (!a.elems().is_subset_of(b.elems())) return false;
  const Group& g = *a.parent();
  bool ok = true;
  b.elems().for_each([&](Elem x) {
    if (!ok) return;
    const Elem xi = g.inv(x);
    a.elems().for_each([&](Elem e) {
      if (ok && !a.contains(g.mul(g.mul(x, e), xi))) ok = false;
    });
  });
  return ok;
}

bool is_normal_in_parent(const Subgroup& a) { return is_normal(a, whole_group(a.parent())); }

Subgroup centralizer_in(const Subgroup& b, const Subgroup& x) {
  require_same_parent(b, x);
  const Group& g = *b.parent();
  ElementSet out(g.order());
  b.elems().for_each([&](Elem c) {
    bool commutes = true;
    x.elems().for_each([&](Elem e) {
      if (commutes && g.mul(c, e) != g.mul(e, c)) commutes = false;
    });
    if (commutes) out.insert(c);
  });
  return Subgroup(b.parent(), std::move(out));
}

Subgroup centralizer(const Subgroup& x) { return centralizer_in(whole_group(x.parent()), x); }

Subgroup normalizer(const Subgroup& x) {
  const Group& g = *x.parent();
  ElementSet out(g.order());
  for (Elem c = 0; c < g.order(); ++c)
    if (conjugate_set(g, x.elems(), c) == x.elems()) out.insert(c);
  return Subgroup(x.parent(), std::move(out));
}

Subgroup commutator(const Subgroup& a, const Subgroup& b) {
  require_same_parent(a, b);
  const Group& g = *a.parent();
  ElementSet seed(g.order());
  a.elems().for_each([&](Elem x) {
    b.elems().for_each([&](Elem y) {
      seed.insert(g.mul(g.mul(x, y), g.mul(g.inv(x), g.inv(y))));
    });
  });
  return generate_from(a.parent(), seed);
}

Subgroup center(const GroupPtr& g) {
  const auto all = whole_group(g);
  return centralizer_in(all, all);
}

Subgroup normal_closure(const Subgroup& x, const Subgroup& b) {
  require_same_parent(x, b);
  ElementSet seed(x.parent()->order());
  b.elems().for_each([&](Elem c) { seed |= conjugate_set(*x.parent(), x.elems(), c); });
  return generate_from(x.parent(), seed);
}

std::size_t SubgroupLattice::index_of(const ElementSet& s) const {
  auto it = index.find(s);
  if (it == index.end()) fail(ErrorCode::NotSubgroup, "set is not a subgroup");
  return it->second;
}

namespace {

std::shared_ptr<const SubgroupLattice> build_lattice(const GroupPtr& gp) {
  const Group& g = *gp;
  const std::size_t n = g.order();

  struct Found {
    ElementSet set;
    std::vector<Elem> gens;
  };
  std::vector<Found> found;
  std::unordered_map<ElementSet, std::size_t, ElementSetHash> seen;
  auto add = [&](ElementSet s, std::vector<Elem> gens) {
    if (seen.emplace(s, found.size()).second) found.push_back({std::move(s), std::move(gens)});
  };

  add(ElementSet::singleton(n, 0), {});
  std::vector<std::pair<Elem, ElementSet>> cyclic;
  {
    std::unordered_map<ElementSet, std::size_t, ElementSetHash> cyc_seen;
    for (Elem x = 1; x < n; ++x) {
      const Elem one[] = {x};
      ElementSet c = close_right(g, ElementSet::singleton(n, 0), one);
      if (cyc_seen.emplace(c, cyclic.size()).second) {
        cyclic.emplace_back(x, c);
        add(c, {x});
      }
    }
  }
  for (std::size_t i = 0; i < found.size(); ++i) {
    for (const auto& [x, c] : cyclic) {
      if (c.is_subset_of(found[i].set)) continue;
      std::vector<Elem> gens = found[i].gens;
      gens.push_back(x);
      ElementSet j = close_right(g, found[i].set, gens);
      if (!seen.contains(j)) {
        if (found.size() + 1 > 16 * order_cap())
          fail(ErrorCode::OrderLimitExceeded, "subgroup count exceeds " + std::to_string(16 * order_cap()));
        add(std::move(j), std::move(gens));
      }
    }
  }

  auto lat = std::make_shared<SubgroupLattice>();
  lat->all.reserve(found.size());
  for (auto& f : found) lat->all.emplace_back(gp, std::move(f.set));
  std::sort(lat->all.begin(), lat->all.end(), subgroup_less);
  for (std::size_t i = 0; i < lat->all.size(); ++i) lat->index.emplace(lat->all[i].elems(), i);

  lat->class_of.assign(lat->all.size(), static_cast<std::size_t>(-1));
  for (std::size_t i = 0; i < lat->all.size(); ++i) {
    if (lat->class_of[i] != static_cast<std::size_t>(-1)) continue;
    const std::size_t cls = lat->classes.size();
    SubgroupClass c{lat->all[i], {}};
    for (Elem x = 0; x < n; ++x) {
      const std::size_t j = lat->index.at(conjugate_set(g, lat->all[i].elems(), x));
      if (lat->class_of[j] == static_cast<std::size_t>(-1)) {
        lat->class_of[j] = cls;
        c.members.push_back(j);
      }
    }
    std::sort(c.members.begin(), c.members.end());
    if (c.members.size() == 1) lat->normal.push_back(i);
    lat->classes.push_back(std::move(c));
  }
  return lat;
}

}  // namespace

std::shared_ptr<const SubgroupLattice> subgroup_lattice(const GroupPtr& g) {
  static std::mutex mutex;
  static std::map<std::size_t, std::shared_ptr<const SubgroupLattice>> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(g->id()); it != cache.end()) return it->second;
  }
  auto lat = build_lattice(g);
  std::lock_guard lock(mutex);
  return cache.emplace(g->id(), std::move(lat)).first->second;
}

std::vector<Subgroup> enumerate_subgroups(const GroupPtr& g) { return subgroup_lattice(g)->all; }

std::vector<Subgroup> normal_subgroups(const GroupPtr& g) {
  const auto lat = subgroup_lattice(g);
  std::vector<Subgroup> out;
  for (auto i : lat->normal) out.push_back(lat->all[i]);
  return out;
}

std::vector<Subgroup> subgroups_of(const Subgroup& a) {
  const auto lat = subgroup_lattice(a.parent());
  std::vector<Subgroup> out;
  for (const auto& s : lat->all) {
    if (s.order() > a.order()) break;
    if (a.order() % s.order() == 0 && s.elems().is_subset_of(a.elems())) out.push_back(s);
  }
  return out;
}

std::vector<Subgroup> normal_subgroups_of(const Subgroup& a) {
  std::vector<Subgroup> out;
  for (auto& s : subgroups_of(a))
    if (is_normal(s, a)) out.push_back(std::move(s));
  return out;
}

std::vector<Elem> double_cosets(const Subgroup& a, const Subgroup& b) {
  require_same_parent(a, b);
  const Group& g = *a.parent();
  const auto ae = a.elements(), be = b.elements();
  ElementSet covered(g.order());
  std::vector<Elem> reps;
  for (Elem x = 0; x < g.order(); ++x) {
    if (covered.contains(x)) continue;
    reps.push_back(x);
    for (Elem u : ae) {
      const Elem ux = g.mul(u, x);
      for (Elem v : be) covered.insert(g.mul(ux, v));
    }
  }
  return reps;
}

SubQuotientPtr subquotient(const Subgroup& top, const Subgroup& bottom) {
  require_same_parent(top, bottom);
  using Key = std::tuple<std::size_t, std::vector<std::uint64_t>, std::vector<std::uint64_t>>;
  static std::mutex mutex;
  static std::map<Key, SubQuotientPtr> cache;
  const auto tw = top.elems().words(), bw = bottom.elems().words();
  Key key{top.parent()->id(), {tw.begin(), tw.end()}, {bw.begin(), bw.end()}};
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  if (!is_normal(bottom, top))
    fail(ErrorCode::NotNormal, "bottom is not a normal subgroup of top");

  const GroupPtr& parent = top.parent();
  const Group& g = *parent;
  auto sq = std::make_shared<SubQuotient>();
  sq->top = top;
  sq->bottom = bottom;
  sq->proj.assign(g.order(), kNoElem);
  const auto be = bottom.elements();
  top.elems().for_each([&](Elem x) {
    if (sq->proj[x] != kNoElem) return;
    const Elem idx = static_cast<Elem>(sq->lift.size());
    sq->lift.push_back(x);
    for (Elem k : be) sq->proj[g.mul(x, k)] = idx;
  });
  const std::size_t m = sq->lift.size();
  if (top.is_whole() && bottom.is_trivial()) {
    sq->group = parent;
  } else {
    std::vector<Elem> table(m * m);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) table[i * m + j] = sq->proj[g.mul(sq->lift[i], sq->lift[j])];
    sq->group = group_from_trusted_table(
        g.name() + "[" + std::to_string(top.order()) + "/" + std::to_string(bottom.order()) + "]", m,
        std::move(table));
  }
  std::lock_guard lock(mutex);
  return cache.emplace(std::move(key), std::move(sq)).first->second;
}

SubQuotientPtr materialize(const Subgroup& a) { return subquotient(a, trivial_subgroup(a.parent())); }

Quotient quotient(const Subgroup& n) {
  if (!is_normal_in_parent(n)) fail(ErrorCode::NotNormal, "subgroup is not normal");
  const auto sq = subquotient(whole_group(n.parent()), n);
  return {sq->group, Hom{n.parent(), sq->group, sq->proj}};
}

Subgroup image(const Hom& h, const Subgroup& a) {
  ElementSet seed(h.target->order());
  a.elems().for_each([&](Elem x) { seed.insert(h(x)); });
  return generate_from(h.target, seed);
}

Subgroup preimage(const Hom& h, const Subgroup& b) {
  ElementSet out(h.source->order());
  for (Elem x = 0; x < h.source->order(); ++x)
    if (b.contains(h(x))) out.insert(x);
  return Subgroup(h.source, std::move(out));
}

Subgroup kernel(const Hom& h) { return preimage(h, trivial_subgroup(h.target)); }

}  // namespace sbw
