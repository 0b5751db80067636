#include "sbw/morphisms.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "sbw/error.hpp"

namespace sbw {

namespace {

// Image map on the subgroup generated by gens, kNoElem elsewhere; empty on
// conflict.
std::vector<Elem> extend_partial(const Group& s, const Group& t, std::span<const Elem> gens,
                                 std::span<const Elem> images) {
  std::vector<Elem> map(s.order(), kNoElem);
  map[0] = 0;
  std::vector<Elem> queue{0};
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    const Elem x = queue[qi];
    for (std::size_t i = 0; i < gens.size(); ++i) {
      const Elem y = s.mul(x, gens[i]);
      const Elem v = t.mul(map[x], images[i]);
      if (map[y] == kNoElem) {
        map[y] = v;
        queue.push_back(y);
      } else if (map[y] != v) {
        return {};
      }
    }
  }
  return map;
}

}  // namespace

std::optional<Hom> extend_to_hom(const GroupPtr& source, const GroupPtr& target,
                                 std::span<const Elem> gens, std::span<const Elem> images) {
  if (gens.size() != images.size())
    fail(ErrorCode::InvalidArgument, "generator and image lists differ in length");
  auto map = extend_partial(*source, *target, gens, images);
  if (map.empty()) return std::nullopt;
  for (Elem v : map)
    if (v == kNoElem) return std::nullopt;
  return Hom{source, target, std::move(map)};
}

std::vector<std::size_t> order_census(const Group& g) {
  std::vector<std::size_t> c;
  c.reserve(g.order());
  for (Elem a = 0; a < g.order(); ++a) c.push_back(g.element_order(a));
  std::sort(c.begin(), c.end());
  return c;
}

void for_each_isomorphism(const GroupPtr& g, const GroupPtr& h,
                          const std::function<bool(const Hom&)>& visit,
                          const std::function<bool(std::size_t, Elem)>& allowed) {
  if (g->order() != h->order()) return;
  if (order_census(*g) != order_census(*h)) return;
  const auto& gens = g->generators();
  const std::size_t k = gens.size();
  if (k == 0) {
    visit(Hom{g, h, {0}});
    return;
  }
  std::vector<std::vector<Elem>> candidates(k);
  for (std::size_t i = 0; i < k; ++i)
    for (Elem y = 0; y < h->order(); ++y)
      if (h->element_order(y) == g->element_order(gens[i]) && (!allowed || allowed(i, y)))
        candidates[i].push_back(y);

  std::vector<Elem> images(k);
  bool stop = false;
  std::vector<char> hit(h->order());
  auto injective = [&](const std::vector<Elem>& map) {
    std::fill(hit.begin(), hit.end(), 0);
    for (Elem v : map) {
      if (v == kNoElem) continue;
      if (hit[v]) return false;
      hit[v] = 1;
    }
    return true;
  };
  auto recurse = [&](auto&& self, std::size_t d) -> void {
    for (Elem y : candidates[d]) {
      if (stop) return;
      images[d] = y;
      auto map = extend_partial(*g, *h, std::span(gens).first(d + 1), std::span(images).first(d + 1));
      if (map.empty() || !injective(map)) continue;
      if (d + 1 == k) {
        if (!visit(Hom{g, h, std::move(map)})) stop = true;
      } else {
        self(self, d + 1);
      }
    }
  };
  recurse(recurse, 0);
}

std::vector<Hom> isomorphisms(const GroupPtr& g, const GroupPtr& h, std::optional<std::size_t> limit) {
  std::vector<Hom> out;
  if (limit && *limit == 0) return out;
  for_each_isomorphism(g, h, [&](const Hom& f) {
    out.push_back(f);
    return !limit || out.size() < *limit;
  });
  return out;
}

std::optional<Hom> find_isomorphism(const GroupPtr& g, const GroupPtr& h) {
  auto v = isomorphisms(g, h, 1);
  if (v.empty()) return std::nullopt;
  return v.front();
}

bool are_isomorphic(const GroupPtr& g, const GroupPtr& h) { return find_isomorphism(g, h).has_value(); }

std::size_t AutGroup::index_of(const Hom& h) const {
  auto it = std::lower_bound(homs.begin(), homs.end(), h.images,
                             [](const Hom& a, const std::vector<Elem>& v) { return a.images < v; });
  if (it == homs.end() || it->images != h.images)
    fail(ErrorCode::NotAutomorphism, "map is not an automorphism");
  return static_cast<std::size_t>(it - homs.begin());
}

std::shared_ptr<const AutGroup> automorphisms(const GroupPtr& g) {
  static std::mutex mutex;
  static std::map<std::size_t, std::shared_ptr<const AutGroup>> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(g->id()); it != cache.end()) return it->second;
  }
  auto aut = std::make_shared<AutGroup>();
  aut->homs = isomorphisms(g, g);
  std::sort(aut->homs.begin(), aut->homs.end(),
            [](const Hom& a, const Hom& b) { return a.images < b.images; });
  const std::size_t n = aut->homs.size();
  check_order(n, "automorphism group");
  std::vector<Elem> table(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      table[i * n + j] = static_cast<Elem>(aut->index_of(compose_homs(aut->homs[i], aut->homs[j])));
  aut->group = group_from_trusted_table("Aut(" + g->name() + ")", n, std::move(table));
  std::lock_guard lock(mutex);
  return cache.emplace(g->id(), std::move(aut)).first->second;
}

Hom inner_automorphism(const GroupPtr& g, Elem x) {
  Hom h{g, g, std::vector<Elem>(g->order())};
  for (Elem a = 0; a < g->order(); ++a) h.images[a] = g->conj(x, a);
  return h;
}

std::vector<std::size_t> conjugacy_class_ids(const Group& g) {
  std::vector<std::size_t> id(g.order(), static_cast<std::size_t>(-1));
  std::size_t next = 0;
  for (Elem a = 0; a < g.order(); ++a) {
    if (id[a] != static_cast<std::size_t>(-1)) continue;
    for (Elem x = 0; x < g.order(); ++x) id[g.conj(x, a)] = next;
    ++next;
  }
  return id;
}

std::size_t conjugacy_class_count(const Group& g) {
  const auto ids = conjugacy_class_ids(g);
  return ids.empty() ? 0 : *std::max_element(ids.begin(), ids.end()) + 1;
}

}  // namespace sbw
