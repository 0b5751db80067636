#include "sbw/classification.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <random>
#include <set>

#include "sbw/crossed_module.hpp"
#include "sbw/error.hpp"
#include "sbw/linkage.hpp"
#include "sbw/morphisms.hpp"

namespace sbw {

bool is_covering(const Section& s) {
  return p1(s.T).is_whole() && p2(s.T).is_whole() && k1(s.S).is_trivial() && k2(s.S).is_trivial();
}

namespace {

template <class V, int Tag = 0>
std::shared_ptr<const V> memo(std::size_t key, const std::function<V()>& make) {
  static std::mutex mutex;
  static std::map<std::size_t, std::shared_ptr<const V>> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  auto v = std::make_shared<const V>(make());
  std::lock_guard lock(mutex);
  return cache.emplace(key, std::move(v)).first->second;
}

struct PairData {
  CrossedModule x;
  CrossedFingerprint fp;
};

std::shared_ptr<const PairData> pair_data(const GroupPtr& g, std::size_t pair) {
  static std::mutex mutex;
  static std::map<std::pair<std::size_t, std::size_t>, std::shared_ptr<const PairData>> cache;
  const auto key = std::make_pair(g->id(), pair);
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  const auto& pr = build_poset(g)->pairs[pair];
  auto x = from_pair(pr.K, pr.P);
  auto fp = fingerprint(x);
  auto d = std::make_shared<const PairData>(PairData{std::move(x), std::move(fp)});
  std::lock_guard lock(mutex);
  return cache.emplace(key, std::move(d)).first->second;
}

bool same_shape(const PairKP& a, const PairKP& b) {
  return a.P.order() == b.P.order() &&
         a.K.parent()->order() / a.K.order() == b.K.parent()->order() / b.K.order();
}

std::optional<CMorphism> cm_linked(const GroupPtr& g, std::size_t a, const GroupPtr& h, std::size_t b) {
  if (!same_shape(build_poset(g)->pairs[a], build_poset(h)->pairs[b])) return std::nullopt;
  const auto da = pair_data(g, a), db = pair_data(h, b);
  if (da->fp != db->fp) return std::nullopt;
  return iso_search(db->x, da->x);
}

struct UnionFind {
  std::vector<std::size_t> p;
  explicit UnionFind(std::size_t n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  std::size_t find(std::size_t a) { return p[a] == a ? a : p[a] = find(p[a]); }
};

}  // namespace

SparseVec CoveringBasis::coords(const GammaElement& a) const {
  SparseVec v;
  for (const auto& [k, c] : a.coeffs) {
    auto it = index.find(k);
    if (it == index.end()) fail(ErrorCode::DecompositionMismatch, "product leaves the covering classes");
    v.emplace(it->second, c);
  }
  return v;
}

GammaElement CoveringBasis::element(const SparseVec& v) const {
  GammaElement e = zero_element(group, group);
  for (const auto& [i, c] : v)
    if (c != 0) e.coeffs.emplace(classes[i].key, c);
  return e;
}

std::shared_ptr<const CoveringBasis> covering_basis(const GroupPtr& g) {
  return memo<CoveringBasis>(g->id(), [&] {
    const auto x = direct_product(g, g);
    const auto poset = build_poset(g);
    const auto lat = subgroup_lattice(x);
    std::set<SectionKey, SectionKeyLess> keys;
    for (const auto& cls : lat->classes) {
      const Subgroup& t = cls.rep;
      if (!p1(t).is_whole() || !p2(t).is_whole()) continue;
      for (const auto& s : normal_subgroups_of(t))
        if (k1(s).is_trivial() && k2(s).is_trivial()) keys.insert(canonical_key(x, {t.elems(), s.elems()}));
    }
    CoveringBasis cb{g, {}, {}};
    for (const auto& k : keys) {
      const auto s = section_from_key(x, k);
      const std::size_t l0 = poset->index_of(k1(s.T), p1(s.S));
      const std::size_t r0 = poset->index_of(k2(s.T), p2(s.S));
      cb.index.emplace(k, cb.classes.size());
      cb.classes.push_back({k, l0, r0});
    }
    return cb;
  });
}

std::shared_ptr<const CoveringTables> covering_tables(const GroupPtr& g) {
  return memo<CoveringTables>(g->id(), [&] {
    const auto cb = covering_basis(g);
    const auto& e = *e_family(g);
    CoveringTables t;
    t.left.resize(e.size());
    t.right.resize(e.size());
    for (std::size_t y = 0; y < e.size(); ++y)
      for (const auto& c : cb->classes) {
        const auto b = class_element(g, g, c.key);
        t.left[y].push_back(cb->coords(compose(e[y], b)));
        t.right[y].push_back(cb->coords(compose(b, e[y])));
      }
    return t;
  });
}

std::size_t covering_closure_violations(const GroupPtr& g, std::size_t max_pairs) {
  const auto cb = covering_basis(g);
  const std::size_t n = cb->classes.size();
  std::size_t bad = 0;
  auto check = [&](std::size_t i, std::size_t j) {
    for (const auto& [k, m] : compose_classes(g, g, g, cb->classes[i].key, cb->classes[j].key))
      if (!cb->index.count(k)) {
        ++bad;
        return;
      }
  };
  if (n * n <= max_pairs) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) check(i, j);
  } else {
    std::mt19937_64 rng(0x5eed);
    for (std::size_t s = 0; s < max_pairs; ++s) check(rng() % n, rng() % n);
  }
  return bad;
}

std::shared_ptr<const LinkagePartition> linkage_partition(const GroupPtr& g) {
  return memo<LinkagePartition>(g->id(), [&] {
    const auto poset = build_poset(g);
    const std::size_t n = poset->size();
    std::vector<std::size_t> rep_of(n);
    std::vector<std::size_t> reps;
    for (std::size_t i = 0; i < n; ++i) {
      rep_of[i] = i;
      for (std::size_t r : reps)
        if (cm_linked(g, r, g, i)) {
          rep_of[i] = r;
          break;
        }
      if (rep_of[i] == i) reps.push_back(i);
    }
    LinkagePartition lp;
    lp.class_of.resize(n);
    std::map<std::size_t, std::size_t> class_index;
    for (std::size_t i = 0; i < n; ++i) {
      auto [it, inserted] = class_index.emplace(rep_of[i], lp.classes.size());
      if (inserted) lp.classes.emplace_back();
      lp.classes[it->second].push_back(i);
      lp.class_of[i] = it->second;
    }
    const std::size_t c = lp.classes.size();
    lp.class_le.assign(c * c, 0);
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        if (poset->order.le(x, y)) lp.class_le[lp.class_of[x] * c + lp.class_of[y]] = 1;
    return lp;
  });
}

GammaElement GammaGroup::element(std::size_t i) const {
  GammaElement e = zero_element(g, g);
  e.coeffs.emplace(elements[i], scale);
  return e;
}

std::shared_ptr<const GammaGroup> gamma_group(const GroupPtr& g, std::size_t pair) {
  return memo<GammaGroup>(g->id() * 4096 + pair, [&] {
    const auto poset = build_poset(g);
    const auto& pr = poset->pairs[pair];
    const auto x = direct_product(g, g);
    GammaGroup gg;
    gg.g = g;
    gg.pair = pair;
    gg.scale = Rational(static_cast<long>(pr.P.order()), static_cast<long>(g->order()));
    const SectionKey id = canonical_key(x, key_of(e_section_of(pr.K, pr.P)));
    gg.elements.push_back(id);
    for (const auto& c : covering_basis(g)->classes)
      if (c.l0 == pair && c.r0 == pair && !(c.key == id)) gg.elements.push_back(c.key);
    const std::size_t n = gg.elements.size();
    std::unordered_map<SectionKey, std::size_t, SectionKeyHash> index;
    for (std::size_t i = 0; i < n; ++i) index.emplace(gg.elements[i], i);
    const std::size_t idx = g->order() / pr.P.order();
    std::vector<std::vector<Elem>> table(n, std::vector<Elem>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const auto r = compose_classes(g, g, g, gg.elements[i], gg.elements[j]);
        if (r.size() != 1 || r[0].second != idx || !index.count(r[0].first))
          fail(ErrorCode::DecompositionMismatch, "Gamma product is not a single scaled class");
        table[i][j] = static_cast<Elem>(index.at(r[0].first));
      }
    gg.group = group_from_table("Gamma(" + g->name() + "," + std::to_string(pair) + ")", table);
    return gg;
  });
}

std::shared_ptr<const GammaGroup> gamma_group(const Subgroup& k, const Subgroup& p) {
  return gamma_group(k.parent(), build_poset(k.parent())->index_of(k, p));
}

ThetaCheck theta_check(const GroupPtr& g, std::size_t pair) {
  const auto gg = gamma_group(g, pair);
  const auto& pr = build_poset(g)->pairs[pair];
  const auto aut = aut_out(pair_data(g, pair)->x);
  ThetaCheck tc;
  tc.gamma_order = gg->elements.size();
  tc.out_order = aut.out_group->order();
  std::unordered_map<SectionKey, std::size_t, SectionKeyHash> index;
  for (std::size_t i = 0; i < gg->elements.size(); ++i) index.emplace(gg->elements[i], i);
  const auto x = direct_product(g, g);
  std::vector<std::size_t> th(aut.auts.size());
  for (std::size_t i = 0; i < aut.auts.size(); ++i) {
    const auto key = canonical_key(x, key_of(theta(pr.K, pr.P, aut.auts[i])));
    auto it = index.find(key);
    if (it == index.end()) return tc;
    th[i] = it->second;
  }
  std::set<std::size_t> hit;
  for (const auto& m : aut.out_reps) {
    const auto key = canonical_key(x, key_of(theta(pr.K, pr.P, m)));
    hit.insert(index.at(key));
  }
  tc.bijective = hit.size() == aut.out_reps.size() && hit.size() == tc.gamma_order;
  tc.multiplicative = true;
  const Group& a = *aut.aut_group;
  for (Elem i = 0; i < a.order() && tc.multiplicative; ++i)
    for (Elem j = 0; j < a.order(); ++j)
      if (gg->group->mul(static_cast<Elem>(th[i]), static_cast<Elem>(th[j])) != th[a.mul(i, j)]) {
        tc.multiplicative = false;
        break;
      }
  tc.kernel_is_inner = true;
  for (Elem i = 0; i < a.order(); ++i)
    if ((th[i] == 0) != aut.inn.contains(i)) tc.kernel_is_inner = false;
  return tc;
}

std::vector<SectionKey> bimodule_set(const Subgroup& k, const Subgroup& p, const Subgroup& l, const Subgroup& q,
                                     bool first_only) {
  require_same_parent(k, p);
  require_same_parent(l, q);
  const GroupPtr& g = k.parent();
  const GroupPtr& h = l.parent();
  std::vector<SectionKey> out;
  if (p.order() != q.order() || g->order() / k.order() != h->order() / l.order()) return out;
  const auto x = direct_product(g, h);
  const auto sgk = subquotient(whole_group(g), k), shl = subquotient(whole_group(h), l);
  const auto mp = materialize(p), mq = materialize(q);
  const auto betas = isomorphisms(shl->group, sgk->group);
  if (betas.empty()) return out;
  const auto phis = isomorphisms(mq->group, mp->group);
  std::set<SectionKey, SectionKeyLess> found;
  for (const auto& beta : betas) {
    ElementSet t(x->order());
    for (Elem a = 0; a < g->order(); ++a)
      for (Elem b = 0; b < h->order(); ++b)
        if (beta(shl->proj[b]) == sgk->proj[a]) t.insert(x->pair(a, b));
    const Subgroup ts(x, t);
    for (const auto& phi : phis) {
      ElementSet s(x->order());
      for (Elem i = 0; i < mq->lift.size(); ++i) s.insert(x->pair(mp->lift[phi(i)], mq->lift[i]));
      if (!is_normal(Subgroup(x, s), ts)) continue;
      found.insert(canonical_key(x, {t, s}));
      if (first_only) return {found.begin(), found.end()};
    }
  }
  return {found.begin(), found.end()};
}

bool section_linked(const Subgroup& k, const Subgroup& p, const Subgroup& l, const Subgroup& q) {
  return !bimodule_set(k, p, l, q, true).empty();
}

BimoduleCheck check_bimodule(const Subgroup& k, const Subgroup& p, const Subgroup& l, const Subgroup& q) {
  const GroupPtr& g = k.parent();
  const GroupPtr& h = l.parent();
  const auto set = bimodule_set(k, p, l, q);
  BimoduleCheck bc;
  bc.size = set.size();
  if (set.empty()) return bc;
  std::unordered_map<SectionKey, std::size_t, SectionKeyHash> index;
  for (std::size_t i = 0; i < set.size(); ++i) index.emplace(set[i], i);
  const auto gg = gamma_group(k, p), gh = gamma_group(l, q);
  const std::size_t ig = g->order() / p.order(), ih = h->order() / q.order();
  auto act = [&](const std::vector<std::pair<SectionKey, std::size_t>>& r, std::size_t idx) -> std::optional<std::size_t> {
    if (r.size() != 1 || r[0].second != idx) return std::nullopt;
    auto it = index.find(r[0].first);
    if (it == index.end()) return std::nullopt;
    return it->second;
  };
  auto evaluate = [&](bool left, bool& free, bool& transitive) {
    const auto& grp = left ? *gg : *gh;
    free = true;
    std::set<std::size_t> orbit;
    for (std::size_t a = 0; a < grp.elements.size(); ++a)
      for (std::size_t b = 0; b < set.size(); ++b) {
        const auto r = left ? compose_classes(g, g, h, grp.elements[a], set[b])
                            : compose_classes(g, h, h, set[b], grp.elements[a]);
        const auto c = act(r, left ? ig : ih);
        if (!c) {
          free = transitive = false;
          return;
        }
        if (*c == b && a != 0) free = false;
        if (b == 0) orbit.insert(*c);
      }
    transitive = orbit.size() == set.size();
  };
  evaluate(true, bc.left_free, bc.left_transitive);
  evaluate(false, bc.right_free, bc.right_transitive);
  return bc;
}

namespace {

struct FCoeffs {
  std::vector<std::vector<std::pair<std::size_t, long>>> f;  // f_x = sum mu e_y
};

SparseVec left_mul(const CoveringTables& t, const std::vector<std::pair<std::size_t, long>>& f, std::size_t b) {
  SparseVec v;
  for (const auto& [y, c] : f) axpy(v, Rational(c), t.left[y][b]);
  return v;
}

SparseVec right_mul_vec(const CoveringTables& t, const SparseVec& v, const std::vector<std::pair<std::size_t, long>>& f) {
  SparseVec out;
  for (const auto& [b, c] : v)
    for (const auto& [y, m] : f) axpy(out, c * m, t.right[y][b]);
  return out;
}

std::vector<std::pair<std::size_t, long>> class_f(const FinitePoset& p, const MobiusTable& mu,
                                                  const std::vector<std::size_t>& members) {
  std::map<std::size_t, long> acc;
  const auto fe = f_expansion(p, mu);
  for (std::size_t x : members)
    for (const auto& [y, c] : fe[x]) acc[y] += c;
  std::vector<std::pair<std::size_t, long>> out;
  for (const auto& [y, c] : acc)
    if (c != 0) out.push_back({y, c});
  return out;
}

}  // namespace

MatrixReport matrix_decomposition(const GroupPtr& g) {
  const auto cb = covering_basis(g);
  const auto tables = covering_tables(g);
  const auto poset = build_poset(g);
  const auto mu = poset_mobius(g);
  const auto part = linkage_partition(g);
  const auto fe = f_expansion(poset->order, *mu);
  const std::size_t n = cb->classes.size();
  MatrixReport rep;
  rep.covering_dim = n;
  auto note = [&](const std::string& s) { rep.failures.push_back(s); };
  for (std::size_t c = 0; c < part->classes.size(); ++c) {
    const auto& members = part->classes[c];
    BlockReport br;
    br.linkage_class = c;
    br.n = members.size();
    br.gamma_order = gamma_group(g, members[0])->elements.size();
    rep.block_sum += br.n * br.n * br.gamma_order;
    const auto fc = class_f(poset->order, *mu, members);
    RowSpace ideal, omega;
    for (std::size_t b = 0; b < n; ++b) {
      SparseVec unit{{b, Rational(1)}};
      SparseVec v = right_mul_vec(*tables, unit, fc);
      ideal.add(v);
      if (part->class_of[cb->classes[b].l0] == c) {
        ++br.submodule_dim;
        omega.add(v);
      }
    }
    br.ideal_dim = ideal.rank();
    br.omega_rank = omega.rank();
    const std::string tag = "class " + std::to_string(c) + ": ";
    if (br.ideal_dim != br.n * br.n * br.gamma_order) note(tag + "ideal dimension differs from n^2 |Gamma|");
    if (br.submodule_dim != br.ideal_dim || br.omega_rank != br.ideal_dim) note(tag + "projection is not invertible");
    // Entries f_i E f_j within the block.
    for (std::size_t i : members)
      for (std::size_t j : members) {
        RowSpace entry;
        for (std::size_t b = 0; b < n; ++b) entry.add(right_mul_vec(*tables, left_mul(*tables, fe[i], b), fe[j]));
        if (entry.rank() != br.gamma_order) note(tag + "block entry dimension differs from |Gamma|");
      }
    // f a f realizes k[Gamma] for each member.
    for (std::size_t i : members) {
      const auto gg = gamma_group(g, i);
      const std::size_t m = gg->elements.size();
      std::vector<SparseVec> w(m);
      RowSpace span;
      for (std::size_t a = 0; a < m; ++a) {
        SparseVec fa = left_mul(*tables, fe[i], cb->index.at(gg->elements[a]));
        for (auto& [k, v] : fa) v *= gg->scale;
        w[a] = right_mul_vec(*tables, fa, fe[i]);
        span.add(w[a]);
      }
      if (span.rank() != m) note(tag + "f a f images are dependent");
      const std::size_t limit = 4096;
      std::mt19937 rng(static_cast<unsigned>(i));
      const bool all = m * m <= limit;
      for (std::size_t s = 0; s < (all ? m * m : limit); ++s) {
        const std::size_t a = all ? s / m : rng() % m, b = all ? s % m : rng() % m;
        const auto prod = cb->coords(compose(cb->element(w[a]), cb->element(w[b])));
        if (prod != w[gg->group->mul(static_cast<Elem>(a), static_cast<Elem>(b))]) {
          note(tag + "f a f does not multiply like Gamma");
          break;
        }
      }
    }
    rep.blocks.push_back(br);
  }
  return rep;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Reduced: return "Reduced";
    case Verdict::NotReduced: return "NotReduced";
    case Verdict::Undetermined: return "Undetermined";
  }
  return "?";
}

std::string to_string(Rule r) {
  switch (r) {
    case Rule::KleP: return "KleP";
    case Rule::PltK: return "PltK";
    case Rule::PKeqG: return "PKeqG";
    case Rule::NecessaryViolated: return "NecessaryViolated";
    case Rule::SmallerLinked: return "SmallerLinked";
    case Rule::Exhausted: return "Exhausted";
  }
  return "?";
}

namespace {

std::optional<std::pair<std::string, std::size_t>> smaller_linked(const GroupPtr& g, std::size_t pair,
                                                                  const Catalog& catalog) {
  for (const auto* e : catalog.of_order_below(g->order())) {
    const auto ph = build_poset(e->group);
    for (std::size_t j = 0; j < ph->size(); ++j)
      if (cm_linked(g, pair, e->group, j)) return std::make_pair(e->id, j);
  }
  return std::nullopt;
}

}  // namespace

RuleFirings evaluate_rules(const GroupPtr& g, std::size_t pair, const Catalog& catalog) {
  const auto& pr = build_poset(g)->pairs[pair];
  RuleFirings r;
  r.k_le_p = pr.K.is_subgroup_of(pr.P);
  r.p_lt_k = pr.P.is_subgroup_of(pr.K) && pr.P.order() < pr.K.order();
  r.pk_eq_g = join(pr.P, pr.K).is_whole() && !r.k_le_p;
  for (const auto& n : normal_subgroups(g))
    if (!n.is_trivial() && n.is_subgroup_of(pr.K) && meet(pr.P, n).is_trivial()) r.necessary_violated = true;
  r.smaller_linked = smaller_linked(g, pair, catalog);
  return r;
}

ReducedStatus reduced_status(const GroupPtr& g, std::size_t pair, const Catalog& catalog) {
  const auto& pr = build_poset(g)->pairs[pair];
  ReducedStatus s;
  s.pair = pair;
  auto set = [&](Verdict v, Rule r) {
    s.verdict = v;
    s.rule = r;
    return s;
  };
  if (pr.K.is_subgroup_of(pr.P)) return set(Verdict::Reduced, Rule::KleP);
  if (pr.P.is_subgroup_of(pr.K)) return set(Verdict::NotReduced, Rule::PltK);
  if (join(pr.P, pr.K).is_whole()) return set(Verdict::NotReduced, Rule::PKeqG);
  for (const auto& n : normal_subgroups(g))
    if (!n.is_trivial() && n.is_subgroup_of(pr.K) && meet(pr.P, n).is_trivial())
      return set(Verdict::NotReduced, Rule::NecessaryViolated);
  if (const auto w = smaller_linked(g, pair, catalog)) {
    s.witness_group = w->first;
    s.witness_pair = w->second;
    return set(Verdict::NotReduced, Rule::SmallerLinked);
  }
  if (g->order() > 1 && !catalog.complete_for(g->order() - 1))
    fail(ErrorCode::IncompleteCatalog, "catalog misses groups of order below " + std::to_string(g->order()));
  return set(Verdict::Undetermined, Rule::Exhausted);
}

std::vector<ReducedStatus> reduced_statuses(const GroupPtr& g, const Catalog& catalog) {
  std::vector<ReducedStatus> out;
  for (std::size_t i = 0; i < build_poset(g)->size(); ++i) out.push_back(reduced_status(g, i, catalog));
  return out;
}

EssentialReport essential_report(const GroupPtr& g, const Catalog& catalog) {
  EssentialReport rep;
  rep.statuses = reduced_statuses(g, catalog);
  const auto poset = build_poset(g);
  const auto x = direct_product(g, g);
  const auto classes = enumerate_sections(x);
  rep.basis_dim = classes->size();
  rep.determined = std::none_of(rep.statuses.begin(), rep.statuses.end(),
                                [](const ReducedStatus& s) { return s.verdict == Verdict::Undetermined; });
  for (std::size_t i = 0; i < classes->size(); ++i) {
    const auto& s = (*classes)[i].canonical;
    const bool full = p1(s.T).is_whole(), faithful = k1(s.S).is_trivial();
    bool in_ideal_or = !full || !faithful, in_ideal_and = !full && !faithful;
    if (full && faithful) {
      const auto l0 = poset->index_of(k1(s.T), p1(s.S));
      if (rep.statuses[l0].verdict == Verdict::NotReduced) in_ideal_or = in_ideal_and = true;
    }
    if (in_ideal_or) rep.predicted_ideal.push_back(i);
    if (in_ideal_and) rep.predicted_ideal_and.push_back(i);
  }
  const auto part = linkage_partition(g);
  for (const auto& cls : part->classes) {
    Verdict v = Verdict::NotReduced;
    for (std::size_t m : cls) {
      if (rep.statuses[m].verdict == Verdict::Reduced) v = Verdict::Reduced;
      else if (rep.statuses[m].verdict == Verdict::Undetermined && v != Verdict::Reduced) v = Verdict::Undetermined;
    }
    if (v == Verdict::NotReduced) continue;
    const auto gg = gamma_group(g, cls[0]);
    const std::size_t dim = cls.size() * cls.size() * gg->elements.size();
    const std::size_t simples = conjugacy_class_count(*gg->group);
    rep.dim_upper += dim;
    rep.simple_upper += simples;
    if (v == Verdict::Reduced) {
      rep.dim_lower += dim;
      rep.simple_lower += simples;
    }
  }
  return rep;
}

IdealOracle essential_ideal_oracle(const GroupPtr& g, const Catalog& catalog) {
  if (g->order() > 1 && !catalog.complete_for(g->order() - 1))
    fail(ErrorCode::IncompleteCatalog, "catalog misses groups of order below " + std::to_string(g->order()));
  const auto x = direct_product(g, g);
  const auto classes = enumerate_sections(x);
  std::unordered_map<SectionKey, std::size_t, SectionKeyHash> index;
  for (std::size_t i = 0; i < classes->size(); ++i) index.emplace(key_of((*classes)[i].canonical), i);
  RowSpace span;
  for (const auto* e : catalog.of_order_below(g->order())) {
    const GroupPtr& h = e->group;
    std::vector<SectionKey> left, right;
    for (const auto& c : *enumerate_sections(direct_product(g, h))) left.push_back(key_of(c.canonical));
    for (const auto& c : *enumerate_sections(direct_product(h, g))) right.push_back(key_of(c.canonical));
    for (const auto& a : left)
      for (const auto& b : right) {
        SparseVec v;
        for (const auto& [k, m] : compose_classes(g, h, g, a, b)) v.emplace(index.at(k), Rational(static_cast<long>(m)));
        span.add(std::move(v));
      }
  }
  const auto rep = essential_report(g, catalog);
  IdealOracle o;
  o.rank = span.rank();
  auto matches = [&](const std::vector<std::size_t>& pred) {
    std::vector<char> mask(classes->size());
    for (std::size_t i : pred) mask[i] = 1;
    return span.rank() == pred.size() && span.supported_in(mask);
  };
  o.matches_or_reading = matches(rep.predicted_ideal);
  o.matches_and_reading = matches(rep.predicted_ideal_and);
  const auto poset = build_poset(g);
  for (const auto& pr : poset->pairs) {
    const auto k = canonical_key(x, key_of(e_section_of(pr.K, pr.P)));
    o.e_in_ideal.push_back(span.contains(SparseVec{{index.at(k), Rational(1)}}) ? 1 : 0);
  }
  return o;
}

namespace {

// Transport of conjugacy classes of Gamma_(H,L,Q) to Gamma_(G,K,P) along
// y -> gamma y gamma^op for the least bimodule element gamma.
std::vector<std::size_t> transport_classes(const GroupPtr& g, std::size_t a, const GroupPtr& h, std::size_t b) {
  const auto& pa = build_poset(g)->pairs[a];
  const auto& pb = build_poset(h)->pairs[b];
  const auto set = bimodule_set(pa.K, pa.P, pb.K, pb.P, true);
  if (set.empty()) fail(ErrorCode::DecompositionMismatch, "linked triples without a bimodule element");
  const SectionKey& gamma = set.front();
  const auto gh = direct_product(g, h);
  const auto hg = direct_product(h, g);
  const SectionKey gamma_op = canonical_key(hg, key_of(opposite(section_from_key(gh, gamma))));
  const auto ga = gamma_group(g, a), gb = gamma_group(h, b);
  if (ga->elements.size() != gb->elements.size())
    fail(ErrorCode::DecompositionMismatch, "linked triples with Gamma groups of different orders");
  std::unordered_map<SectionKey, std::size_t, SectionKeyHash> index;
  for (std::size_t i = 0; i < ga->elements.size(); ++i) index.emplace(ga->elements[i], i);
  const std::size_t m = gb->elements.size();
  std::vector<Elem> phi(m);
  for (std::size_t j = 0; j < m; ++j) {
    const auto r1 = compose_classes(g, h, h, gamma, gb->elements[j]);
    if (r1.size() != 1) fail(ErrorCode::DecompositionMismatch, "bimodule action is not a single class");
    const auto r2 = compose_classes(g, h, g, r1[0].first, gamma_op);
    if (r2.size() != 1 || !index.count(r2[0].first))
      fail(ErrorCode::DecompositionMismatch, "transport does not land in Gamma");
    phi[j] = static_cast<Elem>(index.at(r2[0].first));
  }
  const Hom map{gb->group, ga->group, phi};
  if (!map.is_homomorphism() || !map.is_bijective())
    fail(ErrorCode::DecompositionMismatch, "transport is not a group isomorphism");
  const auto cls_a = conjugacy_class_ids(*ga->group), cls_b = conjugacy_class_ids(*gb->group);
  std::vector<std::size_t> out(conjugacy_class_count(*gb->group), static_cast<std::size_t>(-1));
  for (std::size_t j = 0; j < m; ++j) {
    auto& slot = out[cls_b[j]];
    if (slot != static_cast<std::size_t>(-1) && slot != cls_a[phi[j]])
      fail(ErrorCode::DecompositionMismatch, "transport does not respect conjugacy");
    slot = cls_a[phi[j]];
  }
  return out;
}

}  // namespace

SeedTable seeds(const Catalog& catalog) {
  SeedTable table;
  struct Pending {
    const CatalogEntry* entry;
    std::size_t pair;
    SeedMember member;
  };
  for (const auto& e : catalog.groups) {
    const auto statuses = reduced_statuses(e.group, catalog);
    const auto part = linkage_partition(e.group);
    for (const auto& cls : part->classes) {
      Verdict v = statuses[cls[0]].verdict;
      for (std::size_t m : cls)
        if (statuses[m].verdict == Verdict::Reduced) v = Verdict::Reduced;
      if (v == Verdict::Undetermined) ++table.undetermined;
      if (v != Verdict::Reduced) continue;
      const auto gg = gamma_group(e.group, cls[0]);
      SeedMember m;
      m.group_id = e.id;
      m.pair = cls[0];
      m.class_size = cls.size();
      m.gamma_order = gg->elements.size();
      m.irr_count = conjugacy_class_count(*gg->group);
      m.irr_transport.resize(m.irr_count);
      std::iota(m.irr_transport.begin(), m.irr_transport.end(), 0);
      bool merged = false;
      for (auto& row : table.rows) {
        const auto& anchor = row.members.front();
        const auto& ga = catalog.find(anchor.group_id).group;
        if (ga->order() != e.group->order()) continue;
        if (!cm_linked(ga, anchor.pair, e.group, cls[0])) continue;
        const auto& pa = build_poset(ga)->pairs[anchor.pair];
        const auto& pb = build_poset(e.group)->pairs[cls[0]];
        m.witness = linked(pa.K, pa.P, pb.K, pb.P)->section;
        m.irr_transport = transport_classes(ga, anchor.pair, e.group, cls[0]);
        row.members.push_back(std::move(m));
        merged = true;
        break;
      }
      if (!merged) table.rows.push_back(SeedRow{e.group->order(), {std::move(m)}});
    }
  }
  return table;
}

}  // namespace sbw
