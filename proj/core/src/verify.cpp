#include "sbw/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <random>
#include <set>

#include "sbw/classification.hpp"
#include "sbw/crossed_module.hpp"
#include "sbw/error.hpp"
#include "sbw/linkage.hpp"
#include "sbw/morphisms.hpp"

namespace sbw {

bool SuiteResult::ok() const { return failures() == 0; }

std::size_t SuiteResult::failures() const {
  return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const CheckResult& c) { return !c.passed; }));
}

namespace {

struct Recorder {
  SuiteResult& r;
  void check(std::string name, bool passed, std::string detail = {}) {
    r.checks.push_back({std::move(name), passed, std::move(detail)});
  }
};

// First failure message wins; counts the rest.
struct Failures {
  std::size_t count = 0;
  std::string first;
  void add(const std::string& what) {
    if (count++ == 0) first = what;
  }
  std::string detail(std::size_t total) const {
    std::string d = std::to_string(total - count) + "/" + std::to_string(total) + " hold";
    if (count) d += "; first failure: " + first;
    return d;
  }
};

std::vector<GroupPtr> groups_up_to(const std::vector<std::string>& names, std::size_t max_order) {
  std::vector<GroupPtr> out;
  for (const auto& n : names)
    if (auto g = named_group(n); g->order() <= max_order) out.push_back(std::move(g));
  return out;
}

std::vector<SectionKey> class_keys(const GroupPtr& g, const GroupPtr& h) {
  std::vector<SectionKey> out;
  for (const auto& c : *enumerate_sections(direct_product(g, h))) out.push_back(key_of(c.canonical));
  return out;
}

std::string pair_name(const PairKP& p) {
  return "(|K|=" + std::to_string(p.K.order()) + ",|P|=" + std::to_string(p.P.order()) + ")";
}

// ---------------------------------------------------------------- groups

void suite_groups(const VerifyOptions& opt, Recorder& rec) {
  const auto cat = builtin_catalog(opt.max_order);
  for (const auto& e : cat.groups) {
    const auto& g = e.group;
    Failures f;
    std::size_t total = 0;
    std::vector<std::vector<Elem>> table(g->order(), std::vector<Elem>(g->order()));
    for (Elem a = 0; a < g->order(); ++a)
      for (Elem b = 0; b < g->order(); ++b) table[a][b] = g->mul(a, b);
    ++total;
    try {
      validate_table(table);
    } catch (const Error& err) {
      f.add(err.what());
    }
    for (const auto& n : normal_subgroups(g)) {
      ++total;
      if (quotient(n).group->order() * n.order() != g->order()) f.add("quotient order");
    }
    const auto subs = enumerate_subgroups(g);
    for (const auto& a : subs)
      for (const auto& b : subs) {
        ++total;
        std::vector<int> hit(g->order(), 0);
        for (Elem t : double_cosets(a, b))
          for (Elem x : a.elements())
            for (Elem y : b.elements()) hit[g->mul(g->mul(x, t), y)] = 1;
        std::size_t covered = static_cast<std::size_t>(std::count(hit.begin(), hit.end(), 1));
        std::size_t sizes = 0;
        for (Elem t : double_cosets(a, b)) {
          std::set<Elem> dc;
          for (Elem x : a.elements())
            for (Elem y : b.elements()) dc.insert(g->mul(g->mul(x, t), y));
          sizes += dc.size();
        }
        if (covered != g->order() || sizes != g->order()) f.add("double cosets do not partition");
      }
    ++total;
    const auto aut = automorphisms(g);
    if (aut->group->order() != aut->homs.size()) f.add("automorphism group order");
    rec.check(e.id + ": axioms, quotients, double cosets", f.count == 0, f.detail(total));
  }
}

// ---------------------------------------------------------------- goursat

void suite_goursat(const VerifyOptions& opt, Recorder& rec) {
  const auto groups = groups_up_to({"C1", "C2", "C3", "C4", "V4", "S3"}, opt.max_order);
  for (const auto& g : groups)
    for (const auto& h : groups) {
      if (g->order() * h->order() > 36) continue;
      const auto x = direct_product(g, h);
      const auto lat = subgroup_lattice(x);
      Failures f;
      std::size_t total = 0;
      std::vector<GoursatQuintuple> q;
      for (const auto& u : lat->all) {
        q.push_back(goursat(u));
        ++total;
        if (!(subgroup_from_goursat(q.back()) == u)) f.add("subgroup reconstruction");
      }
      for (std::size_t ti = 0; ti < lat->all.size(); ++ti) {
        const Subgroup& t = lat->all[ti];
        for (const auto& s : subgroups_of(t)) {
          ++total;
          const auto& qs = q[lat->index.at(s.elems())];
          const auto failed = first_failed_condition(q[ti], qs);
          const bool normal = is_normal(s, t);
          if (!failed != normal) {
            f.add(normal ? "normal section fails " + *failed : "admissible pair is not a section");
            continue;
          }
          if (normal) {
            const auto back = section_from_goursat_pair(q[ti], qs);
            if (!(back.T == t) || !(back.S == s)) f.add("section reconstruction");
          }
        }
      }
      rec.check(g->name() + " x " + h->name(), f.count == 0, f.detail(total));
    }
}

// ---------------------------------------------------------------- mackey

Section random_section(const GroupPtr& x, std::mt19937_64& rng) {
  const auto& all = subgroup_lattice(x)->all;
  const Subgroup& t = all[rng() % all.size()];
  const auto normals = normal_subgroups_of(t);
  return make_section(t, normals[rng() % normals.size()]);
}

void suite_mackey(const VerifyOptions& opt, Recorder& rec) {
  const auto small = groups_up_to({"C1", "C2", "C3"}, opt.max_order);
  Failures f;
  std::size_t total = 0;
  for (const auto& g : small)
    for (const auto& h : small)
      for (const auto& k : small)
        for (const auto& l : small) {
          const auto a = class_keys(g, h), b = class_keys(h, k), c = class_keys(k, l);
          std::vector<GammaElement> ab, bc;
          for (const auto& ka : a)
            for (const auto& kb : b) ab.push_back(compose(class_element(g, h, ka), class_element(h, k, kb)));
          for (const auto& kb : b)
            for (const auto& kc : c) bc.push_back(compose(class_element(h, k, kb), class_element(k, l, kc)));
          for (std::size_t i = 0; i < a.size(); ++i)
            for (std::size_t j = 0; j < b.size(); ++j)
              for (std::size_t m = 0; m < c.size(); ++m) {
                ++total;
                const auto lhs = compose(ab[i * b.size() + j], class_element(k, l, c[m]));
                const auto rhs = compose(class_element(g, h, a[i]), bc[j * c.size() + m]);
                if (!(lhs.coeffs == rhs.coeffs))
                  f.add(g->name() + "," + h->name() + "," + k->name() + "," + l->name());
              }
        }
  rec.check("exhaustive basis triples, orders <= 3", f.count == 0, f.detail(total));

  const auto cat = builtin_catalog(std::min<std::size_t>(opt.max_order, 8));
  std::mt19937_64 rng(opt.seed);
  Failures fr;
  for (std::size_t s = 0; s < opt.random_triples; ++s) {
    const auto pick = [&] { return cat.groups[rng() % cat.groups.size()].group; };
    const auto g = pick(), h = pick(), k = pick(), l = pick();
    const auto a = class_element(random_section(direct_product(g, h), rng));
    const auto b = class_element(random_section(direct_product(h, k), rng));
    const auto c = class_element(random_section(direct_product(k, l), rng));
    const auto lhs = compose(compose(a, b), c), rhs = compose(a, compose(b, c));
    if (!(lhs.coeffs == rhs.coeffs)) fr.add(g->name() + "," + h->name() + "," + k->name() + "," + l->name());
  }
  rec.check("random triples, orders <= " + std::to_string(std::min<std::size_t>(opt.max_order, 8)), fr.count == 0,
            fr.detail(opt.random_triples));
}

// ---------------------------------------------------------------- idempotents

using Dense = std::vector<long>;

struct FormalAlgebra {
  std::size_t n;
  std::vector<std::size_t> join;  // e_x e_y = e_join[x*n+y]
  Dense mul(const Dense& a, const Dense& b) const {
    std::vector<std::size_t> sb;
    for (std::size_t w = 0; w < n; ++w)
      if (b[w]) sb.push_back(w);
    Dense out(n, 0);
    for (std::size_t z = 0; z < n; ++z)
      if (a[z])
        for (std::size_t w : sb) out[join[z * n + w]] += a[z] * b[w];
    return out;
  }
};

// |G| b e_y in covering coordinates, computed on demand. The entries are
// integers since e_y = [E_y] |P| / |G|.
using IntVec = std::vector<std::pair<std::size_t, long>>;

struct LazyTables {
  GroupPtr g;
  std::shared_ptr<const CoveringBasis> cb;
  std::vector<SectionKey> ek;
  std::vector<long> weight;  // |P_y|
  std::vector<std::vector<IntVec>> right;

  IntVec convert(const std::vector<std::pair<SectionKey, std::size_t>>& terms, long w) const {
    std::map<std::size_t, long> acc;
    for (const auto& [k, m] : terms) {
      auto it = cb->index.find(k);
      if (it == cb->index.end()) fail(ErrorCode::DecompositionMismatch, "product leaves the covering classes");
      acc[it->second] += w * static_cast<long>(m);
    }
    return {acc.begin(), acc.end()};
  }
  const std::vector<IntVec>& times_e(std::size_t b) {
    if (right.empty()) right.resize(cb->classes.size());
    auto& row = right[b];
    if (row.empty())
      for (std::size_t y = 0; y < ek.size(); ++y)
        row.push_back(convert(compose_classes(g, g, g, cb->classes[b].key, ek[y]), weight[y]));
    return row;
  }
};

// Dense accumulator with a touched list.
struct Accumulator {
  std::vector<long> v;
  std::vector<std::size_t> touched;
  explicit Accumulator(std::size_t n) : v(n, 0) {}
  void add(std::size_t i, long c) {
    if (v[i] == 0) touched.push_back(i);
    v[i] += c;
  }
  IntVec take() {
    std::sort(touched.begin(), touched.end());
    touched.erase(std::unique(touched.begin(), touched.end()), touched.end());
    IntVec out;
    for (std::size_t i : touched) {
      if (v[i] != 0) out.push_back({i, v[i]});
      v[i] = 0;
    }
    touched.clear();
    return out;
  }
};

void suite_idempotents(const VerifyOptions& opt, Recorder& rec) {
  const auto cat = builtin_catalog(opt.max_order);
  for (const auto& entry : cat.groups) {
    const auto& g = entry.group;
    const auto x = direct_product(g, g);
    const auto poset = build_poset(g);
    const auto mu = poset_mobius(g);
    const std::size_t n = poset->size();
    const auto& pairs = poset->pairs;
    std::vector<SectionKey> ek(n);
    std::vector<Rational> scale(n);
    for (std::size_t i = 0; i < n; ++i) {
      ek[i] = canonical_key(x, key_of(e_section_of(pairs[i].K, pairs[i].P)));
      scale[i] = Rational(static_cast<long>(pairs[i].P.order()), static_cast<long>(g->order()));
    }

    // Products of the E classes.
    FormalAlgebra fa{n, std::vector<std::size_t>(n * n)};
    Failures fe;
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        const auto r = compose_classes(g, g, g, ek[a], ek[b]);
        const std::size_t j = poset->join(a, b);
        fa.join[a * n + b] = j;
        const bool join_ok = pairs[j].K == join(pairs[a].K, pairs[b].K) && pairs[j].P == meet(pairs[a].P, pairs[b].P);
        const std::size_t dc = double_cosets(pairs[a].P, pairs[b].P).size();
        if (!join_ok || r.size() != 1 || !(r[0].first == ek[j]) || r[0].second != dc) {
          fe.add(pair_name(pairs[a]) + " * " + pair_name(pairs[b]));
          continue;
        }
        if (scale[a] * scale[b] * static_cast<long>(dc) != scale[j]) fe.add("e product is not e of the join");
      }
    if (!(e_family(g)->at(poset->minimum).coeffs == identity(g).coeffs)) fe.add("e_(1,G) is not the identity");
    rec.check(entry.id + ": E products and e_(1,G) = 1", fe.count == 0, fe.detail(n * n + 1));

    // f identities in the e basis.
    const auto fexp = f_expansion(poset->order, *mu);
    std::vector<Dense> e(n, Dense(n, 0)), f(n, Dense(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
      e[i][i] = 1;
      for (const auto& [y, c] : fexp[i]) f[i][y] += c;
    }
    const Dense zero(n, 0);
    Failures ff;
    std::size_t total = 0;
    Dense sum(n, 0);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t y = 0; y < n; ++y) sum[y] += f[a][y];
      Dense up(n, 0);
      for (std::size_t b = 0; b < n; ++b)
        if (poset->order.le(a, b))
          for (std::size_t y = 0; y < n; ++y) up[y] += f[b][y];
      ++total;
      if (up != e[a]) ff.add("e != sum of f above " + pair_name(pairs[a]));
      for (std::size_t b = 0; b < n; ++b) {
        total += 3;
        const Dense& want_ef = poset->order.le(a, b) ? f[b] : zero;
        if (fa.mul(e[a], f[b]) != want_ef || fa.mul(f[b], e[a]) != want_ef)
          ff.add("e f at " + pair_name(pairs[a]) + "," + pair_name(pairs[b]));
        if (fa.mul(f[a], f[b]) != (a == b ? f[a] : zero)) ff.add("f f at " + pair_name(pairs[a]) + "," + pair_name(pairs[b]));
      }
    }
    ++total;
    if (sum != e[poset->minimum]) ff.add("sum of f is not 1");
    const auto& lib_f = *f_family_of(g);
    const auto& lib_e = *e_family(g);
    for (std::size_t a = 0; a < n; ++a) {
      ++total;
      GammaElement want = zero_element(g, g);
      for (std::size_t y = 0; y < n; ++y)
        if (f[a][y]) want += Rational(f[a][y]) * lib_e[y];
      if (!(want.coeffs == lib_f[a].coeffs)) ff.add("library f differs at " + pair_name(pairs[a]));
    }
    rec.check(entry.id + ": e f and f f products, sum of f", ff.count == 0, ff.detail(total));

    // Class idempotents.
    const auto part = linkage_partition(g);
    const std::size_t nc = part->classes.size();
    std::vector<Dense> ec(nc, zero), fc(nc, zero);
    for (std::size_t c = 0; c < nc; ++c)
      for (std::size_t m : part->classes[c])
        for (std::size_t y = 0; y < n; ++y) {
          ec[c][y] += e[m][y];
          fc[c][y] += f[m][y];
        }
    Failures fcl;
    for (std::size_t a = 0; a < nc; ++a)
      for (std::size_t b = 0; b < nc; ++b) {
        const auto ef = fa.mul(ec[a], fc[b]), fe2 = fa.mul(fc[b], ec[a]);
        if (ef != fe2) fcl.add("class e f do not commute");
        if (a == b && ef != fc[a]) fcl.add("class e f != f");
        if (!part->le(a, b) && ef != zero) fcl.add("class e f nonzero off the order");
        if (fa.mul(fc[a], fc[b]) != (a == b ? fc[a] : zero)) fcl.add("class f f");
      }
    rec.check(entry.id + ": class idempotents", fcl.count == 0, fcl.detail(nc * nc));

    // Covering classes: left/right E action and centrality of class f.
    std::vector<long> weight(n);
    for (std::size_t i = 0; i < n; ++i) weight[i] = static_cast<long>(pairs[i].P.order());
    LazyTables lt{g, covering_basis(g), ek, weight, {}};
    const std::size_t ncov = lt.cb->classes.size();
    std::vector<std::size_t> sample;
    if (ncov <= opt.exhaustive_limit) {
      for (std::size_t b = 0; b < ncov; ++b) sample.push_back(b);
    } else {
      std::mt19937_64 rng(opt.seed);
      std::set<std::size_t> chosen;
      while (chosen.size() < std::min(opt.sample, ncov)) chosen.insert(rng() % ncov);
      sample.assign(chosen.begin(), chosen.end());
    }
    const std::string scope = sample.size() == ncov ? "all " + std::to_string(ncov) + " covering classes"
                                                    : std::to_string(sample.size()) + " of " + std::to_string(ncov) +
                                                          " covering classes";
    std::vector<std::vector<std::pair<std::size_t, long>>> cf(nc);
    for (std::size_t c = 0; c < nc; ++c)
      for (std::size_t y = 0; y < n; ++y)
        if (fc[c][y]) cf[c].push_back({y, fc[c][y]});
    Failures f42, fcen;
    std::size_t t42 = 0, tcen = 0;
    Accumulator acc(ncov);
    std::vector<IntVec> lrow(n);  // |G| e_y b
    std::vector<std::size_t> dcs(n * n, 0);  // |P_a \ G / P_y|, filled on demand
    for (std::size_t b : sample) {
      const auto& cls = lt.cb->classes[b];
      const auto sec = section_from_key(x, cls.key);
      for (std::size_t a = 0; a < n; ++a) {
        ++t42;
        const auto r = compose_classes(g, g, g, ek[a], cls.key);
        lrow[a].clear();
        std::size_t& dc = dcs[a * n + cls.l0];
        if (dc == 0) dc = double_cosets(pairs[a].P, pairs[cls.l0].P).size();
        if (r.size() != 1 || r[0].second != dc) {
          f42.add("(a) multiplicity at " + pair_name(pairs[a]));
          continue;
        }
        const auto it = lt.cb->index.find(r[0].first);
        if (it == lt.cb->index.end()) {
          f42.add("(a) product leaves the covering classes at " + pair_name(pairs[a]));
          continue;
        }
        lrow[a] = lt.convert(r, weight[a]);
        // Left invariants of the product are (G, K K', P meet P', 1).
        if (lt.cb->classes[it->second].l0 != poset->join(a, cls.l0))
          f42.add("(a) left invariants at " + pair_name(pairs[a]));
        if (poset->order.le(a, cls.l0) &&
            (!(r[0].first == cls.key) || r[0].second != g->order() / pairs[a].P.order()))
          f42.add("(b) at " + pair_name(pairs[a]));
      }
      ++t42;
      const auto op = canonical_key(x, key_of(opposite(sec)));
      const auto r = compose_classes(g, g, g, cls.key, op);
      const std::size_t idx_q = g->order() / p2(sec.S).order();
      if (r.size() != 1 || !(r[0].first == ek[cls.l0]) || r[0].second != idx_q) f42.add("(c) b b^op");

      const auto& rrow = lt.times_e(b);
      for (std::size_t a = 0; a < nc; ++a) {
        for (const auto& [y, c] : cf[a])
          for (const auto& [i, v] : lrow[y]) acc.add(i, c * v);
        const IntVec left = acc.take();
        for (const auto& [y, c] : cf[a])
          for (const auto& [i, v] : rrow[y]) acc.add(i, c * v);
        const IntVec right = acc.take();
        ++tcen;
        if (left != right) fcen.add("f b != b f for class " + std::to_string(a));
        // f b f = f b, i.e. f b f_d = 0 for d != a; both sides scaled by |G|^2.
        ++tcen;
        for (const auto& [i, v] : left) {
          const auto& row = lt.times_e(i);
          for (const auto& [y, c] : cf[a])
            for (const auto& [j, w] : row[y]) acc.add(j, v * c * w);
        }
        const IntVec both = acc.take();
        const long scale_g = static_cast<long>(g->order());
        bool same = both.size() == left.size();
        for (std::size_t t = 0; same && t < both.size(); ++t)
          same = both[t].first == left[t].first && both[t].second == scale_g * left[t].second;
        if (!same) fcen.add("f b f != f b for class " + std::to_string(a));
      }
    }
    rec.check(entry.id + ": E action on " + scope, f42.count == 0, f42.detail(t42));
    rec.check(entry.id + ": class f central on " + scope, fcen.count == 0, fcen.detail(tcen));
  }
}

// ---------------------------------------------------------------- gamma

void suite_gamma(const VerifyOptions& opt, Recorder& rec) {
  const auto cat = builtin_catalog(opt.max_order);
  for (const auto& e : cat.groups) {
    const auto poset = build_poset(e.group);
    Failures f;
    for (std::size_t i = 0; i < poset->size(); ++i) {
      const auto tc = theta_check(e.group, i);
      if (!tc.ok())
        f.add(pair_name(poset->pairs[i]) + " |Gamma|=" + std::to_string(tc.gamma_order) +
              " |Out|=" + std::to_string(tc.out_order));
    }
    rec.check(e.id + ": |Gamma| = |Out| via Theta", f.count == 0, f.detail(poset->size()));
  }
}

// ---------------------------------------------------------------- matrix

void suite_matrix(const VerifyOptions& opt, Recorder& rec) {
  for (const auto& g : groups_up_to({"C2", "C3", "C4", "V4", "S3", "C6", "D8", "Q8"}, opt.max_order)) {
    const auto rep = matrix_decomposition(g);
    std::string detail = "dim " + std::to_string(rep.covering_dim) + " =";
    for (const auto& b : rep.blocks)
      detail += " " + std::to_string(b.n) + "^2*" + std::to_string(b.gamma_order);
    if (!rep.failures.empty()) detail += "; " + rep.failures.front();
    rec.check(g->name() + ": covering algebra blocks", rep.ok(), detail);
  }
  if (opt.max_order >= 2) {
    const auto rep = matrix_decomposition(cyclic_group(2));
    bool desk = rep.covering_dim == 4 && rep.blocks.size() == 4;
    for (const auto& b : rep.blocks) desk = desk && b.n == 1 && b.gamma_order == 1;
    rec.check("C2: 4 = 1+1+1+1", desk);
  }
}

// ---------------------------------------------------------------- essential

void suite_essential(const VerifyOptions& opt, Recorder& rec) {
  const auto cat = builtin_catalog(std::max<std::size_t>(opt.max_order, 8));
  for (const auto& g : groups_up_to({"C2", "C3", "C4", "V4", "S3"}, opt.max_order)) {
    const auto rep = essential_report(g, cat);
    const auto o = essential_ideal_oracle(g, cat);
    bool e_ok = true;
    for (std::size_t i = 0; i < rep.statuses.size(); ++i)
      if ((o.e_in_ideal[i] != 0) != (rep.statuses[i].verdict == Verdict::NotReduced)) e_ok = false;
    const bool ok = rep.determined && o.matches_or_reading && e_ok && o.rank + rep.dim_lower == rep.basis_dim;
    rec.check(g->name() + ": brute-force ideal equals predicted span", ok,
              "rank " + std::to_string(o.rank) + ", predicted " + std::to_string(rep.predicted_ideal.size()) +
                  ", essential dim " + std::to_string(rep.dim_lower) + ", literal 'and' reading " +
                  (o.matches_and_reading ? "matches" : "does not match"));
  }
  if (opt.max_order >= 2) {
    const auto rep = essential_report(cyclic_group(2), cat);
    rec.check("C2: essential algebra has dimension 3", rep.determined && rep.dim_lower == 3,
              "dim " + std::to_string(rep.dim_lower));
  }
}

// ---------------------------------------------------------------- q8d8

void suite_q8d8(const VerifyOptions& opt, Recorder& rec, SuiteResult& out) {
  if (opt.max_order < 8) {
    out.tag += " (needs max order 8; not run)";
    return;
  }
  const auto q8 = quaternion_group(8), d8 = dihedral_group(8);
  const auto x = direct_product(q8, d8);
  const std::vector<Elem> tg{x->pair(1, 1), x->pair(4, 4)}, sg{x->pair(1, 1)};
  const auto t = generate(x, tg), s = generate(x, sg);
  const auto gen1 = [](const GroupPtr& g, Elem e) { return generate(g, std::vector<Elem>{e}); };
  rec.check("T, S orders 16, 4 and S normal in T", t.order() == 16 && s.order() == 4 && is_normal(s, t));
  const auto inv = invariants(make_section(t, s));
  const bool left = inv.l.pT.is_whole() && inv.l.kT == gen1(q8, 2) && inv.l.pS == gen1(q8, 1) && inv.l.kS.is_trivial();
  const bool right = inv.r.pT.is_whole() && inv.r.kT == gen1(d8, 2) && inv.r.pS == gen1(d8, 1) && inv.r.kS.is_trivial();
  rec.check("l = (Q8, <x^2>, <x>, 1)", left);
  rec.check("r = (D8, <a^2>, <a>, 1)", right);
  const auto cat = builtin_catalog(8);
  const std::size_t pq = build_poset(q8)->index_of(gen1(q8, 2), gen1(q8, 1));
  const std::size_t pd = build_poset(d8)->index_of(gen1(d8, 2), gen1(d8, 1));
  const auto sq = reduced_status(q8, pq, cat), sd = reduced_status(d8, pd, cat);
  rec.check("both pairs reduced", sq.verdict == Verdict::Reduced && sd.verdict == Verdict::Reduced,
            "Q8 " + to_string(sq.verdict) + " (" + to_string(sq.rule) + "), D8 " + to_string(sd.verdict) + " (" +
                to_string(sd.rule) + ")");
  const auto table = seeds(cat);
  const auto qid = cat.find_group(*q8)->id, did = cat.find_group(*d8)->id;
  const auto qrep = linkage_partition(q8)->classes[linkage_partition(q8)->class_of[pq]].front();
  const auto drep = linkage_partition(d8)->classes[linkage_partition(d8)->class_of[pd]].front();
  bool merged = false, equal = false;
  std::string detail = "no shared row";
  for (const auto& row : table.rows) {
    const SeedMember *mq = nullptr, *md = nullptr;
    for (const auto& m : row.members) {
      if (m.group_id == qid && m.pair == qrep) mq = &m;
      if (m.group_id == did && m.pair == drep) md = &m;
    }
    if (!mq || !md) continue;
    merged = true;
    equal = mq->gamma_order == md->gamma_order && mq->irr_count == md->irr_count;
    detail = "|Gamma| " + std::to_string(mq->gamma_order) + " and " + std::to_string(md->gamma_order) + ", Irr " +
             std::to_string(mq->irr_count) + " and " + std::to_string(md->irr_count);
  }
  rec.check("seeds table merges the Q8 and D8 rows", merged && equal, detail);
}

// ---------------------------------------------------------------- linkage

void suite_linkage(const VerifyOptions& opt, Recorder& rec) {
  const auto cat = builtin_catalog(opt.max_order);
  struct Entry {
    CrossedModule cm;
    CrossedFingerprint fp;
  };
  std::map<std::pair<std::size_t, std::size_t>, Entry> cms;
  auto cm_of = [&](const GroupPtr& g, std::size_t i) -> const Entry& {
    auto [it, fresh] = cms.try_emplace({g->id(), i});
    if (fresh) {
      const auto& p = build_poset(g)->pairs[i];
      it->second.cm = from_pair(p.K, p.P);
      it->second.fp = fingerprint(it->second.cm);
    }
    return it->second;
  };
  for (std::size_t gi = 0; gi < cat.groups.size(); ++gi)
    for (std::size_t hi = gi; hi < cat.groups.size(); ++hi) {
      const auto& g = cat.groups[gi].group;
      const auto& h = cat.groups[hi].group;
      const auto pg = build_poset(g), ph = build_poset(h);
      Failures f;
      std::size_t total = 0, linked_count = 0;
      for (std::size_t a = 0; a < pg->size(); ++a)
        for (std::size_t b = 0; b < ph->size(); ++b) {
          const auto& x = pg->pairs[a];
          const auto& y = ph->pairs[b];
          if (x.P.order() != y.P.order() || g->order() / x.K.order() != h->order() / y.K.order()) continue;
          ++total;
          const auto& ca = cm_of(g, a);
          const auto& cb = cm_of(h, b);
          const bool route_a = ca.fp == cb.fp && iso_search(cb.cm, ca.cm).has_value();
          const bool route_b = section_linked(x.K, x.P, y.K, y.P);
          linked_count += route_a;
          if (route_a != route_b) f.add(pair_name(x) + " ~ " + pair_name(y));
        }
      rec.check(cat.groups[gi].id + " vs " + cat.groups[hi].id, f.count == 0,
                f.detail(total) + ", " + std::to_string(linked_count) + " linked");
    }
}

// ---------------------------------------------------------------- reduced

void suite_reduced(const VerifyOptions& opt, Recorder& rec) {
  const auto cat = builtin_catalog(opt.max_order);
  for (const auto& e : cat.groups) {
    const auto& g = e.group;
    const auto poset = build_poset(g);
    const auto statuses = reduced_statuses(g, cat);
    const auto part = linkage_partition(g);
    Failures f;
    std::size_t total = 0, undetermined = 0;
    for (std::size_t i = 0; i < poset->size(); ++i) {
      const auto r = evaluate_rules(g, i, cat);
      const auto v = statuses[i].verdict;
      const auto& p = poset->pairs[i];
      total += 3;
      if (r.positive() && r.negative()) f.add("rules conflict at " + pair_name(p));
      if ((v == Verdict::Reduced && r.negative()) || (v == Verdict::NotReduced && r.positive()))
        f.add("verdict contradicts a rule at " + pair_name(p));
      if ((p.K.is_trivial() || p.P.is_whole()) && v == Verdict::NotReduced) f.add("trivial K or whole P not reduced");
      undetermined += v == Verdict::Undetermined;
      for (std::size_t j = 0; j < poset->size(); ++j) {
        if (!poset->order.le(j, i) || v != Verdict::Reduced) continue;
        ++total;
        if (statuses[j].verdict == Verdict::NotReduced) f.add("lower set fails below " + pair_name(p));
      }
    }
    for (const auto& cls : part->classes) {
      ++total;
      bool red = false, not_red = false;
      for (std::size_t m : cls) {
        red = red || statuses[m].verdict == Verdict::Reduced;
        not_red = not_red || statuses[m].verdict == Verdict::NotReduced;
      }
      if (red && not_red) f.add("linkage class mixes verdicts");
    }
    rec.check(e.id + ": rule consistency", f.count == 0,
              f.detail(total) + ", " + std::to_string(undetermined) + " undetermined");
  }
}

struct SuiteDef {
  std::string name;
  std::string tag;
  std::function<void(const VerifyOptions&, Recorder&, SuiteResult&)> run;
};

const std::vector<SuiteDef>& suites() {
  static const std::vector<SuiteDef> defs = {
      {"groups", "group axioms", [](auto& o, auto& r, auto&) { suite_groups(o, r); }},
      {"goursat", "Goursat correspondence for sections", [](auto& o, auto& r, auto&) { suite_goursat(o, r); }},
      {"mackey", "associativity of the Mackey product", [](auto& o, auto& r, auto&) { suite_mackey(o, r); }},
      {"idempotents", "e and f idempotent calculus", [](auto& o, auto& r, auto&) { suite_idempotents(o, r); }},
      {"gamma", "Gamma groups and outer automorphisms", [](auto& o, auto& r, auto&) { suite_gamma(o, r); }},
      {"matrix", "covering algebra as a product of matrix algebras",
       [](auto& o, auto& r, auto&) { suite_matrix(o, r); }},
      {"essential", "basis of the essential ideal", [](auto& o, auto& r, auto&) { suite_essential(o, r); }},
      {"q8d8", "Q8 and D8 linked through a covering section", suite_q8d8},
      {"linkage", "crossed-module and section linkage agree", [](auto& o, auto& r, auto&) { suite_linkage(o, r); }},
      {"reduced", "soundness of the reduced-pair rules", [](auto& o, auto& r, auto&) { suite_reduced(o, r); }},
  };
  return defs;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> n;
    for (const auto& s : suites()) n.push_back(s.name);
    return n;
  }();
  return names;
}

SuiteResult run_suite(const std::string& name, const VerifyOptions& opt) {
  for (const auto& s : suites()) {
    if (s.name != name) continue;
    SuiteResult out{s.name, s.tag, {}, 0};
    Recorder rec{out};
    const auto t0 = std::chrono::steady_clock::now();
    s.run(opt, rec, out);
    out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return out;
  }
  fail(ErrorCode::InvalidArgument, "unknown suite " + name);
}

std::vector<SuiteResult> run_all(const VerifyOptions& opt) {
  std::vector<SuiteResult> out;
  for (const auto& n : suite_names()) out.push_back(run_suite(n, opt));
  return out;
}

}  // namespace sbw
