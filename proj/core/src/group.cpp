#include "sbw/group.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <deque>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <utility>

#include "sbw/error.hpp"

namespace sbw {

struct Group::Token {
  explicit Token() = default;
};

namespace {

std::atomic<std::size_t> g_next_id{1};

std::size_t initial_cap() {
  if (const char* env = std::getenv("SBW_MAX_ORDER")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && v > 0) return static_cast<std::size_t>(v);
  }
  return 512;
}

std::atomic<std::size_t>& cap_storage() {
  static std::atomic<std::size_t> cap{initial_cap()};
  return cap;
}

ElementSet close_under(const std::vector<Elem>& table, std::size_t n, ElementSet set,
                       const std::vector<Elem>& gens) {
  std::vector<Elem> frontier = set.to_vector();
  while (!frontier.empty()) {
    std::vector<Elem> next;
    for (Elem a : frontier)
      for (Elem g : gens) {
        const Elem p = table[a * n + g];
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

std::size_t order_cap() { return cap_storage().load(); }
void set_order_cap(std::size_t cap) { cap_storage().store(cap); }

void check_order(std::size_t order, const std::string& what) {
  if (order > order_cap())
    fail(ErrorCode::OrderLimitExceeded,
         what + ": order " + std::to_string(order) + " exceeds cap " +
             std::to_string(order_cap()));
}

Group::Group(const Token&, std::string name, std::size_t order, std::vector<Elem> table,
             std::optional<ProductFactors> factors, std::vector<std::vector<Elem>> perm_gens)
    : name_(std::move(name)),
      order_(order),
      id_(g_next_id++),
      table_(std::move(table)),
      inverse_(order),
      element_order_(order, 1),
      factors_(std::move(factors)),
      perm_gens_(std::move(perm_gens)) {
  if (factors_) right_order_ = factors_->right->order();
  for (Elem a = 0; a < order_; ++a)
    for (Elem b = 0; b < order_; ++b)
      if (mul(a, b) == 0) {
        inverse_[a] = b;
        break;
      }
  for (Elem a = 0; a < order_; ++a) {
    Elem x = a;
    std::size_t k = 1;
    while (x != 0) {
      x = mul(x, a);
      ++k;
    }
    element_order_[a] = k;
  }
  for (Elem a = 0; a < order_ && abelian_; ++a)
    for (Elem b = a + 1; b < order_; ++b)
      if (mul(a, b) != mul(b, a)) {
        abelian_ = false;
        break;
      }

  // Greedy generating set: largest element order first, then smallest index.
  std::vector<Elem> by_order(order_);
  std::iota(by_order.begin(), by_order.end(), Elem{0});
  std::stable_sort(by_order.begin(), by_order.end(), [&](Elem a, Elem b) {
    return element_order_[a] > element_order_[b];
  });
  ElementSet generated = ElementSet::singleton(order_, 0);
  for (Elem a : by_order) {
    if (generated.contains(a)) continue;
    generators_.push_back(a);
    generated = close_under(table_, order_, generated, generators_);
    if (generated.count() == order_) break;
  }
}

std::vector<std::vector<Elem>> Group::table_rows() const {
  std::vector<std::vector<Elem>> rows(order_, std::vector<Elem>(order_));
  for (Elem a = 0; a < order_; ++a)
    for (Elem b = 0; b < order_; ++b) rows[a][b] = mul(a, b);
  return rows;
}

std::size_t Group::exponent() const {
  std::size_t e = 1;
  for (auto o : element_order_) e = std::lcm(e, o);
  return e;
}

bool Group::same_as(const Group& other) const {
  return this == &other || (order_ == other.order_ && table_ == other.table_);
}

void validate_table(const std::vector<std::vector<Elem>>& table) {
  const std::size_t n = table.size();
  if (n == 0) fail(ErrorCode::NoIdentity, "empty multiplication table");
  for (const auto& row : table) {
    if (row.size() != n) fail(ErrorCode::NotClosed, "multiplication table is not square");
    for (Elem v : row)
      if (v >= n) fail(ErrorCode::NotClosed, "table entry out of range");
  }
  for (Elem a = 0; a < n; ++a)
    if (table[0][a] != a || table[a][0] != a)
      fail(ErrorCode::NoIdentity, "index 0 is not a two-sided identity");
  std::vector<char> seen(n);
  for (Elem a = 0; a < n; ++a) {
    std::fill(seen.begin(), seen.end(), 0);
    for (Elem b = 0; b < n; ++b) {
      if (seen[table[a][b]]) fail(ErrorCode::NotClosed, "row is not a permutation");
      seen[table[a][b]] = 1;
    }
    std::fill(seen.begin(), seen.end(), 0);
    for (Elem b = 0; b < n; ++b) {
      if (seen[table[b][a]]) fail(ErrorCode::NotClosed, "column is not a permutation");
      seen[table[b][a]] = 1;
    }
  }
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      const Elem ab = table[a][b];
      for (Elem c = 0; c < n; ++c)
        if (table[ab][c] != table[a][table[b][c]])
          fail(ErrorCode::NonAssociative, "multiplication is not associative");
    }
}

GroupPtr group_from_trusted_table(std::string name, std::size_t order, std::vector<Elem> table) {
  return std::make_shared<const Group>(Group::Token{}, std::move(name), order, std::move(table),
                                       std::nullopt, std::vector<std::vector<Elem>>{});
}

GroupPtr group_from_table(std::string name, const std::vector<std::vector<Elem>>& table) {
  check_order(table.size(), "group_from_table");
  validate_table(table);
  const std::size_t n = table.size();
  std::vector<Elem> flat;
  flat.reserve(n * n);
  for (const auto& row : table) flat.insert(flat.end(), row.begin(), row.end());
  return group_from_trusted_table(std::move(name), n, std::move(flat));
}

GroupPtr group_from_permutations(std::string name, const std::vector<std::vector<Elem>>& gens) {
  std::size_t degree = gens.empty() ? 0 : gens.front().size();
  for (const auto& g : gens) {
    if (g.size() != degree)
      fail(ErrorCode::InvalidArgument, "permutation generators have different degrees");
    std::vector<char> seen(degree);
    for (Elem v : g) {
      if (v >= degree || seen[v]) fail(ErrorCode::InvalidArgument, "generator is not a permutation");
      seen[v] = 1;
    }
  }
  using Perm = std::vector<Elem>;
  Perm id(degree);
  std::iota(id.begin(), id.end(), Elem{0});
  // (a * b)(i) = a(b(i))
  auto compose = [degree](const Perm& a, const Perm& b) {
    Perm c(degree);
    for (std::size_t i = 0; i < degree; ++i) c[i] = a[b[i]];
    return c;
  };
  std::set<Perm> found{id};
  std::deque<Perm> queue{id};
  while (!queue.empty()) {
    Perm p = std::move(queue.front());
    queue.pop_front();
    for (const auto& g : gens) {
      Perm q = compose(p, g);
      if (found.insert(q).second) {
        check_order(found.size(), "group_from_permutations");
        queue.push_back(std::move(q));
      }
    }
  }
  std::vector<Perm> elems(found.begin(), found.end());  // lexicographic; identity first
  std::map<Perm, Elem> index;
  for (Elem i = 0; i < elems.size(); ++i) index.emplace(elems[i], i);
  const std::size_t n = elems.size();
  std::vector<Elem> table(n * n);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) table[a * n + b] = index.at(compose(elems[a], elems[b]));
  return std::make_shared<const Group>(Group::Token{}, std::move(name), n, std::move(table),
                                       std::nullopt, gens);
}

static GroupPtr make_cyclic_group(std::size_t n);
static GroupPtr make_dihedral_group(std::size_t order);
static GroupPtr make_quaternion_group(std::size_t order);
static GroupPtr make_symmetric_group(std::size_t n);

namespace {

// Named constructors return one shared object per argument.
GroupPtr memo_named(char kind, std::size_t n, const std::function<GroupPtr()>& make) {
  static std::mutex mutex;
  static std::map<std::pair<char, std::size_t>, GroupPtr> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[{kind, n}];
  if (!slot) slot = make();
  return slot;
}

}  // namespace

GroupPtr cyclic_group(std::size_t n) {
  return memo_named('c', n, [&] { return make_cyclic_group(n); });
}

static GroupPtr make_cyclic_group(std::size_t n) {
  if (n == 0) fail(ErrorCode::InvalidArgument, "cyclic group needs n >= 1");
  check_order(n, "cyclic_group");
  std::vector<Elem> table(n * n);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) table[a * n + b] = static_cast<Elem>((a + b) % n);
  return group_from_trusted_table("C" + std::to_string(n), n, std::move(table));
}

GroupPtr dihedral_group(std::size_t order) {
  return memo_named('d', order, [&] { return make_dihedral_group(order); });
}

static GroupPtr make_dihedral_group(std::size_t order) {
  if (order < 2 || order % 2) fail(ErrorCode::InvalidArgument, "dihedral group needs even order");
  check_order(order, "dihedral_group");
  const std::size_t n = order / 2;
  // r^i s^j has index i + n j
  std::vector<Elem> table(order * order);
  for (std::size_t a = 0; a < order; ++a)
    for (std::size_t b = 0; b < order; ++b) {
      const std::size_t i = a % n, j = a / n, k = b % n, l = b / n;
      const std::size_t e = j ? (i + n - k) % n : (i + k) % n;
      table[a * order + b] = static_cast<Elem>(e + n * ((j + l) % 2));
    }
  return group_from_trusted_table("D" + std::to_string(order), order, std::move(table));
}

GroupPtr quaternion_group(std::size_t order) {
  return memo_named('q', order, [&] { return make_quaternion_group(order); });
}

static GroupPtr make_quaternion_group(std::size_t order) {
  if (order < 8 || order % 4) fail(ErrorCode::InvalidArgument, "quaternion group needs order 4m, m >= 2");
  check_order(order, "quaternion_group");
  const std::size_t m2 = order / 2;  // order of x
  const std::size_t m = m2 / 2;
  // x^i y^j has index i + 2m j
  std::vector<Elem> table(order * order);
  for (std::size_t a = 0; a < order; ++a)
    for (std::size_t b = 0; b < order; ++b) {
      const std::size_t i = a % m2, j = a / m2, k = b % m2, l = b / m2;
      std::size_t e = j ? (i + m2 - k) % m2 : (i + k) % m2;
      std::size_t f = j + l;
      if (f == 2) {
        e = (e + m) % m2;
        f = 0;
      }
      table[a * order + b] = static_cast<Elem>(e + m2 * f);
    }
  return group_from_trusted_table("Q" + std::to_string(order), order, std::move(table));
}

GroupPtr symmetric_group(std::size_t n) {
  return memo_named('s', n, [&] { return make_symmetric_group(n); });
}

static GroupPtr make_symmetric_group(std::size_t n) {
  if (n == 0) fail(ErrorCode::InvalidArgument, "symmetric group needs n >= 1");
  std::vector<std::vector<Elem>> gens;
  if (n >= 2) {
    std::vector<Elem> swap(n), cycle(n);
    std::iota(swap.begin(), swap.end(), Elem{0});
    std::swap(swap[0], swap[1]);
    for (std::size_t i = 0; i < n; ++i) cycle[i] = static_cast<Elem>((i + 1) % n);
    gens = {swap, cycle};
  }
  if (n == 1) return group_from_trusted_table("S1", 1, {0});
  return group_from_permutations("S" + std::to_string(n), gens);
}

GroupPtr direct_product(const GroupPtr& g, const GroupPtr& h) {
  static std::mutex mutex;
  static std::map<std::pair<std::size_t, std::size_t>, GroupPtr> cache;
  const auto key = std::make_pair(g->id(), h->id());
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  const std::size_t ng = g->order(), nh = h->order(), n = ng * nh;
  check_order(n, "direct_product");
  std::vector<Elem> table(n * n);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      const Elem gi = g->mul(a / nh, b / nh), hi = h->mul(a % nh, b % nh);
      table[a * n + b] = static_cast<Elem>(gi * nh + hi);
    }
  auto product = std::make_shared<const Group>(Group::Token{}, g->name() + "x" + h->name(), n,
                                               std::move(table), ProductFactors{g, h},
                                               std::vector<std::vector<Elem>>{});
  std::lock_guard lock(mutex);
  auto [it, inserted] = cache.emplace(key, std::move(product));
  return it->second;
}

bool Hom::is_homomorphism() const {
  if (images.size() != source->order()) return false;
  for (Elem v : images)
    if (v >= target->order()) return false;
  for (Elem a = 0; a < source->order(); ++a)
    for (Elem b = 0; b < source->order(); ++b)
      if (images[source->mul(a, b)] != target->mul(images[a], images[b])) return false;
  return true;
}

bool Hom::is_bijective() const {
  if (source->order() != target->order()) return false;
  std::vector<char> hit(target->order());
  for (Elem v : images) {
    if (hit[v]) return false;
    hit[v] = 1;
  }
  return true;
}

Hom Hom::inverse() const {
  if (!is_bijective()) fail(ErrorCode::NotIso, "inverse of a non-bijective map");
  Hom inv{target, source, std::vector<Elem>(images.size())};
  for (Elem a = 0; a < images.size(); ++a) inv.images[images[a]] = a;
  return inv;
}

Hom Hom::identity(const GroupPtr& g) {
  Hom h{g, g, std::vector<Elem>(g->order())};
  std::iota(h.images.begin(), h.images.end(), Elem{0});
  return h;
}

Hom compose_homs(const Hom& second, const Hom& first) {
  Hom h{first.source, second.target, std::vector<Elem>(first.images.size())};
  for (Elem a = 0; a < first.images.size(); ++a) h.images[a] = second.images[first.images[a]];
  return h;
}

ProductMaps product_maps(const GroupPtr& product) {
  if (!product->is_product()) fail(ErrorCode::NotAProduct, "group carries no factor metadata");
  const auto& f = *product->factors();
  ProductMaps m{{product, f.left, std::vector<Elem>(product->order())},
                {product, f.right, std::vector<Elem>(product->order())},
                {f.left, product, std::vector<Elem>(f.left->order())},
                {f.right, product, std::vector<Elem>(f.right->order())}};
  for (Elem x = 0; x < product->order(); ++x) {
    m.proj_left.images[x] = product->left_of(x);
    m.proj_right.images[x] = product->right_of(x);
  }
  for (Elem g = 0; g < f.left->order(); ++g) m.inj_left.images[g] = product->pair(g, 0);
  for (Elem h = 0; h < f.right->order(); ++h) m.inj_right.images[h] = product->pair(0, h);
  return m;
}

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonAssociative: return "NonAssociative";
    case ErrorCode::NoIdentity: return "NoIdentity";
    case ErrorCode::NotClosed: return "NotClosed";
    case ErrorCode::OrderLimitExceeded: return "OrderLimitExceeded";
    case ErrorCode::NotNormal: return "NotNormal";
    case ErrorCode::MixedParents: return "MixedParents";
    case ErrorCode::NotAProduct: return "NotAProduct";
    case ErrorCode::ConditionViolated: return "ConditionViolated";
    case ErrorCode::MiddleMismatch: return "MiddleMismatch";
    case ErrorCode::SpaceMismatch: return "SpaceMismatch";
    case ErrorCode::NotSubgroup: return "NotSubgroup";
    case ErrorCode::NotIso: return "NotIso";
    case ErrorCode::NotInPoset: return "NotInPoset";
    case ErrorCode::AxiomFailed: return "AxiomFailed";
    case ErrorCode::NotAutomorphism: return "NotAutomorphism";
    case ErrorCode::PartitionMismatch: return "PartitionMismatch";
    case ErrorCode::IncompleteCatalog: return "IncompleteCatalog";
    case ErrorCode::DecompositionMismatch: return "DecompositionMismatch";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace sbw
