#include "sbw/linalg.hpp"

namespace sbw {

void axpy(SparseVec& y, const Rational& a, const SparseVec& x) {
  if (a == 0) return;
  for (const auto& [i, v] : x) {
    auto [it, inserted] = y.emplace(i, a * v);
    if (!inserted) {
      it->second += a * v;
      if (it->second == 0) y.erase(it);
    }
  }
}

void RowSpace::reduce(SparseVec& v) const {
  auto it = v.begin();
  while (it != v.end()) {
    const std::size_t k = it->first;
    const auto row = rows_.find(k);
    if (row == rows_.end()) {
      ++it;
      continue;
    }
    axpy(v, -Rational(it->second), row->second);
    it = v.upper_bound(k);
  }
}

bool RowSpace::add(SparseVec v) {
  reduce(v);
  if (v.empty()) return false;
  const Rational lead = v.begin()->second;
  for (auto& [i, x] : v) x /= lead;
  const std::size_t pivot = v.begin()->first;
  rows_.emplace(pivot, std::move(v));
  return true;
}

bool RowSpace::contains(SparseVec v) const {
  reduce(v);
  return v.empty();
}

bool RowSpace::supported_in(const std::vector<char>& coords) const {
  for (const auto& [p, row] : rows_)
    for (const auto& [i, x] : row)
      if (i >= coords.size() || !coords[i]) return false;
  return true;
}

}  // namespace sbw
