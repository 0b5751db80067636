#pragma once

#include <map>

#include "sbw/gamma.hpp"

namespace sbw {

using SparseVec = std::map<std::size_t, Rational>;

void axpy(SparseVec& y, const Rational& a, const SparseVec& x);  // y += a x

// Row space over the rationals, kept in echelon form with unit pivots.
class RowSpace {
 public:
  // Returns true when v was independent of the current rows.
  bool add(SparseVec v);
  bool contains(SparseVec v) const;
  std::size_t rank() const { return rows_.size(); }
  // True when every row is supported inside `coords`.
  bool supported_in(const std::vector<char>& coords) const;

 private:
  void reduce(SparseVec& v) const;
  std::map<std::size_t, SparseVec> rows_;  // pivot -> row
};

}  // namespace sbw
