#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include <boost/container/small_vector.hpp>

namespace sbw {

using Elem = std::uint32_t;

inline constexpr Elem kNoElem = static_cast<Elem>(-1);

// Membership bitset over the elements 0..universe-1 of a finite group.
// Ambient groups of order <= 128 never touch the heap.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(std::size_t universe)
      : universe_(universe), words_((universe + 63) / 64, 0) {}

  static ElementSet full(std::size_t universe) {
    ElementSet s(universe);
    for (std::size_t i = 0; i < universe; ++i) s.insert(static_cast<Elem>(i));
    return s;
  }
  static ElementSet singleton(std::size_t universe, Elem e) {
    ElementSet s(universe);
    s.insert(e);
    return s;
  }

  std::size_t universe() const { return universe_; }
  bool contains(Elem e) const { return (words_[e >> 6] >> (e & 63)) & 1u; }
  void insert(Elem e) { words_[e >> 6] |= std::uint64_t{1} << (e & 63); }
  void erase(Elem e) { words_[e >> 6] &= ~(std::uint64_t{1} << (e & 63)); }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  bool empty() const {
    for (auto w : words_)
      if (w) return false;
    return true;
  }

  bool is_subset_of(const ElementSet& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }

  ElementSet& operator&=(const ElementSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  ElementSet& operator|=(const ElementSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  friend ElementSet operator&(ElementSet a, const ElementSet& b) { return a &= b; }
  friend ElementSet operator|(ElementSet a, const ElementSet& b) { return a |= b; }

  bool operator==(const ElementSet& o) const {
    return universe_ == o.universe_ && words_ == o.words_;
  }

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      std::uint64_t w = words_[i];
      while (w) {
        const int bit = std::countr_zero(w);
        f(static_cast<Elem>(i * 64 + static_cast<std::size_t>(bit)));
        w &= w - 1;
      }
    }
  }

  std::vector<Elem> to_vector() const {
    std::vector<Elem> out;
    out.reserve(count());
    for_each([&](Elem e) { out.push_back(e); });
    return out;
  }

  // True when some member is strictly greater than e.
  bool any_above(Elem e) const {
    std::size_t wi = e >> 6;
    const unsigned shift = (e & 63) + 1;
    if (shift < 64 && (words_[wi] >> shift)) return true;
    for (++wi; wi < words_.size(); ++wi)
      if (words_[wi]) return true;
    return false;
  }

  std::span<const std::uint64_t> words() const { return {words_.data(), words_.size()}; }

  std::size_t hash() const {
    std::size_t h = universe_ * 0x9e3779b97f4a7c15ull;
    for (auto w : words_) h = (h ^ w) * 0x100000001b3ull + (h >> 29);
    return h;
  }

 private:
  std::size_t universe_ = 0;
  boost::container::small_vector<std::uint64_t, 2> words_;
};

// Lexicographic comparison of the two sets viewed as strictly increasing
// element lists (a proper prefix sorts first).
inline int lex_compare(const ElementSet& a, const ElementSet& b) {
  const auto wa = a.words();
  const auto wb = b.words();
  for (std::size_t i = 0; i < wa.size(); ++i) {
    const std::uint64_t x = wa[i] ^ wb[i];
    if (!x) continue;
    const Elem d = static_cast<Elem>(i * 64 + static_cast<std::size_t>(std::countr_zero(x)));
    if (a.contains(d)) return b.any_above(d) ? -1 : 1;
    return a.any_above(d) ? 1 : -1;
  }
  return 0;
}

struct ElementSetHash {
  std::size_t operator()(const ElementSet& s) const { return s.hash(); }
};

}  // namespace sbw
