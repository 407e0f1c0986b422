#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace tq {

// Largest carrier any table or topology in this library supports.
inline constexpr int kMaxElements = 8;

// Elements are 0-based indices everywhere; letters a..h are a serialization
// concern only.
inline char element_letter(int x) { return static_cast<char>('a' + x); }

// Subset of [0, n), stored as a bitmask.
class IndexSet {
 public:
  constexpr IndexSet() = default;
  constexpr explicit IndexSet(uint32_t mask) : bits_(mask) {}
  constexpr IndexSet(std::initializer_list<int> xs) {
    for (int x : xs) add(x);
  }

  static constexpr IndexSet full(int n) { return IndexSet((1u << n) - 1u); }
  static constexpr IndexSet single(int x) { return IndexSet(1u << x); }

  constexpr bool contains(int x) const { return (bits_ >> x) & 1u; }
  constexpr void add(int x) { bits_ |= 1u << x; }
  constexpr void remove(int x) { bits_ &= ~(1u << x); }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr uint32_t mask() const { return bits_; }
  constexpr IndexSet complement_in(int n) const {
    return IndexSet(~bits_ & ((1u << n) - 1u));
  }
  // Least member; undefined on the empty set.
  constexpr int min() const { return std::countr_zero(bits_); }

  std::vector<int> elements() const {
    std::vector<int> out;
    for (int x = 0; x < kMaxElements; ++x)
      if (contains(x)) out.push_back(x);
    return out;
  }

  friend constexpr IndexSet operator&(IndexSet a, IndexSet b) {
    return IndexSet(a.bits_ & b.bits_);
  }
  friend constexpr IndexSet operator|(IndexSet a, IndexSet b) {
    return IndexSet(a.bits_ | b.bits_);
  }
  friend constexpr auto operator<=>(IndexSet, IndexSet) = default;

 private:
  uint32_t bits_ = 0;
};

// "{a,c}" rendering used by diagnostics, DOT labels and reports.
inline std::string set_to_string(IndexSet s) {
  std::string out = "{";
  bool first = true;
  for (int x : s.elements()) {
    if (!first) out += ',';
    out += element_letter(x);
    first = false;
  }
  out += '}';
  return out;
}

}  // namespace tq
