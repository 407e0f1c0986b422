#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "tq/index_set.hpp"
#include "tq/permutation.hpp"

namespace tq {

struct PreorderViolation {
  enum class Kind { kNotReflexive, kNotTransitive } kind;
  int x = -1;
  int y = -1;
  int z = -1;
  std::string describe() const;
};

class Preorder;

namespace detail {
Preorder make_preorder(int n, const std::array<uint8_t, kMaxElements>& up);
}

// Reflexive transitive relation on [0, n); the Alexandroff form of a finite
// topology. Row x is the bitmask of { y : x <= y }.
class Preorder {
 public:
  static std::variant<Preorder, PreorderViolation> validate(
      const std::vector<std::vector<bool>>& rel);
  // validate(), throwing std::invalid_argument with the violation text.
  static Preorder from_rel(const std::vector<std::vector<bool>>& rel);
  static Preorder discrete(int n);
  static Preorder coarse(int n);

  int points() const { return n_; }
  bool leq(int x, int y) const { return (up_[x] >> y) & 1u; }
  bool equivalent(int x, int y) const { return leq(x, y) && leq(y, x); }
  uint8_t up_mask(int x) const { return up_[x]; }

  Preorder relabeled(const Permutation& sigma) const;
  std::vector<std::string> rows01() const;  // "110"-style rows

  friend bool operator==(const Preorder&, const Preorder&) = default;
  // Row-major over boolean entries, smaller point count first.
  std::strong_ordering operator<=>(const Preorder& other) const;

 private:
  explicit Preorder(int n) : n_(n) {}
  friend Preorder detail::make_preorder(int n,
                                        const std::array<uint8_t, kMaxElements>& up);

  int n_ = 0;
  std::array<uint8_t, kMaxElements> up_{};
};

// Finite topology given by its open sets, each a bitmask over [0, n).
class OpenSetFamily {
 public:
  // Requires the empty and full sets plus closure under pairwise union and
  // intersection; returns a description of the first failure otherwise.
  static std::variant<OpenSetFamily, std::string> validate(
      int n, std::vector<uint32_t> sets);
  static OpenSetFamily from_sets(int n, std::vector<uint32_t> sets);

  int points() const { return n_; }
  const std::vector<uint32_t>& opens() const { return opens_; }  // sorted
  bool is_open(uint32_t mask) const;

  friend bool operator==(const OpenSetFamily&, const OpenSetFamily&) = default;

 private:
  OpenSetFamily(int n, std::vector<uint32_t> sets)
      : n_(n), opens_(std::move(sets)) {}
  int n_;
  std::vector<uint32_t> opens_;
};

// x <= y iff every open set containing x contains y.
Preorder preorder_from_topology(const OpenSetFamily& t);

// Open sets are the up-closed sets; inverse of preorder_from_topology.
OpenSetFamily topology_from_preorder(const Preorder& p);

// Partition under mutual <=, blocks ordered by least member.
std::vector<IndexSet> equivalence_classes(const Preorder& p);

bool is_discrete(const Preorder& p);
bool is_coarse(const Preorder& p);

// Subspace preorder on the members of s, reindexed in increasing order.
Preorder restrict_to(const Preorder& p, IndexSet s);

// x <= y iff block(x) <= block(y) under `between` (a preorder on block
// indices); each block is internally coarse. Default: blocks unrelated.
Preorder coarse_on_blocks(const std::vector<IndexSet>& blocks,
                          const std::optional<Preorder>& between = std::nullopt);

// Permutation s with leq1(x, y) iff leq2(s(x), s(y)), or nullopt.
std::optional<Permutation> find_homeomorphism(const Preorder& p1,
                                              const Preorder& p2);

// Lexicographically least relabeling; equal iff homeomorphic.
Preorder canonical_preorder(const Preorder& p);

// All preorders on n points (1 <= n <= 5). Labeled relations sorted
// row-major; with up_to_homeo, one canonical representative per class.
std::vector<Preorder> enumerate_preorders(int n, bool up_to_homeo);

struct QuotientDiagram {
  std::vector<IndexSet> classes;            // ordered by least member
  std::vector<std::pair<int, int>> covers;  // (lower, upper) class indices
};

// Hasse diagram of the quotient by mutual comparability: covers are the
// transitive reduction of the induced strict order.
QuotientDiagram quotient_hasse(const Preorder& p);

}  // namespace tq
