#pragma once

#include <compare>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "tq/index_set.hpp"
#include "tq/permutation.hpp"

namespace tq {

enum class QuandleDefect {
  kEntryOutOfRange,
  kNotIdempotent,
  kColumnNotBijective,
  kNotSelfDistributive,
};

// First axiom failure found in a raw table, with witness indices. Which of
// i, j, k are meaningful depends on the defect.
struct QuandleViolation {
  QuandleDefect defect;
  int i = -1;
  int j = -1;
  int k = -1;
  std::string describe() const;
};

// Operation table of a finite quandle: entry (i, j) is x_i * x_j. Instances
// are valid by construction and immutable.
class QuandleTable {
 public:
  // Checks entry range, idempotence, column bijectivity, then right
  // self-distributivity, each phase scanning row-major, so the reported
  // witness is deterministic.
  static std::variant<QuandleTable, QuandleViolation> validate(
      const std::vector<std::vector<int>>& rows);
  // validate(), throwing std::invalid_argument with the violation text.
  static QuandleTable from_rows(const std::vector<std::vector<int>>& rows);

  int order() const { return n_; }
  int at(int i, int j) const { return t_[i * n_ + j]; }
  const std::vector<int>& flat() const { return t_; }
  std::vector<std::vector<int>> rows() const;

  // Table of the relabeled quandle: entry (s(i), s(j)) = s(at(i, j)).
  QuandleTable relabeled(const Permutation& sigma) const;

  friend bool operator==(const QuandleTable&, const QuandleTable&) = default;
  // Row-major lexicographic, smaller order first.
  std::strong_ordering operator<=>(const QuandleTable& other) const;

 private:
  QuandleTable(int n, std::vector<int> flat) : n_(n), t_(std::move(flat)) {}
  friend QuandleTable canonical_form(const QuandleTable&);
  friend std::vector<QuandleTable> enumerate_quandles(int, bool);

  int n_;
  std::vector<int> t_;
};

// y -> y * x; a bijection for every valid table.
Permutation right_translation(const QuandleTable& q, int x);

// y -> x * y; not a bijection in general.
std::vector<int> left_translation_map(const QuandleTable& q, int x);

// Nonempty and closed under the operation (right translations restrict to
// bijections automatically, but the restriction is checked as stated).
bool is_subquandle(const QuandleTable& q, IndexSet s);

// Both s and its complement are subquandles; the full carrier counts, its
// empty complement being treated as vacuously closed.
bool is_complemented(const QuandleTable& q, IndexSet s);

struct OrbitDecomposition {
  std::vector<IndexSet> blocks;  // ordered by least member
  std::vector<int> block_of;     // element -> index into blocks
};

// Connected components of the graph linking y with y * z over all z. The
// blocks are exactly the minimal complemented subquandles.
OrbitDecomposition orbit_decomposition(const QuandleTable& q);

// Intersection of every complemented subquandle containing a, found by
// scanning all subsets of the carrier.
IndexSet minimal_complemented_containing(const QuandleTable& q, int a);

// Requires both arguments complemented (throws std::invalid_argument
// otherwise); nullopt when the intersection is empty. Throws
// std::logic_error if the intersection fails to be complemented.
std::optional<IndexSet> intersect_complemented(const QuandleTable& q,
                                               IndexSet s1, IndexSet s2);

// Permutation s with s(x *1 y) = s(x) *2 s(y), or nullopt. Candidates are
// pruned by the orbit-size multiset before the permutation search.
std::optional<Permutation> find_isomorphism(const QuandleTable& q1,
                                            const QuandleTable& q2);

std::vector<Permutation> automorphisms(const QuandleTable& q);

// Lexicographically least relabeling; equal canonical forms iff isomorphic.
QuandleTable canonical_form(const QuandleTable& q);

// All quandle tables of the given order (1 <= n <= 6). Labeled tables in
// row-major order; with up_to_iso, one canonical representative per
// isomorphism class, sorted.
std::vector<QuandleTable> enumerate_quandles(int n, bool up_to_iso);

}  // namespace tq
