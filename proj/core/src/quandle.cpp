#include "tq/quandle.hpp"

#include <algorithm>
#include <fmt/format.h>
#include <numeric>
#include <stdexcept>

#include "tq/parallel.hpp"

namespace tq {

std::string QuandleViolation::describe() const {
  switch (defect) {
    case QuandleDefect::kEntryOutOfRange:
      return fmt::format("entry ({},{}) = {} is out of range",
                         element_letter(i), element_letter(j), k);
    case QuandleDefect::kNotIdempotent:
      return fmt::format("idempotence fails at {0}: {0}*{0} != {0}",
                         element_letter(i));
    case QuandleDefect::kColumnNotBijective:
      return fmt::format("column {} is not a permutation", element_letter(j));
    case QuandleDefect::kNotSelfDistributive:
      return fmt::format(
          "self-distributivity fails at ({0},{1},{2}): "
          "({0}*{1})*{2} != ({0}*{2})*({1}*{2})",
          element_letter(i), element_letter(j), element_letter(k));
  }
  return "unknown defect";
}

std::variant<QuandleTable, QuandleViolation> QuandleTable::validate(
    const std::vector<std::vector<int>>& rows) {
  const int n = static_cast<int>(rows.size());
  if (n < 1 || n > kMaxElements)
    throw std::invalid_argument("quandle order must be in [1, 8]");
  for (const auto& row : rows)
    if (static_cast<int>(row.size()) != n)
      throw std::invalid_argument("quandle table must be square");

  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (rows[i][j] < 0 || rows[i][j] >= n)
        return QuandleViolation{QuandleDefect::kEntryOutOfRange, i, j,
                                rows[i][j]};

  for (int i = 0; i < n; ++i)
    if (rows[i][i] != i)
      return QuandleViolation{QuandleDefect::kNotIdempotent, i};

  for (int j = 0; j < n; ++j) {
    uint32_t seen = 0;
    for (int i = 0; i < n; ++i) seen |= 1u << rows[i][j];
    if (seen != (1u << n) - 1u)
      return QuandleViolation{QuandleDefect::kColumnNotBijective, -1, j};
  }

  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        if (rows[rows[i][j]][k] != rows[rows[i][k]][rows[j][k]])
          return QuandleViolation{QuandleDefect::kNotSelfDistributive, i, j, k};

  std::vector<int> flat;
  flat.reserve(n * n);
  for (const auto& row : rows) flat.insert(flat.end(), row.begin(), row.end());
  return QuandleTable(n, std::move(flat));
}

QuandleTable QuandleTable::from_rows(const std::vector<std::vector<int>>& rows) {
  auto result = validate(rows);
  if (auto* violation = std::get_if<QuandleViolation>(&result))
    throw std::invalid_argument(violation->describe());
  return std::get<QuandleTable>(std::move(result));
}

std::vector<std::vector<int>> QuandleTable::rows() const {
  std::vector<std::vector<int>> out(n_);
  for (int i = 0; i < n_; ++i)
    out[i].assign(t_.begin() + i * n_, t_.begin() + (i + 1) * n_);
  return out;
}

QuandleTable QuandleTable::relabeled(const Permutation& sigma) const {
  if (sigma.size() != n_)
    throw std::invalid_argument("relabeling size mismatch");
  std::vector<int> out(n_ * n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      out[sigma(i) * n_ + sigma(j)] = sigma(at(i, j));
  return QuandleTable(n_, std::move(out));
}

std::strong_ordering QuandleTable::operator<=>(const QuandleTable& other) const {
  if (auto c = n_ <=> other.n_; c != 0) return c;
  return t_ <=> other.t_;
}

Permutation right_translation(const QuandleTable& q, int x) {
  if (x < 0 || x >= q.order()) throw std::out_of_range("element out of range");
  std::vector<int> image(q.order());
  for (int y = 0; y < q.order(); ++y) image[y] = q.at(y, x);
  return Permutation(std::move(image));
}

std::vector<int> left_translation_map(const QuandleTable& q, int x) {
  if (x < 0 || x >= q.order()) throw std::out_of_range("element out of range");
  std::vector<int> image(q.order());
  for (int y = 0; y < q.order(); ++y) image[y] = q.at(x, y);
  return image;
}

namespace {

void require_subset(const QuandleTable& q, IndexSet s) {
  if ((s.mask() & ~IndexSet::full(q.order()).mask()) != 0)
    throw std::out_of_range("subset contains elements outside the carrier");
}

}  // namespace

bool is_subquandle(const QuandleTable& q, IndexSet s) {
  require_subset(q, s);
  if (s.empty()) return false;
  const auto members = s.elements();
  for (int x : members)
    for (int y : members)
      if (!s.contains(q.at(x, y))) return false;
  // Right translations restricted to s must permute s; with closure this is
  // automatic, checked anyway.
  for (int y : members) {
    IndexSet image;
    for (int x : members) image.add(q.at(x, y));
    if (image != s) return false;
  }
  return true;
}

bool is_complemented(const QuandleTable& q, IndexSet s) {
  require_subset(q, s);
  if (!is_subquandle(q, s)) return false;
  IndexSet rest = s.complement_in(q.order());
  return rest.empty() || is_subquandle(q, rest);
}

OrbitDecomposition orbit_decomposition(const QuandleTable& q) {
  const int n = q.order();
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int y = 0; y < n; ++y)
    for (int z = 0; z < n; ++z) {
      int a = find(y);
      int b = find(q.at(y, z));
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }

  OrbitDecomposition out;
  out.block_of.assign(n, -1);
  for (int x = 0; x < n; ++x) {
    int root = find(x);
    if (out.block_of[root] < 0) {
      out.block_of[root] = static_cast<int>(out.blocks.size());
      out.blocks.push_back(IndexSet{});
    }
    out.block_of[x] = out.block_of[root];
    out.blocks[out.block_of[x]].add(x);
  }
  return out;
}

IndexSet minimal_complemented_containing(const QuandleTable& q, int a) {
  if (a < 0 || a >= q.order()) throw std::out_of_range("element out of range");
  const uint32_t all = IndexSet::full(q.order()).mask();
  IndexSet acc = IndexSet::full(q.order());
  for (uint32_t m = 1; m <= all; ++m) {
    IndexSet s(m);
    if (!s.contains(a)) continue;
    if (is_complemented(q, s)) acc = acc & s;
  }
  return acc;
}

std::optional<IndexSet> intersect_complemented(const QuandleTable& q,
                                               IndexSet s1, IndexSet s2) {
  if (!is_complemented(q, s1) || !is_complemented(q, s2))
    throw std::invalid_argument("arguments must be complemented subquandles");
  IndexSet inter = s1 & s2;
  if (inter.empty()) return std::nullopt;
  if (!is_complemented(q, inter))
    throw std::logic_error("intersection of complemented subquandles failed "
                           "to be complemented");
  return inter;
}

namespace {

std::vector<int> sorted_orbit_sizes(const QuandleTable& q) {
  std::vector<int> sizes;
  for (IndexSet b : orbit_decomposition(q).blocks) sizes.push_back(b.size());
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

bool is_quandle_iso(const QuandleTable& q1, const QuandleTable& q2,
                    const Permutation& sigma) {
  const int n = q1.order();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (sigma(q1.at(x, y)) != q2.at(sigma(x), sigma(y))) return false;
  return true;
}

}  // namespace

std::optional<Permutation> find_isomorphism(const QuandleTable& q1,
                                            const QuandleTable& q2) {
  if (q1.order() != q2.order())
    throw std::invalid_argument("quandle orders differ");
  if (sorted_orbit_sizes(q1) != sorted_orbit_sizes(q2)) return std::nullopt;
  for (const Permutation& sigma : Permutation::all(q1.order()))
    if (is_quandle_iso(q1, q2, sigma)) return sigma;
  return std::nullopt;
}

std::vector<Permutation> automorphisms(const QuandleTable& q) {
  std::vector<Permutation> out;
  for (const Permutation& sigma : Permutation::all(q.order()))
    if (is_quandle_iso(q, q, sigma)) out.push_back(sigma);
  return out;
}

QuandleTable canonical_form(const QuandleTable& q) {
  const int n = q.order();
  std::vector<int> best = q.flat();
  std::vector<int> candidate(n * n);
  for (const Permutation& sigma : Permutation::all(n)) {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        candidate[sigma(i) * n + sigma(j)] = sigma(q.at(i, j));
    if (candidate < best) best = candidate;
  }
  return QuandleTable(n, std::move(best));
}

namespace {

// Columns are filled left to right; every column is a permutation fixing its
// own index, so idempotence and column bijectivity hold by construction.
// After column k is placed, each distributivity triple becomes checkable as
// soon as all three columns it touches are filled, and is checked exactly
// once: when the largest of those columns is k.
class ColumnSearch {
 public:
  ColumnSearch(int n, std::vector<int>& table, std::vector<QuandleTable>& out)
      : n_(n), t_(table), out_(out) {}

  void run(int k) {
    if (k == n_) {
      out_.push_back(QuandleTable::from_rows(unflatten()));
      return;
    }
    for (const Permutation& column : Permutation::all_fixing(n_, k)) {
      for (int i = 0; i < n_; ++i) t_[i * n_ + k] = column(i);
      if (column_consistent(k)) run(k + 1);
    }
  }

  void run_with_first_column(const Permutation& column) {
    for (int i = 0; i < n_; ++i) t_[i * n_] = column(i);
    if (column_consistent(0)) run(1);
  }

 private:
  int at(int i, int j) const { return t_[i * n_ + j]; }

  bool column_consistent(int k) const {
    for (int j = 0; j <= k; ++j)
      for (int k2 = 0; k2 <= k; ++k2) {
        const int m = at(j, k2);
        if (m > k) continue;
        if (j != k && k2 != k && m != k) continue;
        for (int i = 0; i < n_; ++i)
          if (at(at(i, j), k2) != at(at(i, k2), m)) return false;
      }
    return true;
  }

  std::vector<std::vector<int>> unflatten() const {
    std::vector<std::vector<int>> rows(n_);
    for (int i = 0; i < n_; ++i)
      rows[i].assign(t_.begin() + i * n_, t_.begin() + (i + 1) * n_);
    return rows;
  }

  int n_;
  std::vector<int>& t_;
  std::vector<QuandleTable>& out_;
};

}  // namespace

std::vector<QuandleTable> enumerate_quandles(int n, bool up_to_iso) {
  if (n < 1 || n > 6)
    throw std::invalid_argument("quandle enumeration supports 1 <= n <= 6");

  const auto& first_columns = Permutation::all_fixing(n, 0);
  std::vector<std::vector<QuandleTable>> branches(first_columns.size());
  parallel_for(static_cast<int>(first_columns.size()), [&](int c) {
    std::vector<int> table(n * n, 0);
    ColumnSearch search(n, table, branches[c]);
    search.run_with_first_column(first_columns[c]);
  });

  std::vector<QuandleTable> labeled;
  for (auto& branch : branches)
    for (auto& q : branch) labeled.push_back(std::move(q));
  std::sort(labeled.begin(), labeled.end());
  if (!up_to_iso) return labeled;

  std::vector<QuandleTable> canonical;
  canonical.reserve(labeled.size());
  for (const QuandleTable& q : labeled) canonical.push_back(canonical_form(q));
  std::sort(canonical.begin(), canonical.end());
  canonical.erase(std::unique(canonical.begin(), canonical.end()),
                  canonical.end());
  return canonical;
}

}  // namespace tq
