#include "tq/topology.hpp"

#include <algorithm>
#include <fmt/format.h>
#include <stdexcept>

namespace tq {

namespace detail {
Preorder make_preorder(int n, const std::array<uint8_t, kMaxElements>& up) {
  Preorder p(n);
  p.up_ = up;
  return p;
}
}  // namespace detail

std::string PreorderViolation::describe() const {
  switch (kind) {
    case Kind::kNotReflexive:
      return fmt::format("relation is not reflexive at {}", element_letter(x));
    case Kind::kNotTransitive:
      return fmt::format("transitivity fails: {} <= {} and {} <= {} but not {} <= {}",
                         element_letter(x), element_letter(y),
                         element_letter(y), element_letter(z),
                         element_letter(x), element_letter(z));
  }
  return "unknown defect";
}

std::variant<Preorder, PreorderViolation> Preorder::validate(
    const std::vector<std::vector<bool>>& rel) {
  const int n = static_cast<int>(rel.size());
  if (n < 1 || n > kMaxElements)
    throw std::invalid_argument("point count must be in [1, 8]");
  for (const auto& row : rel)
    if (static_cast<int>(row.size()) != n)
      throw std::invalid_argument("relation matrix must be square");

  for (int x = 0; x < n; ++x)
    if (!rel[x][x])
      return PreorderViolation{PreorderViolation::Kind::kNotReflexive, x};
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (rel[x][y] && rel[y][z] && !rel[x][z])
          return PreorderViolation{PreorderViolation::Kind::kNotTransitive, x,
                                   y, z};

  std::array<uint8_t, kMaxElements> up{};
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (rel[x][y]) up[x] |= uint8_t(1u << y);
  return detail::make_preorder(n, up);
}

Preorder Preorder::from_rel(const std::vector<std::vector<bool>>& rel) {
  auto result = validate(rel);
  if (auto* violation = std::get_if<PreorderViolation>(&result))
    throw std::invalid_argument(violation->describe());
  return std::get<Preorder>(result);
}

Preorder Preorder::discrete(int n) {
  if (n < 1 || n > kMaxElements)
    throw std::invalid_argument("point count must be in [1, 8]");
  std::array<uint8_t, kMaxElements> up{};
  for (int x = 0; x < n; ++x) up[x] = uint8_t(1u << x);
  return detail::make_preorder(n, up);
}

Preorder Preorder::coarse(int n) {
  if (n < 1 || n > kMaxElements)
    throw std::invalid_argument("point count must be in [1, 8]");
  std::array<uint8_t, kMaxElements> up{};
  for (int x = 0; x < n; ++x) up[x] = uint8_t((1u << n) - 1u);
  return detail::make_preorder(n, up);
}

Preorder Preorder::relabeled(const Permutation& sigma) const {
  if (sigma.size() != n_)
    throw std::invalid_argument("relabeling size mismatch");
  std::array<uint8_t, kMaxElements> up{};
  for (int x = 0; x < n_; ++x)
    for (int y = 0; y < n_; ++y)
      if (leq(x, y)) up[sigma(x)] |= uint8_t(1u << sigma(y));
  return detail::make_preorder(n_, up);
}

std::vector<std::string> Preorder::rows01() const {
  std::vector<std::string> out(n_);
  for (int x = 0; x < n_; ++x) {
    out[x].resize(n_);
    for (int y = 0; y < n_; ++y) out[x][y] = leq(x, y) ? '1' : '0';
  }
  return out;
}

std::strong_ordering Preorder::operator<=>(const Preorder& other) const {
  if (auto c = n_ <=> other.n_; c != 0) return c;
  for (int x = 0; x < n_; ++x)
    for (int y = 0; y < n_; ++y) {
      int a = leq(x, y), b = other.leq(x, y);
      if (a != b) return a <=> b;
    }
  return std::strong_ordering::equal;
}

std::variant<OpenSetFamily, std::string> OpenSetFamily::validate(
    int n, std::vector<uint32_t> sets) {
  if (n < 1 || n > kMaxElements)
    return std::string("point count must be in [1, 8]");
  const uint32_t full = (1u << n) - 1u;
  for (uint32_t s : sets)
    if ((s & ~full) != 0)
      return fmt::format("open set {} contains a point outside the space",
                         set_to_string(IndexSet(s & 0xffu)));
  std::sort(sets.begin(), sets.end());
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  auto member = [&](uint32_t m) {
    return std::binary_search(sets.begin(), sets.end(), m);
  };
  if (!member(0)) return std::string("the empty set is not open");
  if (!member(full)) return std::string("the full set is not open");
  for (uint32_t a : sets)
    for (uint32_t b : sets) {
      if (!member(a | b))
        return fmt::format("union of {} and {} is not open",
                           set_to_string(IndexSet(a)),
                           set_to_string(IndexSet(b)));
      if (!member(a & b))
        return fmt::format("intersection of {} and {} is not open",
                           set_to_string(IndexSet(a)),
                           set_to_string(IndexSet(b)));
    }
  return OpenSetFamily(n, std::move(sets));
}

OpenSetFamily OpenSetFamily::from_sets(int n, std::vector<uint32_t> sets) {
  auto result = validate(n, std::move(sets));
  if (auto* message = std::get_if<std::string>(&result))
    throw std::invalid_argument(*message);
  return std::get<OpenSetFamily>(std::move(result));
}

bool OpenSetFamily::is_open(uint32_t mask) const {
  return std::binary_search(opens_.begin(), opens_.end(), mask);
}

Preorder preorder_from_topology(const OpenSetFamily& t) {
  const int n = t.points();
  std::array<uint8_t, kMaxElements> up{};
  for (int x = 0; x < n; ++x) {
    uint32_t meet = (1u << n) - 1u;
    for (uint32_t open : t.opens())
      if ((open >> x) & 1u) meet &= open;
    up[x] = uint8_t(meet);
  }
  return detail::make_preorder(n, up);
}

OpenSetFamily topology_from_preorder(const Preorder& p) {
  const int n = p.points();
  std::vector<uint32_t> opens;
  for (uint32_t m = 0; m < (1u << n); ++m) {
    bool up_closed = true;
    for (int x = 0; x < n && up_closed; ++x)
      if ((m >> x) & 1u)
        up_closed = (p.up_mask(x) & ~m) == 0;
    if (up_closed) opens.push_back(m);
  }
  return OpenSetFamily::from_sets(n, std::move(opens));
}

std::vector<IndexSet> equivalence_classes(const Preorder& p) {
  const int n = p.points();
  std::vector<IndexSet> classes;
  uint32_t assigned = 0;
  for (int x = 0; x < n; ++x) {
    if ((assigned >> x) & 1u) continue;
    IndexSet cls;
    for (int y = 0; y < n; ++y)
      if (p.equivalent(x, y)) cls.add(y);
    assigned |= cls.mask();
    classes.push_back(cls);
  }
  return classes;
}

bool is_discrete(const Preorder& p) {
  return p == Preorder::discrete(p.points());
}

bool is_coarse(const Preorder& p) {
  return p == Preorder::coarse(p.points());
}

Preorder restrict_to(const Preorder& p, IndexSet s) {
  if (s.empty()) throw std::invalid_argument("cannot restrict to the empty set");
  if ((s.mask() & ~IndexSet::full(p.points()).mask()) != 0)
    throw std::out_of_range("subset contains points outside the space");
  const auto members = s.elements();
  const int m = static_cast<int>(members.size());
  std::array<uint8_t, kMaxElements> up{};
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (p.leq(members[i], members[j])) up[i] |= uint8_t(1u << j);
  return detail::make_preorder(m, up);
}

Preorder coarse_on_blocks(const std::vector<IndexSet>& blocks,
                          const std::optional<Preorder>& between) {
  if (blocks.empty()) throw std::invalid_argument("block list is empty");
  uint32_t seen = 0;
  int n = 0;
  for (const IndexSet& b : blocks) {
    if (b.empty()) throw std::invalid_argument("blocks must be nonempty");
    if ((seen & b.mask()) != 0)
      throw std::invalid_argument("blocks must be disjoint");
    seen |= b.mask();
    n += b.size();
  }
  if (n > kMaxElements || seen != (1u << n) - 1u)
    throw std::invalid_argument("blocks must partition [0, n)");
  if (between && between->points() != static_cast<int>(blocks.size()))
    throw std::invalid_argument("between relation size does not match block count");

  std::vector<int> block_of(n);
  for (int b = 0; b < static_cast<int>(blocks.size()); ++b)
    for (int x : blocks[b].elements()) block_of[x] = b;

  std::array<uint8_t, kMaxElements> up{};
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      bool related = between ? between->leq(block_of[x], block_of[y])
                             : block_of[x] == block_of[y];
      if (related) up[x] |= uint8_t(1u << y);
    }
  return detail::make_preorder(n, up);
}

namespace {

std::vector<std::pair<int, int>> degree_signature(const Preorder& p) {
  const int n = p.points();
  std::vector<std::pair<int, int>> sig(n);
  for (int x = 0; x < n; ++x) {
    int up = 0, down = 0;
    for (int y = 0; y < n; ++y) {
      up += p.leq(x, y);
      down += p.leq(y, x);
    }
    sig[x] = {up, down};
  }
  std::sort(sig.begin(), sig.end());
  return sig;
}

bool is_order_iso(const Preorder& p1, const Preorder& p2,
                  const Permutation& sigma) {
  const int n = p1.points();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (p1.leq(x, y) != p2.leq(sigma(x), sigma(y))) return false;
  return true;
}

}  // namespace

std::optional<Permutation> find_homeomorphism(const Preorder& p1,
                                              const Preorder& p2) {
  if (p1.points() != p2.points())
    throw std::invalid_argument("point counts differ");
  if (degree_signature(p1) != degree_signature(p2)) return std::nullopt;
  for (const Permutation& sigma : Permutation::all(p1.points()))
    if (is_order_iso(p1, p2, sigma)) return sigma;
  return std::nullopt;
}

Preorder canonical_preorder(const Preorder& p) {
  Preorder best = p;
  for (const Permutation& sigma : Permutation::all(p.points())) {
    Preorder candidate = p.relabeled(sigma);
    if (candidate < best) best = candidate;
  }
  return best;
}

namespace {

bool transitive_rows(const std::array<uint8_t, kMaxElements>& up, int n) {
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if ((up[x] >> y) & 1u)
        if ((up[y] & ~up[x]) != 0) return false;
  return true;
}

// Off-diagonal cells assigned one by one in row-major order; a partial
// assignment dies as soon as the freshly decided cell completes a
// transitivity violation among decided cells.
class PreorderSearch {
 public:
  PreorderSearch(int n, std::vector<Preorder>& out) : n_(n), out_(out) {
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        if (x != y) cells_.emplace_back(x, y);
    for (int x = 0; x < n; ++x) set1_[x] = uint8_t(1u << x);
  }

  void run(size_t cell) {
    if (cell == cells_.size()) {
      out_.push_back(detail::make_preorder(n_, set1_));
      return;
    }
    auto [u, v] = cells_[cell];
    // false branch first keeps the output in row-major order
    set0_[u] |= uint8_t(1u << v);
    if (consistent_false(u, v)) run(cell + 1);
    set0_[u] &= uint8_t(~(1u << v));

    set1_[u] |= uint8_t(1u << v);
    if (consistent_true(u, v)) run(cell + 1);
    set1_[u] &= uint8_t(~(1u << v));
  }

 private:
  bool consistent_true(int u, int v) const {
    if ((set1_[v] & set0_[u]) != 0) return false;  // u<=v<=w, u<=w denied
    for (int w = 0; w < n_; ++w)                   // w<=u<=v, w<=v denied
      if (((set1_[w] >> u) & 1u) && ((set0_[w] >> v) & 1u)) return false;
    return true;
  }

  bool consistent_false(int u, int v) const {
    for (int w = 0; w < n_; ++w)  // u<=w<=v decided, u<=v denied
      if (((set1_[u] >> w) & 1u) && ((set1_[w] >> v) & 1u)) return false;
    return true;
  }

  int n_;
  std::vector<std::pair<int, int>> cells_;
  std::array<uint8_t, kMaxElements> set1_{};  // decided true (incl. diagonal)
  std::array<uint8_t, kMaxElements> set0_{};  // decided false
  std::vector<Preorder>& out_;
};

}  // namespace

std::vector<Preorder> enumerate_preorders(int n, bool up_to_homeo) {
  if (n < 1 || n > 5)
    throw std::invalid_argument("preorder enumeration supports 1 <= n <= 5");

  std::vector<Preorder> labeled;
  if (n <= 4) {
    std::vector<std::pair<int, int>> cells;
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        if (x != y) cells.emplace_back(x, y);
    for (uint32_t mask = 0; mask < (1u << cells.size()); ++mask) {
      std::array<uint8_t, kMaxElements> up{};
      for (int x = 0; x < n; ++x) up[x] = uint8_t(1u << x);
      for (size_t b = 0; b < cells.size(); ++b)
        if ((mask >> b) & 1u) up[cells[b].first] |= uint8_t(1u << cells[b].second);
      if (transitive_rows(up, n)) labeled.push_back(detail::make_preorder(n, up));
    }
  } else {
    PreorderSearch search(n, labeled);
    search.run(0);
  }
  std::sort(labeled.begin(), labeled.end());
  if (!up_to_homeo) return labeled;

  std::vector<Preorder> canonical;
  canonical.reserve(labeled.size());
  for (const Preorder& p : labeled) canonical.push_back(canonical_preorder(p));
  std::sort(canonical.begin(), canonical.end());
  canonical.erase(std::unique(canonical.begin(), canonical.end()),
                  canonical.end());
  return canonical;
}

QuotientDiagram quotient_hasse(const Preorder& p) {
  QuotientDiagram d;
  d.classes = equivalence_classes(p);
  const int k = static_cast<int>(d.classes.size());
  auto strictly_below = [&](int i, int j) {
    return i != j && p.leq(d.classes[i].min(), d.classes[j].min());
  };
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      if (!strictly_below(i, j)) continue;
      bool covered = false;
      for (int m = 0; m < k && !covered; ++m)
        covered = strictly_below(i, m) && strictly_below(m, j);
      if (!covered) d.covers.emplace_back(i, j);
    }
  return d;
}

}  // namespace tq
