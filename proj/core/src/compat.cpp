#include "tq/compat.hpp"

#include <algorithm>
#include <fmt/format.h>
#include <stdexcept>

#include "tq/parallel.hpp"
#include "tq/version.hpp"

namespace tq {

std::string CompatibilityWitness::describe(const QuandleTable& q) const {
  return fmt::format(
      "x={}, x'={}, y={}, y'={}: x*y = {}, x'*y' = {}, but {} <= {} is false",
      element_letter(x), element_letter(x2), element_letter(y),
      element_letter(y2), element_letter(q.at(x, y)),
      element_letter(q.at(x2, y2)), element_letter(q.at(x, y)),
      element_letter(q.at(x2, y2)));
}

std::optional<CompatibilityWitness> find_incompatibility(const QuandleTable& q,
                                                         const Preorder& p) {
  const int n = q.order();
  if (p.points() != n)
    throw std::invalid_argument("quandle and topology sizes differ");
  for (int x = 0; x < n; ++x)
    for (int x2 = 0; x2 < n; ++x2) {
      if (!p.leq(x, x2)) continue;
      for (int y = 0; y < n; ++y)
        for (int y2 = 0; y2 < n; ++y2) {
          if (!p.leq(y, y2)) continue;
          if (!p.leq(q.at(x, y), q.at(x2, y2)))
            return CompatibilityWitness{x, x2, y, y2};
        }
    }
  return std::nullopt;
}

bool is_compatible(const QuandleTable& q, const Preorder& p) {
  return !find_incompatibility(q, p).has_value();
}

bool is_compatible_via_translations(const QuandleTable& q, const Preorder& p) {
  const int n = q.order();
  if (p.points() != n)
    throw std::invalid_argument("quandle and topology sizes differ");
  auto monotone = [&](const std::vector<int>& map) {
    for (int y = 0; y < n; ++y)
      for (int y2 = 0; y2 < n; ++y2)
        if (p.leq(y, y2) && !p.leq(map[y], map[y2])) return false;
    return true;
  };
  for (int x = 0; x < n; ++x) {
    Permutation r = right_translation(q, x);
    if (!monotone(r.image())) return false;
    if (!monotone(r.inverse().image())) return false;
    if (!monotone(left_translation_map(q, x))) return false;
  }
  return true;
}

bool is_coarse_on_orbits(const QuandleTable& q, const Preorder& p) {
  if (p.points() != q.order())
    throw std::invalid_argument("quandle and topology sizes differ");
  for (IndexSet block : orbit_decomposition(q).blocks)
    if (!is_coarse(restrict_to(p, block))) return false;
  return true;
}

namespace {

std::vector<Preorder> filter_compatible(const QuandleTable& q,
                                        const std::vector<Preorder>& preorders) {
  std::vector<char> keep(preorders.size(), 0);
  parallel_for(static_cast<int>(preorders.size()), [&](int i) {
    keep[i] = is_compatible(q, preorders[i]) ? 1 : 0;
  });
  std::vector<Preorder> out;
  for (size_t i = 0; i < preorders.size(); ++i)
    if (keep[i]) out.push_back(preorders[i]);
  return out;
}

// Least relabeling of p under the given automorphisms; orbit representative
// for deduplication up to tq isomorphism.
Preorder aut_orbit_representative(const Preorder& p,
                                  const std::vector<Permutation>& auts) {
  Preorder best = p;
  for (const Permutation& sigma : auts) {
    Preorder candidate = p.relabeled(sigma);
    if (candidate < best) best = candidate;
  }
  return best;
}

std::vector<Preorder> dedup_by_tq_iso(const QuandleTable& q,
                                      const std::vector<Preorder>& compatible) {
  const auto auts = automorphisms(q);
  std::vector<Preorder> reps;
  for (const Preorder& p : compatible)
    reps.push_back(aut_orbit_representative(p, auts));
  std::sort(reps.begin(), reps.end());
  reps.erase(std::unique(reps.begin(), reps.end()), reps.end());
  return reps;
}

}  // namespace

std::vector<Preorder> compatible_topologies(const QuandleTable& q,
                                            bool up_to_iso) {
  if (q.order() > 5)
    throw std::invalid_argument("compatible_topologies supports order <= 5");
  std::vector<Preorder> compatible =
      filter_compatible(q, enumerate_preorders(q.order(), false));
  if (!up_to_iso) return compatible;
  return dedup_by_tq_iso(q, compatible);
}

std::variant<TopQuandle, CompatibilityWitness> TopQuandle::make(QuandleTable q,
                                                                Preorder p) {
  if (auto witness = find_incompatibility(q, p)) return *witness;
  return TopQuandle(std::move(q), std::move(p));
}

std::optional<Permutation> find_tq_isomorphism(const TopQuandle& t1,
                                               const TopQuandle& t2) {
  const int n = t1.quandle().order();
  if (t2.quandle().order() != n)
    throw std::invalid_argument("sizes differ");
  for (const Permutation& sigma : Permutation::all(n)) {
    if (t1.quandle().relabeled(sigma) != t2.quandle()) continue;
    if (t1.topology().relabeled(sigma) == t2.topology()) return sigma;
  }
  return std::nullopt;
}

namespace {

std::optional<Expectation> match_expectation(
    const QuandleTable& q, const std::vector<Expectation>& expectations) {
  for (const Expectation& e : expectations) {
    if (e.n != q.order()) continue;
    if (find_isomorphism(e.table, q)) return e;
  }
  return std::nullopt;
}

}  // namespace

QuandleReportEntry classify_quandle(const QuandleTable& q,
                                    const std::vector<Preorder>& preorders,
                                    const std::vector<Expectation>& expectations) {
  QuandleReportEntry entry{q, orbit_decomposition(q)};
  std::vector<Preorder> compatible = filter_compatible(q, preorders);
  entry.labeled_compatible_count = static_cast<long>(compatible.size());
  entry.classes = dedup_by_tq_iso(q, compatible);
  entry.expectation = match_expectation(q, expectations);
  if (!entry.expectation) {
    entry.status = ExpectationStatus::kNone;
    return entry;
  }

  const Expectation& e = *entry.expectation;
  switch (e.kind) {
    case Expectation::Kind::kAll: {
      bool ok = entry.labeled_compatible_count ==
                static_cast<long>(preorders.size());
      entry.status = ok ? ExpectationStatus::kMatched
                        : ExpectationStatus::kMismatched;
      if (!ok)
        entry.note = fmt::format("expected all {} labeled topologies, got {}",
                                 preorders.size(),
                                 entry.labeled_compatible_count);
      break;
    }
    case Expectation::Kind::kCount: {
      std::string diff;
      if (e.labeled_count && *e.labeled_count != entry.labeled_compatible_count)
        diff += fmt::format("stated {} labeled, computed {}; ",
                            *e.labeled_count, entry.labeled_compatible_count);
      if (e.class_count &&
          *e.class_count != static_cast<int>(entry.classes.size()))
        diff += fmt::format("stated {} classes, computed {}; ", *e.class_count,
                            entry.classes.size());
      if (!diff.empty()) diff.resize(diff.size() - 2);
      if (e.disputed) {
        entry.status = ExpectationStatus::kDisputed;
        entry.note = diff.empty()
                         ? "stated count is disputed at the source"
                         : fmt::format("discrepancy recorded: {}", diff);
      } else if (diff.empty()) {
        entry.status = ExpectationStatus::kMatched;
      } else {
        entry.status = ExpectationStatus::kMismatched;
        entry.note = diff;
      }
      break;
    }
    case Expectation::Kind::kFamily:
      entry.status = ExpectationStatus::kFamily;
      entry.note = e.family;
      break;
  }
  return entry;
}

bool ClassificationReport::expectations_met() const {
  for (const QuandleReportEntry& e : entries)
    if (e.status == ExpectationStatus::kMismatched) return false;
  return true;
}

ClassificationReport classify(int n) {
  return classify(n, builtin_expectations());
}

ClassificationReport classify(int n, const std::vector<Expectation>& expectations) {
  if (n < 1 || n > 5)
    throw std::invalid_argument("classification supports 1 <= n <= 5");
  ClassificationReport report;
  report.n = n;
  report.tool = kToolName;
  report.version = kToolVersion;

  const std::vector<QuandleTable> quandles = enumerate_quandles(n, true);
  const std::vector<Preorder> preorders = enumerate_preorders(n, false);
  report.labeled_preorder_count = static_cast<long>(preorders.size());
  report.preorder_class_count =
      static_cast<long>(enumerate_preorders(n, true).size());

  report.entries.reserve(quandles.size());
  for (const QuandleTable& q : quandles)
    report.entries.push_back(classify_quandle(q, preorders, expectations));
  return report;
}

CounterexampleInputs counterexample_fixture() {
  // Two fixed points a, b; right translations by c..f are the identity and
  // the columns of a and b act on {c,d,e,f} as the double swaps (cd)(ef) and
  // (ce)(df).
  std::vector<std::vector<int>> table = {
      {0, 0, 0, 0, 0, 0},
      {1, 1, 1, 1, 1, 1},
      {3, 4, 2, 2, 2, 2},
      {2, 5, 3, 3, 3, 3},
      {5, 2, 4, 4, 4, 4},
      {4, 3, 5, 5, 5, 5},
  };
  Preorder topology = coarse_on_blocks(
      {IndexSet{0}, IndexSet{1}, IndexSet{2, 3}, IndexSet{4, 5}});
  return CounterexampleInputs{std::move(table), std::move(topology)};
}

bool CounterexampleReport::all_passed() const {
  for (const CounterexampleCheck& c : checks)
    if (!c.passed) return false;
  return true;
}

CounterexampleReport verify_counterexample() {
  return verify_counterexample(counterexample_fixture());
}

CounterexampleReport verify_counterexample(const CounterexampleInputs& inputs) {
  if (inputs.topology.points() != 6)
    throw std::invalid_argument("counterexample topology must have 6 points");
  CounterexampleReport report;
  auto fail_all_remaining = [&](const std::string& why) {
    for (const char* name : {"orbits", "compatibility",
                             "orbit-restriction-not-coarse",
                             "orbit-restriction-not-discrete"})
      report.checks.push_back({name, false, why});
  };

  auto validated = QuandleTable::validate(inputs.table);
  if (auto* violation = std::get_if<QuandleViolation>(&validated)) {
    report.checks.push_back({"quandle-axioms", false, violation->describe()});
    fail_all_remaining("operation table is not a quandle");
    return report;
  }
  const QuandleTable q = std::get<QuandleTable>(validated);

  // The distributivity instances for the two nontrivial right translations,
  // spelled out: R_t(x*y) = R_t(x) * R_t(y) for t, y in {a, b} and x in the
  // big orbit.
  bool identities = true;
  for (int t = 0; t <= 1; ++t)
    for (int y = 0; y <= 1; ++y)
      for (int x = 2; x <= 5; ++x)
        identities &= q.at(q.at(x, y), t) == q.at(q.at(x, t), q.at(y, t));
  report.checks.push_back(
      {"quandle-axioms", identities,
       identities ? "axioms hold; R_a and R_b distributivity instances verified"
                  : "displayed distributivity instances fail"});

  const OrbitDecomposition orbits = orbit_decomposition(q);
  const std::vector<IndexSet> expected = {IndexSet{0}, IndexSet{1},
                                          IndexSet{2, 3, 4, 5}};
  bool orbits_ok = orbits.blocks == expected;
  std::string orbit_text;
  for (IndexSet b : orbits.blocks) {
    if (!orbit_text.empty()) orbit_text += ' ';
    orbit_text += set_to_string(b);
  }
  report.checks.push_back({"orbits", orbits_ok, orbit_text});

  bool compat = is_compatible(q, inputs.topology) &&
                is_compatible_via_translations(q, inputs.topology);
  std::string compat_detail = "both compatibility criteria agree";
  if (!compat) {
    auto witness = find_incompatibility(q, inputs.topology);
    compat_detail = witness ? witness->describe(q)
                            : "criteria disagree on this input";
  }
  report.checks.push_back({"compatibility", compat, compat_detail});

  const Preorder restricted = restrict_to(inputs.topology, IndexSet{2, 3, 4, 5});
  report.checks.push_back({"orbit-restriction-not-coarse",
                           !is_coarse(restricted),
                           "restriction to {c,d,e,f}"});
  report.checks.push_back({"orbit-restriction-not-discrete",
                           !is_discrete(restricted),
                           "restriction to {c,d,e,f}"});
  return report;
}

}  // namespace tq
