#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "tq/expectations.hpp"
#include "tq/quandle.hpp"
#include "tq/topology.hpp"

namespace tq {

// x <= x2 and y <= y2, yet (x * y) <= (x2 * y2) fails.
struct CompatibilityWitness {
  int x;
  int x2;
  int y;
  int y2;
  std::string describe(const QuandleTable& q) const;
};

// Monotonicity of the operation in both arguments. The witness, when one
// exists, is the lexicographically least failing (x, x2, y, y2).
std::optional<CompatibilityWitness> find_incompatibility(const QuandleTable& q,
                                                         const Preorder& p);
bool is_compatible(const QuandleTable& q, const Preorder& p);

// Same decision through translations: every right translation monotone with
// monotone inverse, every left translation monotone. Agrees with
// is_compatible on every input; kept separate as a cross-check.
bool is_compatible_via_translations(const QuandleTable& q, const Preorder& p);

// The restriction of p to every orbit block of q is coarse. Implies
// compatibility; the converse fails (see the order-6 fixture).
bool is_coarse_on_orbits(const QuandleTable& q, const Preorder& p);

// Compatible preorders among all labeled preorders on q's carrier
// (order <= 5). With up_to_iso, deduplicated under the quandle's
// automorphisms acting as homeomorphisms; representatives sorted.
std::vector<Preorder> compatible_topologies(const QuandleTable& q,
                                            bool up_to_iso);

// A quandle together with a compatible topology.
class TopQuandle {
 public:
  static std::variant<TopQuandle, CompatibilityWitness> make(QuandleTable q,
                                                             Preorder p);
  const QuandleTable& quandle() const { return q_; }
  const Preorder& topology() const { return p_; }

 private:
  TopQuandle(QuandleTable q, Preorder p)
      : q_(std::move(q)), p_(std::move(p)) {}
  QuandleTable q_;
  Preorder p_;
};

// Permutation that is simultaneously a quandle isomorphism and an order
// isomorphism, or nullopt.
std::optional<Permutation> find_tq_isomorphism(const TopQuandle& t1,
                                               const TopQuandle& t2);

enum class ExpectationStatus {
  kNone,      // nothing stated for this quandle
  kMatched,
  kMismatched,
  kDisputed,  // stated number is inconsistent at the source; reported only
  kFamily,    // stated as a predicate, listed rather than counted
};

struct QuandleReportEntry {
  QuandleTable quandle;  // canonical representative
  OrbitDecomposition orbits;
  long labeled_compatible_count = 0;
  std::vector<Preorder> classes;  // compatible topologies up to tq isomorphism
  std::optional<Expectation> expectation;
  ExpectationStatus status = ExpectationStatus::kNone;
  std::string note;
};

struct ClassificationReport {
  int n = 0;
  std::string tool;
  std::string version;
  long labeled_preorder_count = 0;
  long preorder_class_count = 0;
  std::vector<QuandleReportEntry> entries;

  // Disputed and family entries never count as failures.
  bool expectations_met() const;
};

// Classification of one quandle against a shared list of labeled preorders.
QuandleReportEntry classify_quandle(const QuandleTable& q,
                                    const std::vector<Preorder>& preorders,
                                    const std::vector<Expectation>& expectations);

// Full classification at order n (1 <= n <= 5; 1..4 is the designed scale).
ClassificationReport classify(int n);
ClassificationReport classify(int n, const std::vector<Expectation>& expectations);

// Order-6 fixture: two fixed points plus one orbit of size four whose
// compatible topology restricts to it neither coarsely nor discretely.
struct CounterexampleInputs {
  std::vector<std::vector<int>> table;
  Preorder topology;
};
CounterexampleInputs counterexample_fixture();

struct CounterexampleCheck {
  std::string name;
  bool passed;
  std::string detail;
};

struct CounterexampleReport {
  std::vector<CounterexampleCheck> checks;
  bool all_passed() const;
};

CounterexampleReport verify_counterexample();
CounterexampleReport verify_counterexample(const CounterexampleInputs& inputs);

}  // namespace tq
