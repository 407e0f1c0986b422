#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tq/quandle.hpp"

namespace tq {

// One published claim about the compatible topologies of a quandle, keyed by
// the quandle matrix (matched up to isomorphism).
struct Expectation {
  enum class Kind { kAll, kCount, kFamily };

  int n = 0;
  std::vector<std::string> matrix_rows;  // quandle file rows, letter form
  QuandleTable table;                    // parsed matrix
  Kind kind = Kind::kCount;
  std::optional<int> labeled_count;      // stated count of labeled topologies
  std::optional<int> class_count;        // stated count up to tq isomorphism
  bool disputed = false;                 // stated number conflicts with the
                                         // displayed list; report, never assert
  std::string family;                    // predicate wording for family claims
  std::string claim;
};

// Expectations compiled in from data/expectations.json.
const std::vector<Expectation>& builtin_expectations();

// Parses the same JSON schema from text. Throws std::runtime_error on
// malformed input.
std::vector<Expectation> parse_expectations(const std::string& json_text);

}  // namespace tq
