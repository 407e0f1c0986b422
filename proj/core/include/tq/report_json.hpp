#pragma once

#include <string>

#include "tq/compat.hpp"

namespace tq {

// Pretty-printed JSON document with deterministic key order:
// {n, tool, version, enumeration bounds, quandles:[{matrix, orbits,
// labeled_compatible_count, classes:[{preorder, quotient_hasse}],
// paper_expected_count?, expectation?}]}.
std::string classification_report_json(const ClassificationReport& report);

}  // namespace tq
