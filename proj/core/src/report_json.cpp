#include "tq/report_json.hpp"

#include <json.hpp>

namespace tq {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json letters(IndexSet s) {
  ordered_json out = ordered_json::array();
  for (int x : s.elements()) out.push_back(std::string(1, element_letter(x)));
  return out;
}

ordered_json matrix_rows(const QuandleTable& q) {
  ordered_json out = ordered_json::array();
  for (int i = 0; i < q.order(); ++i) {
    std::string row;
    for (int j = 0; j < q.order(); ++j) {
      if (j) row += ' ';
      row += element_letter(q.at(i, j));
    }
    out.push_back(row);
  }
  return out;
}

ordered_json hasse_json(const QuotientDiagram& d) {
  ordered_json out;
  out["classes"] = ordered_json::array();
  for (IndexSet cls : d.classes) out["classes"].push_back(letters(cls));
  out["covers"] = ordered_json::array();
  for (auto [lower, upper] : d.covers)
    out["covers"].push_back(ordered_json::array({lower, upper}));
  return out;
}

const char* status_name(ExpectationStatus status) {
  switch (status) {
    case ExpectationStatus::kNone: return "none";
    case ExpectationStatus::kMatched: return "matched";
    case ExpectationStatus::kMismatched: return "mismatched";
    case ExpectationStatus::kDisputed: return "disputed";
    case ExpectationStatus::kFamily: return "family";
  }
  return "unknown";
}

}  // namespace

std::string classification_report_json(const ClassificationReport& report) {
  ordered_json doc;
  doc["n"] = report.n;
  doc["tool"] = report.tool;
  doc["version"] = report.version;
  doc["enumeration"] = {
      {"quandle_classes", report.entries.size()},
      {"labeled_preorders", report.labeled_preorder_count},
      {"preorder_classes", report.preorder_class_count},
  };
  doc["quandles"] = ordered_json::array();
  for (const QuandleReportEntry& entry : report.entries) {
    ordered_json e;
    e["matrix"] = matrix_rows(entry.quandle);
    e["orbits"] = ordered_json::array();
    for (IndexSet block : entry.orbits.blocks)
      e["orbits"].push_back(letters(block));
    e["labeled_compatible_count"] = entry.labeled_compatible_count;
    e["classes"] = ordered_json::array();
    for (const Preorder& p : entry.classes) {
      ordered_json cls;
      cls["preorder"] = p.rows01();
      cls["quotient_hasse"] = hasse_json(quotient_hasse(p));
      e["classes"].push_back(std::move(cls));
    }
    if (entry.expectation) {
      const Expectation& x = *entry.expectation;
      if (x.kind == Expectation::Kind::kCount) {
        // The stated number; class count where stated, labeled otherwise.
        e["paper_expected_count"] =
            x.class_count ? *x.class_count : *x.labeled_count;
      }
      ordered_json ex;
      ex["status"] = status_name(entry.status);
      ex["claim"] = x.claim;
      if (x.labeled_count) ex["labeled"] = *x.labeled_count;
      if (x.class_count) ex["classes"] = *x.class_count;
      if (x.kind == Expectation::Kind::kAll) ex["all_topologies"] = true;
      if (!x.family.empty()) ex["family"] = x.family;
      if (!entry.note.empty()) ex["note"] = entry.note;
      e["expectation"] = std::move(ex);
    }
    doc["quandles"].push_back(std::move(e));
  }
  return doc.dump(2) + "\n";
}

}  // namespace tq
