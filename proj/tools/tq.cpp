// Command-line front end: enumeration, compatibility checking,
// classification, the order-6 fixture checks, and Hasse diagram export.
//
// Exit codes: 0 success / checked true, 1 checked false or expectation
// mismatch, 2 usage or input errors.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "tq/compat.hpp"
#include "tq/report_json.hpp"
#include "tq/text_io.hpp"
#include "tq/version.hpp"

namespace {

constexpr int kExitTrue = 0;
constexpr int kExitFalse = 1;
constexpr int kExitUsage = 2;

using nlohmann::ordered_json;

std::string orbit_text(const tq::OrbitDecomposition& orbits) {
  std::string out;
  for (tq::IndexSet block : orbits.blocks) {
    if (!out.empty()) out += ' ';
    out += tq::set_to_string(block);
  }
  return out;
}

std::vector<std::string> quandle_rows_text(const tq::QuandleTable& q) {
  std::vector<std::string> rows;
  for (int i = 0; i < q.order(); ++i) {
    std::string row;
    for (int j = 0; j < q.order(); ++j) {
      if (j) row += ' ';
      row += tq::element_letter(q.at(i, j));
    }
    rows.push_back(row);
  }
  return rows;
}

void write_output(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw std::runtime_error("cannot write " + out_path);
  out << text;
}

int cmd_quandles(int order, bool up_to_iso, const std::string& format) {
  auto quandles = tq::enumerate_quandles(order, up_to_iso);
  if (format == "json") {
    ordered_json doc;
    doc["n"] = order;
    doc["up_to_iso"] = up_to_iso;
    doc["count"] = quandles.size();
    doc["quandles"] = ordered_json::array();
    for (const auto& q : quandles) doc["quandles"].push_back(quandle_rows_text(q));
    std::cout << doc.dump(2) << "\n";
    return kExitTrue;
  }
  for (const auto& q : quandles) std::cout << tq::write_quandle(q) << "\n";
  std::cout << quandles.size() << " quandle" << (quandles.size() == 1 ? "" : "s")
            << "\n";
  return kExitTrue;
}

int cmd_topologies(int order, bool up_to_homeo, const std::string& format) {
  auto topologies = tq::enumerate_preorders(order, up_to_homeo);
  if (format == "json") {
    ordered_json doc;
    doc["n"] = order;
    doc["up_to_homeo"] = up_to_homeo;
    doc["count"] = topologies.size();
    doc["topologies"] = ordered_json::array();
    for (const auto& p : topologies) doc["topologies"].push_back(p.rows01());
    std::cout << doc.dump(2) << "\n";
    return kExitTrue;
  }
  for (const auto& p : topologies) std::cout << tq::write_topology(p) << "\n";
  std::cout << topologies.size() << " topolog"
            << (topologies.size() == 1 ? "y" : "ies") << "\n";
  return kExitTrue;
}

int cmd_check(const std::string& quandle_path, const std::string& topology_path,
              bool explain) {
  tq::QuandleTable q = tq::load_quandle_file(quandle_path);
  tq::Preorder p = tq::load_topology_file(topology_path);
  if (p.points() != q.order())
    throw std::runtime_error("quandle and topology sizes differ");

  auto witness = tq::find_incompatibility(q, p);
  if (explain) {
    std::cout << "monotonicity criterion: "
              << (witness ? "fail (" + witness->describe(q) + ")" : "pass")
              << "\n";
    bool translations = tq::is_compatible_via_translations(q, p);
    std::cout << "translation criterion (right translations order "
              << "isomorphisms, left translations monotone): "
              << (translations ? "pass" : "fail") << "\n";
  }
  if (witness) {
    std::cout << "incompatible: " << witness->describe(q) << "\n";
    return kExitFalse;
  }
  std::cout << "compatible\n";
  return kExitTrue;
}

int cmd_compatible(const std::string& quandle_path, bool up_to_iso,
                   const std::string& format) {
  tq::QuandleTable q = tq::load_quandle_file(quandle_path);
  auto topologies = tq::compatible_topologies(q, up_to_iso);
  if (format == "json") {
    ordered_json doc;
    doc["n"] = q.order();
    doc["up_to_iso"] = up_to_iso;
    doc["count"] = topologies.size();
    doc["topologies"] = ordered_json::array();
    for (const auto& p : topologies) doc["topologies"].push_back(p.rows01());
    std::cout << doc.dump(2) << "\n";
    return kExitTrue;
  }
  for (const auto& p : topologies) std::cout << tq::write_topology(p) << "\n";
  std::cout << topologies.size() << " compatible topolog"
            << (topologies.size() == 1 ? "y" : "ies") << "\n";
  return kExitTrue;
}

const char* status_text(tq::ExpectationStatus status) {
  switch (status) {
    case tq::ExpectationStatus::kNone: return "none stated";
    case tq::ExpectationStatus::kMatched: return "ok";
    case tq::ExpectationStatus::kMismatched: return "MISMATCH";
    case tq::ExpectationStatus::kDisputed: return "disputed at source";
    case tq::ExpectationStatus::kFamily: return "family";
  }
  return "?";
}

int cmd_classify(int order, const std::string& out_path,
                 const std::string& format) {
  tq::ClassificationReport report = tq::classify(order);
  const std::string json = tq::classification_report_json(report);
  if (!out_path.empty()) write_output(json, out_path);

  if (format == "json") {
    if (out_path.empty()) std::cout << json;
  } else {
    std::cout << "order " << report.n << ": " << report.entries.size()
              << " quandle classes, " << report.labeled_preorder_count
              << " labeled topologies (" << report.preorder_class_count
              << " classes)\n";
    int index = 0;
    for (const auto& entry : report.entries) {
      std::cout << "quandle " << ++index << ": ";
      const auto rows = quandle_rows_text(entry.quandle);
      for (size_t r = 0; r < rows.size(); ++r)
        std::cout << (r ? " / " : "") << rows[r];
      std::cout << "\n  orbits: " << orbit_text(entry.orbits) << "\n";
      std::cout << "  compatible: " << entry.labeled_compatible_count
                << " labeled, " << entry.classes.size() << " classes\n";
      if (entry.expectation) {
        std::cout << "  expected: " << entry.expectation->claim << " -> "
                  << status_text(entry.status);
        if (!entry.note.empty()) std::cout << " (" << entry.note << ")";
        std::cout << "\n";
      }
    }
    std::cout << (report.expectations_met() ? "all expectations met"
                                            : "expectation mismatches found")
              << "\n";
  }
  return report.expectations_met() ? kExitTrue : kExitFalse;
}

// Test hook: "c,a=c" or "2,0=2" overwrites one fixture entry.
void apply_mutation(std::vector<std::vector<int>>& table,
                    const std::string& spec) {
  auto parse_element = [](const std::string& token) {
    if (token.size() == 1 && token[0] >= 'a' && token[0] <= 'h')
      return token[0] - 'a';
    return std::stoi(token);
  };
  auto eq = spec.find('=');
  auto comma = spec.find(',');
  if (eq == std::string::npos || comma == std::string::npos || comma > eq)
    throw CLI::ValidationError("--mutate", "expected row,col=value");
  int i = parse_element(spec.substr(0, comma));
  int j = parse_element(spec.substr(comma + 1, eq - comma - 1));
  int v = parse_element(spec.substr(eq + 1));
  if (i < 0 || i >= 6 || j < 0 || j >= 6)
    throw CLI::ValidationError("--mutate", "position out of range");
  table[i][j] = v;
}

int cmd_verify_counterexample(const std::vector<std::string>& mutations,
                              const std::string& topology_path) {
  tq::CounterexampleInputs inputs = tq::counterexample_fixture();
  for (const std::string& m : mutations) apply_mutation(inputs.table, m);
  if (!topology_path.empty())
    inputs.topology = tq::load_topology_file(topology_path);

  tq::CounterexampleReport report = tq::verify_counterexample(inputs);
  int passed = 0;
  for (const auto& check : report.checks) {
    std::cout << "check " << check.name << ": "
              << (check.passed ? "pass" : "FAIL");
    if (!check.detail.empty()) std::cout << " (" << check.detail << ")";
    std::cout << "\n";
    passed += check.passed;
  }
  std::cout << passed << "/" << report.checks.size() << " checks passed\n";
  return report.all_passed() ? kExitTrue : kExitFalse;
}

int cmd_hasse(const std::string& topology_path, const std::string& out_path) {
  tq::Preorder p = tq::load_topology_file(topology_path);
  write_output(tq::to_dot(tq::quotient_hasse(p)), out_path);
  return kExitTrue;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite topological quandles: enumeration, compatibility, "
               "classification"};
  app.set_version_flag("--version",
                       std::string(tq::kToolName) + " " + tq::kToolVersion);
  app.require_subcommand(1);

  int order = 0;
  bool up_to_iso = false;
  bool up_to_homeo = false;
  bool explain = false;
  std::string format = "text";
  std::string out_path;
  std::string quandle_path;
  std::string topology_path;
  std::vector<std::string> mutations;

  auto* quandles = app.add_subcommand("quandles", "enumerate quandle tables");
  quandles->add_option("--order", order, "number of elements (1..6)")
      ->required()
      ->check(CLI::Range(1, 6));
  quandles->add_flag("--up-to-iso", up_to_iso,
                     "one representative per isomorphism class");
  quandles->add_option("--format", format, "text|json")
      ->check(CLI::IsMember({"text", "json"}));

  auto* topologies =
      app.add_subcommand("topologies", "enumerate topologies as preorders");
  topologies->add_option("--order", order, "number of points (1..5)")
      ->required()
      ->check(CLI::Range(1, 5));
  topologies->add_flag("--up-to-homeo", up_to_homeo,
                       "one representative per homeomorphism class");
  topologies->add_option("--format", format, "text|json")
      ->check(CLI::IsMember({"text", "json"}));

  auto* check = app.add_subcommand(
      "check", "decide whether a topology is compatible with a quandle");
  check->add_option("quandle", quandle_path, "quandle file")->required();
  check->add_option("topology", topology_path, "topology file")->required();
  check->add_flag("--explain", explain, "print both criterion evaluations");

  auto* compatible = app.add_subcommand(
      "compatible", "list all topologies compatible with a quandle");
  compatible->add_option("quandle", quandle_path, "quandle file")->required();
  compatible->add_flag("--up-to-iso", up_to_iso,
                       "up to topological-quandle isomorphism");
  compatible->add_option("--format", format, "text|json")
      ->check(CLI::IsMember({"text", "json"}));

  auto* classify =
      app.add_subcommand("classify", "classify topological quandles");
  classify->add_option("--order", order, "number of elements (1..4)")
      ->required()
      ->check(CLI::Range(1, 4));
  classify->add_option("--out", out_path, "write the JSON report here");
  classify->add_option("--format", format, "text|json")
      ->check(CLI::IsMember({"text", "json"}));

  auto* verify = app.add_subcommand(
      "verify-counterexample",
      "run the order-6 fixture checks (compatible topology, orbit restriction "
      "neither coarse nor discrete)");
  verify->add_option("--mutate", mutations,
                     "test hook: overwrite entry row,col=value");
  verify->add_option("--topology", topology_path,
                     "test hook: replace the fixture topology");

  auto* hasse = app.add_subcommand(
      "hasse", "export the quotient Hasse diagram of a topology as DOT");
  hasse->add_option("topology", topology_path, "topology file")->required();
  hasse->add_option("--out", out_path, "output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (app.got_subcommand(quandles))
      return cmd_quandles(order, up_to_iso, format);
    if (app.got_subcommand(topologies))
      return cmd_topologies(order, up_to_homeo, format);
    if (app.got_subcommand(check))
      return cmd_check(quandle_path, topology_path, explain);
    if (app.got_subcommand(compatible))
      return cmd_compatible(quandle_path, up_to_iso, format);
    if (app.got_subcommand(classify))
      return cmd_classify(order, out_path, format);
    if (app.got_subcommand(verify))
      return cmd_verify_counterexample(mutations, topology_path);
    if (app.got_subcommand(hasse)) return cmd_hasse(topology_path, out_path);
  } catch (const tq::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
