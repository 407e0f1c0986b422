#include "tq/expectations.hpp"

#include <mutex>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "expectations_data.hpp"
#include "tq/text_io.hpp"

namespace tq {

namespace {

QuandleTable table_from_rows(int n, const std::vector<std::string>& rows) {
  std::string text = std::to_string(n) + "\n";
  for (const std::string& row : rows) text += row + "\n";
  std::istringstream in(text);
  return load_quandle(in);
}

}  // namespace

std::vector<Expectation> parse_expectations(const std::string& json_text) {
  nlohmann::json doc = nlohmann::json::parse(json_text);
  std::vector<Expectation> out;
  for (const auto& item : doc.at("expectations")) {
    const int n = item.at("n").get<int>();
    std::vector<std::string> rows =
        item.at("matrix").get<std::vector<std::string>>();
    if (static_cast<int>(rows.size()) != n)
      throw std::runtime_error("expectation matrix row count mismatch");

    const std::string kind = item.at("kind").get<std::string>();
    Expectation e{n, rows, table_from_rows(n, rows)};
    if (kind == "all") {
      e.kind = Expectation::Kind::kAll;
    } else if (kind == "count") {
      e.kind = Expectation::Kind::kCount;
      if (item.contains("labeled")) e.labeled_count = item["labeled"].get<int>();
      if (item.contains("classes")) e.class_count = item["classes"].get<int>();
      if (!e.labeled_count && !e.class_count)
        throw std::runtime_error("count expectation without a count");
    } else if (kind == "family") {
      e.kind = Expectation::Kind::kFamily;
      e.family = item.at("family").get<std::string>();
    } else {
      throw std::runtime_error("unknown expectation kind: " + kind);
    }
    e.disputed = item.value("disputed", false);
    e.claim = item.value("claim", "");
    out.push_back(std::move(e));
  }
  return out;
}

const std::vector<Expectation>& builtin_expectations() {
  static std::vector<Expectation> cache;
  static std::once_flag flag;
  std::call_once(flag,
                 [] { cache = parse_expectations(detail::kExpectationsJson); });
  return cache;
}

}  // namespace tq
