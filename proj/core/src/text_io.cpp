#include "tq/text_io.hpp"

#include <cctype>
#include <charconv>
#include <fmt/format.h>
#include <fstream>
#include <istream>
#include <sstream>

namespace tq {

ParseError::ParseError(int line, int column, const std::string& message)
    : std::runtime_error(
          fmt::format("line {}, column {}: {}", line, column, message)),
      line_(line),
      column_(column) {}

namespace {

struct ContentLine {
  int number = 0;   // 1-based line number in the stream
  std::string text;
};

// Non-blank, non-comment lines. Comment lines start with '#'.
std::vector<ContentLine> content_lines(std::istream& in) {
  std::vector<ContentLine> out;
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    size_t first = line.find_first_not_of(" \t");
    if (first == std::string::npos) continue;
    if (line[first] == '#') continue;
    out.push_back({number, line});
  }
  return out;
}

struct Token {
  std::string text;
  int column = 0;  // 1-based
};

std::vector<Token> split_tokens(const ContentLine& line) {
  std::vector<Token> out;
  const std::string& s = line.text;
  size_t i = 0;
  while (i < s.size()) {
    if (s[i] == ' ' || s[i] == '\t') {
      ++i;
      continue;
    }
    size_t start = i;
    while (i < s.size() && s[i] != ' ' && s[i] != '\t') ++i;
    out.push_back({s.substr(start, i - start), static_cast<int>(start) + 1});
  }
  return out;
}

int parse_order(const ContentLine& line) {
  auto tokens = split_tokens(line);
  int n = 0;
  if (tokens.size() == 1) {
    const std::string& t = tokens[0].text;
    auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), n);
    if (ec == std::errc{} && ptr == t.data() + t.size() && n >= 1 &&
        n <= kMaxElements)
      return n;
  }
  throw ParseError(line.number, tokens.empty() ? 1 : tokens[0].column,
                   "expected element count n (1..8)");
}

bool is_all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

std::vector<std::vector<int>> parse_quandle(std::istream& in) {
  auto lines = content_lines(in);
  if (lines.empty()) throw ParseError(1, 1, "empty quandle file");
  const int n = parse_order(lines[0]);
  if (static_cast<int>(lines.size()) < n + 1) {
    const ContentLine& last = lines.back();
    throw ParseError(last.number, 1,
                     fmt::format("expected {} table rows", n));
  }
  if (static_cast<int>(lines.size()) > n + 1) {
    const ContentLine& extra = lines[n + 1];
    throw ParseError(extra.number, 1, "unexpected trailing content");
  }

  enum class Mode { kUnset, kLetters, kIntegers };
  Mode mode = Mode::kUnset;
  std::vector<std::vector<int>> rows(n);
  for (int i = 0; i < n; ++i) {
    const ContentLine& line = lines[i + 1];
    auto tokens = split_tokens(line);
    if (static_cast<int>(tokens.size()) != n)
      throw ParseError(line.number,
                       tokens.size() > static_cast<size_t>(n)
                           ? tokens[n].column
                           : static_cast<int>(line.text.size()) + 1,
                       fmt::format("expected {} tokens, got {}", n,
                                   tokens.size()));
    for (const Token& token : tokens) {
      int value;
      Mode token_mode;
      if (token.text.size() == 1 && token.text[0] >= 'a' &&
          token.text[0] <= 'h') {
        value = token.text[0] - 'a';
        token_mode = Mode::kLetters;
      } else if (is_all_digits(token.text)) {
        auto [ptr, ec] = std::from_chars(
            token.text.data(), token.text.data() + token.text.size(), value);
        if (ec != std::errc{})
          throw ParseError(line.number, token.column, "number out of range");
        token_mode = Mode::kIntegers;
      } else {
        throw ParseError(line.number, token.column,
                         fmt::format("bad token '{}'", token.text));
      }
      if (mode == Mode::kUnset) mode = token_mode;
      if (mode != token_mode)
        throw ParseError(line.number, token.column,
                         "mixed letter and integer tokens in one file");
      rows[i].push_back(value);
    }
  }
  return rows;
}

QuandleTable load_quandle(std::istream& in) {
  auto result = QuandleTable::validate(parse_quandle(in));
  if (auto* violation = std::get_if<QuandleViolation>(&result))
    throw ValidationError(violation->describe());
  return std::get<QuandleTable>(std::move(result));
}

QuandleTable load_quandle_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  return load_quandle(in);
}

std::string write_quandle(const QuandleTable& q) {
  std::string out = fmt::format("{}\n", q.order());
  for (int i = 0; i < q.order(); ++i) {
    for (int j = 0; j < q.order(); ++j) {
      if (j) out += ' ';
      out += element_letter(q.at(i, j));
    }
    out += '\n';
  }
  return out;
}

namespace {

Preorder parse_preorder_rows(const std::vector<ContentLine>& lines, int n,
                             size_t first_row) {
  std::vector<std::vector<bool>> rel(n);
  for (int i = 0; i < n; ++i) {
    const ContentLine& line = lines[first_row + i];
    auto tokens = split_tokens(line);
    if (tokens.size() != 1 || static_cast<int>(tokens[0].text.size()) != n)
      throw ParseError(line.number, tokens.empty() ? 1 : tokens[0].column,
                       fmt::format("expected a row of {} characters 0/1", n));
    const std::string& row = tokens[0].text;
    for (int j = 0; j < n; ++j) {
      char c = row[j];
      if (c != '0' && c != '1')
        throw ParseError(line.number, tokens[0].column + j,
                         fmt::format("bad character '{}'", c));
      rel[i].push_back(c == '1');
    }
  }
  auto result = Preorder::validate(rel);
  if (auto* violation = std::get_if<PreorderViolation>(&result))
    throw ValidationError(violation->describe());
  return std::get<Preorder>(result);
}

uint32_t parse_open_set(const ContentLine& line, int n) {
  auto tokens = split_tokens(line);
  if (tokens.size() != 1)
    throw ParseError(line.number,
                     tokens.size() > 1 ? tokens[1].column : 1,
                     "expected one open set per line");
  const std::string& text = tokens[0].text;
  const int base = tokens[0].column;
  if (text == "{}") return 0;
  uint32_t mask = 0;
  for (size_t i = 0; i < text.size(); ++i) {
    const int column = base + static_cast<int>(i);
    if (i % 2 == 1) {
      if (text[i] != ',')
        throw ParseError(line.number, column, "expected ','");
      continue;
    }
    char c = text[i];
    if (c < 'a' || c >= 'a' + n)
      throw ParseError(line.number, column,
                       fmt::format("bad point '{}' (expected a..{})", c,
                                   element_letter(n - 1)));
    mask |= 1u << (c - 'a');
  }
  if (text.size() % 2 == 0)
    throw ParseError(line.number, base + static_cast<int>(text.size()) - 1,
                     "trailing ','");
  return mask;
}

}  // namespace

Preorder load_topology(std::istream& in) {
  auto lines = content_lines(in);
  if (lines.empty()) throw ParseError(1, 1, "empty topology file");
  const int n = parse_order(lines[0]);
  if (lines.size() < 2)
    throw ParseError(lines[0].number, 1,
                     "expected format tag 'preorder' or 'opens'");
  auto tag_tokens = split_tokens(lines[1]);
  const std::string tag = tag_tokens.size() == 1 ? tag_tokens[0].text : "";

  if (tag == "preorder") {
    if (static_cast<int>(lines.size()) != n + 2)
      throw ParseError(lines.back().number, 1,
                       fmt::format("expected {} relation rows", n));
    return parse_preorder_rows(lines, n, 2);
  }
  if (tag == "opens") {
    std::vector<uint32_t> sets;
    for (size_t i = 2; i < lines.size(); ++i)
      sets.push_back(parse_open_set(lines[i], n));
    auto result = OpenSetFamily::validate(n, std::move(sets));
    if (auto* message = std::get_if<std::string>(&result))
      throw ValidationError(*message);
    return preorder_from_topology(std::get<OpenSetFamily>(result));
  }
  throw ParseError(lines[1].number,
                   tag_tokens.empty() ? 1 : tag_tokens[0].column,
                   "expected format tag 'preorder' or 'opens'");
}

Preorder load_topology_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  return load_topology(in);
}

std::string write_topology(const Preorder& p) {
  std::string out = fmt::format("{}\npreorder\n", p.points());
  for (const std::string& row : p.rows01()) {
    out += row;
    out += '\n';
  }
  return out;
}

std::string to_dot(const QuotientDiagram& d) {
  std::string out = "digraph hasse {\n  rankdir=BT;\n";
  for (size_t i = 0; i < d.classes.size(); ++i)
    out += fmt::format("  c{} [label=\"{}\"];\n", i,
                       set_to_string(d.classes[i]));
  for (auto [lower, upper] : d.covers)
    out += fmt::format("  c{} -> c{};\n", lower, upper);
  out += "}\n";
  return out;
}

}  // namespace tq
