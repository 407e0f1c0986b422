#pragma once

#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "tq/quandle.hpp"
#include "tq/topology.hpp"

namespace tq {

// Syntax error in an input file; positions are 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int column, const std::string& message);
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

// Semantic failure of parsed input (axiom violations and the like).
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Quandle file: `n`, then n rows of n tokens, either all 0-based integers or
// all lowercase letters a..h. Lines starting with '#' are comments.
std::vector<std::vector<int>> parse_quandle(std::istream& in);
QuandleTable load_quandle(std::istream& in);  // parse + validate
QuandleTable load_quandle_file(const std::filesystem::path& path);
std::string write_quandle(const QuandleTable& q);  // letters, index order

// Topology file: `n`, a format tag `preorder` or `opens`, then either n rows
// of n characters 0/1 or one open set per line ("{}" or comma-separated
// letters).
Preorder load_topology(std::istream& in);
Preorder load_topology_file(const std::filesystem::path& path);
std::string write_topology(const Preorder& p);  // preorder format

// DOT rendering: one node per class labeled with its members in braces, one
// edge per cover, bottom-to-top.
std::string to_dot(const QuotientDiagram& d);

}  // namespace tq
