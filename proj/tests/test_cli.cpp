#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <string>

#include "fixtures.hpp"
#include "tq/text_io.hpp"

namespace fs = std::filesystem;

namespace {

struct RunResult {
  int exit_code;
  std::string output;  // stdout and stderr interleaved
};

std::string cli_path() {
  const char* env = std::getenv("TQ_CLI");
  REQUIRE_MESSAGE(env != nullptr, "TQ_CLI must point at the tq binary");
  return env;
}

RunResult run(const std::string& args, const std::string& env_prefix = "") {
  const std::string command =
      (env_prefix.empty() ? "" : env_prefix + " ") + cli_path() + " " + args +
      " 2>&1";
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string output;
  std::array<char, 4096> buffer;
  size_t got;
  while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
    output.append(buffer.data(), got);
  int status = pclose(pipe);
  int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return {code, output};
}

class TempDir {
 public:
  TempDir() {
    path_ = fs::temp_directory_path() /
            ("tq-cli-test-" + std::to_string(::getpid()));
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  fs::path file(const std::string& name, const std::string& content) const {
    fs::path p = path_ / name;
    std::ofstream out(p);
    out << content;
    return p;
  }
  fs::path path(const std::string& name) const { return path_ / name; }

 private:
  fs::path path_;
};

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("quandles listing") {
  RunResult r = run("quandles --order 3 --up-to-iso");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "3 quandles"));
  CHECK(contains(r.output, "a c b\nc b a\nb a c"));

  r = run("quandles --order 1");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "1 quandle\n"));

  r = run("quandles --order 4 --up-to-iso");
  CHECK(contains(r.output, "7 quandles"));

  // every printed block must re-parse to an equal table
  r = run("quandles --order 3");
  std::stringstream blocks(r.output);
  std::string block, line;
  int parsed = 0;
  while (std::getline(blocks, line)) {
    if (line.empty()) {
      if (!block.empty()) {
        std::istringstream in(block);
        tq::QuandleTable q = tq::load_quandle(in);
        CHECK(tq::write_quandle(q) == block);
        ++parsed;
      }
      block.clear();
    } else if (!contains(line, "quandles")) {
      block += line + "\n";
    }
  }
  CHECK(parsed == 5);
}

TEST_CASE("quandles rejects bad arguments") {
  CHECK(run("quandles --order 0").exit_code == 2);
  CHECK(run("quandles --order 9").exit_code == 2);
  CHECK(run("quandles").exit_code == 2);
  CHECK(run("nonsense").exit_code == 2);
}

TEST_CASE("quandles json output") {
  RunResult r = run("quandles --order 3 --up-to-iso --format json");
  CHECK(r.exit_code == 0);
  auto doc = nlohmann::json::parse(r.output);
  CHECK(doc.at("count") == 3);
  CHECK(doc.at("quandles").size() == 3);
}

TEST_CASE("topologies listing") {
  RunResult r = run("topologies --order 3");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "29 topologies"));

  r = run("topologies --order 3 --up-to-homeo");
  CHECK(contains(r.output, "9 topologies"));

  r = run("topologies --order 1");
  CHECK(contains(r.output, "1 topology\n"));
}

TEST_CASE("check command") {
  TempDir dir;
  auto dihedral = dir.file("dihedral.q", "3\na c b\nc b a\nb a c\n");
  auto coarse = dir.file("coarse.t", "3\npreorder\n111\n111\n111\n");
  auto chain = dir.file("chain.t", "3\npreorder\n110\n010\n001\n");
  auto small = dir.file("small.t", "2\npreorder\n11\n01\n");

  RunResult r = run("check " + dihedral.string() + " " + coarse.string());
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "compatible"));

  r = run("check " + dihedral.string() + " " + chain.string());
  CHECK(r.exit_code == 1);
  CHECK(contains(r.output, "incompatible"));
  CHECK(contains(r.output, "x=a, x'=a, y=a, y'=b"));

  r = run("check --explain " + dihedral.string() + " " + chain.string());
  CHECK(r.exit_code == 1);
  CHECK(contains(r.output, "monotonicity criterion: fail"));
  CHECK(contains(r.output, "translation criterion"));

  r = run("check " + dihedral.string() + " " + small.string());
  CHECK(r.exit_code == 2);
  CHECK(contains(r.output, "sizes differ"));

  r = run("check " + dihedral.string() + " " + dir.path("nothere.t").string());
  CHECK(r.exit_code == 2);

  auto broken = dir.file("broken.q", "3\na a\nc b b\nb c c\n");
  r = run("check " + broken.string() + " " + coarse.string());
  CHECK(r.exit_code == 2);
  CHECK(contains(r.output, "line 2"));
}

TEST_CASE("compatible command") {
  TempDir dir;
  auto dihedral = dir.file("dihedral.q", "3\na c b\nc b a\nb a c\n");
  RunResult r = run("compatible " + dihedral.string());
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "2 compatible topologies"));

  auto two_orbit = dir.file("two.q", "3\na a a\nc b b\nb c c\n");
  r = run("compatible --up-to-iso " + two_orbit.string());
  CHECK(contains(r.output, "5 compatible topologies"));

  r = run("compatible --format json " + two_orbit.string());
  auto doc = nlohmann::json::parse(r.output);
  CHECK(doc.at("count") == 5);
}

TEST_CASE("classify command") {
  TempDir dir;
  auto out = dir.path("report.json");
  RunResult r = run("classify --order 3 --out " + out.string());
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "compatible: 2 labeled, 2 classes"));
  CHECK(contains(r.output, "compatible: 5 labeled, 5 classes"));
  CHECK(contains(r.output, "all expectations met"));

  std::ifstream in(out);
  REQUIRE(in.good());
  auto doc = nlohmann::json::parse(in);
  CHECK(doc.at("n") == 3);
  CHECK(doc.at("quandles").size() == 3);

  r = run("classify --order 4");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "disputed at source"));
  CHECK(contains(r.output, "stated 4 classes, computed 5"));
  CHECK(contains(r.output, "compatible: 7 labeled, 5 classes"));

  r = run("classify --order 1");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "compatible: 1 labeled, 1 classes"));

  CHECK(run("classify --order 5").exit_code == 2);
}

TEST_CASE("verify-counterexample command") {
  RunResult r = run("verify-counterexample");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "5/5 checks passed"));

  r = run("verify-counterexample --mutate c,a=c");
  CHECK(r.exit_code == 1);
  CHECK(contains(r.output, "check quandle-axioms: FAIL"));

  TempDir dir;
  auto coarse6 = dir.file("coarse6.t",
                          "6\npreorder\n111111\n111111\n111111\n111111\n"
                          "111111\n111111\n");
  r = run("verify-counterexample --topology " + coarse6.string());
  CHECK(r.exit_code == 1);
  CHECK(contains(r.output, "check compatibility: pass"));
  CHECK(contains(r.output, "check orbit-restriction-not-coarse: FAIL"));
  CHECK(contains(r.output, "4/5 checks passed"));
}

TEST_CASE("hasse command") {
  TempDir dir;
  auto bubble = dir.file("bubble.t", "3\nopens\n{}\nb,c\na,b,c\n");
  RunResult r = run("hasse " + bubble.string());
  CHECK(r.exit_code == 0);
  CHECK(r.output ==
        "digraph hasse {\n"
        "  rankdir=BT;\n"
        "  c0 [label=\"{a}\"];\n"
        "  c1 [label=\"{b,c}\"];\n"
        "  c0 -> c1;\n"
        "}\n");

  auto out = dir.path("out.dot");
  r = run("hasse " + bubble.string() + " --out " + out.string());
  CHECK(r.exit_code == 0);
  std::ifstream in(out);
  std::stringstream content;
  content << in.rdbuf();
  CHECK(contains(content.str(), "c0 -> c1;"));

  auto discrete = dir.file("discrete.t", "4\npreorder\n1000\n0100\n0010\n0001\n");
  r = run("hasse " + discrete.string());
  CHECK(contains(r.output, "c3 [label=\"{d}\"];"));
  CHECK(!contains(r.output, "->"));

  CHECK(run("hasse " + dir.path("missing.t").string()).exit_code == 2);
}

TEST_CASE("output is deterministic across thread counts") {
  RunResult one = run("quandles --order 4 --up-to-iso", "env TQ_THREADS=1");
  RunResult many = run("quandles --order 4 --up-to-iso", "env TQ_THREADS=8");
  CHECK(one.exit_code == 0);
  CHECK(one.output == many.output);

  one = run("classify --order 3", "env TQ_THREADS=1");
  many = run("classify --order 3", "env TQ_THREADS=8");
  CHECK(one.output == many.output);
}
