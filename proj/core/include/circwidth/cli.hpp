#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "circwidth/cycles.hpp"
#include "circwidth/decomposition.hpp"

namespace circwidth::cli {

// Command implementations behind the `circwidth` binary. Each takes a plain
// argument struct and writes to the given streams, so tests can drive them
// in-process. Exit codes: 0 success (and, for validate/survey, everything
// valid), 1 a validation failure was found, 2 usage, parse, or I/O error.

struct GenArgs {
  std::string family = {};
  int n = 0;
  std::uint64_t seed = 1;
  std::string output = {};  // empty: stdout
};

struct DfsArgs {
  std::string graph = {};
  int root = 0;
};

struct CircArgs {
  std::string graph = {};
  int guard = kCircumferenceSccGuard;
};

struct DecomposeArgs {
  std::string graph = {};
  std::string kind = {};
  std::string root = "auto";  // "auto" or a vertex id (single-SCC graphs)
  bool no_circ = false;
  std::string output = {};  // empty: stdout
};

struct ValidateArgs {
  std::string graph = {};
  std::string decomposition = {};
  std::string kind = {};  // optional; must match the file when given
};

struct SurveyArgs {
  std::vector<std::string> families = {};  // empty: all
  std::vector<int> sizes = {};        // empty: 2..8
  int count = 1;
  std::uint64_t seed = 1;
  std::string output = {};  // CSV path; empty: no CSV
};

int cmd_gen(const GenArgs& args, std::ostream& out, std::ostream& err);
int cmd_dfs(const DfsArgs& args, std::ostream& out, std::ostream& err);
int cmd_circ(const CircArgs& args, std::ostream& out, std::ostream& err);
int cmd_decompose(const DecomposeArgs& args, std::ostream& out,
                  std::ostream& err);
int cmd_validate(const ValidateArgs& args, std::ostream& out,
                 std::ostream& err);
int cmd_survey(const SurveyArgs& args, std::ostream& out, std::ostream& err);

// Decomposes every SCC of g with the given construction, rooted at each
// component's smallest vertex (or at `root` for single-SCC graphs), and
// returns the bundle in original vertex ids. Shared by decompose/survey and
// exposed for tests.
DecompositionBundle decompose_graph(const Digraph& g, DecompKind kind,
                                    int root = -1);

// One survey row. Slack columns are circ + 1 - width (nonnegative whenever
// the width bound holds).
struct SurveyRow {
  std::string id = {};
  int n = 0;
  int m = 0;
  int circ = 1;
  int width_arboreal = 0;
  int width_dag = 0;
  int width_kelly = 0;
  bool valid_arboreal = true;
  bool valid_dag = true;
  bool valid_kelly = true;
  bool all_valid = true;
  int slack_arboreal = 0;
  int slack_dag = 0;
  int slack_kelly = 0;

  bool operator==(const SurveyRow&) const = default;
};

std::string survey_csv_header();
std::string to_csv(const SurveyRow& row);
std::vector<SurveyRow> parse_survey_csv(const std::string& text);

}  // namespace circwidth::cli
