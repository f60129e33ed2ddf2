#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "parade/geometry.hpp"

namespace parade {

// Exit codes shared by all commands:
//   0 success / isomorphic / pass
//   1 non-isomorphic / validation failure
//   2 parse error
//   3 geometry error
//   4 construction error
//   5 inconclusive at depth
//   6 hypothesis violation
struct ExitCode {
  static constexpr int ok = 0;
  static constexpr int distinct = 1;
  static constexpr int parse = 2;
  static constexpr int geometry = 3;
  static constexpr int construction = 4;
  static constexpr int inconclusive = 5;
  static constexpr int hypothesis = 6;
};

int default_depth();  // 4, overridden by the PARADE_DEPTH environment variable

struct AnalyzeOptions {
  std::string scene_path;
  std::optional<TransformClass> cls;  // override of the scene's class
  int depth = 4;
  std::string out_dir;  // empty: report to stdout only
};
int run_analyze(const AnalyzeOptions& opt, std::ostream& out);

struct ConstructOptions {
  std::string recipe_path;
  int depth = 4;
  std::string out_path;  // empty: print to stdout
};
int run_construct(const ConstructOptions& opt, std::ostream& out);

struct CompareOptions {
  std::string a_path;
  std::string b_path;
  int depth = 4;
};
int run_compare(const CompareOptions& opt, std::ostream& out);

struct CrosscheckOptions {
  std::string scene_path;
  std::string theorem;
  int depth = 4;
  std::string out_path;  // optional JSON report
};
int run_crosscheck(const CrosscheckOptions& opt, std::ostream& out);

struct ValidateOptions {
  std::string pg_path;
  int depth = 4;
};
int run_validate(const ValidateOptions& opt, std::ostream& out);

}  // namespace parade
