#include <CLI11.hpp>

#include <iostream>

#include "parade/cli_lib.hpp"

int main(int argc, char** argv) {
  CLI::App app{"partial symmetry analysis of finite figures"};
  app.require_subcommand(1);
  const int depth_default = parade::default_depth();

  parade::AnalyzeOptions analyze;
  analyze.depth = depth_default;
  std::string analyze_class;
  auto* cmd_analyze = app.add_subcommand("analyze", "enumerate the symmetry partial group of a scene");
  cmd_analyze->add_option("scene", analyze.scene_path, "scene JSON file")->required();
  cmd_analyze->add_option("--class", analyze_class, "transform class override (euclidean|motion|similarity)");
  cmd_analyze->add_option("--depth", analyze.depth, "validation depth");
  cmd_analyze->add_option("--out", analyze.out_dir, "directory for report/pg/dot outputs");

  parade::ConstructOptions construct;
  construct.depth = depth_default;
  auto* cmd_construct = app.add_subcommand("construct", "evaluate a construction recipe");
  cmd_construct->add_option("recipe", construct.recipe_path, "recipe JSON file")->required();
  cmd_construct->add_option("--depth", construct.depth, "validation depth");
  cmd_construct->add_option("--out", construct.out_path, "output file for the serialized result");

  parade::CompareOptions compare;
  compare.depth = depth_default;
  auto* cmd_compare = app.add_subcommand("compare", "isomorphism search between two serialized results");
  cmd_compare->add_option("a", compare.a_path, "first pg JSON file")->required();
  cmd_compare->add_option("b", compare.b_path, "second pg JSON file")->required();
  cmd_compare->add_option("--depth", compare.depth, "verification depth");

  parade::CrosscheckOptions crosscheck;
  crosscheck.depth = depth_default;
  auto* cmd_crosscheck = app.add_subcommand("crosscheck", "verify a structure identity on a scene");
  cmd_crosscheck->add_option("scene", crosscheck.scene_path, "scene JSON file")->required();
  cmd_crosscheck->add_option("--theorem", crosscheck.theorem, "T8_4|T12_1|T12_2|T12_3|P7_6")->required();
  cmd_crosscheck->add_option("--depth", crosscheck.depth, "verification depth");
  cmd_crosscheck->add_option("--out", crosscheck.out_path, "JSON report path");

  parade::ValidateOptions validate;
  validate.depth = depth_default;
  auto* cmd_validate = app.add_subcommand("validate", "check the axioms of a serialized result");
  cmd_validate->add_option("pg", validate.pg_path, "pg JSON file")->required();
  cmd_validate->add_option("--depth", validate.depth, "validation depth");

  CLI11_PARSE(app, argc, argv);

  if (cmd_analyze->parsed()) {
    if (!analyze_class.empty()) {
      auto c = parade::transform_class_from_name(analyze_class);
      if (!c) {
        std::cerr << "error: unknown class '" << analyze_class << "'\n";
        return parade::ExitCode::parse;
      }
      analyze.cls = *c;
    }
    return parade::run_analyze(analyze, std::cout);
  }
  if (cmd_construct->parsed()) return parade::run_construct(construct, std::cout);
  if (cmd_compare->parsed()) return parade::run_compare(compare, std::cout);
  if (cmd_crosscheck->parsed()) return parade::run_crosscheck(crosscheck, std::cout);
  if (cmd_validate->parsed()) return parade::run_validate(validate, std::cout);
  return parade::ExitCode::parse;
}
