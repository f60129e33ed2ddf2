#include "parade/cli_lib.hpp"

#include <cstdlib>
#include <fstream>
#include <ostream>

#include "parade/analysis.hpp"
#include "parade/iso.hpp"
#include "parade/normalizer.hpp"
#include "parade/recipe.hpp"
#include "parade/scene.hpp"
#include "parade/validate.hpp"

namespace parade {

namespace {

int exit_for(const Error& e, int default_code) {
  switch (e.code()) {
    case Errc::ParseError:
    case Errc::MixedField: return ExitCode::parse;
    case Errc::InfiniteStabilizer:
    case Errc::FieldEscape: return ExitCode::geometry;
    case Errc::HypothesisViolation:
    case Errc::PremiseViolation: return ExitCode::hypothesis;
    default: return default_code;
  }
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(Errc::InvalidArgument, "cannot write '" + path + "'");
  out << content;
}

Json report_to_json(const CheckReport& r) {
  Json j;
  j["check"] = r.check_id;
  j["subject"] = r.subject;
  j["verdict"] = r.verdict;
  j["outcome"] = r.outcome;
  j["depth"] = r.depth;
  j["notes"] = r.notes;
  j["witnesses"] = r.witnesses;
  return j;
}

Json validation_to_json(const ValidationReport& r) {
  Json j;
  j["subject"] = r.subject;
  j["depth"] = r.depth;
  j["words_checked"] = r.words_checked;
  j["pass"] = r.pass();
  Json v = Json::array();
  for (const auto& viol : r.violations) {
    Json e;
    e["axiom"] = viol.axiom;
    e["witness"] = viol.witness;
    e["detail"] = viol.detail;
    v.push_back(e);
  }
  j["violations"] = v;
  return j;
}

}  // namespace

int default_depth() {
  if (const char* env = std::getenv("PARADE_DEPTH")) {
    int d = std::atoi(env);
    if (d >= 2 && d <= 8) return d;
  }
  return 4;
}

int run_analyze(const AnalyzeOptions& opt, std::ostream& out) {
  Scene scene;
  try {
    scene = load_scene(opt.scene_path);
  } catch (const Error& e) {
    out << "error: " << e.what() << "\n";
    return ExitCode::parse;
  }
  try {
    TransformClass cls = opt.cls.value_or(scene.cls);
    auto parade = parade_from_figure(scene.figure, cls);
    auto global = global_group(scene.figure, cls);
    auto norm = normalizer(*parade.pg, opt.depth);
    auto axioms = validate_axioms(*parade.pg, opt.depth);

    Json j;
    j["schema"] = "analysis/1";
    j["scene"] = scene.name;
    j["class"] = transform_class_name(cls);
    j["depth"] = opt.depth;
    j["element_count"] = parade.pg->size();
    j["field_escape"] = parade.field_escape;
    Json elems = Json::array();
    for (ElemId e = 0; e < parade.pg->size(); ++e) {
      Json item;
      item["label"] = parade.pg->label(e);
      item["transform"] = parade.pg->ambient_sim(e).str();
      Json carries = Json::array();
      for (std::size_t x = 0; x < parade.pg->chart_count(); ++x)
        if (parade.pg->dest_chart(e, x) >= 0)
          carries.push_back(parade.pg->chart_name(x) + "->" +
                            parade.pg->chart_name(static_cast<std::size_t>(parade.pg->dest_chart(e, x))));
      item["support"] = carries;
      elems.push_back(item);
    }
    j["elements"] = elems;
    Json gl = Json::array();
    for (const auto& g : global) gl.push_back(g.str());
    j["global_group"] = gl;
    j["global_group_order"] = global.size();
    Json nm = Json::array();
    for (ElemId e : norm) nm.push_back(parade.pg->label(e));
    j["normalizer"] = nm;
    j["is_group"] = is_group(*parade.pg, std::min(opt.depth, 3));
    j["axioms"] = validation_to_json(axioms);

    std::string text;
    text += "scene: " + scene.name + " (" + transform_class_name(cls) + ")\n";
    text += "elements: " + std::to_string(parade.pg->size()) + "\n";
    text += "global group order: " + std::to_string(global.size()) + "\n";
    text += "normalizer order: " + std::to_string(norm.size()) + "\n";
    text += std::string("is_group: ") + (j["is_group"].get<bool>() ? "true" : "false") + "\n";
    text += axioms.text() + "\n";

    out << text;
    if (!opt.out_dir.empty()) {
      const std::string stem = opt.out_dir + "/" + scene.name;
      write_file(stem + ".report.json", j.dump(2) + "\n");
      write_file(stem + ".report.txt", text);
      write_file(stem + ".pg.json", pg_to_string(parade.pg));
      write_file(stem + ".dot", dot_chart_graph(*parade.pg));
    }
    return axioms.pass() ? ExitCode::ok : ExitCode::distinct;
  } catch (const Error& e) {
    out << "error: " << e.what() << "\n";
    return exit_for(e, ExitCode::geometry);
  }
}

int run_construct(const ConstructOptions& opt, std::ostream& out) {
  try {
    PGPtr pg = load_recipe(opt.recipe_path, opt.depth);
    auto axioms = validate_axioms(*pg, opt.depth);
    std::string payload = pg_to_string(pg);
    if (!opt.out_path.empty())
      write_file(opt.out_path, payload);
    else
      out << payload;
    out << "elements: " << pg->size() << "\n";
    out << axioms.text() << "\n";
    return axioms.pass() ? ExitCode::ok : ExitCode::construction;
  } catch (const Error& e) {
    out << "error: " << e.what() << "\n";
    return e.code() == Errc::ParseError ? ExitCode::parse : ExitCode::construction;
  }
}

int run_compare(const CompareOptions& opt, std::ostream& out) {
  PGPtr a, b;
  try {
    std::ifstream fa(opt.a_path), fb(opt.b_path);
    if (!fa || !fb) fail(Errc::ParseError, "cannot open input");
    std::string sa((std::istreambuf_iterator<char>(fa)), std::istreambuf_iterator<char>());
    std::string sb((std::istreambuf_iterator<char>(fb)), std::istreambuf_iterator<char>());
    a = pg_from_string(sa);
    b = pg_from_string(sb);
  } catch (const Error& e) {
    out << "error: " << e.what() << "\n";
    return ExitCode::parse;
  }
  auto iso = iso_search(*a, *b, IsoOptions{opt.depth, 4000000});
  switch (iso.verdict) {
    case IsoVerdict::Isomorphic: {
      out << "isomorphic (verified to depth " << iso.depth_verified << ")\n";
      for (ElemId e = 0; e < a->size(); ++e)
        out << "  " << a->label(e) << " -> " << b->label(iso.mapping[e]) << "\n";
      return ExitCode::ok;
    }
    case IsoVerdict::NonIsomorphic:
      out << "not isomorphic\n";
      return ExitCode::distinct;
    case IsoVerdict::Inconclusive:
      out << "inconclusive at depth " << opt.depth << "\n";
      return ExitCode::inconclusive;
  }
  return ExitCode::inconclusive;
}

int run_crosscheck(const CrosscheckOptions& opt, std::ostream& out) {
  Scene scene;
  try {
    scene = load_scene(opt.scene_path);
  } catch (const Error& e) {
    out << "error: " << e.what() << "\n";
    return ExitCode::parse;
  }
  auto t = theorem_from_name(opt.theorem);
  if (!t) {
    out << "error: unknown check '" << opt.theorem << "'\n";
    return ExitCode::parse;
  }
  try {
    auto data = cross_check(scene.figure, *t, scene.cls, opt.depth,
                            scene.translated ? &*scene.translated : nullptr);
    out << data.report.text() << "\n";
    if (!opt.out_path.empty()) write_file(opt.out_path, report_to_json(data.report).dump(2) + "\n");
    if (data.report.verdict == "pass") return ExitCode::ok;
    if (data.report.verdict == "inconclusive-at-depth") return ExitCode::inconclusive;
    return ExitCode::distinct;
  } catch (const Error& e) {
    out << "error: " << e.what() << "\n";
    return exit_for(e, ExitCode::construction);
  }
}

int run_validate(const ValidateOptions& opt, std::ostream& out) {
  PGPtr pg;
  try {
    std::ifstream f(opt.pg_path);
    if (!f) fail(Errc::ParseError, "cannot open input");
    std::string s((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
    pg = pg_from_string(s);
  } catch (const Error& e) {
    out << "error: " << e.what() << "\n";
    return ExitCode::parse;
  }
  auto report = validate_axioms(*pg, opt.depth);
  out << report.text() << "\n";
  return report.pass() ? ExitCode::ok : ExitCode::distinct;
}

}  // namespace parade
