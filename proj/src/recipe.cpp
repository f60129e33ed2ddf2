#include "parade/recipe.hpp"

#include <fstream>

#include "parade/congruence.hpp"
#include "parade/factor_set.hpp"
#include "parade/scene.hpp"
#include "parade/semidirect.hpp"

namespace parade {

namespace {

GroupTable group_ref(const Json& j) {
  if (j.is_string()) {
    auto g = GroupTable::builtin(j.get<std::string>());
    if (!g) fail(Errc::ParseError, "unknown built-in group '" + j.get<std::string>() + "'");
    return *g;
  }
  return group_table_from_json(j);
}

std::vector<int> subgroup_by_labels(const GroupTable& g, const Json& labels) {
  std::vector<int> out;
  for (const auto& l : labels) {
    const std::string name = l.get<std::string>();
    int found = -1;
    for (std::size_t i = 0; i < g.size(); ++i)
      if (g.label(static_cast<int>(i)) == name) found = static_cast<int>(i);
    if (found < 0) fail(Errc::ParseError, "no element labeled '" + name + "' in " + g.name());
    out.push_back(found);
  }
  return out;
}

ElemId elem_by_label(const PartialGroup& pg, const std::string& name) {
  for (ElemId e = 0; e < pg.size(); ++e)
    if (pg.label(e) == name) return e;
  fail(Errc::UnknownElement, "no element labeled '" + name + "'");
}

struct Evaluator {
  std::string base_dir;
  int depth;
  const Json* defs = nullptr;

  PGPtr eval(const Json& j) const {
    if (!j.is_object() || !j.contains("op")) fail(Errc::ParseError, "recipe node needs an 'op'");
    const std::string op = j.at("op").get<std::string>();
    if (op == "ref") {
      const std::string name = j.at("name").get<std::string>();
      if (!defs || !defs->contains(name)) fail(Errc::ParseError, "unresolved reference '" + name + "'");
      return eval(defs->at(name));
    }
    if (op == "group") {
      return charted_from_group(j.contains("name") ? group_ref(j.at("name")) : group_ref(j.at("table")));
    }
    if (op == "wedge") {
      std::vector<GroupTable> summands;
      for (const auto& s : j.at("summands")) summands.push_back(group_ref(s));
      return wedge(summands);
    }
    if (op == "union") {
      GroupTable g0 = group_ref(j.at("ambient"));
      return union_in_ambient(g0, subgroup_by_labels(g0, j.at("plus")),
                              subgroup_by_labels(g0, j.at("minus")));
    }
    if (op == "vparades") {
      long m = j.value("field_m", 0L);
      std::vector<QVector> pts;
      for (const auto& p : j.at("points")) {
        QVector v(p.size());
        for (std::size_t i = 0; i < p.size(); ++i)
          v[i] = QuadScalar::parse(p.at(i).get<std::string>(), m);
        pts.push_back(std::move(v));
      }
      return vector_parades(pts).pg;
    }
    if (op == "parade") {
      std::string path = j.at("scene").get<std::string>();
      if (!path.empty() && path[0] != '/' && !base_dir.empty()) path = base_dir + "/" + path;
      Scene scene = load_scene(path);
      TransformClass cls = scene.cls;
      if (j.contains("class")) {
        auto c = transform_class_from_name(j.at("class").get<std::string>());
        if (!c) fail(Errc::ParseError, "unknown transform class");
        cls = *c;
      }
      return parade_from_figure(scene.figure, cls).pg;
    }
    if (op == "quotient") {
      PGPtr base = eval(j.at("base"));
      std::vector<std::pair<ElemId, ElemId>> pairs;
      for (const auto& p : j.at("pairs"))
        pairs.emplace_back(elem_by_label(*base, p.at(0).get<std::string>()),
                           elem_by_label(*base, p.at(1).get<std::string>()));
      return quotient(base, pairs, depth);
    }
    if (op == "factorset") {
      FactorSet fs;
      fs.g = group_ref(j.at("g"));
      fs.h = eval(j.at("h"));
      // act/sigma by labels; missing entries default to identity / unit.
      fs.act.assign(fs.h->size(), std::vector<ElemId>(fs.g.size()));
      for (ElemId eta = 0; eta < fs.h->size(); ++eta)
        for (std::size_t c = 0; c < fs.g.size(); ++c) fs.act[eta][c] = eta;
      if (j.contains("act"))
        for (const auto& [glabel, table] : j.at("act").items()) {
          int c = -1;
          for (std::size_t i = 0; i < fs.g.size(); ++i)
            if (fs.g.label(static_cast<int>(i)) == glabel) c = static_cast<int>(i);
          if (c < 0) fail(Errc::ParseError, "unknown group element '" + glabel + "' in act");
          for (const auto& [from, to] : table.items())
            fs.act[elem_by_label(*fs.h, from)][static_cast<std::size_t>(c)] =
                elem_by_label(*fs.h, to.get<std::string>());
        }
      fs.sigma.assign(fs.g.size(), std::vector<ElemId>(fs.g.size(), fs.h->unit()));
      if (j.contains("sigma"))
        for (const auto& [ga, row] : j.at("sigma").items()) {
          int a = -1;
          for (std::size_t i = 0; i < fs.g.size(); ++i)
            if (fs.g.label(static_cast<int>(i)) == ga) a = static_cast<int>(i);
          if (a < 0) fail(Errc::ParseError, "unknown group element '" + ga + "' in sigma");
          for (const auto& [gb, val] : row.items()) {
            int b = -1;
            for (std::size_t i = 0; i < fs.g.size(); ++i)
              if (fs.g.label(static_cast<int>(i)) == gb) b = static_cast<int>(i);
            if (b < 0) fail(Errc::ParseError, "unknown group element '" + gb + "' in sigma");
            fs.sigma[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] =
                elem_by_label(*fs.h, val.get<std::string>());
          }
        }
      return factor_set_product(std::move(fs), depth);
    }
    if (op == "semidirect_wedge") {
      PGPtr f = eval(j.at("f"));
      auto charted = std::dynamic_pointer_cast<const ChartedPartialGroup>(f);
      if (!charted) fail(Errc::ParseError, "semidirect_wedge needs a charted acting realization");
      GroupTable g = group_ref(j.at("group"));
      auto wa = action_wedge_over_fset(g, f, chart_pset(charted), depth);
      return semidirect(f, wa.h, wa.action);
    }
    if (op == "semidirect") {
      PGPtr f = eval(j.at("f"));
      PGPtr h = eval(j.at("h"));
      const auto& act = j.at("action");
      if (act.at("kind") == "grazian_henke") {
        std::vector<std::vector<ElemId>> psi(f->size());
        for (ElemId g = 0; g < f->size(); ++g) {
          psi[g].resize(h->size());
          for (ElemId e = 0; e < h->size(); ++e) psi[g][e] = e;
        }
        if (act.contains("psi"))
          for (const auto& [flabel, table] : act.at("psi").items())
            for (const auto& [from, to] : table.items())
              psi[elem_by_label(*f, flabel)][elem_by_label(*h, from)] =
                  elem_by_label(*h, to.get<std::string>());
        return semidirect(f, h, action_grazian_henke(f, h, psi, depth));
      }
      if (act.at("kind") == "adjoint") {
        if (f.get() != h.get()) fail(Errc::ParseError, "adjoint action needs f == h");
        return semidirect(f, h, action_adjoint(f));
      }
      fail(Errc::ParseError, "unknown action kind in semidirect");
    }
    fail(Errc::ParseError, "unknown recipe op '" + op + "'");
  }
};

}  // namespace

PGPtr eval_recipe(const Json& j, const std::string& base_dir, int depth) {
  if (j.value("schema", "") != "recipe/1") fail(Errc::ParseError, "expected schema recipe/1");
  Evaluator ev{base_dir, depth, j.contains("defs") ? &j.at("defs") : nullptr};
  return ev.eval(j.at("result"));
}

PGPtr load_recipe(const std::string& path, int depth) {
  std::ifstream in(path);
  if (!in) fail(Errc::ParseError, "cannot open recipe file '" + path + "'");
  Json j;
  try {
    j = Json::parse(in);
  } catch (const std::exception& e) {
    fail(Errc::ParseError, std::string("recipe JSON: ") + e.what());
  }
  std::string dir = ".";
  auto slash = path.find_last_of('/');
  if (slash != std::string::npos) dir = path.substr(0, slash);
  return eval_recipe(j, dir, depth);
}

}  // namespace parade
