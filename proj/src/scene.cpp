#include "parade/scene.hpp"

#include <fstream>

namespace parade {

namespace {

QVector parse_point(const Json& arr, int dim, long m) {
  if (static_cast<int>(arr.size()) != dim)
    fail(Errc::ParseError, "point arity does not match the scene dimension");
  QVector v(static_cast<std::size_t>(dim));
  for (int i = 0; i < dim; ++i)
    v[static_cast<std::size_t>(i)] = QuadScalar::parse(arr.at(static_cast<std::size_t>(i)).get<std::string>(), m);
  return v;
}

Component parse_component(const Json& j, int dim, long m) {
  std::vector<LabeledPoint> pts;
  for (const auto& p : j.at("points")) {
    LabeledPoint lp;
    lp.pos = parse_point(p.at("pos"), dim, m);
    lp.label = p.value("label", "");
    pts.push_back(std::move(lp));
  }
  return Component(j.at("id").get<std::string>(), std::move(pts));
}

}  // namespace

Scene scene_from_json(const Json& j) {
  Scene s;
  if (j.value("schema", "") != "scene/1") fail(Errc::ParseError, "expected schema scene/1");
  s.name = j.value("name", "scene");
  s.dimension = j.at("dimension").get<int>();
  if (s.dimension < 1 || s.dimension > 3) fail(Errc::ParseError, "dimension must be 1, 2 or 3");
  s.field_m = j.at("field_m").get<long>();
  if (s.field_m != 0 && (s.field_m < 2 || !is_square_free(s.field_m)))
    fail(Errc::ParseError, "field_m must be 0 or a square-free integer >= 2");
  auto cls = transform_class_from_name(j.value("class", "euclidean"));
  if (!cls) fail(Errc::ParseError, "unknown transform class");
  s.cls = *cls;

  const bool has_components = j.contains("components");
  const bool has_shorthand = j.contains("translated_copies");
  if (has_components == has_shorthand)
    fail(Errc::ParseError, "a scene needs either components or translated_copies, not both");
  std::vector<Component> cc;
  if (has_components) {
    for (const auto& c : j.at("components")) cc.push_back(parse_component(c, s.dimension, s.field_m));
  } else {
    const auto& t = j.at("translated_copies");
    TranslatedScene ts;
    ts.base = parse_component(t.at("base"), s.dimension, s.field_m);
    for (const auto& o : t.at("offsets")) ts.offsets.push_back(parse_point(o, s.dimension, s.field_m));
    if (ts.offsets.empty()) fail(Errc::ParseError, "translated_copies needs at least one offset");
    s.translated = ts;
    cc = ts.figure().components();
  }
  s.figure = Figure(std::move(cc));
  s.figure.validate();
  return s;
}

Scene load_scene(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::ParseError, "cannot open scene file '" + path + "'");
  Json j;
  try {
    j = Json::parse(in);
  } catch (const std::exception& e) {
    fail(Errc::ParseError, std::string("scene JSON: ") + e.what());
  }
  return scene_from_json(j);
}

}  // namespace parade
