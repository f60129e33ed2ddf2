#pragma once

#include <optional>
#include <string>

#include "parade/analysis.hpp"
#include "parade/serialize.hpp"

namespace parade {

struct Scene {
  std::string name;
  int dimension = 2;
  long field_m = 0;
  TransformClass cls = TransformClass::Euclidean;
  Figure figure;
  std::optional<TranslatedScene> translated;  // set when the shorthand was used
};

Scene scene_from_json(const Json& j);
Scene load_scene(const std::string& path);

}  // namespace parade
