#pragma once

#include <string>

#include "parade/serialize.hpp"

namespace parade {

// Evaluates a construction recipe (expression tree over wedge, union,
// vparades, parade, factorset, semidirect, quotient) into a realization.
// Relative scene paths resolve against base_dir.
PGPtr eval_recipe(const Json& j, const std::string& base_dir, int depth);
PGPtr load_recipe(const std::string& path, int depth);

}  // namespace parade
