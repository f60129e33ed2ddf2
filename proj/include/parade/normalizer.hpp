#pragma once

#include <vector>

#include "parade/charted.hpp"
#include "parade/pgroup.hpp"

namespace parade {

// Elements g whose cancelling pairs (g^{+-1}, g^{-+1}) can be inserted at any
// gap of any word of length <= depth without leaving the word sets. This is
// the bounded-depth oracle form of the normalizer characterization.
std::vector<ElemId> normalizer_insertion(const PartialGroup& pg, int depth);

// Chart criterion (support defined on every chart) cross-validated against the
// insertion oracle at the given depth; disagreement raises CandidateMismatch.
// The result is verified to be a subgroup.
std::vector<ElemId> normalizer(const ChartedPartialGroup& pg, int depth);

}  // namespace parade
