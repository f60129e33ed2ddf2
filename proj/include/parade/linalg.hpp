#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "parade/scalars.hpp"

namespace parade {

struct AffineSolveResult {
  // Maps (A, t) with src[i]*A + t == dst[i] for all i. One entry when the src
  // affine span is full; two (the reflection choices) when it has codimension 1.
  std::vector<std::pair<QMatrix, QVector>> maps;
  // A completion required a square root that does not exist in Q(sqrt m).
  bool field_escape = false;
};

// Solves for an affine map carrying src onto dst pointwise. The full-rank
// solution is returned as-is (no orthogonality imposed); codimension-1 spans
// are completed in the two scaled-orthogonal ways, with the completion scale
// taken from forced_scale_sq when given and from the in-span Gram data
// otherwise. Throws NoSolution when the correspondence is inconsistent and
// Underdetermined when the span codimension is >= 2 (or the scale is unknowable).
AffineSolveResult solve_affine_map(const std::vector<QVector>& src, const std::vector<QVector>& dst,
                                   std::optional<QuadScalar> forced_scale_sq = std::nullopt);

QVector apply_affine(const QVector& x, const QMatrix& a, const QVector& t);

}  // namespace parade
