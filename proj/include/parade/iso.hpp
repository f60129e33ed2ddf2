#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "parade/pgroup.hpp"

namespace parade {

enum class IsoVerdict { Isomorphic, NonIsomorphic, Inconclusive };

struct IsoOptions {
  int depth = 4;                         // word lengths checked on a found bijection
  std::uint64_t node_budget = 4000000;   // backtracking nodes before giving up
};

struct IsoResult {
  IsoVerdict verdict = IsoVerdict::NonIsomorphic;
  std::vector<ElemId> mapping;  // a-element -> b-element when isomorphic
  int depth_verified = 0;
  std::uint64_t nodes = 0;
};

// Backtracking search for a bijection preserving unit, inverses, word
// membership and reduction for all words of length <= depth. Color refinement
// over the length-2 product structure prunes the search. A found bijection is
// a certified isomorphism to the stated depth; "none" is a sound refutation.
IsoResult iso_search(const PartialGroup& a, const PartialGroup& b, IsoOptions opt = {});

// Verifies that the explicit bijection a->b is an isomorphism to the depth.
bool verify_isomorphism(const PartialGroup& a, const PartialGroup& b,
                        const std::vector<ElemId>& mapping, int depth);

}  // namespace parade
