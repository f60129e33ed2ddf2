#pragma once

#include <string>
#include <vector>

#include "parade/pgroup.hpp"
#include "parade/pset.hpp"

namespace parade {

struct Violation {
  std::string axiom;
  std::string witness;
  std::string detail;
};

struct ValidationReport {
  std::string subject;
  int depth = 0;
  std::size_t words_checked = 0;
  std::vector<Violation> violations;

  bool pass() const { return violations.empty(); }
  std::string text() const;
};

std::string word_str(const PartialGroup& pg, std::span<const ElemId> w);

// Exhaustive check of the partial-group axioms over all words of length
// <= depth (words reached by prefix extension). Violations are data: the
// report lists every instance found, capped per axiom.
ValidationReport validate_axioms(const PartialGroup& pg, int depth);

// Same for the action axioms of a P-set.
ValidationReport validate_pset(const PSet& ps, int depth);

}  // namespace parade
