#pragma once

#include <optional>
#include <string>
#include <vector>

#include "parade/congruence.hpp"
#include "parade/constructions.hpp"
#include "parade/factor_set.hpp"
#include "parade/iso.hpp"
#include "parade/semidirect.hpp"

namespace parade {

struct CheckReport {
  std::string check_id;
  std::string subject;
  std::string verdict;  // "pass" | "fail" | "inconclusive-at-depth"
  std::string outcome;  // check-specific conclusion, e.g. "sdp-type"
  int depth = 0;
  std::vector<std::string> notes;
  std::vector<std::string> witnesses;

  bool pass() const { return verdict == "pass"; }
  std::string text() const;
};

// True iff every tuple of length <= depth is a word (P_n = E^n to depth).
bool is_group(const PartialGroup& pg, int depth);

// The two enumeration conditions characterising parade = global group, with a
// consistency cross-check against the parade realization itself.
CheckReport p_equals_g_conditions(const Figure& figure, TransformClass cls, int depth);

// Unique decomposition of a partial group into a wedge of groups; nullopt when
// the composability blocks do not form groups or the wedge fails to match.
std::optional<std::vector<GroupTable>> wedge_decompose(const PartialGroup& pg, int depth);

struct TranslatedScene {
  Component base;             // placed with the relevant symmetries fixing the origin
  std::vector<QVector> offsets;

  Figure figure() const;
};

// Decides whether the translated-copies figure is of semidirect-product type:
// criterion (1) disqualifies, criterion (2) qualifies, otherwise both sides
// are built and compared by iso_search.
CheckReport sdp_type_test(const TranslatedScene& scene, TransformClass cls, int depth);

enum class Theorem { T8_4, T12_1, T12_2, T12_3, P7_6 };
std::optional<Theorem> theorem_from_name(const std::string& s);
const char* theorem_name(Theorem t);

struct CrossCheckData {
  CheckReport report;
  // populated per theorem for downstream assertions
  std::size_t parade_count = 0;
  std::size_t model_count = 0;
  std::optional<Similarity> swap_map;          // T8_4: the chosen a
  std::optional<Similarity> sigma_cc;          // T8_4: a^2
  std::size_t quotient_count = 0;              // T12_3
  std::size_t sdp_count = 0;                   // T12_3
};

CrossCheckData cross_check(const Figure& figure, Theorem t, TransformClass cls, int depth,
                           const TranslatedScene* translated = nullptr);

// Conjugation invariance: |P(F a)_1| = |P(F)_1| and pi -> a^-1 pi a is an
// isomorphism onto the parade group of the transformed figure.
CheckReport conjugation_invariance(const Figure& figure, TransformClass cls, const Similarity& a,
                                   int depth);

// The parade group acting on the labeled points themselves (derived P-set).
PSet point_action_pset(const ParadeGroup& parade);

}  // namespace parade
