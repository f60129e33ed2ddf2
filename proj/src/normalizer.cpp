#include "parade/normalizer.hpp"

#include <algorithm>

namespace parade {

namespace {

bool survives_insertions(const PartialGroup& pg, ElemId g, const std::vector<WordList>& levels) {
  const ElemId gi = pg.inverse(g);
  Word probe;
  for (const auto& level : levels) {
    const std::size_t n = level.length();
    for (std::size_t wi = 0; wi < level.size(); ++wi) {
      auto w = level[wi];
      for (std::size_t gap = 0; gap <= n; ++gap) {
        for (int pat = 0; pat < 2; ++pat) {
          probe.assign(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(gap));
          probe.push_back(pat == 0 ? g : gi);
          probe.push_back(pat == 0 ? gi : g);
          probe.insert(probe.end(), w.begin() + static_cast<std::ptrdiff_t>(gap), w.end());
          if (!pg.word_in(probe)) return false;
        }
      }
    }
  }
  return true;
}

}  // namespace

std::vector<ElemId> normalizer_insertion(const PartialGroup& pg, int depth) {
  auto levels = enumerate_word_lists(pg, depth);
  std::vector<ElemId> out;
  for (ElemId g = 0; g < pg.size(); ++g)
    if (survives_insertions(pg, g, levels)) out.push_back(g);
  return out;
}

std::vector<ElemId> normalizer(const ChartedPartialGroup& pg, int depth) {
  std::vector<ElemId> chart_side;
  for (ElemId g = 0; g < pg.size(); ++g)
    if (pg.chart_total(g)) chart_side.push_back(g);
  std::vector<ElemId> oracle_side = normalizer_insertion(pg, depth);
  if (chart_side != oracle_side) {
    std::string detail = "chart criterion {";
    for (ElemId g : chart_side) detail += pg.label(g) + " ";
    detail += "} vs insertion criterion at depth " + std::to_string(depth) + " {";
    for (ElemId g : oracle_side) detail += pg.label(g) + " ";
    detail += "}";
    fail(Errc::CandidateMismatch, detail);
  }
  // The normalizer is a subgroup: unit, inverses, closed products.
  std::vector<bool> in(pg.size(), false);
  for (ElemId g : chart_side) in[g] = true;
  if (!in[pg.unit()]) fail(Errc::CandidateMismatch, "normalizer misses the unit");
  for (ElemId g : chart_side) {
    if (!in[pg.inverse(g)]) fail(Errc::CandidateMismatch, "normalizer not closed under inverse");
    for (ElemId h : chart_side) {
      auto p = pg.reduce2(g, h);
      if (!p || !in[*p]) fail(Errc::CandidateMismatch, "normalizer not closed under product");
    }
  }
  return chart_side;
}

}  // namespace parade
