#include "parade/faction.hpp"

#include <algorithm>

#include "parade/iso.hpp"

namespace parade {

std::optional<Word> FAction::act_tuple(std::span<const ElemId> etas,
                                       std::span<const ElemId> gammas) const {
  if (etas.empty()) return std::nullopt;
  if (!h_->word_in(etas)) return std::nullopt;
  if (!f_->word_in(gammas)) return std::nullopt;
  Word out(etas.size());
  for (std::size_t i = 0; i < etas.size(); ++i) {
    auto v = act1(etas[i], gammas);
    if (!v) return std::nullopt;
    out[i] = *v;
  }
  if (!h_->word_in(out)) return std::nullopt;
  return out;
}

TableFAction::TableFAction(PGPtr f, PGPtr h, std::vector<std::vector<std::int32_t>> step,
                           std::string kind)
    : FAction(std::move(f), std::move(h)), step_(std::move(step)), kind_(std::move(kind)) {
  if (step_.size() != h_->size()) fail(Errc::InvalidAction, "step table must cover every target element");
  for (const auto& row : step_) {
    if (row.size() != f_->size()) fail(Errc::InvalidAction, "step table must cover every actor element");
    for (auto v : row)
      if (v < -1 || v >= static_cast<std::int32_t>(h_->size()))
        fail(Errc::InvalidAction, "step target out of range");
  }
}

std::optional<ElemId> TableFAction::act1(ElemId eta, std::span<const ElemId> gammas) const {
  if (!f_->word_in(gammas)) return std::nullopt;
  std::int32_t cur = static_cast<std::int32_t>(eta);
  for (ElemId g : gammas) {
    cur = step_[static_cast<std::size_t>(cur)][g];
    if (cur < 0) return std::nullopt;
  }
  return static_cast<ElemId>(cur);
}

std::optional<ElemId> AdjointFAction::act1(ElemId eta, std::span<const ElemId> gammas) const {
  if (!h_->word_in(gammas)) return std::nullopt;
  Word rho = h_->inverse_word(gammas);
  rho.push_back(eta);
  rho.insert(rho.end(), gammas.begin(), gammas.end());
  return h_->reduce(rho);
}

std::optional<Word> AdjointFAction::act_tuple(std::span<const ElemId> etas,
                                              std::span<const ElemId> gammas) const {
  if (etas.empty() || !h_->word_in(etas) || !h_->word_in(gammas)) return std::nullopt;
  Word ginv = h_->inverse_word(gammas);
  Word rho;
  rho.reserve(etas.size() * (2 * gammas.size() + 1));
  for (ElemId eta : etas) {
    rho.insert(rho.end(), ginv.begin(), ginv.end());
    rho.push_back(eta);
    rho.insert(rho.end(), gammas.begin(), gammas.end());
  }
  if (!h_->word_in(rho)) return std::nullopt;
  Word out(etas.size());
  const std::size_t block = 2 * gammas.size() + 1;
  for (std::size_t j = 0; j < etas.size(); ++j) {
    auto r = h_->reduce(std::span<const ElemId>(rho).subspan(j * block, block));
    if (!r) return std::nullopt;
    out[j] = *r;
  }
  return out;
}

PullbackFAction::PullbackFAction(PGPtr f, FActionPtr base, std::vector<ElemId> phi)
    : FAction(std::move(f), base->target()), base_(std::move(base)), phi_(std::move(phi)) {
  if (phi_.size() != f_->size()) fail(Errc::NotAMap, "pullback map must cover the acting realization");
}

Word PullbackFAction::map_word(std::span<const ElemId> gammas) const {
  Word out(gammas.size());
  for (std::size_t i = 0; i < gammas.size(); ++i) out[i] = phi_.at(gammas[i]);
  return out;
}

std::optional<ElemId> PullbackFAction::act1(ElemId eta, std::span<const ElemId> gammas) const {
  if (!f_->word_in(gammas)) return std::nullopt;
  return base_->act1(eta, map_word(gammas));
}

std::optional<Word> PullbackFAction::act_tuple(std::span<const ElemId> etas,
                                               std::span<const ElemId> gammas) const {
  if (!f_->word_in(gammas)) return std::nullopt;
  return base_->act_tuple(etas, map_word(gammas));
}

FActionPtr action_adjoint(PGPtr p) { return std::make_shared<AdjointFAction>(std::move(p)); }

FActionPtr action_grazian_henke(PGPtr f, PGPtr h, const std::vector<std::vector<ElemId>>& psi,
                                int depth) {
  if (psi.size() != f->size()) fail(Errc::NotAMap, "psi must assign an automorphism to every element");
  for (ElemId g = 0; g < f->size(); ++g)
    if (!verify_isomorphism(*h, *h, psi[g], depth))
      fail(Errc::NotAMap, "psi(" + f->label(g) + ") is not an automorphism at depth " +
                              std::to_string(depth));
  for (ElemId e = 0; e < h->size(); ++e)
    if (psi[f->unit()][e] != e) fail(Errc::NotAMap, "psi(1) is not the identity");
  // Map of partial groups into Aut(H): along every word, the left-to-right
  // composite equals psi of the reduction.
  auto levels = enumerate_word_lists(*f, depth);
  for (std::size_t li = 1; li < levels.size(); ++li) {
    const auto& level = levels[li];
    for (std::size_t wi = 0; wi < level.size(); ++wi) {
      auto w = level[wi];
      auto red = f->reduce(w);
      if (!red) continue;
      for (ElemId e = 0; e < h->size(); ++e) {
        ElemId acc = e;
        for (ElemId g : w) acc = psi[g][acc];
        if (acc != psi[*red][e])
          fail(Errc::NotAMap, "psi does not respect the word " + word_str(*f, w));
      }
    }
  }
  std::vector<std::vector<std::int32_t>> step(h->size(), std::vector<std::int32_t>(f->size()));
  for (ElemId e = 0; e < h->size(); ++e)
    for (ElemId g = 0; g < f->size(); ++g) step[e][g] = static_cast<std::int32_t>(psi[g][e]);
  return std::make_shared<TableFAction>(std::move(f), std::move(h), std::move(step), "grazian-henke");
}

WedgeActionData action_wedge_over_fset(const GroupTable& g, PGPtr f, const PSet& x, int depth) {
  if (&x.pg() != f.get()) fail(Errc::InvalidAction, "the P-set must belong to the acting realization");
  if (!is_friendly(*f, x, depth))
    fail(Errc::NotFriendly, "the point set is not friendly for the acting partial group");
  WedgeActionData out;
  std::vector<GroupTable> summands(x.point_count(), g);
  out.h = wedge_indexed(summands, &out.index);
  std::vector<std::vector<std::int32_t>> step(out.h->size(),
                                              std::vector<std::int32_t>(f->size(), -1));
  for (ElemId gamma = 0; gamma < f->size(); ++gamma) {
    // unit: defined as soon as some point admits the step
    for (std::size_t p = 0; p < x.point_count(); ++p)
      if (x.step(gamma, p) >= 0) {
        step[out.h->unit()][gamma] = static_cast<std::int32_t>(out.h->unit());
        break;
      }
    for (ElemId e = 0; e < out.h->size(); ++e) {
      auto [summand, a] = out.index.origin[e];
      if (summand < 0) continue;  // unit handled above
      auto moved = x.step(gamma, static_cast<std::size_t>(summand));
      if (moved >= 0)
        step[e][gamma] = static_cast<std::int32_t>(
            out.index.embed[static_cast<std::size_t>(moved)][static_cast<std::size_t>(a)]);
    }
  }
  out.action = std::make_shared<TableFAction>(std::move(f), out.h, std::move(step), "wedge-over-fset");
  return out;
}

FActionPtr action_two_component(PGPtr v01, ElemId step_up, ElemId step_down, ChartedPtr h,
                                const Similarity& gamma) {
  if (!h->has_ambient_sims()) fail(Errc::InvalidAction, "two-component action needs ambient transforms");
  if (h->chart_count() != 2) fail(Errc::InvalidAction, "two-component action needs exactly two charts");
  std::vector<std::vector<std::int32_t>> step(h->size(), std::vector<std::int32_t>(v01->size(), -1));
  Similarity ginv = gamma.inverse();
  for (ElemId eta = 0; eta < h->size(); ++eta) {
    step[eta][v01->unit()] = static_cast<std::int32_t>(eta);
    if (h->dest_chart(eta, 0) >= 0) {  // eta stabilizes the chart-0 component
      auto img = h->find_ambient_sim(ginv.then(h->ambient_sim(eta)).then(gamma));
      if (!img) fail(Errc::InvalidAction, "conjugate leaves the union realization");
      step[eta][step_up] = static_cast<std::int32_t>(*img);
    }
    if (h->dest_chart(eta, 1) >= 0) {
      auto img = h->find_ambient_sim(gamma.then(h->ambient_sim(eta)).then(ginv));
      if (!img) fail(Errc::InvalidAction, "conjugate leaves the union realization");
      step[eta][step_down] = static_cast<std::int32_t>(*img);
    }
  }
  return std::make_shared<TableFAction>(std::move(v01), std::move(h), std::move(step),
                                        "two-component-conjugation");
}

namespace {

class ActionReporter {
 public:
  ActionReporter(ValidationReport& r, const PartialGroup& h, const PartialGroup& f)
      : r_(r), h_(h), f_(f) {}

  void add(const std::string& axiom, std::span<const ElemId> etas, std::span<const ElemId> gammas,
           const std::string& detail) {
    std::size_t count = 0;
    for (const auto& v : r_.violations) count += v.axiom == axiom;
    if (count >= 20) return;
    r_.violations.push_back({axiom, word_str(h_, etas) + " | " + word_str(f_, gammas), detail});
  }

 private:
  ValidationReport& r_;
  const PartialGroup& h_;
  const PartialGroup& f_;
};

}  // namespace

ValidationReport validate_faction(const FAction& act, int depth) {
  if (depth < 1) fail(Errc::InvalidArgument, "validation depth must be >= 1");
  const PartialGroup& f = *act.actor();
  const PartialGroup& h = *act.target();
  ValidationReport report;
  report.subject = "action " + act.kind();
  report.depth = depth;
  ActionReporter out(report, h, f);

  auto flevels = enumerate_word_lists(f, depth);
  auto hlevels = enumerate_word_lists(h, depth);
  const ElemId hone = h.unit();
  const ElemId fone = f.unit();

  // (AP5): the unit of H travels along every word and stays the unit.
  for (const auto& level : flevels)
    for (std::size_t wi = 0; wi < level.size(); ++wi) {
      auto gs = level[wi];
      auto v = act.act1(hone, gs);
      Word one{hone};
      if (!v)
        out.add("AP5", one, gs, "unit has no action step");
      else if (*v != hone)
        out.add("AP5", one, gs, "unit is not fixed");
    }
  // (A5) at r = 1: the F-unit acts as the identity.
  for (ElemId eta = 0; eta < h.size(); ++eta) {
    Word ew{eta}, fw{fone};
    auto v = act.act1(eta, fw);
    if (!v || *v != eta) out.add("A5", ew, fw, "F-unit does not act trivially");
  }

  Word contracted, padded;
  for (const auto& hl : hlevels) {
    const std::size_t r = hl.length();
    for (std::size_t hi = 0; hi < hl.size(); ++hi) {
      auto etas = hl[hi];
      for (const auto& fl : flevels) {
        const std::size_t n = fl.length();
        for (std::size_t fi = 0; fi < fl.size(); ++fi) {
          auto gs = fl[fi];
          auto res = act.act_tuple(etas, gs);
          if (!res) continue;
          ++report.words_checked;
          const Word& outw = *res;
          // Lemma 10.2 (1): tuple action equals componentwise action.
          for (std::size_t i = 0; i < r; ++i) {
            auto c = act.act1(etas[i], gs);
            if (!c || *c != outw[i]) out.add("L10.2(1)", etas, gs, "tuple action is not componentwise");
          }
          // Lemma 10.2 (2): inverses commute with the action.
          for (std::size_t i = 0; i < r; ++i) {
            auto c = act.act1(h.inverse(etas[i]), gs);
            if (!c || *c != h.inverse(outw[i]))
              out.add("L10.2(2)", etas, gs, "inverse does not commute with the action");
          }
          // (A1): F-prefix stays defined.
          if (n >= 2 && !act.act_tuple(etas, gs.first(n - 1)))
            out.add("A1", etas, gs, "F-prefix undefined");
          // (A2): staged action.
          for (std::size_t p = 1; p < n; ++p) {
            auto mid = act.act_tuple(etas, gs.first(p));
            if (!mid) {
              out.add("A2", etas, gs, "first stage undefined");
              continue;
            }
            auto rest = act.act_tuple(*mid, gs.subspan(p));
            if (!rest || *rest != outw) out.add("A2", etas, gs, "staged action disagrees");
          }
          // (A3): contracting an F-block through reduce.
          for (std::size_t p = 0; p + 1 <= n; ++p)
            for (std::size_t q = 1; p + q <= n; ++q) {
              auto inner = f.reduce(gs.subspan(p, q));
              if (!inner) continue;
              contracted.assign(gs.begin(), gs.begin() + static_cast<std::ptrdiff_t>(p));
              contracted.push_back(*inner);
              contracted.insert(contracted.end(), gs.begin() + static_cast<std::ptrdiff_t>(p + q),
                                gs.end());
              auto z = act.act_tuple(etas, contracted);
              if (!z || *z != outw) out.add("A3", etas, gs, "F-contraction breaks the action");
            }
          // (A4): inserting the F-unit.
          for (std::size_t j = 0; j <= n; ++j) {
            padded.assign(gs.begin(), gs.begin() + static_cast<std::ptrdiff_t>(j));
            padded.push_back(fone);
            padded.insert(padded.end(), gs.begin() + static_cast<std::ptrdiff_t>(j), gs.end());
            auto z = act.act_tuple(etas, padded);
            if (!z || *z != outw) out.add("A4", etas, gs, "F-unit insertion breaks the action");
          }
          // (A6): acting along gs x gs^-1 returns the tuple.
          {
            Word round(gs.begin(), gs.end());
            Word ginv = f.inverse_word(gs);
            round.insert(round.end(), ginv.begin(), ginv.end());
            auto z = act.act_tuple(etas, round);
            if (!z || !std::equal(z->begin(), z->end(), etas.begin()))
              out.add("A6", etas, gs, "gs x gs^-1 does not return the tuple");
          }
          // (AP2): dropping the first or last H-letter is a map of F-sets.
          if (r >= 2) {
            auto d0 = act.act_tuple(etas.subspan(1), gs);
            if (!d0 || !std::equal(d0->begin(), d0->end(), outw.begin() + 1))
              out.add("AP2", etas, gs, "dropping the first letter breaks the action");
            auto dr = act.act_tuple(etas.first(r - 1), gs);
            if (!dr || !std::equal(dr->begin(), dr->end(), outw.begin()))
              out.add("AP2", etas, gs, "dropping the last letter breaks the action");
          }
          // (AP3): contracting an H-block through reduce is a map of F-sets.
          for (std::size_t p = 0; p + 1 <= r; ++p)
            for (std::size_t q = 1; p + q <= r; ++q) {
              auto inner = h.reduce(etas.subspan(p, q));
              if (!inner) continue;
              contracted.assign(etas.begin(), etas.begin() + static_cast<std::ptrdiff_t>(p));
              contracted.push_back(*inner);
              contracted.insert(contracted.end(), etas.begin() + static_cast<std::ptrdiff_t>(p + q),
                                etas.end());
              auto z = act.act_tuple(contracted, gs);
              if (!z) {
                out.add("AP3", etas, gs, "H-contraction leaves the domain");
                continue;
              }
              auto innero = h.reduce(std::span<const ElemId>(outw).subspan(p, q));
              Word expect(outw.begin(), outw.begin() + static_cast<std::ptrdiff_t>(p));
              if (!innero) {
                out.add("AP3", etas, gs, "image block is not reducible");
                continue;
              }
              expect.push_back(*innero);
              expect.insert(expect.end(), outw.begin() + static_cast<std::ptrdiff_t>(p + q), outw.end());
              if (*z != expect) out.add("AP3", etas, gs, "H-contraction disagrees");
            }
          // (AP4): inserting the H-unit is a map of F-sets.
          for (std::size_t j = 0; j <= r; ++j) {
            padded.assign(etas.begin(), etas.begin() + static_cast<std::ptrdiff_t>(j));
            padded.push_back(hone);
            padded.insert(padded.end(), etas.begin() + static_cast<std::ptrdiff_t>(j), etas.end());
            auto z = act.act_tuple(padded, gs);
            Word expect(outw.begin(), outw.begin() + static_cast<std::ptrdiff_t>(j));
            expect.push_back(hone);
            expect.insert(expect.end(), outw.begin() + static_cast<std::ptrdiff_t>(j), outw.end());
            if (!z || *z != expect) out.add("AP4", etas, gs, "H-unit insertion breaks the action");
          }
          // (AP6): etas x etas^-1 is a map of F-sets.
          {
            Word doubled(etas.begin(), etas.end());
            Word einv = h.inverse_word(etas);
            doubled.insert(doubled.end(), einv.begin(), einv.end());
            auto z = act.act_tuple(doubled, gs);
            Word expect = outw;
            Word oinv = h.inverse_word(outw);
            expect.insert(expect.end(), oinv.begin(), oinv.end());
            if (!z || *z != expect) out.add("AP6", etas, gs, "inverse doubling breaks the action");
          }
        }
      }
    }
  }
  return report;
}

}  // namespace parade
