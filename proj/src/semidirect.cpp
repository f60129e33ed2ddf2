#include "parade/semidirect.hpp"

#include <algorithm>

namespace parade {

namespace {

std::uint64_t pack_word(std::span<const ElemId> w) {
  std::uint64_t key = 0;
  for (std::size_t i = 0; i < w.size(); ++i) key |= static_cast<std::uint64_t>(w[i] + 1) << (8 * i);
  return key;
}

}  // namespace

SemidirectPartialGroup::SemidirectPartialGroup(PGPtr f, PGPtr h, FActionPtr act)
    : f_(std::move(f)), h_(std::move(h)), act_(std::move(act)) {
  if (act_->actor().get() != f_.get() || act_->target().get() != h_.get())
    fail(Errc::InvalidAction, "action endpoints do not match the semidirect factors");
  pair_index_.assign(f_->size() * h_->size(), -1);
  for (ElemId gamma = 0; gamma < f_->size(); ++gamma) {
    const ElemId ginv[1] = {f_->inverse(gamma)};
    for (ElemId eta = 0; eta < h_->size(); ++eta) {
      if (!act_->act1(eta, ginv)) continue;
      pair_index_[gamma * h_->size() + eta] = static_cast<std::int32_t>(pairs_.size());
      pairs_.emplace_back(gamma, eta);
    }
  }
  if (pairs_.empty()) fail(Errc::ActionDomainError, "empty semidirect product");
  auto u = find_pair(f_->unit(), h_->unit());
  if (!u) fail(Errc::ActionDomainError, "1 |x 1 is not an element; (AP5)/(A4) fail");
  unit_ = *u;
  inverse_.resize(pairs_.size());
  for (ElemId e = 0; e < pairs_.size(); ++e) {
    auto [gamma, eta] = pairs_[e];
    const ElemId ginv[1] = {f_->inverse(gamma)};
    auto twisted = act_->act1(h_->inverse(eta), ginv);
    if (!twisted) fail(Errc::ActionDomainError, "inverse formula requires an undefined action step");
    auto inv = find_pair(f_->inverse(gamma), *twisted);
    if (!inv) fail(Errc::ActionDomainError, "inverse pair is not an element");
    inverse_[e] = *inv;
  }
  for (ElemId e = 0; e < pairs_.size(); ++e)
    if (inverse_[inverse_[e]] != e) fail(Errc::ActionDomainError, "inverse is not involutive");
  cacheable_ = pairs_.size() < 255;
  table_act_ = dynamic_cast<const TableFAction*>(act_.get());
}

std::optional<ElemId> SemidirectPartialGroup::find_pair(ElemId gamma, ElemId eta) const {
  auto v = pair_index_[gamma * h_->size() + eta];
  if (v < 0) return std::nullopt;
  return static_cast<ElemId>(v);
}

std::optional<Word> SemidirectPartialGroup::twisted_tuple(std::span<const ElemId> w) const {
  const std::size_t n = w.size();
  Word a(n), gammas(n);
  for (std::size_t i = 0; i < n; ++i) gammas[i] = f_of(w[i]);
  a[n - 1] = h_of(w[n - 1]);
  if (table_act_) {
    // Single-step chaining; the caller guarantees the full gamma word, and its
    // suffixes are words by (P1).
    for (std::size_t j = 0; j + 1 < n; ++j) {
      std::int32_t cur = static_cast<std::int32_t>(h_of(w[j]));
      for (std::size_t k = j + 1; k < n && cur >= 0; ++k)
        cur = table_act_->step(static_cast<ElemId>(cur), gammas[k]);
      if (cur < 0) return std::nullopt;
      a[j] = static_cast<ElemId>(cur);
    }
    return a;
  }
  for (std::size_t j = 0; j + 1 < n; ++j) {
    auto v = act_->act1(h_of(w[j]), std::span<const ElemId>(gammas).subspan(j + 1));
    if (!v) return std::nullopt;
    a[j] = *v;
  }
  return a;
}

bool SemidirectPartialGroup::word_in(std::span<const ElemId> w) const {
  if (w.empty()) return false;
  for (ElemId e : w) check_elem(e);
  if (w.size() == 1) return true;
  if (auto c = lookup_cache(w)) return *c != 1;
  const std::size_t n = w.size();
  bool ok = false;
  if (table_act_ && n <= 24) {
    // Allocation-free fast path for table-backed actions.
    ElemId gammas[24], grev[24], a[24], b[24];
    for (std::size_t i = 0; i < n; ++i) gammas[i] = f_of(w[i]);
    for (std::size_t i = 0; i < n; ++i) grev[i] = f_->inverse(gammas[n - 1 - i]);
    do {
      if (!f_->word_in({gammas, n}) || !f_->word_in({grev, n})) break;
      bool defined = true;
      for (std::size_t j = 0; j < n && defined; ++j) {
        std::int32_t cur = static_cast<std::int32_t>(h_of(w[j]));
        for (std::size_t k = j + 1; k < n && cur >= 0; ++k)
          cur = table_act_->step(static_cast<ElemId>(cur), gammas[k]);
        if (cur < 0) defined = false;
        else a[j] = static_cast<ElemId>(cur);
      }
      if (!defined || !h_->word_in({a, n})) break;
      for (std::size_t j = 0; j < n && defined; ++j) {
        std::int32_t cur = static_cast<std::int32_t>(a[j]);
        for (std::size_t k = 0; k < n && cur >= 0; ++k)
          cur = table_act_->step(static_cast<ElemId>(cur), grev[k]);
        if (cur < 0) defined = false;
        else b[j] = static_cast<ElemId>(cur);
      }
      ok = defined && h_->word_in({b, n});
    } while (false);
  } else {
    Word gammas(n);
    for (std::size_t i = 0; i < n; ++i) gammas[i] = f_of(w[i]);
    do {
      if (!f_->word_in(gammas)) break;
      auto a = twisted_tuple(w);
      if (!a) break;
      // A+(w) must lie in H_n F_n: act the reversed-inverse word on the tuple.
      Word grev = f_->inverse_word(gammas);
      ok = act_->act_tuple(*a, grev).has_value();
    } while (false);
  }
  if (ok) {
    store_cache(w, 2);
  } else {
    store_cache(w, 1);
  }
  return ok;
}

std::optional<ElemId> SemidirectPartialGroup::reduce(std::span<const ElemId> w) const {
  if (w.empty()) return std::nullopt;
  for (ElemId e : w) check_elem(e);
  if (w.size() == 1) return w[0];
  if (auto c = lookup_cache(w); c && *c >= 2 && *c != 2) return *c - 3;
  if (!word_in(w)) return std::nullopt;
  Word gammas(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) gammas[i] = f_of(w[i]);
  auto fr = f_->reduce(gammas);
  auto a = twisted_tuple(w);
  if (!fr || !a) return std::nullopt;
  auto hr = h_->reduce(*a);
  if (!hr) return std::nullopt;
  auto e = find_pair(*fr, *hr);
  if (!e) fail(Errc::ActionDomainError, "reduction left the element set");
  store_cache(w, *e + 3);
  return e;
}

std::optional<ElemId> SemidirectPartialGroup::lookup_cache(std::span<const ElemId> w) const {
  if (!cacheable_ || w.size() > 6) return std::nullopt;
  auto it = cache_.find(pack_word(w));
  if (it == cache_.end()) return std::nullopt;
  return it->second;
}

void SemidirectPartialGroup::store_cache(std::span<const ElemId> w, std::uint32_t value) const {
  if (!cacheable_ || w.size() > 6) return;
  if (cache_.size() > 6'000'000) return;
  auto [it, inserted] = cache_.emplace(pack_word(w), value);
  if (!inserted && value > it->second) it->second = value;  // upgrade word-only entry to reduce entry
}

std::string SemidirectPartialGroup::label(ElemId e) const {
  return f_->label(f_of(e)) + "|x" + h_->label(h_of(e));
}

SemidirectPtr semidirect(PGPtr f, PGPtr h, FActionPtr act) {
  return std::make_shared<SemidirectPartialGroup>(std::move(f), std::move(h), std::move(act));
}

bool is_pg_map(const PartialGroup& from, const PartialGroup& to, const std::vector<ElemId>& phi,
               int depth, std::string* witness) {
  if (phi.size() != from.size()) {
    if (witness) *witness = "map does not cover the source";
    return false;
  }
  if (phi[from.unit()] != to.unit()) {
    if (witness) *witness = "unit is not preserved";
    return false;
  }
  auto levels = enumerate_word_lists(from, depth);
  Word image;
  for (std::size_t li = 0; li < levels.size(); ++li) {
    const auto& level = levels[li];
    for (std::size_t wi = 0; wi < level.size(); ++wi) {
      auto w = level[wi];
      image.resize(w.size());
      for (std::size_t i = 0; i < w.size(); ++i) image[i] = phi[w[i]];
      auto rt = to.reduce(image);
      auto rf = from.reduce(w);
      if (!rt || !rf || phi[*rf] != *rt) {
        if (witness) *witness = word_str(from, w);
        return false;
      }
    }
  }
  return true;
}

InducedMapReport induced_map(const SemidirectPartialGroup& sdp, const PGPtr& p,
                             const std::vector<ElemId>& phi, const std::vector<ElemId>& f_map,
                             int depth) {
  const PartialGroup& f = *sdp.f();
  const PartialGroup& h = *sdp.h();
  const FAction& act = *sdp.action();
  std::string witness;
  if (!is_pg_map(f, *p, phi, depth, &witness))
    fail(Errc::NotAMap, "phi is not a map of partial groups: " + witness);
  if (!is_pg_map(h, *p, f_map, depth, &witness))
    fail(Errc::NotAMap, "f is not a map of partial groups: " + witness);
  // Equivariance of f into the phi-pullback of the adjoint action of p.
  auto padj = action_adjoint(p);
  auto flevels = enumerate_word_lists(f, depth);
  for (const auto& level : flevels) {
    for (std::size_t wi = 0; wi < level.size(); ++wi) {
      auto gs = level[wi];
      Word mapped(gs.size());
      for (std::size_t i = 0; i < gs.size(); ++i) mapped[i] = phi[gs[i]];
      for (ElemId eta = 0; eta < h.size(); ++eta) {
        auto v = act.act1(eta, gs);
        if (!v) continue;
        auto pv = padj->act1(f_map[eta], mapped);
        if (!pv)
          fail(Errc::NotAMap, "f is not equivariant: conjugation word undefined for " +
                                  h.label(eta) + " | " + word_str(f, gs));
        if (*pv != f_map[*v])
          fail(Errc::NotAMap,
               "f is not equivariant at " + h.label(eta) + " | " + word_str(f, gs));
      }
    }
  }

  InducedMapReport report;
  report.depth = depth;
  report.psi.resize(sdp.size());
  for (ElemId e = 0; e < sdp.size(); ++e) {
    auto r = p->reduce2(phi[sdp.f_of(e)], f_map[sdp.h_of(e)]);
    if (!r) {
      report.issues.push_back("psi undefined at " + sdp.label(e));
      report.psi[e] = p->unit();
      continue;
    }
    report.psi[e] = *r;
  }
  if (!report.pass()) return report;
  // Commuting diagrams: psi(gamma |x 1) = phi(gamma), psi(1 |x eta) = f(eta).
  for (ElemId gamma = 0; gamma < f.size(); ++gamma)
    if (auto e = sdp.find_pair(gamma, h.unit()); e && report.psi[*e] != phi[gamma])
      report.issues.push_back("psi . iota != phi at " + f.label(gamma));
  for (ElemId eta = 0; eta < h.size(); ++eta)
    if (auto e = sdp.find_pair(f.unit(), eta); e && report.psi[*e] != f_map[eta])
      report.issues.push_back("psi . h != f at " + h.label(eta));
  // psi is a map of partial groups, to depth.
  auto levels = enumerate_word_lists(sdp, depth);
  Word image;
  for (std::size_t li = 0; li < levels.size() && report.issues.size() < 20; ++li) {
    const auto& level = levels[li];
    for (std::size_t wi = 0; wi < level.size(); ++wi) {
      auto w = level[wi];
      image.resize(w.size());
      for (std::size_t i = 0; i < w.size(); ++i) image[i] = report.psi[w[i]];
      auto rt = p->reduce(image);
      auto rf = sdp.reduce(w);
      if (!rt || !rf || report.psi[*rf] != *rt) {
        report.issues.push_back("psi does not respect the word " + word_str(sdp, w));
        if (report.issues.size() >= 20) break;
      }
    }
  }
  return report;
}

}  // namespace parade
