#include "parade/factor_set.hpp"

#include <algorithm>

#include "parade/charted.hpp"
#include "parade/normalizer.hpp"

namespace parade {

ValidationReport validate_factor_set(const FactorSet& fs, int depth) {
  ValidationReport report;
  report.subject = "factor set over " + fs.h->kind();
  report.depth = depth;
  const PartialGroup& h = *fs.h;
  const std::size_t ng = fs.g.size();
  auto add = [&](const std::string& axiom, const std::string& witness, const std::string& detail) {
    if (report.violations.size() < 100) report.violations.push_back({axiom, witness, detail});
  };
  if (fs.act.size() != h.size() || fs.sigma.size() != ng) {
    add("FS", "-", "malformed act/sigma tables");
    return report;
  }
  for (const auto& row : fs.act)
    if (row.size() != ng) add("FS", "-", "ragged act table");
  for (const auto& row : fs.sigma)
    if (row.size() != ng) add("FS", "-", "ragged sigma table");
  if (!report.violations.empty()) return report;

  // sigma must land in the normalizer of H.
  std::vector<ElemId> nh;
  if (auto charted = dynamic_cast<const ChartedPartialGroup*>(&h))
    nh = normalizer(*charted, depth);
  else
    nh = normalizer_insertion(h, depth);
  std::vector<bool> in_n(h.size(), false);
  for (ElemId e : nh) in_n[e] = true;
  for (std::size_t a = 0; a < ng; ++a)
    for (std::size_t b = 0; b < ng; ++b)
      if (!in_n[fs.sigma[a][b]])
        add("FS-N", "sigma(" + fs.g.label(static_cast<int>(a)) + "," + fs.g.label(static_cast<int>(b)) + ")",
            "value does not normalize H");

  // (FS1)
  for (ElemId eta = 0; eta < h.size(); ++eta)
    if (fs.act[eta][0] != eta) add("FS1", h.label(eta), "eta <- 1 != eta");
  for (std::size_t a = 0; a < ng; ++a) {
    if (fs.sigma[0][a] != h.unit()) add("FS1", fs.g.label(static_cast<int>(a)), "sigma(1,a) != 1");
    if (fs.sigma[a][0] != h.unit()) add("FS1", fs.g.label(static_cast<int>(a)), "sigma(a,1) != 1");
  }
  // (FS2): acting with a fixed group element preserves words and reductions.
  auto levels = enumerate_word_lists(h, depth);
  Word image;
  for (std::size_t li = 0; li < levels.size(); ++li) {
    const auto& level = levels[li];
    for (std::size_t wi = 0; wi < level.size(); ++wi) {
      auto w = level[wi];
      ++report.words_checked;
      for (std::size_t a = 0; a < ng; ++a) {
        image.resize(w.size());
        for (std::size_t i = 0; i < w.size(); ++i) image[i] = fs.act[w[i]][a];
        auto ri = h.reduce(image);
        auto rw = h.reduce(w);
        if (!ri || !rw)
          add("FS2", word_str(h, w), "twist by " + fs.g.label(static_cast<int>(a)) + " leaves the word set");
        else if (fs.act[*rw][a] != *ri)
          add("FS2", word_str(h, w), "twist does not commute with reduction");
      }
    }
  }
  // (FS3): (eta <- a) <- b == (eta <- ab)^{sigma(a,b)}
  for (ElemId eta = 0; eta < h.size(); ++eta)
    for (std::size_t a = 0; a < ng; ++a)
      for (std::size_t b = 0; b < ng; ++b) {
        ElemId lhs = fs.act[fs.act[eta][a]][b];
        ElemId mid = fs.act[eta][static_cast<std::size_t>(fs.g.prod(static_cast<int>(a), static_cast<int>(b)))];
        ElemId s = fs.sigma[a][b];
        Word conj{h.inverse(s), mid, s};
        auto rhs = h.reduce(conj);
        if (!rhs || lhs != *rhs)
          add("FS3", h.label(eta),
              "a=" + fs.g.label(static_cast<int>(a)) + " b=" + fs.g.label(static_cast<int>(b)));
      }
  // (FS4): sigma(a,bc) sigma(b,c) == sigma(ab,c) (sigma(a,b) <- c)
  for (std::size_t a = 0; a < ng; ++a)
    for (std::size_t b = 0; b < ng; ++b)
      for (std::size_t c = 0; c < ng; ++c) {
        int bc = fs.g.prod(static_cast<int>(b), static_cast<int>(c));
        int ab = fs.g.prod(static_cast<int>(a), static_cast<int>(b));
        auto lhs = h.reduce2(fs.sigma[a][static_cast<std::size_t>(bc)], fs.sigma[b][c]);
        auto rhs = h.reduce2(fs.sigma[static_cast<std::size_t>(ab)][c], fs.act[fs.sigma[a][b]][c]);
        if (!lhs || !rhs || *lhs != *rhs)
          add("FS4",
              fs.g.label(static_cast<int>(a)) + "," + fs.g.label(static_cast<int>(b)) + "," +
                  fs.g.label(static_cast<int>(c)),
              "cocycle identity fails");
      }
  return report;
}

FactorSetPartialGroup::FactorSetPartialGroup(FactorSet fs, int depth) : fs_(std::move(fs)) {
  auto report = validate_factor_set(fs_, depth);
  if (!report.pass())
    fail(Errc::InvalidFactorSet, report.violations.front().axiom + " at " +
                                     report.violations.front().witness + " (" +
                                     report.violations.front().detail + ")");
  const PartialGroup& h = *fs_.h;
  inverse_.resize(size());
  for (std::size_t c = 0; c < fs_.g.size(); ++c)
    for (ElemId eta = 0; eta < h.size(); ++eta) {
      int ci = fs_.g.inverse(static_cast<int>(c));
      // (c, eta)^-1 = (c^-1, (eta^-1 <- c^-1) * sigma(c, c^-1)^-1)
      ElemId twisted = fs_.act[h.inverse(eta)][static_cast<std::size_t>(ci)];
      ElemId s = fs_.sigma[c][static_cast<std::size_t>(ci)];
      auto prod = h.reduce2(twisted, h.inverse(s));
      if (!prod) fail(Errc::InvalidFactorSet, "inverse formula leaves the word set");
      inverse_[pair_id(static_cast<int>(c), eta)] = pair_id(ci, *prod);
    }
  for (ElemId e = 0; e < size(); ++e)
    if (inverse_[inverse_[e]] != e) fail(Errc::InvalidFactorSet, "inverse is not involutive");
}

Word FactorSetPartialGroup::twisted_tuple(std::span<const ElemId> w) const {
  const std::size_t n = w.size();
  Word a(n);
  for (std::size_t i = 0; i < n; ++i) {
    ElemId eta = h_of(w[i]);
    for (std::size_t j = i + 1; j < n; ++j) eta = fs_.act[eta][static_cast<std::size_t>(g_of(w[j]))];
    a[i] = eta;
  }
  return a;
}

bool FactorSetPartialGroup::word_in(std::span<const ElemId> w) const {
  if (w.empty()) return false;
  for (ElemId e : w) check_elem(e);
  if (w.size() == 1) return true;
  return fs_.h->word_in(twisted_tuple(w));
}

std::optional<ElemId> FactorSetPartialGroup::reduce(std::span<const ElemId> w) const {
  if (w.empty()) return std::nullopt;
  for (ElemId e : w) check_elem(e);
  if (w.size() == 1) return w[0];
  Word a = twisted_tuple(w);
  if (!fs_.h->word_in(a)) return std::nullopt;
  const std::size_t n = w.size();
  // sigma(c_1,...,c_n) as a single element: the product of sigma(c_i, c_{i+1}...c_n).
  int suffix = 0;  // unit of G
  ElemId sig = fs_.h->unit();
  for (std::size_t i = n - 1; i >= 1; --i) {
    suffix = fs_.g.prod(g_of(w[i]), suffix);
    // prepend sigma(c_i, suffix)
    auto p = fs_.h->reduce2(fs_.sigma[static_cast<std::size_t>(g_of(w[i - 1]))][static_cast<std::size_t>(suffix)], sig);
    if (!p) return std::nullopt;
    sig = *p;
    if (i == 1) break;
  }
  int ctotal = 0;
  for (std::size_t i = 0; i < n; ++i) ctotal = fs_.g.prod(ctotal, g_of(w[i]));
  Word full;
  full.reserve(n + 1);
  full.push_back(sig);
  full.insert(full.end(), a.begin(), a.end());
  auto r = fs_.h->reduce(full);
  if (!r) return std::nullopt;
  return pair_id(ctotal, *r);
}

std::string FactorSetPartialGroup::label(ElemId e) const {
  return "(" + fs_.g.label(g_of(e)) + "," + fs_.h->label(h_of(e)) + ")";
}

std::shared_ptr<const FactorSetPartialGroup> factor_set_product(FactorSet fs, int depth) {
  return std::make_shared<FactorSetPartialGroup>(std::move(fs), depth);
}

}  // namespace parade
