#include "parade/validate.hpp"

#include <sstream>

namespace parade {

namespace {
constexpr std::size_t kMaxPerAxiom = 20;
}

std::string word_str(const PartialGroup& pg, std::span<const ElemId> w) {
  std::string s = "(";
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += ", ";
    s += pg.label(w[i]);
  }
  return s + ")";
}

std::string ValidationReport::text() const {
  std::ostringstream os;
  os << subject << ": " << (pass() ? "pass" : "FAIL") << " (depth " << depth << ", "
     << words_checked << " words checked)";
  for (const auto& v : violations)
    os << "\n  [" << v.axiom << "] " << v.witness << (v.detail.empty() ? "" : " -- " + v.detail);
  return os.str();
}

namespace {

class Reporter {
 public:
  Reporter(ValidationReport& r, const PartialGroup& pg) : r_(r), pg_(pg) {}

  void add(const std::string& axiom, std::span<const ElemId> witness, const std::string& detail) {
    std::size_t count = 0;
    for (const auto& v : r_.violations) count += v.axiom == axiom;
    if (count >= kMaxPerAxiom) return;
    r_.violations.push_back({axiom, word_str(pg_, witness), detail});
  }

 private:
  ValidationReport& r_;
  const PartialGroup& pg_;
};

}  // namespace

ValidationReport validate_axioms(const PartialGroup& pg, int depth) {
  if (depth < 2) fail(Errc::InvalidArgument, "validation depth must be >= 2");
  ValidationReport report;
  report.subject = pg.kind();
  report.depth = depth;
  Reporter out(report, pg);

  const ElemId one = pg.unit();
  // Unit and inverse sanity, (P4), (P6).
  for (ElemId e = 0; e < pg.size(); ++e) {
    Word w{e};
    if (!pg.word_in(w)) out.add("P1", w, "length-1 word rejected");
    if (pg.inverse(pg.inverse(e)) != e) out.add("P6", w, "inverse is not involutive");
    Word le{one, e}, re{e, one};
    auto l = pg.reduce(le), r = pg.reduce(re);
    if (!l || *l != e) out.add("P4", le, "unit is not left-neutral");
    if (!r || *r != e) out.add("P4", re, "unit is not right-neutral");
    Word pi{e, pg.inverse(e)}, ip{pg.inverse(e), e};
    auto a = pg.reduce(pi), b = pg.reduce(ip);
    if (!a || *a != one) out.add("P6", pi, "pi * pi^-1 does not reduce to 1");
    if (!b || *b != one) out.add("P6", ip, "pi^-1 * pi does not reduce to 1");
  }

  auto levels = enumerate_word_lists(pg, depth);
  Word contracted, padded, both;
  for (std::size_t li = 0; li < levels.size(); ++li) {
    const std::size_t n = li + 1;
    for (std::size_t wi = 0; wi < levels[li].size(); ++wi) {
      auto w = levels[li][wi];
      ++report.words_checked;
      if (n >= 2) {
        // (P1): both faces d_0 and d_n stay words.
        if (!pg.word_in(w.subspan(1))) out.add("P1", w, "suffix is not a word");
        if (!pg.word_in(w.first(n - 1))) out.add("P1", w, "prefix is not a word");
      }
      auto total = pg.reduce(w);
      if (!total) {
        out.add("P2", w, "word has no reduction");
        continue;
      }
      // (P2): contracting any contiguous block preserves membership and reduce.
      for (std::size_t p = 0; p + 2 <= n; ++p)
        for (std::size_t q = 2; p + q <= n; ++q) {
          auto inner = pg.reduce(w.subspan(p, q));
          if (!inner) {
            out.add("P1", w, "inner block is not a word");
            continue;
          }
          contracted.assign(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(p));
          contracted.push_back(*inner);
          contracted.insert(contracted.end(), w.begin() + static_cast<std::ptrdiff_t>(p + q), w.end());
          auto red = pg.reduce(contracted);
          if (!red)
            out.add("P2", w, "contracted word is not a word");
          else if (*red != *total)
            out.add("P2", w, "contraction changes the reduction");
        }
      // (P3): inserting the unit anywhere preserves membership and reduce.
      for (std::size_t j = 0; j <= n; ++j) {
        padded.assign(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(j));
        padded.push_back(one);
        padded.insert(padded.end(), w.begin() + static_cast<std::ptrdiff_t>(j), w.end());
        auto red = pg.reduce(padded);
        if (!red)
          out.add("P3", w, "unit insertion leaves the word set");
        else if (*red != *total)
          out.add("P3", w, "unit insertion changes the reduction");
      }
      // (P5): w x w^-1 and w^-1 x w are words.
      Word winv = pg.inverse_word(w);
      both.assign(w.begin(), w.end());
      both.insert(both.end(), winv.begin(), winv.end());
      if (!pg.word_in(both)) out.add("P5", w, "w x w^-1 is not a word");
      both.assign(winv.begin(), winv.end());
      both.insert(both.end(), w.begin(), w.end());
      if (!pg.word_in(both)) out.add("P5", w, "w^-1 x w is not a word");
      // Anti-homomorphism of inversion on pairs.
      if (n == 2) {
        auto rhs = pg.reduce(winv);
        if (rhs && pg.inverse(*total) != *rhs)
          out.add("P6", w, "reduce(w)^-1 != reduce(reversed inverses)");
      }
    }
  }
  return report;
}

ValidationReport validate_pset(const PSet& ps, int depth) {
  if (depth < 1) fail(Errc::InvalidArgument, "validation depth must be >= 1");
  const PartialGroup& pg = ps.pg();
  ValidationReport report;
  report.subject = "P-set over " + pg.kind();
  report.depth = depth;
  Reporter out(report, pg);

  const ElemId one = pg.unit();
  for (std::size_t x = 0; x < ps.point_count(); ++x) {
    Word w{one};
    auto y = ps.apply(x, w);
    if (!y || *y != x) out.add("A5", w, "unit moves point " + ps.point_name(x));
  }

  auto levels = enumerate_word_lists(pg, depth);
  Word contracted, padded, both;
  for (std::size_t li = 0; li < levels.size(); ++li) {
    const std::size_t n = li + 1;
    for (std::size_t wi = 0; wi < levels[li].size(); ++wi) {
      auto w = levels[li][wi];
      for (std::size_t x = 0; x < ps.point_count(); ++x) {
        auto end = ps.apply(x, w);
        if (!end) continue;
        ++report.words_checked;
        // (A1): dropping the last letter keeps membership.
        if (n >= 2 && !ps.defined(x, w.first(n - 1)))
          out.add("A1", w, "prefix action undefined at " + ps.point_name(x));
        // (A2): act in two stages.
        for (std::size_t p = 1; p < n; ++p) {
          auto mid = ps.apply(x, w.first(p));
          if (!mid) {
            out.add("A2", w, "first stage undefined at " + ps.point_name(x));
            continue;
          }
          auto rest = ps.apply(*mid, w.subspan(p));
          if (!rest || *rest != *end) out.add("A2", w, "staged action disagrees at " + ps.point_name(x));
        }
        // (A3): contract any contiguous block through reduce.
        for (std::size_t p = 0; p + 1 <= n; ++p)
          for (std::size_t q = 1; p + q <= n; ++q) {
            auto inner = pg.reduce(w.subspan(p, q));
            if (!inner) continue;
            contracted.assign(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(p));
            contracted.push_back(*inner);
            contracted.insert(contracted.end(), w.begin() + static_cast<std::ptrdiff_t>(p + q), w.end());
            auto z = ps.apply(x, contracted);
            if (!z)
              out.add("A3", w, "contracted action undefined at " + ps.point_name(x));
            else if (*z != *end)
              out.add("A3", w, "contracted action disagrees at " + ps.point_name(x));
          }
        // (A4): insert the unit anywhere.
        for (std::size_t j = 0; j <= n; ++j) {
          padded.assign(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(j));
          padded.push_back(one);
          padded.insert(padded.end(), w.begin() + static_cast<std::ptrdiff_t>(j), w.end());
          auto z = ps.apply(x, padded);
          if (!z || *z != *end) out.add("A4", w, "unit insertion breaks the action at " + ps.point_name(x));
        }
        // (A6): (x | w x w^-1) is defined and returns to x.
        Word winv = pg.inverse_word(w);
        both.assign(w.begin(), w.end());
        both.insert(both.end(), winv.begin(), winv.end());
        auto z = ps.apply(x, both);
        if (!z || *z != x) out.add("A6", w, "w x w^-1 does not return to " + ps.point_name(x));
      }
    }
  }
  return report;
}

}  // namespace parade
