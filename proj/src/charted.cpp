#include "parade/charted.hpp"

#include <algorithm>
#include <array>

namespace parade {

std::size_t PartialGroup::order_of(ElemId e) const {
  ElemId acc = e;
  for (std::size_t k = 1; k <= size() + 1; ++k) {
    if (acc == unit()) return k;
    auto next = reduce2(acc, e);
    if (!next) return 0;
    acc = *next;
  }
  return 0;
}

std::vector<WordList> enumerate_word_lists(const PartialGroup& pg, int max_len) {
  std::vector<WordList> levels;
  if (max_len < 1) return levels;
  WordList first(1);
  for (ElemId e = 0; e < pg.size(); ++e) {
    const ElemId w[1] = {e};
    first.push(w);
  }
  levels.push_back(std::move(first));
  Word buf;
  for (int n = 2; n <= max_len; ++n) {
    WordList next(static_cast<std::size_t>(n));
    const WordList& prev = levels.back();
    buf.assign(static_cast<std::size_t>(n), 0);
    for (std::size_t i = 0; i < prev.size(); ++i) {
      auto base = prev[i];
      std::copy(base.begin(), base.end(), buf.begin());
      for (ElemId e = 0; e < pg.size(); ++e) {
        buf.back() = e;
        if (pg.word_in(buf)) next.push(buf);
      }
    }
    levels.push_back(std::move(next));
  }
  return levels;
}

std::vector<std::vector<Word>> enumerate_words(const PartialGroup& pg, int max_len) {
  std::vector<std::vector<Word>> out;
  for (const auto& level : enumerate_word_lists(pg, max_len)) {
    std::vector<Word> v;
    v.reserve(level.size());
    for (std::size_t i = 0; i < level.size(); ++i) {
      auto w = level[i];
      v.emplace_back(w.begin(), w.end());
    }
    out.push_back(std::move(v));
  }
  return out;
}

ChartedPartialGroup::ChartedPartialGroup(Builder b)
    : kind_(std::move(b.kind)),
      labels_(std::move(b.labels)),
      inverse_(std::move(b.inverse)),
      unit_(b.unit),
      charts_(std::move(b.charts)),
      dest_(std::move(b.dest)),
      ambient_sims_(std::move(b.ambient_sims)),
      ambient_group_(std::move(b.ambient_group)),
      ambient_ids_(std::move(b.ambient_ids)) {
  const std::size_t n = labels_.size();
  prod_.assign(n * n, -1);
  for (const auto& t : b.products) prod_[t[0] * n + t[1]] = static_cast<std::int32_t>(t[2]);
  src_mask_.assign(n, 0);
  if (charts_.size() <= 64)
    for (std::size_t e = 0; e < n; ++e)
      for (std::size_t x = 0; x < charts_.size(); ++x)
        if (dest_[e][x] >= 0) src_mask_[e] |= (1ull << x);
  check_consistency();
}

void ChartedPartialGroup::check_consistency() const {
  const std::size_t n = labels_.size();
  if (n == 0 || charts_.empty()) fail(Errc::InvalidArgument, "charted realization needs elements and charts");
  if (inverse_.size() != n || dest_.size() != n) fail(Errc::InvalidArgument, "malformed charted tables");
  if (unit_ >= n) fail(Errc::InvalidArgument, "unit out of range");
  for (std::size_t e = 0; e < n; ++e) {
    if (inverse_[e] >= n || inverse_[inverse_[e]] != e)
      fail(Errc::InvalidArgument, "inverse map is not involutive");
    if (dest_[e].size() != charts_.size()) fail(Errc::InvalidArgument, "malformed support row");
    std::vector<bool> hit(charts_.size(), false);
    for (std::size_t x = 0; x < charts_.size(); ++x) {
      auto y = dest_[e][x];
      if (y < -1 || y >= static_cast<std::int32_t>(charts_.size()))
        fail(Errc::InvalidArgument, "support target out of range");
      if (y >= 0) {
        if (hit[static_cast<std::size_t>(y)])
          fail(Errc::InvalidArgument, "support of element '" + labels_[e] + "' is not injective");
        hit[static_cast<std::size_t>(y)] = true;
        // support of the inverse is the transpose
        if (dest_[inverse_[e]][static_cast<std::size_t>(y)] != static_cast<std::int32_t>(x))
          fail(Errc::InvalidArgument, "inverse support is not the transpose for '" + labels_[e] + "'");
      }
    }
  }
  for (std::size_t x = 0; x < charts_.size(); ++x)
    if (dest_[unit_][x] != static_cast<std::int32_t>(x))
      fail(Errc::InvalidArgument, "unit must fix every chart");
  for (std::size_t e = 0; e < n; ++e)
    if (support_degree(static_cast<ElemId>(e)) == 0)
      fail(Errc::InvalidArgument, "element '" + labels_[e] + "' has empty support");
  // Products must exist exactly on support-chained pairs and respect supports.
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      bool chained = false;
      for (std::size_t x = 0; x < charts_.size() && !chained; ++x) {
        auto y = dest_[a][x];
        if (y >= 0 && dest_[b][static_cast<std::size_t>(y)] >= 0) chained = true;
      }
      auto p = prod_[a * n + b];
      if (chained && p < 0)
        fail(Errc::InvalidArgument, "missing product for a support-chained pair");
      if (!chained && p >= 0) fail(Errc::InvalidArgument, "product entry for a non-chained pair");
      if (p >= 0) {
        for (std::size_t x = 0; x < charts_.size(); ++x) {
          auto y = dest_[a][x];
          if (y < 0) continue;
          auto z = dest_[b][static_cast<std::size_t>(y)];
          if (z < 0) continue;
          if (dest_[static_cast<std::size_t>(p)][x] != z)
            fail(Errc::InvalidArgument, "product support disagrees with the chain");
        }
      }
    }
  if (!ambient_sims_.empty() && ambient_sims_.size() != n)
    fail(Errc::InvalidArgument, "ambient similarity list size mismatch");
  if (ambient_group_ && ambient_ids_.size() != n)
    fail(Errc::InvalidArgument, "ambient group id list size mismatch");
}

std::uint64_t ChartedPartialGroup::start_mask(std::span<const ElemId> w) const {
  std::uint64_t mask = (charts_.size() >= 64) ? ~0ull : ((1ull << charts_.size()) - 1);
  for (ElemId e : w) {
    std::uint64_t next = 0;
    std::uint64_t cur = mask;
    while (cur) {
      std::size_t x = static_cast<std::size_t>(__builtin_ctzll(cur));
      cur &= cur - 1;
      auto y = dest_[e][x];
      if (y >= 0) next |= (1ull << y);
    }
    mask = next;
    if (!mask) break;
  }
  return mask;
}

bool ChartedPartialGroup::word_in(std::span<const ElemId> w) const {
  if (w.empty()) return false;
  for (ElemId e : w) check_elem(e);
  if (charts_.size() <= 64) return start_mask(w) != 0;
  std::vector<bool> cur(charts_.size(), true);
  for (ElemId e : w) {
    std::vector<bool> next(charts_.size(), false);
    bool any = false;
    for (std::size_t x = 0; x < charts_.size(); ++x)
      if (cur[x] && dest_[e][x] >= 0) {
        next[static_cast<std::size_t>(dest_[e][x])] = true;
        any = true;
      }
    cur = std::move(next);
    if (!any) return false;
  }
  return true;
}

std::optional<ElemId> ChartedPartialGroup::reduce(std::span<const ElemId> w) const {
  if (!word_in(w)) return std::nullopt;
  ElemId acc = w[0];
  for (std::size_t i = 1; i < w.size(); ++i) {
    auto p = prod_[acc * size() + w[i]];
    if (p < 0) fail(Errc::NotAWord, "product chain broke inside a word");
    acc = static_cast<ElemId>(p);
  }
  return acc;
}

std::size_t ChartedPartialGroup::support_degree(ElemId e) const {
  std::size_t c = 0;
  for (std::size_t x = 0; x < charts_.size(); ++x)
    if (dest_[e][x] >= 0) ++c;
  return c;
}

bool ChartedPartialGroup::chart_total(ElemId e) const { return support_degree(e) == charts_.size(); }

std::optional<ElemId> ChartedPartialGroup::find_ambient_sim(const Similarity& g) const {
  for (std::size_t e = 0; e < ambient_sims_.size(); ++e)
    if (ambient_sims_[e] == g) return static_cast<ElemId>(e);
  return std::nullopt;
}

ChartedPtr charted_from_group(const GroupTable& g) {
  ChartedPartialGroup::Builder b;
  b.kind = "group:" + g.name();
  const std::size_t n = g.size();
  for (std::size_t i = 0; i < n; ++i) {
    b.labels.push_back(g.label(static_cast<int>(i)));
    b.inverse.push_back(static_cast<ElemId>(g.inverse(static_cast<int>(i))));
  }
  b.unit = 0;
  b.charts = {"*"};
  b.dest.assign(n, {0});
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t c = 0; c < n; ++c)
      b.products.push_back({static_cast<ElemId>(a), static_cast<ElemId>(c),
                            static_cast<ElemId>(g.prod(static_cast<int>(a), static_cast<int>(c)))});
  b.ambient_group = std::make_shared<GroupTable>(g);
  b.ambient_ids.resize(n);
  for (std::size_t i = 0; i < n; ++i) b.ambient_ids[i] = static_cast<int>(i);
  return std::make_shared<ChartedPartialGroup>(std::move(b));
}

}  // namespace parade
