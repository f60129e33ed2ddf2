#include "parade/pset.hpp"

#include <limits>

namespace parade {

namespace {
constexpr ElemId kNone = std::numeric_limits<ElemId>::max();
}

PSet::PSet(PGPtr pg, std::vector<std::string> points, std::vector<std::vector<std::int32_t>> step)
    : pg_(std::move(pg)), points_(std::move(points)), step_(std::move(step)) {
  if (points_.empty()) fail(Errc::InvalidAction, "a P-set needs at least one point");
  if (step_.size() != pg_->size()) fail(Errc::InvalidAction, "step table must cover every element");
  for (const auto& row : step_) {
    if (row.size() != points_.size()) fail(Errc::InvalidAction, "ragged step table");
    for (auto v : row)
      if (v < -1 || v >= static_cast<std::int32_t>(points_.size()))
        fail(Errc::InvalidAction, "step target out of range");
  }
}

bool PSet::defined(std::size_t x, std::span<const ElemId> w) const {
  return apply(x, w).has_value();
}

std::optional<std::size_t> PSet::apply(std::size_t x, std::span<const ElemId> w) const {
  if (!pg_->word_in(w)) return std::nullopt;
  std::int32_t cur = static_cast<std::int32_t>(x);
  for (ElemId e : w) {
    cur = step_[e][static_cast<std::size_t>(cur)];
    if (cur < 0) return std::nullopt;
  }
  return static_cast<std::size_t>(cur);
}

bool PSet::has_start(std::span<const ElemId> w) const {
  for (std::size_t x = 0; x < points_.size(); ++x)
    if (defined(x, w)) return true;
  return false;
}

PSet chart_pset(const ChartedPtr& pg) {
  std::vector<std::vector<std::int32_t>> step;
  step.reserve(pg->size());
  for (ElemId e = 0; e < pg->size(); ++e) step.push_back(pg->dest_row(e));
  return PSet(pg, pg->charts(), std::move(step));
}

FriendlyPartGroup::FriendlyPartGroup(PGPtr base, PSet ps) : base_(std::move(base)), ps_(std::move(ps)) {
  if (&ps_.pg() != base_.get())
    fail(Errc::InvalidAction, "friendly part needs the P-set of the same realization");
  from_base_.assign(base_->size(), kNone);
  for (ElemId e = 0; e < base_->size(); ++e) {
    Word w{e};
    if (ps_.has_start(w)) {
      from_base_[e] = static_cast<ElemId>(elems_.size());
      elems_.push_back(e);
    }
  }
  if (from_base_[base_->unit()] == kNone)
    fail(Errc::InvalidAction, "unit admits no starting point; not a valid P-set");
  for (ElemId e : elems_)
    if (from_base_[base_->inverse(e)] == kNone)
      fail(Errc::InvalidAction, "friendly part is not closed under inverses");
}

Word FriendlyPartGroup::to_base(std::span<const ElemId> w) const {
  Word out(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) out[i] = elems_.at(w[i]);
  return out;
}

bool FriendlyPartGroup::word_in(std::span<const ElemId> w) const {
  if (w.empty()) return false;
  Word bw = to_base(w);
  return base_->word_in(bw) && ps_.has_start(bw);
}

std::optional<ElemId> FriendlyPartGroup::reduce(std::span<const ElemId> w) const {
  if (!word_in(w)) return std::nullopt;
  Word bw = to_base(w);
  auto r = base_->reduce(bw);
  if (!r) return std::nullopt;
  ElemId local = from_base_.at(*r);
  if (local == kNone)
    fail(Errc::InvalidAction, "reduction left the friendly part; base P-set violates (A3)");
  return local;
}

std::shared_ptr<const FriendlyPartGroup> friendly_part(PGPtr pg, PSet ps) {
  return std::make_shared<FriendlyPartGroup>(std::move(pg), std::move(ps));
}

bool is_friendly(const PartialGroup& pg, const PSet& ps, int depth) {
  auto levels = enumerate_word_lists(pg, depth);
  for (const auto& level : levels)
    for (std::size_t i = 0; i < level.size(); ++i)
      if (!ps.has_start(level[i])) return false;
  return true;
}

}  // namespace parade
