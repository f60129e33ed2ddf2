#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "parade/charted.hpp"
#include "parade/pgroup.hpp"

namespace parade {

// Right P-set given by single-step data: step(e, x) is the point x.e when the
// action is defined there. Word actions are derived by chaining; membership
// (x | w) additionally requires w to be a word of the acting partial group.
class PSet {
 public:
  PSet(PGPtr pg, std::vector<std::string> points, std::vector<std::vector<std::int32_t>> step);

  const PartialGroup& pg() const { return *pg_; }
  const PGPtr& pg_ptr() const { return pg_; }
  std::size_t point_count() const { return points_.size(); }
  const std::string& point_name(std::size_t x) const { return points_.at(x); }
  std::int32_t step(ElemId e, std::size_t x) const { return step_[e][x]; }

  bool defined(std::size_t x, std::span<const ElemId> w) const;
  std::optional<std::size_t> apply(std::size_t x, std::span<const ElemId> w) const;
  bool has_start(std::span<const ElemId> w) const;

 private:
  PGPtr pg_;
  std::vector<std::string> points_;
  std::vector<std::vector<std::int32_t>> step_;
};

// The chart P-set of a charted realization (the action that makes the charts a
// friendly P-set for every parade-style construction).
PSet chart_pset(const ChartedPtr& pg);

// Sub-partial-group of the words admitting a starting point in the P-set.
class FriendlyPartGroup final : public PartialGroup {
 public:
  FriendlyPartGroup(PGPtr base, PSet ps);

  std::size_t size() const override { return elems_.size(); }
  ElemId unit() const override { return from_base_.at(base_->unit()); }
  ElemId inverse(ElemId e) const override { return from_base_.at(base_->inverse(elems_.at(e))); }
  bool word_in(std::span<const ElemId> w) const override;
  std::optional<ElemId> reduce(std::span<const ElemId> w) const override;
  std::string label(ElemId e) const override { return base_->label(elems_.at(e)); }
  std::string kind() const override { return "friendly-part(" + base_->kind() + ")"; }

  ElemId base_id(ElemId e) const { return elems_.at(e); }
  const PGPtr& base() const { return base_; }

 private:
  Word to_base(std::span<const ElemId> w) const;

  PGPtr base_;
  PSet ps_;
  std::vector<ElemId> elems_;
  std::vector<ElemId> from_base_;  // base id -> local id (or npos)
};

std::shared_ptr<const FriendlyPartGroup> friendly_part(PGPtr pg, PSet ps);
// Every word of length <= depth admits a starting point.
bool is_friendly(const PartialGroup& pg, const PSet& ps, int depth = 4);

}  // namespace parade
