#pragma once

#include <memory>
#include <unordered_map>
#include <utility>
#include <vector>

#include "parade/pgroup.hpp"

namespace parade {

// Quotient by the congruence generated by the given element pairs. The
// relation is closed under symmetry/transitivity and under inverses, then
// compatibility with reduction is verified on every word of length <= depth;
// a violation raises NotACongruence with the witnessing words.
class QuotientPartialGroup final : public PartialGroup {
 public:
  QuotientPartialGroup(PGPtr base, const std::vector<std::pair<ElemId, ElemId>>& pairs, int depth);

  std::size_t size() const override { return members_.size(); }
  ElemId unit() const override { return unit_; }
  ElemId inverse(ElemId e) const override { return inverse_.at(e); }
  bool word_in(std::span<const ElemId> w) const override;
  std::optional<ElemId> reduce(std::span<const ElemId> w) const override;
  std::string label(ElemId e) const override;
  std::string kind() const override { return "quotient(" + base_->kind() + ")"; }

  const PGPtr& base() const { return base_; }
  ElemId class_of(ElemId base_elem) const { return class_of_.at(base_elem); }
  const std::vector<ElemId>& members(ElemId cls) const { return members_.at(cls); }

 private:
  // Finds representatives (r_1..r_n) of the class word forming a base word.
  bool find_witness(std::span<const ElemId> w, Word& witness) const;
  std::optional<ElemId> lookup_cache(std::span<const ElemId> w) const;
  void store_cache(std::span<const ElemId> w, ElemId value) const;

  PGPtr base_;
  std::vector<ElemId> class_of_;
  std::vector<std::vector<ElemId>> members_;
  std::vector<ElemId> inverse_;
  ElemId unit_ = 0;
  // reduce cache for short words; value+2 stored, 1 = "not a word".
  mutable std::unordered_map<std::uint64_t, std::uint32_t> cache_;
  bool cacheable_ = false;
};

std::shared_ptr<const QuotientPartialGroup> quotient(
    PGPtr base, const std::vector<std::pair<ElemId, ElemId>>& pairs, int depth);

}  // namespace parade
