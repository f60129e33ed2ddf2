#pragma once

#include <memory>
#include <vector>

#include "parade/group_table.hpp"
#include "parade/pgroup.hpp"
#include "parade/validate.hpp"

namespace parade {

// Twisting pair (act, sigma) for extending a partial group H by a group G:
// act[eta][c] is eta twisted by c (total), sigma[c][c'] lands in N(H).
struct FactorSet {
  GroupTable g = GroupTable::trivial();
  PGPtr h;
  std::vector<std::vector<ElemId>> act;
  std::vector<std::vector<ElemId>> sigma;
};

// Checks (FS1)-(FS4) to the given depth, plus sigma values normalizing H.
ValidationReport validate_factor_set(const FactorSet& fs, int depth);

class FactorSetPartialGroup final : public PartialGroup {
 public:
  // Validates the factor set first; throws InvalidFactorSet on violations.
  FactorSetPartialGroup(FactorSet fs, int depth);

  std::size_t size() const override { return fs_.g.size() * fs_.h->size(); }
  ElemId unit() const override { return pair_id(0, fs_.h->unit()); }
  ElemId inverse(ElemId e) const override { return inverse_.at(e); }
  bool word_in(std::span<const ElemId> w) const override;
  std::optional<ElemId> reduce(std::span<const ElemId> w) const override;
  std::string label(ElemId e) const override;
  std::string kind() const override { return "factor-set-product"; }

  ElemId pair_id(int c, ElemId eta) const { return static_cast<ElemId>(c) * static_cast<ElemId>(fs_.h->size()) + eta; }
  int g_of(ElemId e) const { return static_cast<int>(e / fs_.h->size()); }
  ElemId h_of(ElemId e) const { return static_cast<ElemId>(e % fs_.h->size()); }
  const FactorSet& factor_set() const { return fs_; }

 private:
  // A(w): the twisted tuple whose membership in H_n defines word membership.
  Word twisted_tuple(std::span<const ElemId> w) const;

  FactorSet fs_;
  std::vector<ElemId> inverse_;
};

std::shared_ptr<const FactorSetPartialGroup> factor_set_product(FactorSet fs, int depth);

}  // namespace parade
