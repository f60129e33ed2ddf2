#pragma once

#include <memory>
#include <unordered_map>
#include <vector>

#include "parade/faction.hpp"
#include "parade/pgroup.hpp"

namespace parade {

// Semidirect product F |x H for an F-partial group H. Elements are the pairs
// gamma |x eta with (eta | gamma^-1) in the single-step action domain; word
// membership runs the twisted-tuple test, reduction pairs the F-reduction
// with the H-reduction of the twisted tuple.
class SemidirectPartialGroup final : public PartialGroup {
 public:
  SemidirectPartialGroup(PGPtr f, PGPtr h, FActionPtr act);

  std::size_t size() const override { return pairs_.size(); }
  ElemId unit() const override { return unit_; }
  ElemId inverse(ElemId e) const override { return inverse_.at(e); }
  bool word_in(std::span<const ElemId> w) const override;
  std::optional<ElemId> reduce(std::span<const ElemId> w) const override;
  std::string label(ElemId e) const override;
  std::string kind() const override { return "semidirect"; }

  const PGPtr& f() const { return f_; }
  const PGPtr& h() const { return h_; }
  const FActionPtr& action() const { return act_; }
  ElemId f_of(ElemId e) const { return pairs_.at(e).first; }
  ElemId h_of(ElemId e) const { return pairs_.at(e).second; }
  std::optional<ElemId> find_pair(ElemId gamma, ElemId eta) const;

 private:
  // A(w): the tuple (act(eta_1 | g_2..g_n), ..., eta_n); nullopt when some
  // action step is missing.
  std::optional<Word> twisted_tuple(std::span<const ElemId> w) const;
  std::optional<ElemId> lookup_cache(std::span<const ElemId> w) const;
  void store_cache(std::span<const ElemId> w, std::uint32_t value) const;

  PGPtr f_;
  PGPtr h_;
  FActionPtr act_;
  std::vector<std::pair<ElemId, ElemId>> pairs_;
  std::vector<std::int32_t> pair_index_;  // gamma * |H| + eta -> element or -1
  std::vector<ElemId> inverse_;
  ElemId unit_ = 0;
  mutable std::unordered_map<std::uint64_t, std::uint32_t> cache_;
  bool cacheable_ = false;
  // Fast path for table-backed actions: single-step chains without re-checking
  // the F-word on every suffix (P1 makes the suffixes words).
  const TableFAction* table_act_ = nullptr;
};

using SemidirectPtr = std::shared_ptr<const SemidirectPartialGroup>;

SemidirectPtr semidirect(PGPtr f, PGPtr h, FActionPtr act);

struct InducedMapReport {
  std::vector<ElemId> psi;  // semidirect element -> target element
  int depth = 0;
  std::vector<std::string> issues;  // empty = all commuting/homomorphism checks pass

  bool pass() const { return issues.empty(); }
};

// The map psi(gamma |x eta) = reduce(phi(gamma), f_map(eta)) into p, with the
// preconditions (phi a map of partial groups, f_map equivariant into the
// phi-pullback of the adjoint action) checked to depth; NotAMap on failure.
// The report then records the commuting-diagram and homomorphism checks.
InducedMapReport induced_map(const SemidirectPartialGroup& sdp, const PGPtr& p,
                             const std::vector<ElemId>& phi, const std::vector<ElemId>& f_map,
                             int depth);

// Checks that phi is a map of partial groups (words and reductions) to depth.
bool is_pg_map(const PartialGroup& from, const PartialGroup& to, const std::vector<ElemId>& phi,
               int depth, std::string* witness = nullptr);

}  // namespace parade
