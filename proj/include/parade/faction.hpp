#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "parade/charted.hpp"
#include "parade/constructions.hpp"
#include "parade/group_table.hpp"
#include "parade/pgroup.hpp"
#include "parade/pset.hpp"
#include "parade/validate.hpp"

namespace parade {

// Action of a partial group F on a partial group H. Table-backed actions hold
// single-step data and derive everything by chaining; the adjoint action
// overrides the membership tests with conjugation-word tests.
class FAction {
 public:
  virtual ~FAction() = default;

  const PGPtr& actor() const { return f_; }
  const PGPtr& target() const { return h_; }

  // (eta | gammas) membership and value; nullopt when undefined.
  virtual std::optional<ElemId> act1(ElemId eta, std::span<const ElemId> gammas) const = 0;
  // (eta_1..eta_r | gammas) membership and componentwise value.
  virtual std::optional<Word> act_tuple(std::span<const ElemId> etas,
                                        std::span<const ElemId> gammas) const;
  virtual std::string kind() const = 0;

 protected:
  FAction(PGPtr f, PGPtr h) : f_(std::move(f)), h_(std::move(h)) {}
  PGPtr f_;
  PGPtr h_;
};

using FActionPtr = std::shared_ptr<const FAction>;

class TableFAction final : public FAction {
 public:
  // step[eta][gamma] = result element or -1.
  TableFAction(PGPtr f, PGPtr h, std::vector<std::vector<std::int32_t>> step, std::string kind);

  std::optional<ElemId> act1(ElemId eta, std::span<const ElemId> gammas) const override;
  std::string kind() const override { return kind_; }
  std::int32_t step(ElemId eta, ElemId gamma) const { return step_[eta][gamma]; }

 private:
  std::vector<std::vector<std::int32_t>> step_;
  std::string kind_;
};

// Conjugation action of P on itself; memberships use the full rho-word test.
class AdjointFAction final : public FAction {
 public:
  explicit AdjointFAction(PGPtr p) : FAction(p, p) {}

  std::optional<ElemId> act1(ElemId eta, std::span<const ElemId> gammas) const override;
  std::optional<Word> act_tuple(std::span<const ElemId> etas,
                                std::span<const ElemId> gammas) const override;
  std::string kind() const override { return "adjoint(" + h_->kind() + ")"; }
};

// Action of F obtained from an action of H' along a partial-group map phi.
class PullbackFAction final : public FAction {
 public:
  PullbackFAction(PGPtr f, FActionPtr base, std::vector<ElemId> phi);

  std::optional<ElemId> act1(ElemId eta, std::span<const ElemId> gammas) const override;
  std::optional<Word> act_tuple(std::span<const ElemId> etas,
                                std::span<const ElemId> gammas) const override;
  std::string kind() const override { return "pullback(" + base_->kind() + ")"; }

 private:
  Word map_word(std::span<const ElemId> gammas) const;
  FActionPtr base_;
  std::vector<ElemId> phi_;
};

FActionPtr action_adjoint(PGPtr p);

// Grazian-Henke type: psi maps each F element to an automorphism of H, given
// as a permutation of H element ids. Checked to depth; NotAMap on failure.
FActionPtr action_grazian_henke(PGPtr f, PGPtr h, const std::vector<std::vector<ElemId>>& psi,
                                int depth);

// The wedge of copies of G indexed by the points of a friendly F-set.
struct WedgeActionData {
  ChartedPtr h;              // the wedge, one summand per point of X
  FActionPtr action;         // single-step: [x, a] | gamma -> [x.gamma, a]
  WedgeIndex index;          // origin/embedding bookkeeping (summand = point)
};
WedgeActionData action_wedge_over_fset(const GroupTable& g, PGPtr f, const PSet& x, int depth);

// Two-component conjugation action of V({0,1}) on a union G0 u G1 (charts 0/1
// in that order), where gamma carries chart 0 to chart 1 in the ambient.
FActionPtr action_two_component(PGPtr v01, ElemId step_up, ElemId step_down, ChartedPtr h,
                                const Similarity& gamma);

// (AP1)-(AP6) plus the componentwise/inverse identities, to the given depth.
ValidationReport validate_faction(const FAction& act, int depth);

}  // namespace parade
