#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "parade/geometry.hpp"
#include "parade/group_table.hpp"
#include "parade/pgroup.hpp"

namespace parade {

// Charted realization: elements carry a partial injection on a finite chart
// set (support triples (x, e, y) meaning chart x is carried to chart y), and a
// word is exactly a sequence admitting a chart chain. The product table is
// defined on support-chained pairs.
class ChartedPartialGroup final : public PartialGroup {
 public:
  struct Builder {
    std::string kind = "charted";
    std::vector<std::string> labels;
    std::vector<ElemId> inverse;
    ElemId unit = 0;
    std::vector<std::string> charts;
    // dest[e][x] = target chart index, or -1 when e does not carry chart x.
    std::vector<std::vector<std::int32_t>> dest;
    // Explicit products; pairs not listed are computed as non-composable.
    std::vector<std::array<ElemId, 3>> products;
    // Optional ambient data (one of the two, or neither).
    std::vector<Similarity> ambient_sims;            // size == labels.size() when used
    std::shared_ptr<const GroupTable> ambient_group;  // with ambient_ids
    std::vector<int> ambient_ids;
  };

  explicit ChartedPartialGroup(Builder b);

  std::size_t size() const override { return labels_.size(); }
  ElemId unit() const override { return unit_; }
  ElemId inverse(ElemId e) const override { return inverse_.at(e); }
  bool word_in(std::span<const ElemId> w) const override;
  std::optional<ElemId> reduce(std::span<const ElemId> w) const override;
  std::string label(ElemId e) const override { return labels_.at(e); }
  std::string kind() const override { return kind_; }

  std::size_t chart_count() const { return charts_.size(); }
  const std::string& chart_name(std::size_t x) const { return charts_.at(x); }
  const std::vector<std::string>& charts() const { return charts_; }
  std::int32_t dest_chart(ElemId e, std::size_t x) const { return dest_[e][x]; }
  const std::vector<std::int32_t>& dest_row(ElemId e) const { return dest_[e]; }
  std::size_t support_degree(ElemId e) const;
  bool chart_total(ElemId e) const;

  std::int32_t product(ElemId a, ElemId b) const { return prod_[a * size() + b]; }

  bool has_ambient_sims() const { return !ambient_sims_.empty(); }
  const Similarity& ambient_sim(ElemId e) const { return ambient_sims_.at(e); }
  const std::vector<Similarity>& ambient_sims() const { return ambient_sims_; }
  bool has_ambient_group() const { return ambient_group_ != nullptr; }
  const GroupTable& ambient_group() const { return *ambient_group_; }
  int ambient_id(ElemId e) const { return ambient_ids_.at(e); }

  std::optional<ElemId> find_ambient_sim(const Similarity& g) const;

  // Chart sets as bitmasks when chart_count() <= 64.
  std::uint64_t start_mask(std::span<const ElemId> w) const;

 private:
  void check_consistency() const;

  std::string kind_;
  std::vector<std::string> labels_;
  std::vector<ElemId> inverse_;
  ElemId unit_;
  std::vector<std::string> charts_;
  std::vector<std::vector<std::int32_t>> dest_;
  std::vector<std::int32_t> prod_;  // dense size*size, -1 = non-composable
  std::vector<std::uint64_t> src_mask_;  // charts carried by e (<=64 charts)
  std::vector<Similarity> ambient_sims_;
  std::shared_ptr<const GroupTable> ambient_group_;
  std::vector<int> ambient_ids_;
};

using ChartedPtr = std::shared_ptr<const ChartedPartialGroup>;

// A finite group viewed as a partial group: one chart, all words defined.
ChartedPtr charted_from_group(const GroupTable& g);

}  // namespace parade
