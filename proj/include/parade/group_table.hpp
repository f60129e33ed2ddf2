#pragma once

#include <optional>
#include <string>
#include <vector>

#include "parade/error.hpp"

namespace parade {

// Plain finite group given by its multiplication table. Element 0 is the unit.
class GroupTable {
 public:
  GroupTable(std::string name, std::vector<std::string> labels, std::vector<std::vector<int>> prod);

  const std::string& name() const { return name_; }
  std::size_t size() const { return labels_.size(); }
  int unit() const { return 0; }
  int prod(int a, int b) const { return prod_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]; }
  int inverse(int a) const { return inv_[static_cast<std::size_t>(a)]; }
  const std::string& label(int a) const { return labels_[static_cast<std::size_t>(a)]; }
  const std::vector<std::vector<int>>& table() const { return prod_; }

  int order_of(int a) const;
  void validate() const;  // full group axioms, checked once at load
  bool is_subgroup(const std::vector<int>& subset) const;

  static GroupTable trivial();
  static GroupTable cyclic(int n);
  static GroupTable dihedral(int n);
  static GroupTable symmetric(int n);  // n in {3, 4}
  static GroupTable klein4();
  // Named built-ins: "1", "C<n>", "D<n>", "S3", "S4", "K4".
  static std::optional<GroupTable> builtin(const std::string& name);

 private:
  std::string name_;
  std::vector<std::string> labels_;
  std::vector<std::vector<int>> prod_;
  std::vector<int> inv_;
};

}  // namespace parade
