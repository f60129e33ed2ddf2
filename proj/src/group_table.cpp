#include "parade/group_table.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace parade {

GroupTable::GroupTable(std::string name, std::vector<std::string> labels,
                       std::vector<std::vector<int>> prod)
    : name_(std::move(name)), labels_(std::move(labels)), prod_(std::move(prod)) {
  validate();
  inv_.assign(size(), -1);
  for (std::size_t a = 0; a < size(); ++a)
    for (std::size_t b = 0; b < size(); ++b)
      if (prod_[a][b] == 0) inv_[a] = static_cast<int>(b);
}

void GroupTable::validate() const {
  const std::size_t n = size();
  if (n == 0 || prod_.size() != n) fail(Errc::InvalidArgument, "empty or malformed group table");
  for (const auto& row : prod_) {
    if (row.size() != n) fail(Errc::InvalidArgument, "ragged group table");
    for (int v : row)
      if (v < 0 || static_cast<std::size_t>(v) >= n)
        fail(Errc::InvalidArgument, "group table entry out of range");
  }
  for (std::size_t a = 0; a < n; ++a)
    if (prod_[0][a] != static_cast<int>(a) || prod_[a][0] != static_cast<int>(a))
      fail(Errc::InvalidArgument, "element 0 is not a unit in group '" + name_ + "'");
  for (std::size_t a = 0; a < n; ++a) {
    bool has_inv = false;
    for (std::size_t b = 0; b < n; ++b) has_inv = has_inv || prod_[a][b] == 0;
    if (!has_inv) fail(Errc::InvalidArgument, "missing inverse in group '" + name_ + "'");
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (prod_[static_cast<std::size_t>(prod_[a][b])][c] !=
            prod_[a][static_cast<std::size_t>(prod_[b][c])])
          fail(Errc::InvalidArgument, "non-associative table in group '" + name_ + "'");
}

int GroupTable::order_of(int a) const {
  int acc = a, k = 1;
  while (acc != 0) {
    acc = prod(acc, a);
    ++k;
  }
  return k;
}

bool GroupTable::is_subgroup(const std::vector<int>& subset) const {
  std::vector<bool> in(size(), false);
  for (int a : subset) {
    if (a < 0 || static_cast<std::size_t>(a) >= size()) return false;
    in[static_cast<std::size_t>(a)] = true;
  }
  if (!in[0]) return false;
  for (int a : subset) {
    if (!in[static_cast<std::size_t>(inverse(a))]) return false;
    for (int b : subset)
      if (!in[static_cast<std::size_t>(prod(a, b))]) return false;
  }
  return true;
}

GroupTable GroupTable::trivial() { return GroupTable("1", {"e"}, {{0}}); }

GroupTable GroupTable::cyclic(int n) {
  if (n < 1) fail(Errc::InvalidArgument, "cyclic group order must be >= 1");
  std::vector<std::string> labels;
  std::vector<std::vector<int>> prod(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
  for (int i = 0; i < n; ++i) labels.push_back(i == 0 ? "e" : "r" + std::to_string(i));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) prod[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = (i + j) % n;
  return GroupTable("C" + std::to_string(n), std::move(labels), std::move(prod));
}

GroupTable GroupTable::dihedral(int n) {
  if (n < 1) fail(Errc::InvalidArgument, "dihedral parameter must be >= 1");
  const int sz = 2 * n;
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) labels.push_back(i == 0 ? "e" : "r" + std::to_string(i));
  for (int i = 0; i < n; ++i) labels.push_back("s" + (i == 0 ? std::string() : "r" + std::to_string(i)));
  auto enc = [n](bool s, int i) { return (s ? n : 0) + ((i % n) + n) % n; };
  std::vector<std::vector<int>> prod(static_cast<std::size_t>(sz), std::vector<int>(static_cast<std::size_t>(sz)));
  for (int a = 0; a < sz; ++a)
    for (int b = 0; b < sz; ++b) {
      bool sa = a >= n, sb = b >= n;
      int ia = a % n, ib = b % n;
      // r^i r^j = r^{i+j}; r^i (s r^j) = s r^{j-i}; (s r^i) r^j = s r^{i+j};
      // (s r^i)(s r^j) = r^{j-i}
      int v;
      if (!sa && !sb) v = enc(false, ia + ib);
      else if (!sa && sb) v = enc(true, ib - ia);
      else if (sa && !sb) v = enc(true, ia + ib);
      else v = enc(false, ib - ia);
      prod[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = v;
    }
  return GroupTable("D" + std::to_string(n), std::move(labels), std::move(prod));
}

namespace {

std::string cycle_label(const std::vector<int>& p) {
  std::vector<bool> seen(p.size(), false);
  std::string out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i] || p[i] == static_cast<int>(i)) continue;
    out += "(";
    std::size_t j = i;
    while (!seen[j]) {
      seen[j] = true;
      out += std::to_string(j);
      j = static_cast<std::size_t>(p[j]);
    }
    out += ")";
  }
  return out.empty() ? "e" : out;
}

}  // namespace

GroupTable GroupTable::symmetric(int n) {
  if (n < 1 || n > 5) fail(Errc::InvalidArgument, "symmetric group supported for n <= 5");
  std::vector<int> base(static_cast<std::size_t>(n));
  std::iota(base.begin(), base.end(), 0);
  std::vector<std::vector<int>> perms;
  std::vector<int> p = base;
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  std::map<std::vector<int>, int> index;
  for (std::size_t i = 0; i < perms.size(); ++i) index[perms[i]] = static_cast<int>(i);
  std::vector<std::string> labels;
  for (const auto& q : perms) labels.push_back(cycle_label(q));
  std::vector<std::vector<int>> prod(perms.size(), std::vector<int>(perms.size()));
  for (std::size_t a = 0; a < perms.size(); ++a)
    for (std::size_t b = 0; b < perms.size(); ++b) {
      std::vector<int> c(static_cast<std::size_t>(n));
      // a then b, matching the row-vector convention used everywhere else
      for (int x = 0; x < n; ++x)
        c[static_cast<std::size_t>(x)] = perms[b][static_cast<std::size_t>(perms[a][static_cast<std::size_t>(x)])];
      prod[a][b] = index.at(c);
    }
  return GroupTable("S" + std::to_string(n), std::move(labels), std::move(prod));
}

GroupTable GroupTable::klein4() {
  std::vector<std::vector<int>> prod = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  return GroupTable("K4", {"e", "a", "b", "ab"}, std::move(prod));
}

std::optional<GroupTable> GroupTable::builtin(const std::string& name) {
  if (name == "1" || name == "trivial") return trivial();
  if (name == "K4") return klein4();
  if (name == "S3") return symmetric(3);
  if (name == "S4") return symmetric(4);
  if (name.size() >= 2 && (name[0] == 'C' || name[0] == 'D')) {
    try {
      int n = std::stoi(name.substr(1));
      if (n >= 1 && n <= 64) return name[0] == 'C' ? cyclic(n) : dihedral(n);
    } catch (...) {
    }
  }
  return std::nullopt;
}

}  // namespace parade
