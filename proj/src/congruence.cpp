#include "parade/congruence.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "parade/validate.hpp"

namespace parade {

namespace {

struct UnionFind {
  std::vector<ElemId> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  ElemId find(ElemId x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(ElemId a, ElemId b) { parent[find(a)] = find(b); }
};

std::uint64_t pack_word(std::span<const ElemId> w) {
  std::uint64_t key = 0;
  for (std::size_t i = 0; i < w.size(); ++i) key |= static_cast<std::uint64_t>(w[i] + 1) << (8 * i);
  return key;
}

}  // namespace

QuotientPartialGroup::QuotientPartialGroup(PGPtr base,
                                           const std::vector<std::pair<ElemId, ElemId>>& pairs,
                                           int depth)
    : base_(std::move(base)) {
  const std::size_t n = base_->size();
  UnionFind uf(n);
  for (auto [a, b] : pairs) {
    base_->check_elem(a);
    base_->check_elem(b);
    uf.unite(a, b);
  }
  // (CR2) closure: pi ~ rho forces pi^-1 ~ rho^-1, iterated to a fixpoint.
  bool changed = true;
  while (changed) {
    changed = false;
    for (ElemId e = 0; e < n; ++e) {
      ElemId r = uf.find(e);
      if (r == e) continue;
      ElemId ei = base_->inverse(e), ri = base_->inverse(r);
      if (uf.find(ei) != uf.find(ri)) {
        uf.unite(ei, ri);
        changed = true;
      }
    }
  }
  // Canonical class ids ordered by least base member.
  class_of_.assign(n, 0);
  {
    std::map<ElemId, std::vector<ElemId>> by_root;
    for (ElemId e = 0; e < n; ++e) by_root[uf.find(e)].push_back(e);
    std::vector<std::vector<ElemId>> classes;
    for (auto& [root, mem] : by_root) classes.push_back(std::move(mem));
    std::sort(classes.begin(), classes.end(),
              [](const std::vector<ElemId>& a, const std::vector<ElemId>& b) { return a[0] < b[0]; });
    members_ = std::move(classes);
    for (ElemId c = 0; c < members_.size(); ++c)
      for (ElemId e : members_[c]) class_of_[e] = c;
  }
  unit_ = class_of_[base_->unit()];
  inverse_.assign(members_.size(), 0);
  for (ElemId c = 0; c < members_.size(); ++c) {
    ElemId ic = class_of_[base_->inverse(members_[c][0])];
    for (ElemId e : members_[c])
      if (class_of_[base_->inverse(e)] != ic)
        fail(Errc::NotACongruence,
             "inverse not constant on the class of " + base_->label(members_[c][0]));
    inverse_[c] = ic;
  }
  cacheable_ = members_.size() < 255;

  // (CR1) and well-definedness of reduce, to the requested depth: words with
  // the same class tuple must reduce into the same class.
  auto levels = enumerate_word_lists(*base_, depth);
  for (std::size_t li = 1; li < levels.size(); ++li) {
    std::map<Word, std::pair<ElemId, Word>> seen;  // class word -> (reduce class, witness)
    const auto& level = levels[li];
    Word cw(li + 1);
    for (std::size_t wi = 0; wi < level.size(); ++wi) {
      auto w = level[wi];
      for (std::size_t i = 0; i <= li; ++i) cw[i] = class_of_[w[i]];
      auto red = base_->reduce(w);
      if (!red) continue;  // base axioms are validated elsewhere
      ElemId rc = class_of_[*red];
      auto [it, inserted] = seen.try_emplace(cw, std::make_pair(rc, Word(w.begin(), w.end())));
      if (!inserted && it->second.first != rc)
        fail(Errc::NotACongruence, "(CR1) fails at depth " + std::to_string(li + 1) + ": " +
                                       word_str(*base_, it->second.second) + " vs " +
                                       word_str(*base_, w));
    }
  }
}

std::optional<ElemId> QuotientPartialGroup::lookup_cache(std::span<const ElemId> w) const {
  if (!cacheable_ || w.size() > 6) return std::nullopt;
  auto it = cache_.find(pack_word(w));
  if (it == cache_.end()) return std::nullopt;
  return it->second;
}

void QuotientPartialGroup::store_cache(std::span<const ElemId> w, ElemId value) const {
  if (!cacheable_ || w.size() > 6) return;
  if (cache_.size() > 4'000'000) return;
  cache_.emplace(pack_word(w), value);
}

bool QuotientPartialGroup::find_witness(std::span<const ElemId> w, Word& witness) const {
  // Depth-first search over representative tuples, pruning with base prefix
  // membership ((P1) makes every prefix of a witness a word). Worst case
  // |class|^n, in practice the prefixes pin the route.
  witness.clear();
  struct Frame {
    std::size_t next = 0;
  };
  std::vector<Frame> stack(1);
  while (true) {
    std::size_t pos = witness.size();
    if (pos == w.size()) return true;
    bool advanced = false;
    const auto& mem = members_[w[pos]];
    for (std::size_t k = stack.back().next; k < mem.size(); ++k) {
      witness.push_back(mem[k]);
      if (base_->word_in(witness)) {
        stack.back().next = k + 1;
        stack.push_back(Frame{});
        advanced = true;
        break;
      }
      witness.pop_back();
    }
    if (advanced) continue;
    if (witness.empty()) return false;
    witness.pop_back();
    stack.pop_back();
  }
}

bool QuotientPartialGroup::word_in(std::span<const ElemId> w) const {
  if (w.empty()) return false;
  for (ElemId e : w) check_elem(e);
  if (w.size() == 1) return true;
  if (auto c = lookup_cache(w)) return *c != 1;
  Word witness;
  bool ok = find_witness(w, witness);
  if (ok) {
    auto red = base_->reduce(witness);
    store_cache(w, red ? class_of_[*red] + 2 : 1);
  } else {
    store_cache(w, 1);
  }
  return ok;
}

std::optional<ElemId> QuotientPartialGroup::reduce(std::span<const ElemId> w) const {
  if (w.empty()) return std::nullopt;
  for (ElemId e : w) check_elem(e);
  if (w.size() == 1) return w[0];
  if (auto c = lookup_cache(w)) {
    if (*c == 1) return std::nullopt;
    return *c - 2;
  }
  Word witness;
  if (!find_witness(w, witness)) {
    store_cache(w, 1);
    return std::nullopt;
  }
  auto red = base_->reduce(witness);
  if (!red) return std::nullopt;
  store_cache(w, class_of_[*red] + 2);
  return class_of_[*red];
}

std::string QuotientPartialGroup::label(ElemId e) const {
  const auto& mem = members_.at(e);
  std::string s = "[" + base_->label(mem[0]);
  if (mem.size() > 1) s += "~";
  return s + "]";
}

std::shared_ptr<const QuotientPartialGroup> quotient(
    PGPtr base, const std::vector<std::pair<ElemId, ElemId>>& pairs, int depth) {
  return std::make_shared<QuotientPartialGroup>(std::move(base), pairs, depth);
}

}  // namespace parade
