#include "parade/iso.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace parade {

namespace {

constexpr std::int32_t kUndef = -1;

struct ProductView {
  // prod[a*n+b] = result element, kUndef when (a, b) is not a word.
  std::vector<std::int32_t> prod;
  std::size_t n = 0;

  explicit ProductView(const PartialGroup& pg) : n(pg.size()) {
    prod.assign(n * n, kUndef);
    for (ElemId a = 0; a < n; ++a)
      for (ElemId b = 0; b < n; ++b) {
        auto r = pg.reduce2(a, b);
        if (r) prod[a * n + b] = static_cast<std::int32_t>(*r);
      }
  }
  std::int32_t at(ElemId a, ElemId b) const { return prod[a * n + b]; }
};

using Colors = std::vector<int>;

Colors initial_colors(const PartialGroup& pg, const ProductView& pv,
                      std::map<std::vector<std::size_t>, int>& dict) {
  Colors colors(pg.size());
  for (ElemId e = 0; e < pg.size(); ++e) {
    std::size_t out2 = 0, in2 = 0, to_unit = 0;
    for (ElemId f = 0; f < pg.size(); ++f) {
      if (pv.at(e, f) != kUndef) {
        ++out2;
        if (pv.at(e, f) == static_cast<std::int32_t>(pg.unit())) ++to_unit;
      }
      if (pv.at(f, e) != kUndef) ++in2;
    }
    std::vector<std::size_t> key{e == pg.unit() ? 1u : 0u,
                                 pg.inverse(e) == e ? 1u : 0u,
                                 pg.order_of(e),
                                 out2,
                                 in2,
                                 to_unit,
                                 pv.at(e, e) == kUndef ? 0u : 1u};
    auto [it, _] = dict.try_emplace(key, static_cast<int>(dict.size()));
    colors[e] = it->second;
  }
  return colors;
}

// One refinement round; both sides must share `dict` so colors stay comparable.
Colors refine(const ProductView& pv, const Colors& c, std::map<std::vector<int>, int>& dict) {
  const std::size_t n = pv.n;
  Colors out(n);
  for (ElemId e = 0; e < n; ++e) {
    std::vector<int> key;
    key.push_back(c[e]);
    std::vector<int> sig;
    for (ElemId f = 0; f < n; ++f) {
      auto r = pv.at(e, f);
      if (r != kUndef) sig.push_back(2 * (c[f] * static_cast<int>(n + 1) + c[static_cast<ElemId>(r)]));
      auto l = pv.at(f, e);
      if (l != kUndef) sig.push_back(2 * (c[f] * static_cast<int>(n + 1) + c[static_cast<ElemId>(l)]) + 1);
    }
    std::sort(sig.begin(), sig.end());
    key.insert(key.end(), sig.begin(), sig.end());
    auto [it, _] = dict.try_emplace(key, static_cast<int>(dict.size()));
    out[e] = it->second;
  }
  return out;
}

bool same_color_multiset(const Colors& a, const Colors& b) {
  Colors x = a, y = b;
  std::sort(x.begin(), x.end());
  std::sort(y.begin(), y.end());
  return x == y;
}

bool verify_with_levels(const PartialGroup& a, const PartialGroup& b,
                        const std::vector<ElemId>& mapping,
                        const std::vector<WordList>& levels_a,
                        const std::vector<WordList>& levels_b) {
  for (std::size_t li = 0; li < levels_a.size(); ++li)
    if (levels_a[li].size() != levels_b[li].size()) return false;
  Word image;
  for (std::size_t li = 1; li < levels_a.size(); ++li) {
    const auto& level = levels_a[li];
    for (std::size_t wi = 0; wi < level.size(); ++wi) {
      auto w = level[wi];
      image.resize(w.size());
      for (std::size_t i = 0; i < w.size(); ++i) image[i] = mapping[w[i]];
      auto rb = b.reduce(image);
      auto ra = a.reduce(w);
      if (!rb || !ra || mapping[*ra] != *rb) return false;
    }
  }
  return true;
}

struct Search {
  const PartialGroup& a;
  const PartialGroup& b;
  const ProductView& pa;
  const ProductView& pb;
  const Colors& ca;
  const Colors& cb;
  IsoOptions opt;
  std::vector<std::int32_t> map_ab;
  std::vector<std::int32_t> map_ba;
  std::vector<ElemId> order;
  std::uint64_t nodes = 0;
  bool out_of_budget = false;
  std::vector<WordList> levels_a, levels_b;  // filled lazily for deep verification
  bool levels_ready = false;

  bool assign(ElemId x, ElemId y, std::vector<std::pair<ElemId, ElemId>>& trail) {
    std::vector<std::pair<ElemId, ElemId>> queue{{x, y}};
    while (!queue.empty()) {
      auto [u, v] = queue.back();
      queue.pop_back();
      if (map_ab[u] != kUndef) {
        if (map_ab[u] != static_cast<std::int32_t>(v)) return false;
        continue;
      }
      if (map_ba[v] != kUndef) return false;
      if (ca[u] != cb[v]) return false;
      map_ab[u] = static_cast<std::int32_t>(v);
      map_ba[v] = static_cast<std::int32_t>(u);
      trail.push_back({u, v});
      queue.push_back({a.inverse(u), b.inverse(v)});
      for (ElemId w = 0; w < a.size(); ++w) {
        if (map_ab[w] == kUndef) continue;
        ElemId wv = static_cast<ElemId>(map_ab[w]);
        auto r1 = pa.at(u, w), r2 = pb.at(v, wv);
        if ((r1 == kUndef) != (r2 == kUndef)) return false;
        if (r1 != kUndef) queue.push_back({static_cast<ElemId>(r1), static_cast<ElemId>(r2)});
        auto l1 = pa.at(w, u), l2 = pb.at(wv, v);
        if ((l1 == kUndef) != (l2 == kUndef)) return false;
        if (l1 != kUndef) queue.push_back({static_cast<ElemId>(l1), static_cast<ElemId>(l2)});
      }
    }
    return true;
  }

  void undo(std::vector<std::pair<ElemId, ElemId>>& trail, std::size_t mark) {
    while (trail.size() > mark) {
      auto [u, v] = trail.back();
      trail.pop_back();
      map_ab[u] = kUndef;
      map_ba[v] = kUndef;
    }
  }

  bool deep_verify() {
    if (!levels_ready) {
      levels_a = enumerate_word_lists(a, opt.depth);
      levels_b = enumerate_word_lists(b, opt.depth);
      levels_ready = true;
    }
    std::vector<ElemId> mapping(a.size());
    for (ElemId e = 0; e < a.size(); ++e) mapping[e] = static_cast<ElemId>(map_ab[e]);
    return verify_with_levels(a, b, mapping, levels_a, levels_b);
  }

  bool extend(std::size_t idx, std::vector<std::pair<ElemId, ElemId>>& trail) {
    if (++nodes > opt.node_budget) {
      out_of_budget = true;
      return false;
    }
    while (idx < order.size() && map_ab[order[idx]] != kUndef) ++idx;
    if (idx == order.size()) return deep_verify();
    ElemId u = order[idx];
    for (ElemId v = 0; v < b.size(); ++v) {
      if (map_ba[v] != kUndef || cb[v] != ca[u]) continue;
      std::size_t mark = trail.size();
      if (assign(u, v, trail) && extend(idx + 1, trail)) return true;
      undo(trail, mark);
      if (out_of_budget) return false;
    }
    return false;
  }
};

}  // namespace

bool verify_isomorphism(const PartialGroup& a, const PartialGroup& b,
                        const std::vector<ElemId>& mapping, int depth) {
  if (a.size() != b.size() || mapping.size() != a.size()) return false;
  std::vector<bool> hit(b.size(), false);
  for (ElemId e = 0; e < a.size(); ++e) {
    if (mapping[e] >= b.size() || hit[mapping[e]]) return false;
    hit[mapping[e]] = true;
  }
  if (mapping[a.unit()] != b.unit()) return false;
  for (ElemId e = 0; e < a.size(); ++e)
    if (mapping[a.inverse(e)] != b.inverse(mapping[e])) return false;
  auto la = enumerate_word_lists(a, depth);
  auto lb = enumerate_word_lists(b, depth);
  return verify_with_levels(a, b, mapping, la, lb);
}

IsoResult iso_search(const PartialGroup& a, const PartialGroup& b, IsoOptions opt) {
  IsoResult result;
  if (a.size() != b.size()) return result;

  ProductView pa(a), pb(b);
  std::map<std::vector<std::size_t>, int> dict0;
  Colors ca = initial_colors(a, pa, dict0);
  Colors cb = initial_colors(b, pb, dict0);
  if (!same_color_multiset(ca, cb)) return result;
  for (std::size_t round = 0; round < a.size(); ++round) {
    std::map<std::vector<int>, int> dict;
    Colors na = refine(pa, ca, dict);
    Colors nb = refine(pb, cb, dict);
    if (!same_color_multiset(na, nb)) return result;
    bool stable = true;
    std::map<int, int> fwd;
    for (std::size_t i = 0; i < na.size(); ++i) {
      auto [it, inserted] = fwd.try_emplace(ca[i], na[i]);
      if (!inserted && it->second != na[i]) stable = false;
    }
    ca = std::move(na);
    cb = std::move(nb);
    if (stable) break;
  }

  Search s{a, b, pa, pb, ca, cb, opt, {}, {}, {}, 0, false, {}, {}, false};
  s.map_ab.assign(a.size(), kUndef);
  s.map_ba.assign(b.size(), kUndef);
  s.order.resize(a.size());
  std::iota(s.order.begin(), s.order.end(), 0);
  std::map<int, int> color_count;
  for (int c : ca) ++color_count[c];
  std::sort(s.order.begin(), s.order.end(), [&](ElemId x, ElemId y) {
    int cx = color_count[ca[x]], cy = color_count[ca[y]];
    if (cx != cy) return cx < cy;
    if (ca[x] != ca[y]) return ca[x] < ca[y];
    return x < y;
  });

  std::vector<std::pair<ElemId, ElemId>> trail;
  bool found = s.assign(a.unit(), b.unit(), trail) && s.extend(0, trail);
  result.nodes = s.nodes;
  if (found) {
    result.verdict = IsoVerdict::Isomorphic;
    result.mapping.resize(a.size());
    for (ElemId e = 0; e < a.size(); ++e) result.mapping[e] = static_cast<ElemId>(s.map_ab[e]);
    result.depth_verified = opt.depth;
    return result;
  }
  result.verdict = s.out_of_budget ? IsoVerdict::Inconclusive : IsoVerdict::NonIsomorphic;
  return result;
}

}  // namespace parade
