#include "parade/constructions.hpp"

#include <algorithm>
#include <map>

namespace parade {

ChartedPtr wedge_indexed(const std::vector<GroupTable>& summands, WedgeIndex* index) {
  if (summands.empty()) fail(Errc::InvalidArgument, "wedge needs at least one summand");
  ChartedPartialGroup::Builder b;
  b.kind = "wedge";
  const std::size_t k = summands.size();
  WedgeIndex idx;
  idx.embed.resize(k);
  // Element 0 is the shared unit.
  b.labels.push_back("e");
  idx.origin.push_back({-1, 0});
  for (std::size_t s = 0; s < k; ++s) {
    b.charts.push_back(std::to_string(s) + ":" + summands[s].name());
    idx.embed[s].assign(summands[s].size(), 0);
    for (std::size_t a = 1; a < summands[s].size(); ++a) {
      idx.embed[s][a] = static_cast<ElemId>(b.labels.size());
      b.labels.push_back(std::to_string(s) + ":" + summands[s].label(static_cast<int>(a)));
      idx.origin.push_back({static_cast<int>(s), static_cast<int>(a)});
    }
  }
  const std::size_t n = b.labels.size();
  b.unit = 0;
  b.inverse.resize(n);
  b.dest.assign(n, std::vector<std::int32_t>(k, -1));
  for (std::size_t x = 0; x < k; ++x) b.dest[0][x] = static_cast<std::int32_t>(x);
  b.inverse[0] = 0;
  for (ElemId e = 1; e < n; ++e) {
    auto [s, a] = idx.origin[e];
    b.inverse[e] = idx.embed[static_cast<std::size_t>(s)][static_cast<std::size_t>(
        summands[static_cast<std::size_t>(s)].inverse(a))];
    b.dest[e][static_cast<std::size_t>(s)] = static_cast<std::int32_t>(s);
  }
  // Products: within a summand, plus unit on either side.
  for (ElemId e = 0; e < n; ++e) {
    b.products.push_back({0, e, e});
    if (e) b.products.push_back({e, 0, e});
  }
  for (std::size_t s = 0; s < k; ++s)
    for (std::size_t a = 1; a < summands[s].size(); ++a)
      for (std::size_t c = 1; c < summands[s].size(); ++c)
        b.products.push_back({idx.embed[s][a], idx.embed[s][c],
                              idx.embed[s][static_cast<std::size_t>(
                                  summands[s].prod(static_cast<int>(a), static_cast<int>(c)))]});
  if (index) *index = std::move(idx);
  return std::make_shared<ChartedPartialGroup>(std::move(b));
}

ChartedPtr wedge(const std::vector<GroupTable>& summands) { return wedge_indexed(summands, nullptr); }

ChartedPtr union_in_ambient(const GroupTable& g0, const std::vector<int>& plus,
                            const std::vector<int>& minus) {
  if (!g0.is_subgroup(plus)) fail(Errc::NotASubgroup, "G+ is not a subgroup of the ambient group");
  if (!g0.is_subgroup(minus)) fail(Errc::NotASubgroup, "G- is not a subgroup of the ambient group");
  std::vector<bool> in_p(g0.size(), false), in_m(g0.size(), false);
  for (int a : plus) in_p[static_cast<std::size_t>(a)] = true;
  for (int a : minus) in_m[static_cast<std::size_t>(a)] = true;
  std::vector<int> members;
  for (std::size_t a = 0; a < g0.size(); ++a)
    if (in_p[a] || in_m[a]) members.push_back(static_cast<int>(a));

  ChartedPartialGroup::Builder b;
  b.kind = "union(" + g0.name() + ")";
  b.charts = {"+", "-"};
  std::vector<ElemId> from_g0(g0.size(), 0);
  for (std::size_t i = 0; i < members.size(); ++i) {
    from_g0[static_cast<std::size_t>(members[i])] = static_cast<ElemId>(i);
    b.labels.push_back(g0.label(members[i]));
  }
  const std::size_t n = members.size();
  b.unit = from_g0[0];
  b.inverse.resize(n);
  b.dest.assign(n, std::vector<std::int32_t>(2, -1));
  for (std::size_t i = 0; i < n; ++i) {
    int a = members[i];
    b.inverse[i] = from_g0[static_cast<std::size_t>(g0.inverse(a))];
    if (in_p[static_cast<std::size_t>(a)]) b.dest[i][0] = 0;
    if (in_m[static_cast<std::size_t>(a)]) b.dest[i][1] = 1;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      int a = members[i], c = members[j];
      bool both_p = in_p[static_cast<std::size_t>(a)] && in_p[static_cast<std::size_t>(c)];
      bool both_m = in_m[static_cast<std::size_t>(a)] && in_m[static_cast<std::size_t>(c)];
      if (both_p || both_m)
        b.products.push_back({static_cast<ElemId>(i), static_cast<ElemId>(j),
                              from_g0[static_cast<std::size_t>(g0.prod(a, c))]});
    }
  b.ambient_group = std::make_shared<GroupTable>(g0);
  b.ambient_ids.assign(members.begin(), members.end());
  return std::make_shared<ChartedPartialGroup>(std::move(b));
}

std::optional<ElemId> VectorParades::find(const QVector& v) const {
  for (std::size_t i = 0; i < differences.size(); ++i)
    if (differences[i] == v) return static_cast<ElemId>(i);
  return std::nullopt;
}

VectorParades vector_parades(const std::vector<QVector>& pts) {
  if (pts.empty()) fail(Errc::InvalidArgument, "vector parades need a non-empty point set");
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j)
      if (pts[i] == pts[j]) fail(Errc::InvalidArgument, "duplicate point in vector parade set");
  VectorParades out;
  out.points = pts;
  for (const auto& p : pts)
    for (const auto& q : pts) out.differences.push_back(q - p);
  std::sort(out.differences.begin(), out.differences.end(),
            [](const QVector& a, const QVector& b) { return compare(a, b) < 0; });
  out.differences.erase(std::unique(out.differences.begin(), out.differences.end()),
                        out.differences.end());

  ChartedPartialGroup::Builder b;
  b.kind = "vparades";
  for (const auto& p : pts) b.charts.push_back(p.str());
  const std::size_t n = out.differences.size();
  auto find_pt = [&](const QVector& v) -> std::int32_t {
    for (std::size_t i = 0; i < pts.size(); ++i)
      if (pts[i] == v) return static_cast<std::int32_t>(i);
    return -1;
  };
  b.dest.assign(n, std::vector<std::int32_t>(pts.size(), -1));
  for (std::size_t e = 0; e < n; ++e) {
    b.labels.push_back(out.differences[e].str());
    if (out.differences[e].is_zero()) b.unit = static_cast<ElemId>(e);
    for (std::size_t x = 0; x < pts.size(); ++x)
      b.dest[e][x] = find_pt(pts[x] + out.differences[e]);
  }
  b.inverse.resize(n);
  for (std::size_t e = 0; e < n; ++e) b.inverse[e] = *out.find(-out.differences[e]);
  for (std::size_t e = 0; e < n; ++e)
    for (std::size_t f = 0; f < n; ++f) {
      bool chained = false;
      for (std::size_t x = 0; x < pts.size() && !chained; ++x) {
        auto y = b.dest[e][x];
        if (y >= 0 && b.dest[f][static_cast<std::size_t>(y)] >= 0) chained = true;
      }
      if (!chained) continue;
      auto sum = out.find(out.differences[e] + out.differences[f]);
      if (!sum) fail(Errc::InvalidArgument, "difference set not closed along a chain");
      b.products.push_back({static_cast<ElemId>(e), static_cast<ElemId>(f), *sum});
    }
  out.pg = std::make_shared<ChartedPartialGroup>(std::move(b));
  return out;
}

ParadeGroup parade_from_figure(const Figure& figure, TransformClass cls) {
  figure.validate();
  ParadeGroup out;
  out.figure = figure;
  out.cls = cls;
  const auto& cc = figure.components();
  std::vector<Similarity> elems;
  for (const auto& src : cc)
    for (const auto& dst : cc) {
      auto r = maps_between_ex(src, dst, cls);
      out.field_escape = out.field_escape || r.field_escape;
      elems.insert(elems.end(), r.maps.begin(), r.maps.end());
    }
  std::sort(elems.begin(), elems.end(),
            [](const Similarity& a, const Similarity& b) { return compare(a, b) < 0; });
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());

  ChartedPartialGroup::Builder b;
  b.kind = "parade(" + std::string(transform_class_name(cls)) + ")";
  for (const auto& k : cc) b.charts.push_back(k.id());
  const std::size_t n = elems.size();
  auto find_elem = [&](const Similarity& g) -> std::int32_t {
    auto it = std::lower_bound(elems.begin(), elems.end(), g,
                               [](const Similarity& a, const Similarity& x) { return compare(a, x) < 0; });
    if (it != elems.end() && *it == g) return static_cast<std::int32_t>(it - elems.begin());
    return -1;
  };
  b.dest.assign(n, std::vector<std::int32_t>(cc.size(), -1));
  for (std::size_t e = 0; e < n; ++e) {
    b.labels.push_back(elems[e].is_identity() ? "e" : "m" + std::to_string(e));
    for (std::size_t x = 0; x < cc.size(); ++x)
      b.dest[e][x] = static_cast<std::int32_t>(figure.find_component(cc[x].transformed(elems[e])));
    b.unit = elems[e].is_identity() ? static_cast<ElemId>(e) : b.unit;
  }
  b.inverse.resize(n);
  for (std::size_t e = 0; e < n; ++e) {
    auto inv = find_elem(elems[e].inverse());
    if (inv < 0) fail(Errc::InvalidArgument, "parade element set not closed under inverse");
    b.inverse[e] = static_cast<ElemId>(inv);
  }
  for (std::size_t e = 0; e < n; ++e)
    for (std::size_t f = 0; f < n; ++f) {
      bool chained = false;
      for (std::size_t x = 0; x < cc.size() && !chained; ++x) {
        auto y = b.dest[e][x];
        if (y >= 0 && b.dest[f][static_cast<std::size_t>(y)] >= 0) chained = true;
      }
      if (!chained) continue;
      auto p = find_elem(elems[e].then(elems[f]));
      if (p < 0) fail(Errc::InvalidArgument, "parade element set not closed under chained products");
      b.products.push_back({static_cast<ElemId>(e), static_cast<ElemId>(f), static_cast<ElemId>(p)});
    }
  b.ambient_sims = elems;
  out.pg = std::make_shared<ChartedPartialGroup>(std::move(b));
  return out;
}

std::vector<std::vector<int>> adjoint_action_table(const GroupTable& g) {
  std::vector<std::vector<int>> t(g.size(), std::vector<int>(g.size()));
  for (std::size_t x = 0; x < g.size(); ++x)
    for (std::size_t a = 0; a < g.size(); ++a)
      t[x][a] = g.prod(g.prod(g.inverse(static_cast<int>(a)), static_cast<int>(x)), static_cast<int>(a));
  return t;
}

GroupTable group_table_from_sims(const std::vector<Similarity>& sims, const std::string& name) {
  std::vector<Similarity> sorted = sims;
  std::sort(sorted.begin(), sorted.end(),
            [](const Similarity& a, const Similarity& b) { return compare(a, b) < 0; });
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  auto find = [&](const Similarity& g) -> int {
    for (std::size_t i = 0; i < sorted.size(); ++i)
      if (sorted[i] == g) return static_cast<int>(i);
    return -1;
  };
  // Unit must be element 0 for GroupTable; rotate the identity to the front.
  int id_pos = -1;
  for (std::size_t i = 0; i < sorted.size(); ++i)
    if (sorted[i].is_identity()) id_pos = static_cast<int>(i);
  if (id_pos < 0) fail(Errc::InvalidArgument, "similarity set has no identity");
  std::swap(sorted[0], sorted[static_cast<std::size_t>(id_pos)]);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < sorted.size(); ++i)
    labels.push_back(i == 0 ? "e" : "g" + std::to_string(i));
  std::vector<std::vector<int>> prod(sorted.size(), std::vector<int>(sorted.size()));
  for (std::size_t a = 0; a < sorted.size(); ++a)
    for (std::size_t b = 0; b < sorted.size(); ++b) {
      int p = find(sorted[a].then(sorted[b]));
      if (p < 0) fail(Errc::InvalidArgument, "similarity set is not closed under composition");
      prod[a][b] = p;
    }
  return GroupTable(name, std::move(labels), std::move(prod));
}

ChartedPtr union_of_similarity_groups(const std::vector<Similarity>& g0,
                                      const std::vector<Similarity>& g1) {
  std::vector<Similarity> all = g0;
  all.insert(all.end(), g1.begin(), g1.end());
  std::sort(all.begin(), all.end(),
            [](const Similarity& a, const Similarity& b) { return compare(a, b) < 0; });
  all.erase(std::unique(all.begin(), all.end()), all.end());
  auto contains = [](const std::vector<Similarity>& v, const Similarity& g) {
    for (const auto& x : v)
      if (x == g) return true;
    return false;
  };
  ChartedPartialGroup::Builder b;
  b.kind = "sim-union";
  b.charts = {"0", "1"};
  const std::size_t n = all.size();
  auto find = [&](const Similarity& g) -> std::int32_t {
    for (std::size_t i = 0; i < n; ++i)
      if (all[i] == g) return static_cast<std::int32_t>(i);
    return -1;
  };
  b.dest.assign(n, std::vector<std::int32_t>(2, -1));
  b.inverse.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    b.labels.push_back(all[i].is_identity() ? "e" : "u" + std::to_string(i));
    if (all[i].is_identity()) b.unit = static_cast<ElemId>(i);
    if (contains(g0, all[i])) b.dest[i][0] = 0;
    if (contains(g1, all[i])) b.dest[i][1] = 1;
    auto inv = find(all[i].inverse());
    if (inv < 0) fail(Errc::InvalidArgument, "union set not closed under inverse");
    b.inverse[i] = static_cast<ElemId>(inv);
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      bool chained = (b.dest[i][0] == 0 && b.dest[j][0] == 0) || (b.dest[i][1] == 1 && b.dest[j][1] == 1);
      if (!chained) continue;
      auto p = find(all[i].then(all[j]));
      if (p < 0) fail(Errc::InvalidArgument, "union set not closed under chained products");
      b.products.push_back({static_cast<ElemId>(i), static_cast<ElemId>(j), static_cast<ElemId>(p)});
    }
  b.ambient_sims = all;
  return std::make_shared<ChartedPartialGroup>(std::move(b));
}

ChartedPtr parade_from_group_action(const GroupTable& g0,
                                    const std::vector<std::vector<int>>& action,
                                    const std::vector<int>& x_subset,
                                    const std::vector<std::string>& x0_names) {
  const std::size_t nx0 = action.size();
  if (nx0 == 0) fail(Errc::InvalidAction, "empty action table");
  for (const auto& row : action) {
    if (row.size() != g0.size()) fail(Errc::InvalidAction, "action table must cover the whole group");
    for (int v : row)
      if (v < 0 || static_cast<std::size_t>(v) >= nx0) fail(Errc::InvalidAction, "action target out of range");
  }
  for (std::size_t x = 0; x < nx0; ++x) {
    if (action[x][0] != static_cast<int>(x)) fail(Errc::InvalidAction, "unit must act trivially");
    for (std::size_t a = 0; a < g0.size(); ++a)
      for (std::size_t c = 0; c < g0.size(); ++c)
        if (action[static_cast<std::size_t>(action[x][a])][c] !=
            action[x][static_cast<std::size_t>(g0.prod(static_cast<int>(a), static_cast<int>(c)))])
          fail(Errc::InvalidAction, "action is not compatible with the group product");
  }
  if (x_subset.empty()) fail(Errc::InvalidAction, "the chart subset must be non-empty");
  for (int x : x_subset)
    if (x < 0 || static_cast<std::size_t>(x) >= nx0) fail(Errc::InvalidAction, "chart subset out of range");

  std::vector<std::int32_t> chart_of(nx0, -1);
  for (std::size_t i = 0; i < x_subset.size(); ++i)
    chart_of[static_cast<std::size_t>(x_subset[i])] = static_cast<std::int32_t>(i);

  // Elements: group members appearing in a length-1 parade.
  std::vector<int> members;
  for (std::size_t a = 0; a < g0.size(); ++a) {
    bool hit = false;
    for (int x : x_subset)
      if (chart_of[static_cast<std::size_t>(action[static_cast<std::size_t>(x)][a])] >= 0) {
        hit = true;
        break;
      }
    if (hit) members.push_back(static_cast<int>(a));
  }
  std::vector<ElemId> from_g0(g0.size(), 0);
  ChartedPartialGroup::Builder b;
  b.kind = "parade-action(" + g0.name() + ")";
  for (std::size_t i = 0; i < x_subset.size(); ++i)
    b.charts.push_back(x0_names.empty() ? "x" + std::to_string(x_subset[i])
                                        : x0_names.at(static_cast<std::size_t>(x_subset[i])));
  for (std::size_t i = 0; i < members.size(); ++i) {
    from_g0[static_cast<std::size_t>(members[i])] = static_cast<ElemId>(i);
    b.labels.push_back(g0.label(members[i]));
  }
  const std::size_t n = members.size();
  b.unit = from_g0[0];
  b.inverse.resize(n);
  b.dest.assign(n, std::vector<std::int32_t>(x_subset.size(), -1));
  for (std::size_t i = 0; i < n; ++i) {
    b.inverse[i] = from_g0[static_cast<std::size_t>(g0.inverse(members[i]))];
    for (std::size_t xi = 0; xi < x_subset.size(); ++xi)
      b.dest[i][xi] =
          chart_of[static_cast<std::size_t>(action[static_cast<std::size_t>(x_subset[xi])]
                                                  [static_cast<std::size_t>(members[i])])];
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      bool chained = false;
      for (std::size_t x = 0; x < x_subset.size() && !chained; ++x) {
        auto y = b.dest[i][x];
        if (y >= 0 && b.dest[j][static_cast<std::size_t>(y)] >= 0) chained = true;
      }
      if (!chained) continue;
      b.products.push_back({static_cast<ElemId>(i), static_cast<ElemId>(j),
                            from_g0[static_cast<std::size_t>(g0.prod(members[i], members[j]))]});
    }
  b.ambient_group = std::make_shared<GroupTable>(g0);
  b.ambient_ids.assign(members.begin(), members.end());
  return std::make_shared<ChartedPartialGroup>(std::move(b));
}

}  // namespace parade
