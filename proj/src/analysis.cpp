#include "parade/analysis.hpp"

#include <algorithm>
#include <sstream>

namespace parade {

std::string CheckReport::text() const {
  std::ostringstream os;
  os << check_id << " on " << subject << ": " << verdict;
  if (!outcome.empty()) os << " [" << outcome << "]";
  os << " (depth " << depth << ")";
  for (const auto& n : notes) os << "\n  note: " << n;
  for (const auto& w : witnesses) os << "\n  witness: " << w;
  return os.str();
}

bool is_group(const PartialGroup& pg, int depth) {
  // Every tuple must be a word; bail out on the first miss.
  Word w;
  struct Frame { ElemId next = 0; };
  for (int n = 2; n <= depth; ++n) {
    w.assign(1, 0);
    std::vector<Frame> stack(1);
    // Depth-first over all tuples of length n, testing prefixes as we go: a
    // prefix failure is already a missing word of length <= n.
    w.clear();
    stack.assign(1, Frame{});
    while (true) {
      if (w.size() == static_cast<std::size_t>(n)) {
        // complete; backtrack
        w.pop_back();
        stack.pop_back();
        if (stack.empty()) break;
        continue;
      }
      if (stack.back().next >= pg.size()) {
        if (w.empty()) break;
        w.pop_back();
        stack.pop_back();
        if (stack.empty()) break;
        continue;
      }
      ElemId e = stack.back().next++;
      w.push_back(e);
      if (!pg.word_in(w)) return false;
      stack.push_back(Frame{});
    }
  }
  return true;
}

CheckReport p_equals_g_conditions(const Figure& figure, TransformClass cls, int depth) {
  CheckReport report;
  report.check_id = "p-equals-g";
  report.subject = "figure";
  report.depth = depth;
  figure.validate();
  const auto& cc = figure.components();
  auto global = global_group(figure, cls);
  auto in_global = [&](const Similarity& g) {
    for (const auto& x : global)
      if (x == g) return true;
    return false;
  };
  bool cond_i = true, cond_ii = true;
  for (std::size_t i = 0; i < cc.size() && cond_i; ++i)
    for (std::size_t j = 0; j < cc.size() && cond_i; ++j) {
      auto maps = maps_between(cc[i], cc[j], cls);
      if (maps.empty()) continue;
      bool reachable = false;
      for (const auto& g : global)
        if (figure.find_component(cc[i].transformed(g)) == static_cast<int>(j)) reachable = true;
      if (!reachable) {
        cond_i = false;
        report.witnesses.push_back("(i) fails: " + cc[i].id() + " -> " + cc[j].id() +
                                   " by no global symmetry");
      }
    }
  for (std::size_t i = 0; i < cc.size() && cond_ii; ++i)
    for (const auto& h : maps_between(cc[i], cc[i], cls))
      if (!in_global(h)) {
        cond_ii = false;
        report.witnesses.push_back("(ii) fails: a stabilizer element of " + cc[i].id() +
                                   " is not a global symmetry");
        break;
      }
  report.notes.push_back(std::string("(i) ") + (cond_i ? "holds" : "fails"));
  report.notes.push_back(std::string("(ii) ") + (cond_ii ? "holds" : "fails"));

  auto parade = parade_from_figure(figure, cls);
  bool set_equal = parade.pg->size() == global.size();
  report.notes.push_back("|P_1| = " + std::to_string(parade.pg->size()) +
                         ", |G| = " + std::to_string(global.size()));
  bool grp = is_group(*parade.pg, depth);
  report.notes.push_back(std::string("is_group: ") + (grp ? "true" : "false"));
  if ((cond_i && cond_ii) != set_equal) {
    report.verdict = "fail";
    report.witnesses.push_back("conditions disagree with the set comparison");
    return report;
  }
  if (set_equal && !grp) {
    report.verdict = "fail";
    report.witnesses.push_back("P_1 = G as sets but the parade is not word-total");
    return report;
  }
  report.outcome = (cond_i && cond_ii) ? "parade-equals-global" : "parade-strictly-larger";
  report.verdict = (cond_i && cond_ii) ? "pass" : "fail";
  return report;
}

std::optional<std::vector<GroupTable>> wedge_decompose(const PartialGroup& pg, int depth) {
  const ElemId one = pg.unit();
  const std::size_t n = pg.size();
  if (n == 1) return std::vector<GroupTable>{};
  // Blocks: connected components of two-sided composability on nontrivial elements.
  std::vector<int> block(n, -1);
  int nblocks = 0;
  for (ElemId e = 0; e < n; ++e) {
    if (e == one || block[e] >= 0) continue;
    std::vector<ElemId> queue{e};
    block[e] = nblocks;
    while (!queue.empty()) {
      ElemId u = queue.back();
      queue.pop_back();
      for (ElemId v = 0; v < n; ++v) {
        if (v == one || block[v] >= 0) continue;
        if (pg.pair_in(u, v) || pg.pair_in(v, u)) {
          block[v] = nblocks;
          queue.push_back(v);
        }
      }
    }
    ++nblocks;
  }
  std::vector<GroupTable> tables;
  std::vector<std::vector<ElemId>> members(static_cast<std::size_t>(nblocks));
  for (ElemId e = 0; e < n; ++e)
    if (e != one) members[static_cast<std::size_t>(block[e])].push_back(e);
  for (auto& mem : members) {
    std::vector<ElemId> elems{one};
    elems.insert(elems.end(), mem.begin(), mem.end());
    auto index_of = [&](ElemId x) -> int {
      for (std::size_t i = 0; i < elems.size(); ++i)
        if (elems[i] == x) return static_cast<int>(i);
      return -1;
    };
    std::vector<std::vector<int>> prod(elems.size(), std::vector<int>(elems.size()));
    for (std::size_t a = 0; a < elems.size(); ++a)
      for (std::size_t b = 0; b < elems.size(); ++b) {
        auto r = pg.reduce2(elems[a], elems[b]);
        if (!r) return std::nullopt;  // block not closed: no wedge structure
        int idx = index_of(*r);
        if (idx < 0) return std::nullopt;
        prod[a][b] = idx;
      }
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < elems.size(); ++i) labels.push_back(pg.label(elems[i]));
    try {
      tables.emplace_back("block" + std::to_string(tables.size()), std::move(labels), std::move(prod));
    } catch (const Error&) {
      return std::nullopt;
    }
  }
  auto model = wedge(tables);
  auto iso = iso_search(pg, *model, IsoOptions{depth, 4000000});
  if (iso.verdict != IsoVerdict::Isomorphic) return std::nullopt;
  return tables;
}

Figure TranslatedScene::figure() const {
  std::vector<Component> cc;
  for (std::size_t i = 0; i < offsets.size(); ++i)
    cc.push_back(base.transformed(Similarity::translation_by(offsets[i]),
                                  base.id() + "@" + std::to_string(i)));
  return Figure(std::move(cc));
}

CheckReport sdp_type_test(const TranslatedScene& scene, TransformClass cls, int depth) {
  CheckReport report;
  report.check_id = "sdp-type";
  report.subject = "translated-copies figure";
  report.depth = depth;
  auto base_stab = maps_between(scene.base, scene.base, cls);
  for (const auto& g : base_stab)
    if (!g.fixes_origin())
      fail(Errc::PremiseViolation, "a symmetry of the base component moves the origin");
  Figure figure = scene.figure();
  figure.validate();

  // Criterion (1): a non-translation global symmetry disqualifies.
  if (scene.offsets.size() >= 2) {
    for (const auto& g : global_group(figure, cls))
      if (!g.is_translation()) {
        report.verdict = "pass";
        report.outcome = "not-sdp-type";
        report.notes.push_back("criterion (1): global symmetry " + g.str() + " is not a translation");
        return report;
      }
  }
  // Criterion (2).
  auto v = vector_parades(scene.offsets);
  bool crit2 = true;
  for (const auto& x : v.differences)
    for (const auto& y : v.differences)
      if (x.squared_norm() == y.squared_norm() && x != y && x != -y) crit2 = false;
  for (const auto& x : v.differences) {
    if (x.is_zero()) continue;
    for (const auto& a : base_stab) {
      if (a.is_identity()) continue;
      QVector img = x * a.linear();
      if (img == x || img == -x) crit2 = false;
    }
  }
  if (crit2) {
    report.verdict = "pass";
    report.outcome = "sdp-type";
    report.notes.push_back("criterion (2): distinct lengths and no fixed direction");
    return report;
  }
  // Fallback: build both sides and compare.
  auto parade = parade_from_figure(figure, cls);
  auto gt = group_table_from_sims(base_stab, "G(F0)");
  auto x = chart_pset(v.pg);
  auto wa = action_wedge_over_fset(gt, v.pg, x, depth);
  auto sdp = semidirect(v.pg, wa.h, wa.action);
  auto iso = iso_search(*sdp, *parade.pg, IsoOptions{depth, 4000000});
  report.notes.push_back("fallback comparison: |SDP| = " + std::to_string(sdp->size()) +
                         ", |P| = " + std::to_string(parade.pg->size()));
  if (iso.verdict == IsoVerdict::Inconclusive) {
    report.verdict = "inconclusive-at-depth";
    return report;
  }
  report.verdict = "pass";
  report.outcome = iso.verdict == IsoVerdict::Isomorphic ? "sdp-type" : "not-sdp-type";
  return report;
}

std::optional<Theorem> theorem_from_name(const std::string& s) {
  if (s == "T8_4") return Theorem::T8_4;
  if (s == "T12_1") return Theorem::T12_1;
  if (s == "T12_2") return Theorem::T12_2;
  if (s == "T12_3") return Theorem::T12_3;
  if (s == "P7_6") return Theorem::P7_6;
  return std::nullopt;
}

const char* theorem_name(Theorem t) {
  switch (t) {
    case Theorem::T8_4: return "T8_4";
    case Theorem::T12_1: return "T12_1";
    case Theorem::T12_2: return "T12_2";
    case Theorem::T12_3: return "T12_3";
    case Theorem::P7_6: return "P7_6";
  }
  return "?";
}

namespace {

std::vector<Similarity> swap_maps(const Figure& figure, TransformClass cls) {
  const auto& cc = figure.components();
  std::vector<Similarity> out;
  for (const auto& g : maps_between(cc[0], cc[1], cls))
    if (figure.find_component(cc[1].transformed(g)) == 0) out.push_back(g);
  return out;
}

void require_two_components(const Figure& figure, Theorem t) {
  if (figure.components().size() != 2)
    fail(Errc::HypothesisViolation,
         std::string(theorem_name(t)) + " needs exactly two components");
}

CrossCheckData cross_check_T8_4(const Figure& figure, TransformClass cls, int depth) {
  CrossCheckData data;
  require_two_components(figure, Theorem::T8_4);
  auto swaps = swap_maps(figure, cls);
  if (swaps.empty())
    fail(Errc::HypothesisViolation, "no isometry exchanges the two components");
  Similarity a = swaps[0];
  data.swap_map = a;
  data.sigma_cc = a.then(a);

  const auto& cc = figure.components();
  auto parade = parade_from_figure(figure, cls);
  auto h = union_of_similarity_groups(maps_between(cc[0], cc[0], cls), maps_between(cc[1], cc[1], cls));
  FactorSet fs;
  fs.g = GroupTable::cyclic(2);
  fs.h = h;
  fs.act.assign(h->size(), std::vector<ElemId>(2));
  for (ElemId eta = 0; eta < h->size(); ++eta) {
    fs.act[eta][0] = eta;
    auto img = h->find_ambient_sim(h->ambient_sim(eta).conjugated_by(a));
    if (!img) fail(Errc::InvalidFactorSet, "conjugation by the swap leaves the union");
    fs.act[eta][1] = *img;
  }
  auto a2 = h->find_ambient_sim(*data.sigma_cc);
  if (!a2) fail(Errc::InvalidFactorSet, "a^2 is not in the union of stabilizers");
  fs.sigma.assign(2, std::vector<ElemId>(2, h->unit()));
  fs.sigma[1][1] = *a2;
  auto product = factor_set_product(std::move(fs), depth);

  data.parade_count = parade.pg->size();
  data.model_count = product->size();
  CheckReport& report = data.report;
  report.check_id = "T8_4";
  report.subject = "two swapped components";
  report.depth = depth;
  report.notes.push_back("|parade| = " + std::to_string(data.parade_count) +
                         ", |C2 twisted product| = " + std::to_string(data.model_count));
  report.notes.push_back(std::string("sigma(c,c) = ") + data.sigma_cc->str() +
                         (data.sigma_cc->is_identity() ? " (trivial)" : " (non-trivial)"));
  // Explicit bijection (c^i, eta) -> a^i * eta.
  std::vector<ElemId> mapping(product->size());
  bool explicit_ok = true;
  for (ElemId e = 0; e < product->size(); ++e) {
    Similarity sim = h->ambient_sim(product->h_of(e));
    if (product->g_of(e) == 1) sim = a.then(sim);
    auto target = parade.pg->find_ambient_sim(sim);
    if (!target) {
      explicit_ok = false;
      break;
    }
    mapping[e] = *target;
  }
  explicit_ok = explicit_ok && verify_isomorphism(*product, *parade.pg, mapping, depth);
  report.notes.push_back(std::string("explicit psi(c^i, eta) = a^i eta: ") +
                         (explicit_ok ? "isomorphism" : "FAILED"));
  auto iso = iso_search(*product, *parade.pg, IsoOptions{depth, 4000000});
  if (iso.verdict == IsoVerdict::Inconclusive) {
    report.verdict = "inconclusive-at-depth";
    return data;
  }
  report.verdict = (iso.verdict == IsoVerdict::Isomorphic && explicit_ok) ? "pass" : "fail";
  report.outcome = "parade isomorphic to twisted product";
  return data;
}

struct TwoComponentModel {
  SemidirectPtr sdp;
  ChartedPtr h;
  Similarity gamma = Similarity::identity(1);
  std::shared_ptr<const ChartedPartialGroup> v01;
  ElemId up = 0, down = 0;
};

TwoComponentModel build_two_component_model(const Figure& figure, TransformClass cls) {
  const auto& cc = figure.components();
  auto cross = maps_between(cc[0], cc[1], cls);
  TwoComponentModel m;
  m.gamma = cross.at(0);
  m.h = union_of_similarity_groups(maps_between(cc[0], cc[0], cls), maps_between(cc[1], cc[1], cls));
  QVector zero(1), one(1);
  one[0] = QuadScalar(1);
  auto v = vector_parades({zero, one});
  m.v01 = v.pg;
  m.up = *v.find(one - zero);
  m.down = *v.find(zero - one);
  auto act = action_two_component(v.pg, m.up, m.down, m.h, m.gamma);
  m.sdp = semidirect(v.pg, m.h, act);
  return m;
}

CrossCheckData cross_check_T12(const Figure& figure, Theorem t, TransformClass cls, int depth) {
  CrossCheckData data;
  require_two_components(figure, t);
  const auto& cc = figure.components();
  if (t == Theorem::T12_1) {
    if (maps_between(cc[0], cc[1], cls).empty())
      fail(Errc::HypothesisViolation, "components are not congruent");
    if (!swap_maps(figure, cls).empty())
      fail(Errc::HypothesisViolation, "an isometry exchanges the components; T12_1 needs none");
  } else {  // T12_2
    cls = TransformClass::Similarity;
    if (!maps_between(cc[0], cc[1], TransformClass::Euclidean).empty())
      fail(Errc::HypothesisViolation, "components are congruent; T12_2 needs similar non-congruent");
    if (maps_between(cc[0], cc[1], cls).empty())
      fail(Errc::HypothesisViolation, "components are not similar");
    if (cc[0].squared_diameter().is_zero() || cc[1].squared_diameter().is_zero())
      fail(Errc::HypothesisViolation, "components must have positive diameter");
  }
  auto parade = parade_from_figure(figure, cls);
  auto m = build_two_component_model(figure, cls);
  data.parade_count = parade.pg->size();
  data.model_count = m.sdp->size();

  CheckReport& report = data.report;
  report.check_id = theorem_name(t);
  report.subject = "two-component figure";
  report.depth = depth;
  report.notes.push_back("|parade| = " + std::to_string(data.parade_count) +
                         ", |V({0,1}) |x H| = " + std::to_string(data.model_count));
  // Explicit bijection delta |x eta -> gamma^delta * eta.
  std::vector<ElemId> mapping(m.sdp->size());
  bool explicit_ok = true;
  for (ElemId e = 0; e < m.sdp->size(); ++e) {
    Similarity sim = m.h->ambient_sim(m.sdp->h_of(e));
    ElemId delta = m.sdp->f_of(e);
    if (delta == m.up) sim = m.gamma.then(sim);
    if (delta == m.down) sim = m.gamma.inverse().then(sim);
    auto target = parade.pg->find_ambient_sim(sim);
    if (!target) {
      explicit_ok = false;
      break;
    }
    mapping[e] = *target;
  }
  explicit_ok = explicit_ok && verify_isomorphism(*m.sdp, *parade.pg, mapping, depth);
  report.notes.push_back(std::string("explicit psi(delta |x eta) = gamma^delta eta: ") +
                         (explicit_ok ? "isomorphism" : "FAILED"));
  auto iso = iso_search(*m.sdp, *parade.pg, IsoOptions{depth, 4000000});
  if (iso.verdict == IsoVerdict::Inconclusive) {
    report.verdict = "inconclusive-at-depth";
    return data;
  }
  report.verdict = (iso.verdict == IsoVerdict::Isomorphic && explicit_ok) ? "pass" : "fail";
  report.outcome = "parade isomorphic to the semidirect product";
  if (t == Theorem::T12_2) {
    auto euclid = parade_from_figure(figure, TransformClass::Euclidean);
    report.notes.push_back("euclidean parade count = " + std::to_string(euclid.pg->size()));
    if (euclid.pg->size() >= data.parade_count) {
      report.verdict = "fail";
      report.witnesses.push_back("euclidean parade is not strictly smaller");
    }
  }
  return data;
}

CrossCheckData cross_check_T12_3(const TranslatedScene& scene, TransformClass cls, int depth) {
  CrossCheckData data;
  auto base_stab = maps_between(scene.base, scene.base, cls);
  for (const auto& g : base_stab)
    if (!g.fixes_origin())
      fail(Errc::HypothesisViolation, "G(F0) must fix the origin");
  Figure figure = scene.figure();
  auto parade = parade_from_figure(figure, cls);
  auto v = vector_parades(scene.offsets);
  auto gt = group_table_from_sims(base_stab, "G(F0)");
  auto wa = action_wedge_over_fset(gt, v.pg, chart_pset(v.pg), depth);
  auto sdp = semidirect(v.pg, wa.h, wa.action);
  data.parade_count = parade.pg->size();
  data.sdp_count = sdp->size();

  // Sorted stabilizer transforms aligned with gt labels (g0 is the identity).
  auto stab_sorted = base_stab;
  std::sort(stab_sorted.begin(), stab_sorted.end(),
            [](const Similarity& x, const Similarity& y) { return compare(x, y) < 0; });
  for (std::size_t i = 0; i < stab_sorted.size(); ++i)
    if (stab_sorted[i].is_identity()) std::swap(stab_sorted[0], stab_sorted[i]);

  // phi: difference vector -> translation; f: [x, a] -> t_x^-1 a t_x.
  std::vector<ElemId> phi(v.pg->size());
  for (ElemId e = 0; e < v.pg->size(); ++e) {
    auto target = parade.pg->find_ambient_sim(Similarity::translation_by(v.differences[e]));
    if (!target) fail(Errc::HypothesisViolation, "translation between copies is not a parade element");
    phi[e] = *target;
  }
  std::vector<ElemId> f_map(wa.h->size());
  f_map[wa.h->unit()] = parade.pg->unit();
  for (ElemId e = 0; e < wa.h->size(); ++e) {
    auto [pt, a] = wa.index.origin[e];
    if (pt < 0) continue;
    const QVector& x = scene.offsets[static_cast<std::size_t>(pt)];
    Similarity sim = Similarity::translation_by(-x)
                         .then(stab_sorted[static_cast<std::size_t>(a)])
                         .then(Similarity::translation_by(x));
    auto target = parade.pg->find_ambient_sim(sim);
    if (!target) fail(Errc::HypothesisViolation, "conjugated base symmetry is not a parade element");
    f_map[e] = *target;
  }
  auto induced = induced_map(*sdp, parade.pg, phi, f_map, depth);

  CheckReport& report = data.report;
  report.check_id = "T12_3";
  report.subject = "translated-copies figure";
  report.depth = depth;
  report.notes.push_back("|SDP| = " + std::to_string(data.sdp_count) +
                         ", |parade| = " + std::to_string(data.parade_count));
  if (!induced.pass()) {
    report.verdict = "fail";
    report.witnesses = induced.issues;
    return data;
  }
  report.notes.push_back("induced map psi: all commuting and homomorphism checks pass");

  // The gluing relation (a = a', (x'-x) a = y'-y) must match the psi-kernel.
  auto gluing_related = [&](ElemId e1, ElemId e2) {
    auto [p1, a1] = wa.index.origin[sdp->h_of(e1)];
    auto [p2, a2] = wa.index.origin[sdp->h_of(e2)];
    if (a1 != a2) return false;
    const QVector& g1 = v.differences[sdp->f_of(e1)];
    const QVector& g2 = v.differences[sdp->f_of(e2)];
    if (p1 < 0) return g1 == g2;  // both carry the unit
    const QVector& y1 = scene.offsets[static_cast<std::size_t>(p1)];
    const QVector& y2 = scene.offsets[static_cast<std::size_t>(p2)];
    QVector x1 = y1 - g1, x2 = y2 - g2;
    return (x2 - x1) * stab_sorted[static_cast<std::size_t>(a1)].linear() == y2 - y1;
  };
  bool kernel_match = true;
  std::vector<std::pair<ElemId, ElemId>> pairs;
  for (ElemId e1 = 0; e1 < sdp->size() && kernel_match; ++e1)
    for (ElemId e2 = 0; e2 < sdp->size(); ++e2) {
      bool rel = gluing_related(e1, e2);
      bool ker = induced.psi[e1] == induced.psi[e2];
      if (rel != ker) {
        kernel_match = false;
        report.witnesses.push_back("gluing relation disagrees with psi at " + sdp->label(e1) +
                                   " vs " + sdp->label(e2));
        break;
      }
      if (rel && e1 < e2) pairs.emplace_back(e1, e2);
    }
  report.notes.push_back(std::string("gluing relation matches the psi-kernel: ") +
                         (kernel_match ? "yes" : "NO"));

  auto q = quotient(sdp, pairs, std::min(depth, 3));
  data.quotient_count = q->size();
  report.notes.push_back("|quotient| = " + std::to_string(data.quotient_count));
  bool counts = data.quotient_count == data.parade_count;
  auto iso = iso_search(*q, *parade.pg, IsoOptions{std::min(depth, 3), 4000000});
  if (iso.verdict == IsoVerdict::Inconclusive) {
    report.verdict = "inconclusive-at-depth";
    return data;
  }
  report.verdict =
      (kernel_match && counts && iso.verdict == IsoVerdict::Isomorphic) ? "pass" : "fail";
  report.outcome = "parade isomorphic to the glued semidirect product";
  return data;
}

CrossCheckData cross_check_P7_6(const Figure& figure, TransformClass cls, int depth) {
  CrossCheckData data;
  require_two_components(figure, Theorem::P7_6);
  const auto& cc = figure.components();
  if (!maps_between(cc[0], cc[1], cls).empty())
    fail(Errc::HypothesisViolation, "components are congruent; the union model needs non-congruent ones");
  auto parade = parade_from_figure(figure, cls);
  auto h = union_of_similarity_groups(maps_between(cc[0], cc[0], cls), maps_between(cc[1], cc[1], cls));
  data.parade_count = parade.pg->size();
  data.model_count = h->size();
  CheckReport& report = data.report;
  report.check_id = "P7_6";
  report.subject = "two non-congruent components";
  report.depth = depth;
  report.notes.push_back("|parade| = " + std::to_string(data.parade_count) +
                         ", |G+ u G-| = " + std::to_string(data.model_count));
  auto iso = iso_search(*h, *parade.pg, IsoOptions{depth, 4000000});
  report.verdict = iso.verdict == IsoVerdict::Isomorphic
                       ? "pass"
                       : (iso.verdict == IsoVerdict::Inconclusive ? "inconclusive-at-depth" : "fail");
  report.outcome = "parade isomorphic to the stabilizer union";
  return data;
}

}  // namespace

CrossCheckData cross_check(const Figure& figure, Theorem t, TransformClass cls, int depth,
                           const TranslatedScene* translated) {
  switch (t) {
    case Theorem::T8_4: return cross_check_T8_4(figure, cls, depth);
    case Theorem::T12_1: return cross_check_T12(figure, Theorem::T12_1, cls, depth);
    case Theorem::T12_2: return cross_check_T12(figure, Theorem::T12_2, cls, depth);
    case Theorem::T12_3:
      if (!translated)
        fail(Errc::HypothesisViolation, "T12_3 needs the translated-copies scene data");
      return cross_check_T12_3(*translated, cls, depth);
    case Theorem::P7_6: return cross_check_P7_6(figure, cls, depth);
  }
  fail(Errc::InvalidArgument, "unknown theorem");
}

CheckReport conjugation_invariance(const Figure& figure, TransformClass cls, const Similarity& a,
                                   int depth) {
  CheckReport report;
  report.check_id = "conjugation-invariance";
  report.subject = "figure";
  report.depth = depth;
  auto before = parade_from_figure(figure, cls);
  auto after = parade_from_figure(figure.transformed(a), cls);
  report.notes.push_back("|P(F)| = " + std::to_string(before.pg->size()) +
                         ", |P(Fa)| = " + std::to_string(after.pg->size()));
  if (before.pg->size() != after.pg->size()) {
    report.verdict = "fail";
    report.witnesses.push_back("cardinality changed under conjugation");
    return report;
  }
  std::vector<ElemId> mapping(before.pg->size());
  for (ElemId e = 0; e < before.pg->size(); ++e) {
    auto img = after.pg->find_ambient_sim(before.pg->ambient_sim(e).conjugated_by(a));
    if (!img) {
      report.verdict = "fail";
      report.witnesses.push_back("conjugate of " + before.pg->label(e) + " missing");
      return report;
    }
    mapping[e] = *img;
  }
  bool ok = verify_isomorphism(*before.pg, *after.pg, mapping, depth);
  report.verdict = ok ? "pass" : "fail";
  report.outcome = "pi -> a^-1 pi a is an isomorphism";
  return report;
}

PSet point_action_pset(const ParadeGroup& parade) {
  const Figure& fig = parade.figure;
  std::vector<std::string> names;
  std::vector<std::pair<std::size_t, LabeledPoint>> pts;  // (component index, point)
  for (std::size_t c = 0; c < fig.components().size(); ++c)
    for (const auto& p : fig.components()[c].points()) {
      names.push_back(fig.components()[c].id() + ":" + p.pos.str() +
                      (p.label.empty() ? "" : ":" + p.label));
      pts.push_back({c, p});
    }
  auto point_index = [&](const LabeledPoint& p) -> std::int32_t {
    for (std::size_t i = 0; i < pts.size(); ++i)
      if (pts[i].second == p) return static_cast<std::int32_t>(i);
    return -1;
  };
  std::vector<std::vector<std::int32_t>> step(parade.pg->size(),
                                              std::vector<std::int32_t>(pts.size(), -1));
  for (ElemId e = 0; e < parade.pg->size(); ++e) {
    const Similarity& g = parade.pg->ambient_sim(e);
    for (std::size_t i = 0; i < pts.size(); ++i) {
      if (parade.pg->dest_chart(e, pts[i].first) < 0) continue;
      step[e][i] = point_index({g.apply(pts[i].second.pos), pts[i].second.label});
    }
  }
  return PSet(parade.pg, std::move(names), std::move(step));
}

}  // namespace parade
