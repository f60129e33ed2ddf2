#include "parade/linalg.hpp"

#include <cstddef>

namespace parade {

QVector apply_affine(const QVector& x, const QMatrix& a, const QVector& t) { return x * a + t; }

namespace {

struct Row {
  QVector lhs;  // d coefficients
  QVector rhs;  // d right-hand sides (one linear system per matrix column)
};

// In-place row echelon over the lhs part. Returns pivot column per kept row.
// Throws NoSolution if some row reduces to 0 = nonzero.
std::vector<std::size_t> echelonize(std::vector<Row>& rows, std::size_t d) {
  std::vector<Row> kept;
  std::vector<std::size_t> pivots;
  for (std::size_t col = 0; col < d && !rows.empty(); ++col) {
    // Find a row with a nonzero entry in this column.
    std::size_t found = rows.size();
    for (std::size_t i = 0; i < rows.size(); ++i)
      if (!rows[i].lhs[col].is_zero()) {
        found = i;
        break;
      }
    if (found == rows.size()) continue;
    Row piv = rows[found];
    rows.erase(rows.begin() + static_cast<std::ptrdiff_t>(found));
    QuadScalar inv = piv.lhs[col].inverse();
    piv.lhs = piv.lhs * inv;
    piv.rhs = piv.rhs * inv;
    for (auto& r : rows) {
      if (r.lhs[col].is_zero()) continue;
      QuadScalar f = r.lhs[col];
      r.lhs = r.lhs - piv.lhs * f;
      r.rhs = r.rhs - piv.rhs * f;
    }
    for (auto& k : kept) {
      if (k.lhs[col].is_zero()) continue;
      QuadScalar f = k.lhs[col];
      k.lhs = k.lhs - piv.lhs * f;
      k.rhs = k.rhs - piv.rhs * f;
    }
    kept.push_back(std::move(piv));
    pivots.push_back(col);
  }
  for (const auto& r : rows) {
    if (!r.rhs.is_zero())
      fail(Errc::NoSolution, "inconsistent point correspondence");
  }
  rows = std::move(kept);
  return pivots;
}

// Solves M from fully reduced rows: rows[i].lhs has a 1 in pivots[i] and 0 in
// every other pivot column; with rank == d the lhs is the identity up to
// column order.
QMatrix assemble_full_rank(const std::vector<Row>& rows, const std::vector<std::size_t>& pivots,
                           std::size_t d) {
  QMatrix m(d);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < d; ++j) m.at(pivots[i], j) = rows[i].rhs[j];
  return m;
}

// Nonzero row vector orthogonal to every lhs row (rank d-1 case).
QVector null_direction(const std::vector<Row>& rows, const std::vector<std::size_t>& pivots,
                       std::size_t d) {
  std::vector<bool> is_pivot(d, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::size_t free_col = d;
  for (std::size_t j = 0; j < d; ++j)
    if (!is_pivot[j]) {
      free_col = j;
      break;
    }
  QVector n(d);
  n[free_col] = QuadScalar(1);
  for (std::size_t i = 0; i < rows.size(); ++i) n[pivots[i]] = -rows[i].lhs[free_col];
  return n;
}

}  // namespace

AffineSolveResult solve_affine_map(const std::vector<QVector>& src, const std::vector<QVector>& dst,
                                   std::optional<QuadScalar> forced_scale_sq) {
  if (src.empty() || src.size() != dst.size())
    fail(Errc::InvalidArgument, "solve_affine_map needs equally sized non-empty point lists");
  const std::size_t d = src[0].dim();

  std::vector<Row> rows;
  std::vector<QVector> us, vs;
  for (std::size_t i = 1; i < src.size(); ++i) {
    us.push_back(src[i] - src[0]);
    vs.push_back(dst[i] - dst[0]);
    rows.push_back(Row{us.back(), vs.back()});
  }
  auto pivots = echelonize(rows, d);
  const std::size_t rank = rows.size();

  AffineSolveResult result;
  auto finish = [&](const QMatrix& m) {
    QVector t = dst[0] - src[0] * m;
    result.maps.emplace_back(m, t);
  };

  if (rank == d) {
    finish(assemble_full_rank(rows, pivots, d));
    return result;
  }
  if (rank + 1 < d) fail(Errc::Underdetermined, "affine span has codimension >= 2");

  // Codimension 1: determine the scale of an orthogonal completion.
  QuadScalar scale_sq(1);
  if (forced_scale_sq) {
    scale_sq = *forced_scale_sq;
  } else if (!us.empty()) {
    std::size_t k = 0;
    while (k < us.size() && us[k].is_zero()) ++k;
    if (k == us.size()) fail(Errc::Underdetermined, "degenerate correspondence without a scale");
    scale_sq = vs[k].squared_norm() / us[k].squared_norm();
  } else {
    fail(Errc::Underdetermined, "single-point correspondence without a forced scale");
  }
  // The in-span part must be conformal with that scale, else no
  // scaled-orthogonal completion exists.
  for (std::size_t i = 0; i < us.size(); ++i)
    for (std::size_t j = i; j < us.size(); ++j)
      if (vs[i].dot(vs[j]) != us[i].dot(us[j]) * scale_sq) return result;

  QVector n = rank == 0 ? [&] {
    QVector e(d);
    e[0] = QuadScalar(1);
    return e;
  }()
                        : null_direction(rows, pivots, d);
  // Normal of the destination span: any nonzero solution of v . n' = 0.
  std::vector<Row> drows;
  for (const auto& v : vs) drows.push_back(Row{v, QVector(d)});
  auto dpivots = echelonize(drows, d);
  if (drows.size() != rank) return result;  // dst span degenerate; cannot be conformal image
  QVector nd = rank == 0 ? n : null_direction(drows, dpivots, d);

  QuadScalar c_sq = scale_sq * n.squared_norm() / nd.squared_norm();
  auto c = c_sq.sqrt_in_field();
  if (!c) {
    result.field_escape = true;
    return result;
  }
  for (int s = 0; s < 2; ++s) {
    QVector w = nd * (s == 0 ? *c : -*c);
    if (s == 1 && c->is_zero()) break;
    std::vector<Row> full = rows;
    full.push_back(Row{n, w});
    auto fpiv = echelonize(full, d);
    if (full.size() != d) fail(Errc::NoSolution, "normal direction failed to complete the system");
    finish(assemble_full_rank(full, fpiv, d));
  }
  return result;
}

}  // namespace parade
