#include "parade/geometry.hpp"

#include <algorithm>
#include <cstddef>

namespace parade {

const char* transform_class_name(TransformClass c) {
  switch (c) {
    case TransformClass::Euclidean: return "euclidean";
    case TransformClass::Motion: return "motion";
    case TransformClass::Similarity: return "similarity";
  }
  return "?";
}

std::optional<TransformClass> transform_class_from_name(const std::string& s) {
  if (s == "euclidean") return TransformClass::Euclidean;
  if (s == "motion") return TransformClass::Motion;
  if (s == "similarity") return TransformClass::Similarity;
  return std::nullopt;
}

Similarity::Similarity(QuadScalar scale, QMatrix linear, QVector translation)
    : scale_(std::move(scale)), linear_(std::move(linear)), translation_(std::move(translation)) {
  if (scale_.sign() <= 0) fail(Errc::InvalidArgument, "similarity scale must be positive");
  if (!linear_.is_orthogonal()) fail(Errc::InvalidArgument, "linear part must be orthogonal");
  if (translation_.dim() != linear_.dim()) fail(Errc::InvalidArgument, "dimension mismatch");
}

Similarity Similarity::identity(std::size_t d) {
  return Similarity(QuadScalar(1), QMatrix::identity(d), QVector(d));
}

Similarity Similarity::translation_by(const QVector& v) {
  return Similarity(QuadScalar(1), QMatrix::identity(v.dim()), v);
}

QVector Similarity::apply(const QVector& x) const { return (x * linear_) * scale_ + translation_; }

Similarity Similarity::then(const Similarity& h) const {
  // x.(g h) = (x.g).h
  return Similarity(scale_ * h.scale_, linear_ * h.linear_,
                    (translation_ * h.linear_) * h.scale_ + h.translation_);
}

Similarity Similarity::inverse() const {
  QuadScalar inv = scale_.inverse();
  QMatrix lt = linear_.transpose();
  return Similarity(inv, lt, -((translation_ * lt) * inv));
}

Similarity Similarity::conjugated_by(const Similarity& a) const {
  return a.inverse().then(*this).then(a);
}

std::string Similarity::str() const {
  std::string s;
  if (scale_ != QuadScalar(1)) s += "scale " + scale_.str() + " ";
  s += "lin " + linear_.str() + " + " + translation_.str();
  return s;
}

int compare(const Similarity& g, const Similarity& h) {
  if (int c = compare(g.scale(), h.scale())) return c;
  if (int c = compare(g.linear(), h.linear())) return c;
  return compare(g.translation(), h.translation());
}

Similarity sim_compose(const Similarity& g, const Similarity& h) { return g.then(h); }
Similarity sim_inverse(const Similarity& g) { return g.inverse(); }

int compare(const LabeledPoint& x, const LabeledPoint& y) {
  if (x.label != y.label) return x.label < y.label ? -1 : 1;
  return compare(x.pos, y.pos);
}

Component::Component(std::string id, std::vector<LabeledPoint> points)
    : id_(std::move(id)), points_(std::move(points)) {
  std::sort(points_.begin(), points_.end(),
            [](const LabeledPoint& a, const LabeledPoint& b) { return compare(a, b) < 0; });
  for (std::size_t i = 0; i + 1 < points_.size(); ++i)
    if (points_[i] == points_[i + 1])
      fail(Errc::InvalidArgument, "component '" + id_ + "' has a duplicate labeled point");
  if (points_.empty()) fail(Errc::InvalidArgument, "component '" + id_ + "' has no points");
  for (const auto& p : points_)
    if (p.pos.dim() != points_[0].pos.dim())
      fail(Errc::InvalidArgument, "component '" + id_ + "' mixes dimensions");
}

namespace {

std::size_t affine_rank(const std::vector<LabeledPoint>& pts) {
  if (pts.empty()) return 0;
  const std::size_t d = pts[0].pos.dim();
  std::vector<QVector> rows;
  for (std::size_t i = 1; i < pts.size(); ++i) rows.push_back(pts[i].pos - pts[0].pos);
  // Plain Gaussian elimination rank.
  std::size_t rank = 0;
  for (std::size_t col = 0; col < d; ++col) {
    std::size_t pivot = rows.size();
    for (std::size_t i = rank; i < rows.size(); ++i)
      if (!rows[i][col].is_zero()) {
        pivot = i;
        break;
      }
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    QuadScalar inv = rows[rank][col].inverse();
    for (std::size_t i = rank + 1; i < rows.size(); ++i) {
      if (rows[i][col].is_zero()) continue;
      QuadScalar f = rows[i][col] * inv;
      rows[i] = rows[i] - rows[rank] * f;
    }
    ++rank;
    if (rank == rows.size()) break;
  }
  return rank;
}

}  // namespace

void Component::validate() const {
  const std::size_t d = dim();
  std::size_t rank = affine_rank(points_);
  if (rank + 1 < d)
    fail(Errc::InfiniteStabilizer,
         "component '" + id_ + "' spans codimension >= 2; its stabilizer is infinite");
}

QVector Component::centroid() const {
  QVector acc(dim());
  for (const auto& p : points_) acc = acc + p.pos;
  return acc * QuadScalar(Rational(1, static_cast<long>(points_.size())));
}

QuadScalar Component::squared_diameter() const {
  QuadScalar best(0);
  for (std::size_t i = 0; i < points_.size(); ++i)
    for (std::size_t j = i + 1; j < points_.size(); ++j) {
      QuadScalar d2 = (points_[i].pos - points_[j].pos).squared_norm();
      if (compare(d2, best) > 0) best = d2;
    }
  return best;
}

Component Component::transformed(const Similarity& g, std::string new_id) const {
  std::vector<LabeledPoint> pts;
  pts.reserve(points_.size());
  for (const auto& p : points_) pts.push_back({g.apply(p.pos), p.label});
  return Component(new_id.empty() ? id_ : std::move(new_id), std::move(pts));
}

QVector centroid(const Component& k) { return k.centroid(); }
QuadScalar squared_diameter(const Component& k) { return k.squared_diameter(); }

Figure::Figure(std::vector<Component> components) : components_(std::move(components)) {
  if (components_.empty()) fail(Errc::InvalidArgument, "figure needs at least one component");
}

void Figure::validate() const {
  for (std::size_t i = 0; i < components_.size(); ++i) {
    components_[i].validate();
    for (std::size_t j = i + 1; j < components_.size(); ++j) {
      if (components_[i].id() == components_[j].id())
        fail(Errc::InvalidArgument, "duplicate component id '" + components_[i].id() + "'");
      for (const auto& p : components_[i].points())
        for (const auto& q : components_[j].points())
          if (p == q)
            fail(Errc::InvalidArgument, "components '" + components_[i].id() + "' and '" +
                                            components_[j].id() + "' share a labeled point");
    }
    if (components_[i].dim() != components_[0].dim())
      fail(Errc::InvalidArgument, "components of mixed dimension");
  }
}

int Figure::find_component(const Component& image) const {
  for (std::size_t i = 0; i < components_.size(); ++i)
    if (components_[i].same_point_set(image)) return static_cast<int>(i);
  return -1;
}

Figure Figure::transformed(const Similarity& g) const {
  std::vector<Component> out;
  out.reserve(components_.size());
  for (const auto& k : components_) out.push_back(k.transformed(g));
  return Figure(std::move(out));
}

std::vector<LabeledPoint> Figure::all_points() const {
  std::vector<LabeledPoint> pts;
  for (const auto& k : components_)
    pts.insert(pts.end(), k.points().begin(), k.points().end());
  return pts;
}

QVector Figure::all_points_centroid() const {
  auto pts = all_points();
  QVector acc(dim());
  for (const auto& p : pts) acc = acc + p.pos;
  return acc * QuadScalar(Rational(1, static_cast<long>(pts.size())));
}

namespace {

void sort_unique(std::vector<Similarity>& v) {
  std::sort(v.begin(), v.end(), [](const Similarity& a, const Similarity& b) { return compare(a, b) < 0; });
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

struct MatchContext {
  const std::vector<LabeledPoint>& src;
  const std::vector<LabeledPoint>& dst;
  QVector src_centroid;
  QVector dst_centroid;
  QuadScalar scale_sq;
  TransformClass cls;
  QuadScalar scale;  // sqrt of scale_sq, in field
  std::vector<int> assign;
  std::vector<bool> used;
  MapsResult* out = nullptr;
};

void try_assignment(MatchContext& c) {
  std::vector<QVector> s, t;
  s.reserve(c.src.size());
  for (std::size_t i = 0; i < c.src.size(); ++i) {
    s.push_back(c.src[i].pos);
    t.push_back(c.dst[static_cast<std::size_t>(c.assign[i])].pos);
  }
  AffineSolveResult sol;
  try {
    sol = solve_affine_map(s, t, c.scale_sq);
  } catch (const Error& e) {
    if (e.code() == Errc::NoSolution) return;
    if (e.code() == Errc::Underdetermined) {
      // Single point in R^1 under a known scale: completions are +-scale.
      if (s[0].dim() == 1) {
        for (int sg = 0; sg < 2; ++sg) {
          QMatrix m(1);
          m.at(0, 0) = sg == 0 ? c.scale : -c.scale;
          sol.maps.emplace_back(m, t[0] - s[0] * m);
        }
      } else {
        throw;
      }
    } else {
      throw;
    }
  }
  if (sol.field_escape) c.out->field_escape = true;
  for (auto& [m, tr] : sol.maps) {
    if (!m.is_scaled_orthogonal(c.scale_sq)) continue;
    QMatrix a = m * c.scale.inverse();
    Similarity g(c.scale, a, tr);
    if (c.cls == TransformClass::Motion && !g.is_motion()) continue;
    c.out->maps.push_back(std::move(g));
  }
}

void search(MatchContext& c, std::size_t i) {
  if (i == c.src.size()) {
    try_assignment(c);
    return;
  }
  for (std::size_t j = 0; j < c.dst.size(); ++j) {
    if (c.used[j]) continue;
    if (c.src[i].label != c.dst[j].label) continue;
    // centroid anchor: |p - z|^2 * scale^2 must match |q - z'|^2
    if ((c.dst[j].pos - c.dst_centroid).squared_norm() !=
        (c.src[i].pos - c.src_centroid).squared_norm() * c.scale_sq)
      continue;
    bool ok = true;
    for (std::size_t k = 0; k < i && ok; ++k) {
      if ((c.dst[j].pos - c.dst[static_cast<std::size_t>(c.assign[k])].pos).squared_norm() !=
          (c.src[i].pos - c.src[k].pos).squared_norm() * c.scale_sq)
        ok = false;
    }
    if (!ok) continue;
    c.assign[i] = static_cast<int>(j);
    c.used[j] = true;
    search(c, i + 1);
    c.used[j] = false;
  }
}

}  // namespace

MapsResult maps_between_ex(const Component& src, const Component& dst, TransformClass cls) {
  src.validate();
  dst.validate();
  MapsResult result;
  if (src.points().size() != dst.points().size()) return result;

  QuadScalar scale_sq(1);
  if (cls == TransformClass::Similarity) {
    QuadScalar ds = src.squared_diameter(), dd = dst.squared_diameter();
    if (ds.is_zero() && dd.is_zero())
      fail(Errc::InfiniteStabilizer, "similarity maps between single points form an infinite set");
    if (ds.is_zero() || dd.is_zero()) return result;
    scale_sq = dd / ds;
  } else {
    if (src.squared_diameter() != dst.squared_diameter()) return result;
  }
  auto scale = scale_sq.sqrt_in_field();
  if (!scale) {
    result.field_escape = true;
    return result;
  }

  MatchContext c{src.points(), dst.points(), src.centroid(),  dst.centroid(), scale_sq, cls,
                 *scale,       {},           {},              &result};
  c.assign.assign(src.points().size(), -1);
  c.used.assign(dst.points().size(), false);
  search(c, 0);
  sort_unique(result.maps);
  return result;
}

std::vector<Similarity> maps_between(const Component& src, const Component& dst, TransformClass cls) {
  return maps_between_ex(src, dst, cls).maps;
}

std::vector<Similarity> global_group(const Figure& figure, TransformClass cls) {
  figure.validate();
  const auto& cc = figure.components();
  std::vector<Similarity> candidates;
  for (const auto& k : cc) {
    auto m = maps_between(cc[0], k, cls);
    candidates.insert(candidates.end(), m.begin(), m.end());
  }
  sort_unique(candidates);
  std::vector<Similarity> out;
  for (const auto& g : candidates) {
    bool global = true;
    for (const auto& k : cc)
      if (figure.find_component(k.transformed(g)) < 0) {
        global = false;
        break;
      }
    if (global) out.push_back(g);
  }
  return out;
}

}  // namespace parade
