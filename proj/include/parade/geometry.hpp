#pragma once

#include <optional>
#include <string>
#include <vector>

#include "parade/linalg.hpp"
#include "parade/scalars.hpp"

namespace parade {

enum class TransformClass { Euclidean, Motion, Similarity };

const char* transform_class_name(TransformClass c);
std::optional<TransformClass> transform_class_from_name(const std::string& s);

// Scaled orthogonal affine map of R^d acting on row vectors:
//   x -> scale * (x * linear) + translation, scale > 0, linear orthogonal.
class Similarity {
 public:
  Similarity() = default;
  Similarity(QuadScalar scale, QMatrix linear, QVector translation);

  static Similarity identity(std::size_t d);
  static Similarity translation_by(const QVector& v);

  std::size_t dim() const { return linear_.dim(); }
  const QuadScalar& scale() const { return scale_; }
  const QMatrix& linear() const { return linear_; }
  const QVector& translation() const { return translation_; }

  bool is_isometry() const { return scale_ == QuadScalar(1); }
  bool is_motion() const { return is_isometry() && linear_.det() == QuadScalar(1); }
  bool is_translation() const { return is_isometry() && linear_.is_identity(); }
  bool is_identity() const { return is_translation() && translation_.is_zero(); }
  bool fixes_origin() const { return translation_.is_zero(); }

  QVector apply(const QVector& x) const;

  // g.then(h): x -> (x.g).h, the ambient product used for words.
  Similarity then(const Similarity& h) const;
  Similarity inverse() const;
  Similarity conjugated_by(const Similarity& a) const;  // a^-1 . this . a

  friend bool operator==(const Similarity& g, const Similarity& h) {
    return g.scale_ == h.scale_ && g.linear_ == h.linear_ && g.translation_ == h.translation_;
  }
  friend bool operator!=(const Similarity& g, const Similarity& h) { return !(g == h); }

  std::string str() const;

 private:
  QuadScalar scale_ = QuadScalar(1);
  QMatrix linear_;
  QVector translation_;
};

int compare(const Similarity& g, const Similarity& h);
Similarity sim_compose(const Similarity& g, const Similarity& h);
Similarity sim_inverse(const Similarity& g);

struct LabeledPoint {
  QVector pos;
  std::string label;  // empty = unlabeled

  friend bool operator==(const LabeledPoint& x, const LabeledPoint& y) {
    return x.label == y.label && x.pos == y.pos;
  }
};

int compare(const LabeledPoint& x, const LabeledPoint& y);

// Finite labeled point set standing for one connected component of a figure.
class Component {
 public:
  Component() = default;
  Component(std::string id, std::vector<LabeledPoint> points);

  const std::string& id() const { return id_; }
  const std::vector<LabeledPoint>& points() const { return points_; }  // canonically sorted
  std::size_t dim() const { return points_.empty() ? 0 : points_[0].pos.dim(); }

  // Throws InfiniteStabilizer when the affine span has codimension >= 2.
  void validate() const;

  QVector centroid() const;
  QuadScalar squared_diameter() const;

  Component transformed(const Similarity& g, std::string new_id = {}) const;
  bool same_point_set(const Component& other) const { return points_ == other.points_; }

 private:
  std::string id_;
  std::vector<LabeledPoint> points_;
};

class Figure {
 public:
  Figure() = default;
  explicit Figure(std::vector<Component> components);

  const std::vector<Component>& components() const { return components_; }
  std::size_t dim() const { return components_.at(0).dim(); }

  void validate() const;  // ids distinct, labeled point sets pairwise disjoint, components valid

  // Index of the component whose point set equals the image, or -1.
  int find_component(const Component& image) const;

  Figure transformed(const Similarity& g) const;
  std::vector<LabeledPoint> all_points() const;
  QVector all_points_centroid() const;

 private:
  std::vector<Component> components_;
};

struct MapsResult {
  std::vector<Similarity> maps;  // duplicate-free, canonically sorted
  bool field_escape = false;     // some candidate needed a scalar outside Q(sqrt m)
};

// All g in the class with src.g == dst as labeled point sets. Exact and finite.
MapsResult maps_between_ex(const Component& src, const Component& dst, TransformClass cls);
std::vector<Similarity> maps_between(const Component& src, const Component& dst, TransformClass cls);

// All g in the class inducing a permutation of the component list.
std::vector<Similarity> global_group(const Figure& figure, TransformClass cls);

QVector centroid(const Component& k);
QuadScalar squared_diameter(const Component& k);

}  // namespace parade
