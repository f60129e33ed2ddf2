#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <vector>

#include "parade/error.hpp"

namespace parade {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;  // always gcd-reduced, denominator > 0

int sign_of(const Rational& r);
std::string rational_to_string(const Rational& r);
// Exact square root of a non-negative rational, if one exists.
std::optional<Rational> rational_sqrt(const Rational& r);

// Exact number a + b*sqrt(m) in the real quadratic extension Q(sqrt(m)).
// m is a square-free integer >= 2, or 0 for plain rationals. Values with
// b == 0 are canonicalized to m == 0 and mix freely with any field; two
// genuinely irrational values from different fields raise MixedField.
class QuadScalar {
 public:
  QuadScalar() : a_(0), b_(0), m_(0) {}
  QuadScalar(Rational a) : a_(std::move(a)), b_(0), m_(0) {}  // NOLINT(google-explicit-constructor)
  QuadScalar(long long v) : a_(v), b_(0), m_(0) {}            // NOLINT(google-explicit-constructor)
  QuadScalar(Rational a, Rational b, long m);

  const Rational& rat_part() const { return a_; }
  const Rational& irr_part() const { return b_; }
  long field_m() const { return m_; }
  bool is_rational() const { return b_ == 0; }
  bool is_zero() const { return a_ == 0 && b_ == 0; }

  QuadScalar operator-() const { return QuadScalar(-a_, -b_, m_); }
  QuadScalar conjugate() const { return QuadScalar(a_, -b_, m_); }

  friend QuadScalar operator+(const QuadScalar& x, const QuadScalar& y);
  friend QuadScalar operator-(const QuadScalar& x, const QuadScalar& y);
  friend QuadScalar operator*(const QuadScalar& x, const QuadScalar& y);
  friend QuadScalar operator/(const QuadScalar& x, const QuadScalar& y);
  QuadScalar& operator+=(const QuadScalar& y) { return *this = *this + y; }
  QuadScalar& operator-=(const QuadScalar& y) { return *this = *this - y; }
  QuadScalar& operator*=(const QuadScalar& y) { return *this = *this * y; }
  QuadScalar& operator/=(const QuadScalar& y) { return *this = *this / y; }

  friend bool operator==(const QuadScalar& x, const QuadScalar& y) {
    return x.a_ == y.a_ && x.b_ == y.b_ && (x.b_ == 0 || x.m_ == y.m_);
  }
  friend bool operator!=(const QuadScalar& x, const QuadScalar& y) { return !(x == y); }

  // Exact sign of the real value a + b*sqrt(m).
  int sign() const;
  // Total order by real value (values are equal iff representations are).
  friend bool operator<(const QuadScalar& x, const QuadScalar& y) { return (x - y).sign() < 0; }
  friend bool operator<=(const QuadScalar& x, const QuadScalar& y) { return (x - y).sign() <= 0; }
  friend bool operator>(const QuadScalar& x, const QuadScalar& y) { return (x - y).sign() > 0; }
  friend bool operator>=(const QuadScalar& x, const QuadScalar& y) { return (x - y).sign() >= 0; }

  QuadScalar inverse() const;
  // Non-negative square root inside the same field, if it exists there.
  std::optional<QuadScalar> sqrt_in_field() const;

  // Canonical text form: "p/q", "r/s*sqrt(m)" or "p/q+r/s*sqrt(m)".
  std::string str() const;
  // Parses the scene-file scalar syntax (whitespace-insensitive, exact).
  static QuadScalar parse(const std::string& text, long expected_m);

 private:
  Rational a_, b_;
  long m_;
};

int compare(const QuadScalar& x, const QuadScalar& y);

// Row vector over QuadScalar; length = scene dimension (1..3).
class QVector {
 public:
  QVector() = default;
  explicit QVector(std::size_t d) : e_(d) {}
  explicit QVector(std::vector<QuadScalar> entries) : e_(std::move(entries)) {}

  std::size_t dim() const { return e_.size(); }
  const QuadScalar& operator[](std::size_t i) const { return e_[i]; }
  QuadScalar& operator[](std::size_t i) { return e_[i]; }
  const std::vector<QuadScalar>& entries() const { return e_; }

  friend QVector operator+(const QVector& x, const QVector& y);
  friend QVector operator-(const QVector& x, const QVector& y);
  QVector operator-() const;
  friend QVector operator*(const QVector& x, const QuadScalar& c);
  friend bool operator==(const QVector& x, const QVector& y) { return x.e_ == y.e_; }
  friend bool operator!=(const QVector& x, const QVector& y) { return !(x == y); }

  QuadScalar dot(const QVector& y) const;
  QuadScalar squared_norm() const { return dot(*this); }
  bool is_zero() const;
  std::string str() const;

 private:
  std::vector<QuadScalar> e_;
};

int compare(const QVector& x, const QVector& y);  // lexicographic by value

// Dense d x d matrix acting on row vectors from the right: v -> v*M.
class QMatrix {
 public:
  QMatrix() = default;
  explicit QMatrix(std::size_t d) : d_(d), e_(d * d) {}

  static QMatrix identity(std::size_t d);

  std::size_t dim() const { return d_; }
  const QuadScalar& at(std::size_t i, std::size_t j) const { return e_[i * d_ + j]; }
  QuadScalar& at(std::size_t i, std::size_t j) { return e_[i * d_ + j]; }

  QMatrix transpose() const;
  QuadScalar det() const;
  bool is_identity() const;

  friend QMatrix operator*(const QMatrix& x, const QMatrix& y);
  friend QVector operator*(const QVector& v, const QMatrix& m);
  friend QMatrix operator*(const QMatrix& m, const QuadScalar& c);
  friend bool operator==(const QMatrix& x, const QMatrix& y) { return x.d_ == y.d_ && x.e_ == y.e_; }
  friend bool operator!=(const QMatrix& x, const QMatrix& y) { return !(x == y); }

  // M * M^T == c * I, exactly.
  bool is_scaled_orthogonal(const QuadScalar& c) const;
  bool is_orthogonal() const { return is_scaled_orthogonal(QuadScalar(1)); }

  std::string str() const;

 private:
  std::size_t d_ = 0;
  std::vector<QuadScalar> e_;
};

int compare(const QMatrix& x, const QMatrix& y);

bool is_square_free(long m);

}  // namespace parade
