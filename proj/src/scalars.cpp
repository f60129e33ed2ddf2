#include "parade/scalars.hpp"

#include <boost/multiprecision/integer.hpp>

#include <cctype>
#include <sstream>

namespace parade {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::MixedField: return "MixedField";
    case Errc::NoSolution: return "NoSolution";
    case Errc::Underdetermined: return "Underdetermined";
    case Errc::InfiniteStabilizer: return "InfiniteStabilizer";
    case Errc::FieldEscape: return "FieldEscape";
    case Errc::UnknownElement: return "UnknownElement";
    case Errc::NotAWord: return "NotAWord";
    case Errc::NotACongruence: return "NotACongruence";
    case Errc::CandidateMismatch: return "CandidateMismatch";
    case Errc::NotASubgroup: return "NotASubgroup";
    case Errc::InvalidFactorSet: return "InvalidFactorSet";
    case Errc::NotAMap: return "NotAMap";
    case Errc::NotFriendly: return "NotFriendly";
    case Errc::InvalidAction: return "InvalidAction";
    case Errc::ActionDomainError: return "ActionDomainError";
    case Errc::HypothesisViolation: return "HypothesisViolation";
    case Errc::PremiseViolation: return "PremiseViolation";
    case Errc::ParseError: return "ParseError";
    case Errc::InvalidArgument: return "InvalidArgument";
  }
  return "Error";
}

int sign_of(const Rational& r) {
  if (r == 0) return 0;
  return r < 0 ? -1 : 1;
}

std::string rational_to_string(const Rational& r) {
  std::ostringstream os;
  os << numerator(r);
  if (denominator(r) != 1) os << "/" << denominator(r);
  return os.str();
}

std::optional<Rational> rational_sqrt(const Rational& r) {
  if (r < 0) return std::nullopt;
  if (r == 0) return Rational(0);
  Integer n = numerator(r), d = denominator(r);
  Integer sn = boost::multiprecision::sqrt(n);
  Integer sd = boost::multiprecision::sqrt(d);
  if (sn * sn != n || sd * sd != d) return std::nullopt;
  return Rational(sn, sd);
}

bool is_square_free(long m) {
  if (m < 0) return false;
  for (long p = 2; p * p <= m; ++p)
    if (m % (p * p) == 0) return false;
  return true;
}

QuadScalar::QuadScalar(Rational a, Rational b, long m) : a_(std::move(a)), b_(std::move(b)), m_(m) {
  if (b_ == 0) {
    m_ = 0;
  } else if (m_ < 2 || !is_square_free(m_)) {
    fail(Errc::InvalidArgument, "field constant must be 0 or a square-free integer >= 2");
  }
}

namespace {

long promote_field(const QuadScalar& x, const QuadScalar& y) {
  if (x.is_rational()) return y.field_m();
  if (y.is_rational()) return x.field_m();
  if (x.field_m() != y.field_m())
    fail(Errc::MixedField, "cannot combine sqrt(" + std::to_string(x.field_m()) + ") with sqrt(" +
                               std::to_string(y.field_m()) + ")");
  return x.field_m();
}

}  // namespace

QuadScalar operator+(const QuadScalar& x, const QuadScalar& y) {
  long m = promote_field(x, y);
  return QuadScalar(x.a_ + y.a_, x.b_ + y.b_, m);
}

QuadScalar operator-(const QuadScalar& x, const QuadScalar& y) {
  long m = promote_field(x, y);
  return QuadScalar(x.a_ - y.a_, x.b_ - y.b_, m);
}

QuadScalar operator*(const QuadScalar& x, const QuadScalar& y) {
  long m = promote_field(x, y);
  return QuadScalar(x.a_ * y.a_ + x.b_ * y.b_ * m, x.a_ * y.b_ + x.b_ * y.a_, m);
}

QuadScalar QuadScalar::inverse() const {
  if (is_zero()) fail(Errc::DivisionByZero, "inverse of zero");
  // 1/(a + b sqrt m) = (a - b sqrt m) / (a^2 - b^2 m); the norm is nonzero
  // because sqrt(m) is irrational for square-free m >= 2.
  Rational norm = a_ * a_ - b_ * b_ * m_;
  return QuadScalar(a_ / norm, -b_ / norm, m_);
}

QuadScalar operator/(const QuadScalar& x, const QuadScalar& y) {
  if (y.is_zero()) fail(Errc::DivisionByZero, "division by zero");
  return x * y.inverse();
}

int QuadScalar::sign() const {
  if (b_ == 0) return sign_of(a_);
  if (a_ == 0) return sign_of(b_);
  int sa = sign_of(a_), sb = sign_of(b_);
  if (sa == sb) return sa;
  // a and b have opposite signs; compare |a| with |b| sqrt(m) exactly.
  int cmp = sign_of(a_ * a_ - b_ * b_ * m_);  // sign of |a|^2 - |b|^2 m
  return cmp == 0 ? 0 : (cmp > 0 ? sa : sb);
}

int compare(const QuadScalar& x, const QuadScalar& y) { return (x - y).sign(); }

std::optional<QuadScalar> QuadScalar::sqrt_in_field() const {
  int s = sign();
  if (s < 0) return std::nullopt;
  if (s == 0) return QuadScalar(0);
  if (b_ == 0) {
    if (auto r = rational_sqrt(a_)) return QuadScalar(*r);
    // sqrt(a) might be a pure multiple of sqrt(m) in an ambient field, but the
    // field is not recorded on rational values; the callers that need that case
    // pass values with explicit irrational parts. Try every divisor-free form:
    return std::nullopt;
  }
  // Want (p + q sqrt m)^2 = a + b sqrt m: p^2 + q^2 m = a, 2 p q = b.
  // Then p^2 is a root of 4 t^2 - 4 a t + b^2 m = 0: t = (a +- r)/2, r = sqrt(a^2 - b^2 m).
  auto r = rational_sqrt(a_ * a_ - b_ * b_ * m_);
  if (!r) return std::nullopt;
  for (int pick = 0; pick < 2; ++pick) {
    Rational t = pick == 0 ? Rational((a_ + *r) / 2) : Rational((a_ - *r) / 2);
    if (t <= 0) continue;
    auto p = rational_sqrt(t);
    if (!p) continue;
    Rational q = b_ / (2 * (*p));
    QuadScalar cand(*p, q, m_);
    if (cand * cand == *this) return cand.sign() >= 0 ? cand : -cand;
    cand = QuadScalar(-*p, -q, m_);
    if (cand * cand == *this && cand.sign() >= 0) return cand;
  }
  return std::nullopt;
}

std::string QuadScalar::str() const {
  if (b_ == 0) return rational_to_string(a_);
  std::string irr;
  if (b_ == 1)
    irr = "sqrt(" + std::to_string(m_) + ")";
  else if (b_ == -1)
    irr = "-sqrt(" + std::to_string(m_) + ")";
  else
    irr = rational_to_string(b_) + "*sqrt(" + std::to_string(m_) + ")";
  if (a_ == 0) return irr;
  return rational_to_string(a_) + (b_ > 0 ? "+" : "") + irr;
}

namespace {

struct Cursor {
  const std::string& s;
  std::size_t i = 0;

  void skip_ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool eat(char c) {
    skip_ws();
    if (i < s.size() && s[i] == c) {
      ++i;
      return true;
    }
    return false;
  }
  bool done() {
    skip_ws();
    return i >= s.size();
  }
};

Integer parse_integer(Cursor& c) {
  c.skip_ws();
  std::size_t start = c.i;
  while (c.i < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.i]))) ++c.i;
  if (c.i == start) fail(Errc::ParseError, "expected digits in scalar '" + c.s + "'");
  return Integer(c.s.substr(start, c.i - start));
}

Rational parse_rational(Cursor& c, int sgn) {
  Integer num = parse_integer(c);
  Integer den = 1;
  if (c.eat('/')) den = parse_integer(c);
  if (den == 0) fail(Errc::ParseError, "zero denominator in scalar '" + c.s + "'");
  Rational r(num, den);
  return sgn < 0 ? -r : r;
}

// One signed term: either "p/q" or "[r/s*]sqrt(m)". Returns (coefficient, is_sqrt_term, m).
struct Term {
  Rational coeff;
  bool has_sqrt = false;
  long m = 0;
};

Term parse_term(Cursor& c, int sgn) {
  Term t;
  c.skip_ws();
  if (c.s.compare(c.i, 4, "sqrt") == 0) {
    t.coeff = sgn;
    t.has_sqrt = true;
  } else {
    t.coeff = parse_rational(c, sgn);
    if (c.eat('*')) {
      c.skip_ws();
      if (c.s.compare(c.i, 4, "sqrt") != 0) fail(Errc::ParseError, "expected sqrt(...) after '*' in '" + c.s + "'");
      t.has_sqrt = true;
    }
  }
  if (t.has_sqrt) {
    c.i += 4;
    if (!c.eat('(')) fail(Errc::ParseError, "expected '(' after sqrt in '" + c.s + "'");
    Integer m = parse_integer(c);
    if (!c.eat(')')) fail(Errc::ParseError, "expected ')' in '" + c.s + "'");
    t.m = static_cast<long>(m);
  }
  return t;
}

}  // namespace

QuadScalar QuadScalar::parse(const std::string& text, long expected_m) {
  Cursor c{text};
  Rational a = 0, b = 0;
  long seen_m = 0;
  bool first = true;
  while (!c.done()) {
    int sgn = 1;
    if (c.eat('+')) {
      sgn = 1;
    } else if (c.eat('-')) {
      sgn = -1;
    } else if (!first) {
      fail(Errc::ParseError, "expected '+' or '-' in scalar '" + text + "'");
    }
    Term t = parse_term(c, sgn);
    if (t.has_sqrt) {
      if (t.m == 1 || t.m == 0) {
        // sqrt(0)=0 and sqrt(1)=1 are rational; fold them in.
        if (t.m == 1) a += t.coeff;
      } else {
        if (!is_square_free(t.m)) fail(Errc::ParseError, "field constant must be square-free: sqrt(" + std::to_string(t.m) + ")");
        if (seen_m != 0 && seen_m != t.m) fail(Errc::MixedField, "mixed radicals in scalar '" + text + "'");
        seen_m = t.m;
        b += t.coeff;
      }
    } else {
      a += t.coeff;
    }
    first = false;
  }
  if (first) fail(Errc::ParseError, "empty scalar");
  if (seen_m != 0 && expected_m != seen_m)
    fail(Errc::MixedField, "scalar '" + text + "' uses sqrt(" + std::to_string(seen_m) +
                               ") but the scene field is m=" + std::to_string(expected_m));
  if (b == 0) return QuadScalar(a);
  return QuadScalar(a, b, seen_m);
}

QVector operator+(const QVector& x, const QVector& y) {
  QVector r(x.dim());
  for (std::size_t i = 0; i < x.dim(); ++i) r[i] = x[i] + y[i];
  return r;
}

QVector operator-(const QVector& x, const QVector& y) {
  QVector r(x.dim());
  for (std::size_t i = 0; i < x.dim(); ++i) r[i] = x[i] - y[i];
  return r;
}

QVector QVector::operator-() const {
  QVector r(dim());
  for (std::size_t i = 0; i < dim(); ++i) r[i] = -e_[i];
  return r;
}

QVector operator*(const QVector& x, const QuadScalar& c) {
  QVector r(x.dim());
  for (std::size_t i = 0; i < x.dim(); ++i) r[i] = x[i] * c;
  return r;
}

QuadScalar QVector::dot(const QVector& y) const {
  QuadScalar acc(0);
  for (std::size_t i = 0; i < dim(); ++i) acc += e_[i] * y[i];
  return acc;
}

bool QVector::is_zero() const {
  for (const auto& c : e_)
    if (!c.is_zero()) return false;
  return true;
}

std::string QVector::str() const {
  std::string s = "(";
  for (std::size_t i = 0; i < dim(); ++i) {
    if (i) s += ", ";
    s += e_[i].str();
  }
  return s + ")";
}

int compare(const QVector& x, const QVector& y) {
  if (x.dim() != y.dim()) return x.dim() < y.dim() ? -1 : 1;
  for (std::size_t i = 0; i < x.dim(); ++i) {
    int c = compare(x[i], y[i]);
    if (c != 0) return c;
  }
  return 0;
}

QMatrix QMatrix::identity(std::size_t d) {
  QMatrix m(d);
  for (std::size_t i = 0; i < d; ++i) m.at(i, i) = QuadScalar(1);
  return m;
}

QMatrix QMatrix::transpose() const {
  QMatrix r(d_);
  for (std::size_t i = 0; i < d_; ++i)
    for (std::size_t j = 0; j < d_; ++j) r.at(j, i) = at(i, j);
  return r;
}

QuadScalar QMatrix::det() const {
  switch (d_) {
    case 0: return QuadScalar(1);
    case 1: return at(0, 0);
    case 2: return at(0, 0) * at(1, 1) - at(0, 1) * at(1, 0);
    case 3:
      return at(0, 0) * (at(1, 1) * at(2, 2) - at(1, 2) * at(2, 1)) -
             at(0, 1) * (at(1, 0) * at(2, 2) - at(1, 2) * at(2, 0)) +
             at(0, 2) * (at(1, 0) * at(2, 1) - at(1, 1) * at(2, 0));
    default: fail(Errc::InvalidArgument, "determinant supported for d <= 3");
  }
}

bool QMatrix::is_identity() const { return *this == identity(d_); }

QMatrix operator*(const QMatrix& x, const QMatrix& y) {
  QMatrix r(x.d_);
  for (std::size_t i = 0; i < x.d_; ++i)
    for (std::size_t j = 0; j < x.d_; ++j) {
      QuadScalar acc(0);
      for (std::size_t k = 0; k < x.d_; ++k) acc += x.at(i, k) * y.at(k, j);
      r.at(i, j) = acc;
    }
  return r;
}

QVector operator*(const QVector& v, const QMatrix& m) {
  QVector r(m.d_);
  for (std::size_t j = 0; j < m.d_; ++j) {
    QuadScalar acc(0);
    for (std::size_t i = 0; i < m.d_; ++i) acc += v[i] * m.at(i, j);
    r[j] = acc;
  }
  return r;
}

QMatrix operator*(const QMatrix& m, const QuadScalar& c) {
  QMatrix r(m.d_);
  for (std::size_t i = 0; i < m.d_; ++i)
    for (std::size_t j = 0; j < m.d_; ++j) r.at(i, j) = m.at(i, j) * c;
  return r;
}

bool QMatrix::is_scaled_orthogonal(const QuadScalar& c) const {
  QMatrix g = *this * transpose();
  for (std::size_t i = 0; i < d_; ++i)
    for (std::size_t j = 0; j < d_; ++j) {
      const QuadScalar want = i == j ? c : QuadScalar(0);
      if (g.at(i, j) != want) return false;
    }
  return true;
}

std::string QMatrix::str() const {
  std::string s = "[";
  for (std::size_t i = 0; i < d_; ++i) {
    if (i) s += "; ";
    for (std::size_t j = 0; j < d_; ++j) {
      if (j) s += ", ";
      s += at(i, j).str();
    }
  }
  return s + "]";
}

int compare(const QMatrix& x, const QMatrix& y) {
  if (x.dim() != y.dim()) return x.dim() < y.dim() ? -1 : 1;
  for (std::size_t i = 0; i < x.dim(); ++i)
    for (std::size_t j = 0; j < x.dim(); ++j) {
      int c = compare(x.at(i, j), y.at(i, j));
      if (c != 0) return c;
    }
  return 0;
}

}  // namespace parade
