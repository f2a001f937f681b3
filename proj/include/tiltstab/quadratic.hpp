#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include "tiltstab/rational.hpp"

namespace tiltstab {

/// Element a + b*sqrt(d) of a real quadratic field, d >= 0 square-free.
///
/// Canonical form: b == 0 exactly when d == 0, so rationals have a unique
/// representation. Two irrational operands must share the same d; mixing
/// different radicands throws MixedRadicalError. Ordering is decided exactly
/// by sign analysis, never by floating point.
class QuadraticNumber {
 public:
  QuadraticNumber() = default;
  QuadraticNumber(const Rational& r) : a_(r) {}  // NOLINT
  QuadraticNumber(long long n) : a_(n) {}        // NOLINT
  /// a + b*sqrt(d); d need not be square-free, it is normalized.
  QuadraticNumber(const Rational& a, const Rational& b, std::int64_t d);

  /// Parses "p/q", "a+b*sqrt(d)", "sqrt(d)", "-b*sqrt(d)", "a-sqrt(d)".
  static QuadraticNumber parse(std::string_view text);

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  std::int64_t d() const { return d_; }

  bool is_rational() const { return d_ == 0; }
  bool is_zero() const { return d_ == 0 && a_.is_zero(); }
  /// Throws DomainError when irrational.
  const Rational& as_rational() const;

  int sign() const;
  QuadraticNumber abs() const { return sign() < 0 ? -*this : *this; }
  QuadraticNumber conjugate() const;
  /// a^2 - d b^2
  Rational norm() const { return a_ * a_ - Rational(d_) * b_ * b_; }
  QuadraticNumber inverse() const;
  /// Largest integer <= value, exact.
  mpz_class floor() const;

  std::string str() const;
  double to_double() const;

  QuadraticNumber operator-() const;
  QuadraticNumber& operator+=(const QuadraticNumber& o);
  QuadraticNumber& operator-=(const QuadraticNumber& o);
  QuadraticNumber& operator*=(const QuadraticNumber& o);
  QuadraticNumber& operator/=(const QuadraticNumber& o);

  friend QuadraticNumber operator+(QuadraticNumber x, const QuadraticNumber& y) { return x += y; }
  friend QuadraticNumber operator-(QuadraticNumber x, const QuadraticNumber& y) { return x -= y; }
  friend QuadraticNumber operator*(QuadraticNumber x, const QuadraticNumber& y) { return x *= y; }
  friend QuadraticNumber operator/(QuadraticNumber x, const QuadraticNumber& y) { return x /= y; }

  friend bool operator==(const QuadraticNumber& x, const QuadraticNumber& y) {
    return x.d_ == y.d_ && x.a_ == y.a_ && x.b_ == y.b_;
  }
  friend std::strong_ordering operator<=>(const QuadraticNumber& x, const QuadraticNumber& y) {
    const int s = (x - y).sign();
    return s < 0 ? std::strong_ordering::less
                 : (s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  void normalize();
  std::int64_t common_radicand(const QuadraticNumber& o) const;

  Rational a_;
  Rational b_;
  std::int64_t d_ = 0;
};

std::ostream& operator<<(std::ostream& os, const QuadraticNumber& x);

/// Square root of a non-negative rational, exact. Rational whenever x is the
/// square of a rational. Throws DomainError for x < 0.
QuadraticNumber quad_sqrt(const Rational& x);

/// Exact sign of a + b*sqrt(d) in {-1, 0, +1}.
inline int quad_sign(const QuadraticNumber& x) { return x.sign(); }

/// Splits n > 0 as k^2 * s with s square-free. Throws DomainError when the
/// square-free part does not fit in int64 or n cannot be factored by trial
/// division within the internal bound.
std::pair<mpz_class, std::int64_t> squarefree_decompose(const mpz_class& n);

using Scalar = QuadraticNumber;

}  // namespace tiltstab
