#pragma once

#include <iosfwd>
#include <map>
#include <string>

#include "tiltstab/quadratic.hpp"
#include "tiltstab/rational.hpp"

namespace tiltstab {

/// Univariate polynomial with rational coefficients, stored sparsely by
/// degree. Zero coefficients are never stored.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(const Rational& constant);  // NOLINT
  static Polynomial monomial(const Rational& coeff, int degree);
  /// The variable itself.
  static Polynomial x() { return monomial(Rational(1), 1); }

  const std::map<int, Rational>& coefficients() const { return coeffs_; }
  Rational coefficient(int degree) const;
  /// Highest degree with a nonzero coefficient, -1 for the zero polynomial.
  int degree() const { return coeffs_.empty() ? -1 : coeffs_.rbegin()->first; }
  bool is_zero() const { return coeffs_.empty(); }
  Rational leading_coefficient() const;

  Rational evaluate(const Rational& at) const;
  QuadraticNumber evaluate(const QuadraticNumber& at) const;

  std::string str(const std::string& variable = "m") const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void set(int degree, const Rational& value);
  std::map<int, Rational> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const Polynomial& p);

/// Euler characteristics under the Frobenius-multiplication family are
/// polynomials in m.
using PolynomialInM = Polynomial;

}  // namespace tiltstab
