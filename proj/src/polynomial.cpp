#include "tiltstab/polynomial.hpp"

#include <ostream>

namespace tiltstab {

Polynomial::Polynomial(const Rational& constant) { set(0, constant); }

Polynomial Polynomial::monomial(const Rational& coeff, int degree) {
  Polynomial p;
  p.set(degree, coeff);
  return p;
}

void Polynomial::set(int degree, const Rational& value) {
  if (value.is_zero()) {
    coeffs_.erase(degree);
  } else {
    coeffs_[degree] = value;
  }
}

Rational Polynomial::coefficient(int degree) const {
  const auto it = coeffs_.find(degree);
  return it == coeffs_.end() ? Rational(0) : it->second;
}

Rational Polynomial::leading_coefficient() const {
  return coeffs_.empty() ? Rational(0) : coeffs_.rbegin()->second;
}

Rational Polynomial::evaluate(const Rational& at) const {
  Rational sum;
  for (const auto& [deg, c] : coeffs_) sum += c * at.pow(static_cast<unsigned>(deg));
  return sum;
}

QuadraticNumber Polynomial::evaluate(const QuadraticNumber& at) const {
  QuadraticNumber sum;
  QuadraticNumber power(1);
  int current = 0;
  for (const auto& [deg, c] : coeffs_) {
    for (; current < deg; ++current) power *= at;
    sum += power * QuadraticNumber(c);
  }
  return sum;
}

std::string Polynomial::str(const std::string& variable) const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    const auto& [deg, c] = *it;
    std::string term = c.abs().str();
    if (deg > 0) {
      term = (c.abs() == Rational(1) ? "" : term + "*") + variable;
      if (deg > 1) term += "^" + std::to_string(deg);
    }
    if (out.empty()) {
      out = (c.sign() < 0 ? "-" : "") + term;
    } else {
      out += (c.sign() < 0 ? " - " : " + ") + term;
    }
  }
  return out;
}

Polynomial Polynomial::operator-() const {
  Polynomial out;
  for (const auto& [deg, c] : coeffs_) out.coeffs_[deg] = -c;
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  for (const auto& [deg, c] : o.coeffs_) set(deg, coefficient(deg) + c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) { return *this += -o; }

Polynomial& Polynomial::operator*=(const Polynomial& o) {
  Polynomial product;
  for (const auto& [d1, c1] : coeffs_) {
    for (const auto& [d2, c2] : o.coeffs_) {
      product.set(d1 + d2, product.coefficient(d1 + d2) + c1 * c2);
    }
  }
  *this = std::move(product);
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.str(); }

}  // namespace tiltstab
