#include "tiltstab/quadratic.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <ostream>

#include "tiltstab/errors.hpp"

namespace tiltstab {

namespace {

// Primes below this bound are removed by trial division; a cofactor below
// its cube then has at most two prime factors.
constexpr unsigned long kTrialLimit = 1'000'000;

}  // namespace

std::pair<mpz_class, std::int64_t> squarefree_decompose(const mpz_class& n) {
  if (n <= 0) throw DomainError("square-free decomposition needs a positive integer");
  mpz_class rem = n;
  mpz_class square_root_part = 1;
  mpz_class free_part = 1;
  auto strip = [&](unsigned long p) {
    unsigned exponent = 0;
    while (mpz_divisible_ui_p(rem.get_mpz_t(), p)) {
      mpz_divexact_ui(rem.get_mpz_t(), rem.get_mpz_t(), p);
      ++exponent;
    }
    for (unsigned i = 0; i < exponent / 2; ++i) square_root_part *= p;
    if (exponent % 2 == 1) free_part *= p;
  };
  strip(2);
  unsigned long p = 3;
  for (; p <= kTrialLimit && mpz_class(p) * p <= rem; p += 2) strip(p);
  if (rem > 1) {
    if (mpz_class(p) * p > rem) {
      free_part *= rem;
    } else {
      const mpz_class limit_cubed = mpz_class(kTrialLimit) * kTrialLimit * kTrialLimit;
      if (rem >= limit_cubed) {
        throw DomainError("radicand " + n.get_str() + " too large to factor");
      }
      if (mpz_perfect_square_p(rem.get_mpz_t())) {
        square_root_part *= sqrt(rem);
      } else {
        free_part *= rem;
      }
    }
  }
  if (!free_part.fits_slong_p()) {
    throw DomainError("square-free part of " + n.get_str() + " exceeds int64");
  }
  return {square_root_part, free_part.get_si()};
}

QuadraticNumber::QuadraticNumber(const Rational& a, const Rational& b, std::int64_t d)
    : a_(a), b_(b), d_(d) {
  normalize();
}

void QuadraticNumber::normalize() {
  if (d_ < 0) throw DomainError("negative radicand " + std::to_string(d_));
  if (d_ == 0 || b_.is_zero()) {
    b_ = Rational(0);
    d_ = 0;
    return;
  }
  const auto [k, s] = squarefree_decompose(mpz_class(static_cast<long>(d_)));
  b_ *= Rational(k);
  d_ = s;
  if (d_ == 1) {
    a_ += b_;
    b_ = Rational(0);
    d_ = 0;
  }
}

std::int64_t QuadraticNumber::common_radicand(const QuadraticNumber& o) const {
  if (d_ == 0) return o.d_;
  if (o.d_ == 0 || o.d_ == d_) return d_;
  throw MixedRadicalError("cannot combine sqrt(" + std::to_string(d_) + ") with sqrt(" +
                          std::to_string(o.d_) + ")");
}

const Rational& QuadraticNumber::as_rational() const {
  if (d_ != 0) throw DomainError("value " + str() + " is irrational");
  return a_;
}

int QuadraticNumber::sign() const {
  const int sa = a_.sign();
  if (d_ == 0) return sa;
  const int sb = b_.sign();
  if (sa >= 0 && sb >= 0) return (sa == 0 && sb == 0) ? 0 : 1;
  if (sa <= 0 && sb <= 0) return -1;
  // Opposite signs: compare a^2 with d b^2; equality is impossible.
  const int c = (a_ * a_ <=> Rational(d_) * b_ * b_) < 0 ? -1 : 1;
  return sa > 0 ? c : -c;
}

QuadraticNumber QuadraticNumber::conjugate() const {
  QuadraticNumber out = *this;
  out.b_ = -b_;
  return out;
}

QuadraticNumber QuadraticNumber::inverse() const {
  if (is_zero()) throw DomainError("inverse of zero");
  if (d_ == 0) return QuadraticNumber(a_.inverse());
  const Rational n = norm();
  QuadraticNumber out;
  out.a_ = a_ / n;
  out.b_ = -b_ / n;
  out.d_ = d_;
  return out;
}

mpz_class QuadraticNumber::floor() const {
  if (d_ == 0) return a_.floor();
  // b*sqrt(d) = sign(b) * sqrt(N/M) with N/M = b^2 d; start from an integer
  // square root estimate and correct by exact comparison.
  const Rational sq = b_ * b_ * Rational(d_);
  const mpz_class nm = sq.numerator() * sq.denominator();
  const mpz_class root = sqrt(nm);
  Rational estimate = a_ + Rational(b_.sign() >= 0 ? root : mpz_class(-root), sq.denominator());
  mpz_class k = estimate.floor();
  while (QuadraticNumber(Rational(k)) > *this) --k;
  while (QuadraticNumber(Rational(mpz_class(k + 1))) <= *this) ++k;
  return k;
}

std::string QuadraticNumber::str() const {
  if (d_ == 0) return a_.str();
  std::string radical = "sqrt(" + std::to_string(d_) + ")";
  std::string b_part;
  if (b_ == Rational(1)) {
    b_part = radical;
  } else if (b_ == Rational(-1)) {
    b_part = "-" + radical;
  } else {
    b_part = b_.str() + "*" + radical;
  }
  if (a_.is_zero()) return b_part;
  return a_.str() + (b_.sign() > 0 ? "+" : "") + b_part;
}

double QuadraticNumber::to_double() const {
  return a_.to_double() + b_.to_double() * std::sqrt(static_cast<double>(d_));
}

QuadraticNumber QuadraticNumber::parse(std::string_view text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  const auto pos = s.find("sqrt(");
  if (pos == std::string::npos) return QuadraticNumber(Rational::parse(s));
  if (s.back() != ')') throw ParseError("malformed quadratic number '" + std::string(text) + "'");
  const std::string radicand = s.substr(pos + 5, s.size() - pos - 6);
  const Rational d = Rational::parse(radicand);
  if (!d.is_integer() || d.sign() < 0) {
    throw ParseError("radicand must be a non-negative integer in '" + std::string(text) + "'");
  }
  std::string prefix = s.substr(0, pos);
  if (!prefix.empty() && prefix.back() == '*') prefix.pop_back();
  std::string a_text = "0";
  std::string b_text = prefix;
  for (std::size_t i = prefix.size(); i-- > 1;) {
    if ((prefix[i] == '+' || prefix[i] == '-') && prefix[i - 1] != '/') {
      a_text = prefix.substr(0, i);
      b_text = prefix.substr(i);
      break;
    }
  }
  Rational b;
  if (b_text.empty() || b_text == "+") {
    b = Rational(1);
  } else if (b_text == "-") {
    b = Rational(-1);
  } else {
    b = Rational::parse(b_text);
  }
  return QuadraticNumber(Rational::parse(a_text), b, d.to_int64());
}

QuadraticNumber QuadraticNumber::operator-() const {
  QuadraticNumber out = *this;
  out.a_ = -a_;
  out.b_ = -b_;
  return out;
}

QuadraticNumber& QuadraticNumber::operator+=(const QuadraticNumber& o) {
  const std::int64_t d = common_radicand(o);
  a_ += o.a_;
  b_ += o.b_;
  d_ = d;
  if (b_.is_zero()) d_ = 0;
  return *this;
}

QuadraticNumber& QuadraticNumber::operator-=(const QuadraticNumber& o) { return *this += -o; }

QuadraticNumber& QuadraticNumber::operator*=(const QuadraticNumber& o) {
  const std::int64_t d = common_radicand(o);
  const Rational a = a_ * o.a_ + b_ * o.b_ * Rational(d);
  const Rational b = a_ * o.b_ + b_ * o.a_;
  a_ = a;
  b_ = b;
  d_ = d;
  if (b_.is_zero()) d_ = 0;
  return *this;
}

QuadraticNumber& QuadraticNumber::operator/=(const QuadraticNumber& o) {
  common_radicand(o);
  return *this *= o.inverse();
}

std::ostream& operator<<(std::ostream& os, const QuadraticNumber& x) { return os << x.str(); }

QuadraticNumber quad_sqrt(const Rational& x) {
  if (x.sign() < 0) throw DomainError("square root of negative value " + x.str());
  if (x.is_zero()) return QuadraticNumber();
  // sqrt(n/m) = sqrt(n m) / m
  const mpz_class nm = x.numerator() * x.denominator();
  const auto [k, s] = squarefree_decompose(nm);
  const Rational coeff(k, x.denominator());
  if (s == 1) return QuadraticNumber(coeff);
  return QuadraticNumber(Rational(0), coeff, s);
}

}  // namespace tiltstab
