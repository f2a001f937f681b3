#include "tiltstab/continued_fraction.hpp"

#include "tiltstab/errors.hpp"

namespace tiltstab {

namespace {

mpz_class floor_div(const mpz_class& n, const mpz_class& d) {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
  return q;
}

}  // namespace

ConvergentList dirichlet_convergents(const QuadraticNumber& x, std::size_t n) {
  if (n == 0) throw PreconditionError("dirichlet_convergents needs n >= 1");
  ConvergentList out;
  if (x.is_rational()) {
    const Rational& r = x.as_rational();
    out.convergents.push_back({r.numerator(), r.denominator()});
    out.terminated = true;
    return out;
  }

  // Write x = (P + sqrt(D)) / Q with integers and Q | D - P^2.
  mpz_class common;
  mpz_lcm(common.get_mpz_t(), x.a().denominator().get_mpz_t(), x.b().denominator().get_mpz_t());
  const mpz_class a_int = (x.a() * Rational(common)).numerator();
  const mpz_class b_int = (x.b() * Rational(common)).numerator();
  mpz_class big_p = b_int > 0 ? a_int : mpz_class(-a_int);
  mpz_class big_q = b_int > 0 ? common : mpz_class(-common);
  mpz_class big_d = b_int * b_int * mpz_class(static_cast<long>(x.d()));
  if (!mpz_divisible_p(mpz_class(big_d - big_p * big_p).get_mpz_t(), big_q.get_mpz_t())) {
    const mpz_class scale = abs(big_q);
    big_p *= scale;
    big_d *= scale * scale;
    big_q *= scale;
  }
  const mpz_class root = sqrt(big_d);

  mpz_class p_prev = 1, p_prev2 = 0;
  mpz_class q_prev = 0, q_prev2 = 1;
  for (std::size_t k = 0; k < n; ++k) {
    const mpz_class term = big_q > 0 ? floor_div(big_p + root, big_q) : floor_div(big_p + root + 1, big_q);
    const mpz_class p_k = term * p_prev + p_prev2;
    const mpz_class q_k = term * q_prev + q_prev2;
    out.partial_quotients.push_back(term);
    out.convergents.push_back({p_k, q_k});
    p_prev2 = p_prev;
    p_prev = p_k;
    q_prev2 = q_prev;
    q_prev = q_k;
    big_p = term * big_q - big_p;
    big_q = (big_d - big_p * big_p) / big_q;
  }
  return out;
}

bool satisfies_dirichlet_bound(const QuadraticNumber& x, const Convergent& c) {
  const Rational bound(mpz_class(1), c.q * c.q);
  const QuadraticNumber gap = (x - QuadraticNumber(c.value())).abs();
  return QuadraticNumber(bound) - gap > QuadraticNumber(0);
}

}  // namespace tiltstab
