#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <vector>

#include "tiltstab/quadratic.hpp"

namespace tiltstab {

struct Convergent {
  mpz_class p;
  mpz_class q;  // > 0
  Rational value() const { return Rational(p, q); }
};

struct ConvergentList {
  std::vector<Convergent> convergents;
  std::vector<mpz_class> partial_quotients;
  /// Set when the expansion ended because x is rational.
  bool terminated = false;
};

/// First n continued-fraction convergents of x. Quadratic irrationals are
/// expanded with the periodic (P + sqrt D)/Q recurrence, so every step is
/// exact. A rational x yields the single pair (p, q) with terminated set.
ConvergentList dirichlet_convergents(const QuadraticNumber& x, std::size_t n);

/// |x - p/q| < 1/q^2, decided exactly in Q(sqrt d).
bool satisfies_dirichlet_bound(const QuadraticNumber& x, const Convergent& c);

}  // namespace tiltstab
