#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "kss/errors.hpp"

namespace kss {

using Rational = mpq_class;

// Euler totient and the canonical factor lattice, exposed because callers
// need them to reason about conductors.
unsigned euler_phi(unsigned n);
std::vector<unsigned> divisors(unsigned n);

// Coefficients (constant term first) of the N-th cyclotomic polynomial,
// computed exactly over the integers and cached.
const std::vector<Rational>& cyclotomic_polynomial(unsigned n);

// Process-wide switch: when enabled, combining scalars whose conductors are
// not identical throws ConductorMismatch instead of embedding both into the
// least common multiple field.  Intended for tests that want to pin every
// computation to one field.
void set_strict_conductors(bool enabled);
bool strict_conductors();

// RAII helper for scoping the strict flag inside tests.
struct StrictConductorGuard {
  explicit StrictConductorGuard(bool enabled)
      : previous_(strict_conductors()) {
    set_strict_conductors(enabled);
  }
  ~StrictConductorGuard() { set_strict_conductors(previous_); }

 private:
  bool previous_;
};

// An element of the cyclotomic field Q(zeta_N), stored as a coefficient
// vector of length phi(N) over the power basis 1, z, ..., z^{phi(N)-1} where
// z = zeta_N, reduced modulo the N-th cyclotomic polynomial.  The
// representation is canonical: two values with the same conductor are equal
// iff their coefficient vectors are equal.  Instances are immutable after
// construction and safe to share across threads.
class CycScalar {
 public:
  CycScalar() : conductor_(1), coeffs_(1, Rational(0)) {}

  static CycScalar zero(unsigned conductor);
  static CycScalar one(unsigned conductor);
  static CycScalar from_rational(const Rational& q, unsigned conductor);
  static CycScalar from_integer(long v, unsigned conductor);
  // zeta_N^k (k may be negative or >= N; it is reduced mod N).
  static CycScalar root_of_unity(unsigned conductor, long k);
  // The imaginary unit, i.e. zeta_N^{N/4}; requires 4 | N.
  static CycScalar imaginary_unit(unsigned conductor);

  unsigned conductor() const { return conductor_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool is_one() const;
  // True iff the value lies in Q (all basis coefficients beyond 1 vanish).
  bool is_rational() const;
  // Requires is_rational().
  Rational as_rational() const;

  // Re-express the value in Q(zeta_M); requires conductor() | M.
  CycScalar embedded(unsigned conductor) const;

  CycScalar operator-() const;
  CycScalar inverse() const;  // throws DivisionByZero on zero
  CycScalar pow(long e) const;

  friend CycScalar operator+(const CycScalar& a, const CycScalar& b);
  friend CycScalar operator-(const CycScalar& a, const CycScalar& b);
  friend CycScalar operator*(const CycScalar& a, const CycScalar& b);
  friend CycScalar operator/(const CycScalar& a, const CycScalar& b);
  friend bool operator==(const CycScalar& a, const CycScalar& b);
  friend bool operator!=(const CycScalar& a, const CycScalar& b) {
    return !(a == b);
  }

  // Total order used for canonical sorting of term lists and map keys:
  // compares conductors first, then coefficients lexicographically.
  static int compare(const CycScalar& a, const CycScalar& b);

  // Canonical literal, e.g. "0", "-1/2 + 3/2*z^2", parseable by
  // parse_scalar with the same conductor.
  std::string str() const;

 private:
  CycScalar(unsigned conductor, std::vector<Rational> coeffs);
  static std::pair<CycScalar, CycScalar> aligned(const CycScalar& a,
                                                 const CycScalar& b);

  unsigned conductor_;
  std::vector<Rational> coeffs_;  // size euler_phi(conductor_)
};

struct CycScalarLess {
  bool operator()(const CycScalar& a, const CycScalar& b) const {
    return CycScalar::compare(a, b) < 0;
  }
};

}  // namespace kss
