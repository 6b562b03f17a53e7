#pragma once

#include <map>
#include <optional>
#include <vector>

#include "kss/functions.hpp"
#include "kss/semigroup.hpp"

namespace kss {

struct PropertyReport {
  bool ok = true;
  std::string violation;  // empty when ok
};

// chi(xy) = chi(x)chi(y) for all pairs (exhaustive).
PropertyReport is_multiplicative(const FiniteSemigroup& sg,
                                 const DenseFunc& f);
// Structural check: a grid function is multiplicative iff it is zero or a
// single term a1^x a2^y with coefficient 1 and no monomial factor.
PropertyReport is_multiplicative(const GridFunc& f);

// Exponential = multiplicative and not identically zero.
bool is_exponential(const FiniteSemigroup& sg, const DenseFunc& f);
bool is_exponential(const GridFunc& f);
// The bases (a1, a2) when f is exponential, nullopt otherwise.
std::optional<std::pair<CycScalar, CycScalar>> exponential_bases(
    const GridFunc& f);

// All exponentials on S with values in Q(zeta_N), via backtracking over the
// per-element candidate sets {0} union { roots of unity of order dividing
// the element's power period }.  Complete over the complex numbers: any
// exponential on a finite semigroup takes exactly such values.  Throws
// ConductorTooSmall if the lcm of the element periods does not divide N.
std::vector<DenseFunc> enumerate_exponentials(const FiniteSemigroup& sg,
                                              unsigned conductor);

// The blocks cut out of S by the null set I_chi = { x : chi(x) = 0 }:
//   null_ideal   I_chi            (a two-sided ideal)
//   null_square  I_chi^2 = { pq : p, q in I_chi }
//   fringe       P_chi = { p in I_chi \ I_chi^2 :
//                          up, pv, upv in I_chi \ I_chi^2
//                          for all u, v in S \ I_chi }
// S \ I_chi is a subsemigroup; multiplication by it maps the fringe into
// itself, which is what makes the rho block of Psi functions transportable.
struct NullPartition {
  std::vector<Elem> null_ideal;
  std::vector<Elem> null_square;
  std::vector<Elem> fringe;
  std::vector<bool> in_null;
  std::vector<bool> in_null_square;
  std::vector<bool> in_fringe;
};
NullPartition null_partition(const FiniteSemigroup& sg, const DenseFunc& chi);

// A(xy) = A(x) + A(y) for all x, y in the masked domain (which must be
// closed under multiplication, as S \ I_chi is).
PropertyReport is_additive_on(const FiniteSemigroup& sg, const DenseFunc& A,
                              const std::vector<bool>& domain);
// Structural: the grid function is b1*x + b2*y; returns (b1, b2).
std::optional<std::pair<CycScalar, CycScalar>> additive_coeffs(
    const GridFunc& A);

// Assembles the function
//   Psi(x) = A(x) chi(x)  on S \ I_chi,
//   Psi(p) = rho(p)       on P_chi,
//   Psi(x) = 0            on I_chi \ P_chi,
// validating that chi is a sigma-invariant exponential, A is additive on
// S \ I_chi with A o sigma = -A, rho o sigma = -rho, and rho transports
// along S \ I_chi:
//   rho(up) = chi(u) rho(p),  rho(pv) = rho(p) chi(v),
//   rho(upv) = chi(u) rho(p) chi(v).
// Entries of rho missing from the map default to zero.  Throws
// ParityViolation / RhoCompatibilityViolation / PreconditionNotMet.
DenseFunc build_psi(const FiniteContext& ctx, const DenseFunc& chi,
                    const DenseFunc& A,
                    const std::map<Elem, CycScalar>& rho);
// Grid variant: I_chi is empty there, so Psi = A * chi and there is no rho.
GridFunc build_psi(const GridContext& ctx, const GridFunc& chi,
                   const GridFunc& A);

// Exact rank test over Q(zeta_N).
bool linearly_independent(const std::vector<DenseFunc>& fns);
bool linearly_independent(const std::vector<GridFunc>& fns);

// If g = kappa * f for a scalar kappa (with f nonzero, or both zero),
// returns kappa; otherwise nullopt.  Used to split the dependent case off.
std::optional<CycScalar> dependency_ratio(const DenseFunc& f,
                                          const DenseFunc& g,
                                          unsigned conductor);
std::optional<CycScalar> dependency_ratio(const GridFunc& f,
                                          const GridFunc& g,
                                          unsigned conductor);

// Solves target = sum_k coeffs[k] * columns[k] exactly; nullopt when the
// target is outside the span or the columns are dependent.
std::optional<std::vector<CycScalar>> solve_span(
    const std::vector<DenseFunc>& columns, const DenseFunc& target,
    unsigned conductor);

}  // namespace kss
