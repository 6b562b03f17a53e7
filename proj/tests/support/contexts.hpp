#pragma once

// Shared contexts and small helpers used across the test suite.  Every
// builder returns a fresh value so tests cannot interfere with each other.

#include <string>
#include <vector>

#include "kss/functions.hpp"
#include "kss/scalar_io.hpp"
#include "kss/semigroup.hpp"

namespace kss::test {

inline constexpr unsigned kN = 12;  // session conductor used by the tests

inline CycScalar S(const std::string& literal, unsigned conductor = kN) {
  return parse_scalar(literal, conductor);
}

inline DenseFunc dense(const std::vector<std::string>& literals,
                       unsigned conductor = kN) {
  std::vector<CycScalar> values;
  values.reserve(literals.size());
  for (const auto& lit : literals) values.push_back(S(lit, conductor));
  return DenseFunc(std::move(values));
}

// ---- finite semigroups -----------------------------------------------------

inline FiniteSemigroup cyclic_sg(std::size_t n) {
  std::vector<std::vector<Elem>> t(n, std::vector<Elem>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) t[i][j] = static_cast<Elem>((i + j) % n);
  return FiniteSemigroup::from_table(std::move(t));
}

inline std::vector<Elem> identity_sigma(std::size_t n) {
  std::vector<Elem> s(n);
  for (std::size_t i = 0; i < n; ++i) s[i] = static_cast<Elem>(i);
  return s;
}

// x -> -x on the cyclic group of order n.
inline std::vector<Elem> negation_sigma(std::size_t n) {
  std::vector<Elem> s(n);
  s[0] = 0;
  for (std::size_t i = 1; i < n; ++i) s[i] = static_cast<Elem>(n - i);
  return s;
}

// The one-element semigroup.
inline FiniteContext trivial_ctx() {
  return FiniteContext(FiniteSemigroup::from_table({{0}}), {0}, 0);
}

// Z_2 = {0, 1} under addition, sigma = id, z0 = 0.
inline FiniteContext z2_ctx() {
  return FiniteContext(cyclic_sg(2), identity_sigma(2), 0);
}

// Z_3 under addition, sigma = -x, z0 = 1.  Home of the antisymmetric
// families with chi(z0) != (chi o sigma)(z0).
inline FiniteContext z3_ctx() {
  return FiniteContext(cyclic_sg(3), negation_sigma(3), 1);
}

// Z_3 with the identity involution; every exponential is sigma-invariant.
inline FiniteContext z3_identity_ctx() {
  return FiniteContext(cyclic_sg(3), identity_sigma(3), 1);
}

// Z_6 under addition, sigma = -x, z0 = 3 (a fixed point of sigma), so
// chi(z0) = (chi o sigma)(z0) for every exponential: family 4 territory.
inline FiniteContext z6_ctx() {
  return FiniteContext(cyclic_sg(6), negation_sigma(6), 3);
}

// Z_12 with the identity involution; only used to mass-produce violations.
inline FiniteContext z12_identity_ctx() {
  return FiniteContext(cyclic_sg(12), identity_sigma(12), 0);
}

// Constant multiplication x * y = e0 on two elements: S S z0 = {e0} is
// proper, so the dependent family lives here.
inline FiniteContext constant2_ctx() {
  return FiniteContext(FiniteSemigroup::from_table({{0, 0}, {0, 0}}),
                       identity_sigma(2), 0);
}

// {0, 1} under ordinary multiplication, z0 = 0: the null ideal of the
// exponential chi = (0, 1) has an empty fringe (0 * 0 = 0).
inline FiniteContext mult01_ctx() {
  return FiniteContext(FiniteSemigroup::from_table({{0, 0}, {0, 1}}),
                       identity_sigma(2), 0);
}

// {e, p, z}: e is neutral, p*p = z and z absorbs.  For chi = (1, 0, 0) the
// null ideal is {p, z}, its square is {z} and the fringe is {p}.
inline FiniteSemigroup epz_sg() {
  return FiniteSemigroup::from_table({{0, 1, 2}, {1, 2, 2}, {2, 2, 2}},
                                     std::vector<std::string>{"e", "p", "z"});
}
inline FiniteContext epz_ctx() {
  return FiniteContext(epz_sg(), identity_sigma(3), 0);
}

// {e, p, q, z}: e neutral, all other products equal the absorbing z, and
// sigma swaps p and q.  For chi = (1, 0, 0, 0) the fringe is {p, q}, which
// carries the rho block of the Psi functions.
inline FiniteSemigroup m4_sg() {
  return FiniteSemigroup::from_table(
      {{0, 1, 2, 3}, {1, 3, 3, 3}, {2, 3, 3, 3}, {3, 3, 3, 3}},
      std::vector<std::string>{"e", "p", "q", "z"});
}
inline FiniteContext m4_ctx() {
  return FiniteContext(m4_sg(), std::vector<Elem>{0, 2, 1, 3}, 0);
}

// chi(x) = zeta_n^{k x} on the cyclic group of order n, expressed in
// Q(zeta_N) (requires n | N).
inline DenseFunc cyclic_chi(std::size_t n, long k, unsigned conductor = kN) {
  std::vector<CycScalar> values;
  values.reserve(n);
  for (std::size_t x = 0; x < n; ++x)
    values.push_back(CycScalar::root_of_unity(
        conductor, k * static_cast<long>(x) * (conductor / static_cast<long>(n))));
  return DenseFunc(std::move(values));
}

// ---- the grid ---------------------------------------------------------------

// Window 6 keeps the sweeps cheap (36^2 pairs) while still containing every
// anchor the instance generators use; tests that assert a specific sweep size
// pass their window explicitly.
inline GridContext grid_swap_ctx(long long s0 = 1, long long t0 = 2,
                                 unsigned window = 6) {
  return GridContext(GridSigma::kSwap, GridPoint{s0, t0}, window);
}

inline GridContext grid_identity_ctx(long long s0 = 1, long long t0 = 1,
                                     unsigned window = 6) {
  return GridContext(GridSigma::kIdentity, GridPoint{s0, t0}, window);
}

}  // namespace kss::test
