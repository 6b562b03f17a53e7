#pragma once

// Deterministic pseudo-random instance generators for the solution
// families.  Every generator derives the z0-constrained constants through
// solve_family_constraints, so the produced descriptor always constructs,
// and returns the context, the descriptor and the constructed pair.

#include <map>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>

#include "contexts.hpp"
#include "kss/families.hpp"

namespace kss::test {

using Rng = std::mt19937_64;

// Small scalars (p/q) * z^k: readable, fast, and not merely rational.
inline CycScalar random_nonzero(Rng& rng) {
  std::uniform_int_distribution<int> num(1, 3), den(1, 3), coin(0, 1),
      power(0, 11);
  CycScalar q = CycScalar::from_integer(coin(rng) ? num(rng) : -num(rng), kN) /
                CycScalar::from_integer(den(rng), kN);
  return q * CycScalar::root_of_unity(kN, power(rng));
}

inline CycScalar random_scalar(Rng& rng) {  // zero with probability 1/5
  std::uniform_int_distribution<int> z(0, 4);
  return z(rng) == 0 ? CycScalar::zero(kN) : random_nonzero(rng);
}

inline DenseFunc random_dense(Rng& rng, std::size_t n) {
  std::vector<CycScalar> values;
  values.reserve(n);
  for (std::size_t i = 0; i < n; ++i) values.push_back(random_scalar(rng));
  return DenseFunc(std::move(values));
}

struct FiniteInstance {
  FiniteContext ctx;
  FamilyDescriptor<FiniteContext> desc;
  SolutionPair<FiniteContext> pair;
};

struct GridInstance {
  GridContext ctx;
  FamilyDescriptor<GridContext> desc;
  SolutionPair<GridContext> pair;
};

namespace detail {

inline std::map<std::string, CycScalar> solve_or_die(
    Catalog catalog, int family, const CycScalar& u, const CycScalar& v,
    const std::optional<CycScalar>& a_z0,
    const std::map<std::string, CycScalar>& given) {
  auto r = solve_family_constraints(catalog, family, u, v, a_z0, given, kN);
  if (!r.satisfiable)
    throw std::logic_error("instance generator produced unsolvable data: " +
                           r.reason);
  return r.solved;
}

}  // namespace detail

// ---- finite instances -------------------------------------------------------

// Family 1 on Z_3: f = 0, g arbitrary.
inline FiniteInstance finite_family1(Rng& rng) {
  FiniteContext ctx = z3_ctx();
  FamilyDescriptor<FiniteContext> d;
  d.family = 1;
  d.free_fn = random_dense(rng, ctx.size());
  return {ctx, d, construct_base_family(ctx, d, kN)};
}

// Family 2 on the constant semigroup: f nonzero, vanishing on S S z0 = {e0},
// g = kappa f (kappa may be zero).
inline FiniteInstance finite_family2(Rng& rng) {
  FiniteContext ctx = constant2_ctx();
  FamilyDescriptor<FiniteContext> d;
  d.family = 2;
  DenseFunc f = DenseFunc::zero(2, kN);
  f.set(1, random_nonzero(rng));
  d.free_fn = f;
  d.constants["kappa"] = random_scalar(rng);
  return {ctx, d, construct_base_family(ctx, d, kN)};
}

// Family 3 on Z_3 (sigma = -x, z0 = 1): chi(z0) != (chi o sigma)(z0), so the
// constraints pin b and c; gamma stays free.
inline FiniteInstance finite_family3(Rng& rng) {
  FiniteContext ctx = z3_ctx();
  long k = 1 + static_cast<long>(rng() % 2);
  DenseFunc chi = cyclic_chi(3, k);
  DenseFunc chis = chi.pullback(ctx.sigma());
  FamilyDescriptor<FiniteContext> d;
  d.family = 3;
  d.chi = chi;
  d.constants = detail::solve_or_die(Catalog::kBase, 3, chi.eval(ctx.z0()),
                                     chis.eval(ctx.z0()), std::nullopt,
                                     {{"gamma", random_nonzero(rng)}});
  return {ctx, d, construct_base_family(ctx, d, kN)};
}

// Family 4 on Z_6 (sigma = -x, z0 = 3 fixed by sigma): chi o sigma != chi
// but the two agree at z0; b and c stay free.
inline FiniteInstance finite_family4(Rng& rng) {
  FiniteContext ctx = z6_ctx();
  static const long ks[] = {1, 2, 4, 5};
  DenseFunc chi = cyclic_chi(6, ks[rng() % 4]);
  DenseFunc chis = chi.pullback(ctx.sigma());
  FamilyDescriptor<FiniteContext> d;
  d.family = 4;
  d.chi = chi;
  d.constants = detail::solve_or_die(
      Catalog::kBase, 4, chi.eval(ctx.z0()), chis.eval(ctx.z0()), std::nullopt,
      {{"b", random_nonzero(rng)}, {"c", random_scalar(rng)}});
  return {ctx, d, construct_base_family(ctx, d, kN)};
}

// Family 5 on Z_3: alpha, delta free nonzero; b and c are solved for.
inline FiniteInstance finite_family5(Rng& rng) {
  FiniteContext ctx = z3_ctx();
  long k = 1 + static_cast<long>(rng() % 2);
  DenseFunc chi = cyclic_chi(3, k);
  DenseFunc chis = chi.pullback(ctx.sigma());
  FamilyDescriptor<FiniteContext> d;
  d.family = 5;
  d.chi = chi;
  d.constants = detail::solve_or_die(
      Catalog::kBase, 5, chi.eval(ctx.z0()), chis.eval(ctx.z0()), std::nullopt,
      {{"alpha", random_nonzero(rng)}, {"delta", random_nonzero(rng)}});
  return {ctx, d, construct_base_family(ctx, d, kN)};
}

// Family 7 on the four-element semigroup with fringe {p, q}: the additive
// part vanishes (additive functions on a finite semigroup always do), so
// alpha = 0 and Psi is carried entirely by rho.
inline FiniteInstance finite_family7(Rng& rng) {
  FiniteContext ctx = m4_ctx();
  DenseFunc chi = dense({"1", "0", "0", "0"});
  CycScalar r = random_nonzero(rng);
  FamilyDescriptor<FiniteContext> d;
  d.family = 7;
  d.chi = chi;
  d.A = DenseFunc::zero(4, kN);
  d.rho = {{1, r}, {2, -r}};
  d.constants = detail::solve_or_die(
      Catalog::kBase, 7, chi.eval(ctx.z0()),
      chi.pullback(ctx.sigma()).eval(ctx.z0()), CycScalar::zero(kN),
      {{"c", random_scalar(rng)}});
  return {ctx, d, construct_base_family(ctx, d, kN)};
}

// ---- grid instances ---------------------------------------------------------

// Family 3 over N^2 with the swap involution, z0 = (1, 2): any two distinct
// nonzero bases give chi(z0) != (chi o sigma)(z0).
inline GridInstance grid_family3(Rng& rng) {
  GridContext ctx = grid_swap_ctx(1, 2);
  CycScalar a1 = random_nonzero(rng);
  CycScalar a2 = random_nonzero(rng);
  while (a2 == a1) a2 = random_nonzero(rng);
  GridFunc chi = GridFunc::exponential(a1, a2);
  FamilyDescriptor<GridContext> d;
  d.family = 3;
  d.chi = chi;
  d.constants = detail::solve_or_die(
      Catalog::kBase, 3, chi.eval(ctx.z0()),
      chi.pullback(GridSigma::kSwap).eval(ctx.z0()), std::nullopt,
      {{"gamma", random_nonzero(rng)}});
  return {ctx, d, construct_base_family(ctx, d, kN)};
}

// Family 4 over N^2: at z0 = (1, 3) the bases (a, -a) give a distinct
// sigma-conjugate whose value at z0 agrees with chi's.
inline GridInstance grid_family4(Rng& rng) {
  GridContext ctx = grid_swap_ctx(1, 3);
  CycScalar a1 = random_nonzero(rng);
  GridFunc chi = GridFunc::exponential(a1, -a1);
  FamilyDescriptor<GridContext> d;
  d.family = 4;
  d.chi = chi;
  d.constants = detail::solve_or_die(
      Catalog::kBase, 4, chi.eval(ctx.z0()),
      chi.pullback(GridSigma::kSwap).eval(ctx.z0()), std::nullopt,
      {{"b", random_nonzero(rng)}, {"c", random_scalar(rng)}});
  return {ctx, d, construct_base_family(ctx, d, kN)};
}

// Family 5 over N^2, z0 = (1, 2).
inline GridInstance grid_family5(Rng& rng) {
  GridContext ctx = grid_swap_ctx(1, 2);
  CycScalar a1 = random_nonzero(rng);
  CycScalar a2 = random_nonzero(rng);
  while (a2 == a1) a2 = random_nonzero(rng);
  GridFunc chi = GridFunc::exponential(a1, a2);
  FamilyDescriptor<GridContext> d;
  d.family = 5;
  d.chi = chi;
  d.constants = detail::solve_or_die(
      Catalog::kBase, 5, chi.eval(ctx.z0()),
      chi.pullback(GridSigma::kSwap).eval(ctx.z0()), std::nullopt,
      {{"alpha", random_nonzero(rng)}, {"delta", random_nonzero(rng)}});
  return {ctx, d, construct_base_family(ctx, d, kN)};
}

// Family 6 over N^2: sigma-invariant chi = a^{x+y}, A = b1 (x - y); the
// constraints force chi(z0) = A(z0), which fixes b1 from a, and c = -1/a^{s0+t0}.
inline GridInstance grid_family6(Rng& rng) {
  static const std::pair<long long, long long> anchors[] = {{1, 2}, {2, 1}, {1, 3}};
  auto [s0, t0] = anchors[rng() % 3];
  GridContext ctx = grid_swap_ctx(s0, t0);
  CycScalar a = random_nonzero(rng);
  CycScalar u = a.pow(s0 + t0);
  CycScalar b1 = u / CycScalar::from_integer(s0 - t0, kN);
  GridFunc chi = GridFunc::exponential(a, a);
  FamilyDescriptor<GridContext> d;
  d.family = 6;
  d.chi = chi;
  d.A = GridFunc::additive(b1, -b1);
  d.constants = detail::solve_or_die(Catalog::kBase, 6, u, u, u,
                                     {{"gamma", random_nonzero(rng)}});
  return {ctx, d, construct_base_family(ctx, d, kN)};
}

// Family 7 over N^2: chi = a^{x+y}, A = b1 (x - y); alpha and delta are
// solved from c.  s0 = t0 is allowed (it forces alpha = 0).
inline GridInstance grid_family7(Rng& rng) {
  static const std::pair<long long, long long> anchors[] = {{1, 2}, {1, 1}, {2, 3}};
  auto [s0, t0] = anchors[rng() % 3];
  GridContext ctx = grid_swap_ctx(s0, t0);
  CycScalar a = random_nonzero(rng);
  CycScalar b1 = random_nonzero(rng);
  CycScalar u = a.pow(s0 + t0);
  CycScalar a_z0 = b1 * CycScalar::from_integer(s0 - t0, kN);
  GridFunc chi = GridFunc::exponential(a, a);
  FamilyDescriptor<GridContext> d;
  d.family = 7;
  d.chi = chi;
  d.A = GridFunc::additive(b1, -b1);
  for (;;) {  // resample c until the derived delta is nonzero
    auto r = solve_family_constraints(Catalog::kBase, 7, u, u, a_z0,
                                      {{"c", random_scalar(rng)}}, kN);
    if (r.satisfiable) {
      d.constants = r.solved;
      break;
    }
  }
  return {ctx, d, construct_base_family(ctx, d, kN)};
}

}  // namespace kss::test
