#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "kss/families.hpp"
#include "kss/function_space.hpp"
#include "kss/verifier.hpp"

namespace kss {

// Exponential catalog used to decompose finite-semigroup solutions; on the
// grid the decomposition is structural and needs no precomputed catalog.
template <class Ctx>
struct CatalogData;

template <>
struct CatalogData<FiniteContext> {
  std::vector<DenseFunc> exponentials;
};

template <>
struct CatalogData<GridContext> {};

inline CatalogData<FiniteContext> make_catalog(const FiniteContext& ctx,
                                               unsigned conductor) {
  return {enumerate_exponentials(ctx.semigroup(), conductor)};
}
inline CatalogData<GridContext> make_catalog(const GridContext&, unsigned) {
  return {};
}

// Decomposition of an independent sine-subtraction pair
//   F(x sigma(y)) = F(x) G(y) - F(y) G(x),  F != 0:
// either the antisymmetric shape
//   F = b (chi - chi o sigma),  G = ((1+c) chi + (1-c) chi o sigma) / 2
// with chi o sigma != chi, or the Psi shape
//   F = Psi_{A chi, rho},  G = chi + c F
// with chi o sigma = chi.  The two shapes are mutually exclusive, and the
// representative is unique up to the documented gauge
// (chi, b, c) -> (chi o sigma, -b, -c) in the antisymmetric shape.
template <class Ctx>
struct SineDecomposition {
  bool psi_shape = false;
  typename Ctx::Func chi, chi_sigma;
  CycScalar b, c;  // b is meaningless in the Psi shape
  std::optional<typename Ctx::Func> A;        // Psi shape only
  std::map<typename Ctx::Element, CycScalar> rho;  // Psi shape, finite only
};

SineDecomposition<FiniteContext> decompose_sine_subtraction(
    const FiniteContext& ctx, const DenseFunc& F, const DenseFunc& G,
    unsigned conductor, const CatalogData<FiniteContext>& catalog);
SineDecomposition<GridContext> decompose_sine_subtraction(
    const GridContext& ctx, const GridFunc& F, const GridFunc& G,
    unsigned conductor, const CatalogData<GridContext>& catalog);

template <class Ctx>
struct ClassificationReport {
  Catalog catalog = Catalog::kBase;
  int family = 0;
  std::optional<CycScalar> lambda;  // shifted catalog only
  std::map<std::string, CycScalar> constants;
  std::optional<typename Ctx::Func> chi, chi_sigma, A;
  std::map<typename Ctx::Element, CycScalar> rho;

  // Decision trail, for reports and debugging.
  std::string branch;  // zero-f | dependent | case-1 | subcase-2.1 | subcase-2.2
  std::optional<CycScalar> g_sz0z0, f_sz0z0;
  std::string shape;  // antisymmetric | psi (independent case only)
  bool reconstruction_exact = false;
  bool compat_checked = false;
  std::string gauge_note;
};

// ---- implementation helpers -------------------------------------------------

namespace detail {

// Precondition check for classification: exhaustive on finite semigroups,
// structural (window-free) on the grid.
inline void require_solution_base(const FiniteContext& ctx, const DenseFunc& f,
                                 const DenseFunc& g) {
  auto rep = verify_base(ctx, f, g);
  if (!rep.ok())
    throw NotASolution("the pair violates the base equation on " +
                       std::to_string(rep.total_violations) + " of " +
                       std::to_string(rep.checked) + " pairs");
}
inline void require_solution_base(const GridContext& ctx, const GridFunc& f,
                                 const GridFunc& g) {
  auto rep = verify_base_structural(ctx, f, g);
  if (!rep.ok)
    throw NotASolution("the pair violates the base equation; residual: " +
                       rep.residual);
}

}  // namespace detail

// Classifies a solution of the base equation into its catalog family,
// recovering the constants and ingredient functions, and rebuilds the pair
// from the family formula to confirm exact equality.
template <class Ctx>
ClassificationReport<Ctx> classify_base(const Ctx& ctx,
                                       const typename Ctx::Func& f,
                                       const typename Ctx::Func& g,
                                       unsigned conductor,
                                       const CatalogData<Ctx>& catalog) {
  detail::require_solution_base(ctx, f, g);

  ClassificationReport<Ctx> rep;
  rep.catalog = Catalog::kBase;

  if (f.is_zero()) {
    rep.family = 1;
    rep.branch = "zero-f";
    rep.reconstruction_exact = true;  // f = 0 and g is arbitrary by the family
    rep.gauge_note = "g is arbitrary in family 1";
    return rep;
  }

  if (auto kappa = dependency_ratio(f, g, conductor)) {
    // g = kappa f with f != 0; the equation forces f to vanish on S S z0.
    if (!vanishes_on_squares(ctx, f))
      throw InternalInconsistency(
          "dependent solution with f not vanishing on S S z0");
    if (!squares_proper(ctx))
      throw InternalInconsistency("dependent nonzero solution on S = S S z0");
    rep.family = 2;
    rep.branch = "dependent";
    rep.constants["kappa"] = *kappa;
    rep.reconstruction_exact = (g == *kappa * f);
    if (!rep.reconstruction_exact)
      throw InternalInconsistency("dependent ratio failed to reconstruct g");
    return rep;
  }

  // Independent case: the structural lemmas pin f(z0) = 0 and g(z0) != 0.
  auto z0 = ctx.z0();
  if (!f.eval(z0).is_zero())
    throw InternalInconsistency("independent solution with f(z0) != 0");
  CycScalar g_z0 = g.eval(z0);
  if (g_z0.is_zero())
    throw InternalInconsistency("independent solution with g(z0) = 0");

  auto sz0z0 = ctx.compose(ctx.apply_sigma(z0), z0);
  CycScalar u = g.eval(sz0z0);
  CycScalar v = f.eval(sz0z0);
  rep.g_sz0z0 = u;
  rep.f_sz0z0 = v;

  typename Ctx::Func F = f;  // the anti-symmetric part of the pair
  typename Ctx::Func G = g;  // its companion
  CycScalar gamma_branch = CycScalar::one(conductor);
  if (u.is_zero()) {
    if (v.is_zero())
      throw InternalInconsistency(
          "g and f both vanish at sigma(z0) z0 for an independent solution");
    rep.branch = "case-1";
    gamma_branch = g_z0 / v;
    F = g;
    G = gamma_branch * f;
  } else if (v.is_zero()) {
    rep.branch = "subcase-2.1";
    CycScalar beta = g_z0 / u;
    F = f;
    G = beta * g;
    gamma_branch = beta;
  } else {
    rep.branch = "subcase-2.2";
    CycScalar alpha = v / u;
    CycScalar delta = g_z0 / u;
    F = f - alpha * g;
    G = delta * g;
    if (F.is_zero())
      throw InternalInconsistency("independent pair collapsed to dependent");
    rep.constants["alpha"] = alpha;
    rep.constants["delta"] = delta;
    gamma_branch = delta;
  }

  if (!verify_sine_subtraction(ctx, F, G).ok())
    throw InternalInconsistency(
        "derived pair does not satisfy the sine subtraction law");

  SineDecomposition<Ctx> dec;
  try {
    dec = decompose_sine_subtraction(ctx, F, G, conductor, catalog);
  } catch (const NoCatalogMatch& e) {
    throw UnclassifiableWithinConductor(
        std::string("no exponential within this conductor explains the pair: ") +
        e.what());
  }

  FamilyDescriptor<Ctx> d;
  d.catalog = Catalog::kBase;
  d.chi = dec.chi;
  if (!dec.psi_shape) {
    rep.shape = "antisymmetric";
    rep.chi = dec.chi;
    rep.chi_sigma = dec.chi_sigma;
    if (rep.branch == "case-1") {
      rep.family = 3;
      rep.constants["gamma"] = gamma_branch;
      d.constants = {{"gamma", gamma_branch}, {"b", dec.b}, {"c", dec.c}};
    } else if (rep.branch == "subcase-2.1") {
      rep.family = 4;
      rep.constants["beta"] = gamma_branch;
      d.constants = {{"beta", gamma_branch}, {"b", dec.b}, {"c", dec.c}};
    } else {
      rep.family = 5;
      d.constants = {{"alpha", rep.constants["alpha"]},
                     {"delta", rep.constants["delta"]},
                     {"b", dec.b},
                     {"c", dec.c}};
    }
    rep.constants["b"] = dec.b;
    rep.constants["c"] = dec.c;
    rep.gauge_note =
        "(chi, b, c) -> (chi o sigma, -b, -c) yields the same pair";
  } else {
    rep.shape = "psi";
    rep.chi = dec.chi;
    rep.A = dec.A;
    rep.rho = dec.rho;
    d.A = dec.A;
    d.rho = dec.rho;
    if (rep.branch == "case-1") {
      rep.family = 6;
      CycScalar gamma = gamma_branch.inverse();
      rep.constants["gamma"] = gamma;
      d.constants = {{"gamma", gamma}, {"c", dec.c}};
    } else if (rep.branch == "subcase-2.1") {
      rep.family = 7;
      rep.constants["alpha"] = CycScalar::zero(conductor);
      rep.constants["delta"] = gamma_branch;
      d.constants = {{"alpha", CycScalar::zero(conductor)},
                     {"delta", gamma_branch},
                     {"c", dec.c}};
    } else {
      rep.family = 7;
      d.constants = {{"alpha", rep.constants["alpha"]},
                     {"delta", rep.constants["delta"]},
                     {"c", dec.c}};
    }
    rep.constants["c"] = dec.c;
  }
  d.family = rep.family;

  // Rebuild the pair from the recovered ingredients.  The constructor also
  // re-derives every z0-constraint, so a success here certifies them.
  SolutionPair<Ctx> rebuilt = [&] {
    try {
      return construct_base_family(ctx, d, conductor);
    } catch (const Error& e) {
      throw InternalInconsistency(
          std::string("recovered ingredients violate the family constraints: ") +
          e.what());
    }
  }();
  rep.reconstruction_exact = (rebuilt.f == f && rebuilt.g == g);
  if (!rep.reconstruction_exact)
    throw InternalInconsistency("reconstruction from the family formula differs");

  // Post-hoc: the compatibility identity must hold for every pair.
  detail::Evaluator<Ctx> fe(ctx, f), ge(ctx, g);
  auto compat = detail::sweep(ctx, EquationKind::kCompatibility, [&](auto x, auto y) {
    auto xsy = ctx.compose(x, ctx.apply_sigma(y));
    CycScalar lhs = u * fe(xsy);
    CycScalar rhs = g_z0 * (fe(x) * ge(y) - fe(y) * ge(x)) + v * ge(xsy);
    return std::make_pair(lhs, rhs);
  });
  if (!compat.ok())
    throw InternalInconsistency("the compatibility identity fails post hoc");
  rep.compat_checked = true;
  return rep;
}

template <class Ctx>
ClassificationReport<Ctx> classify_base(const Ctx& ctx,
                                       const typename Ctx::Func& f,
                                       const typename Ctx::Func& g,
                                       unsigned conductor) {
  CatalogData<Ctx> catalog = [&] {
    try {
      return make_catalog(ctx, conductor);
    } catch (const ConductorTooSmall& e) {
      throw UnclassifiableWithinConductor(e.what());
    }
  }();
  return classify_base(ctx, f, g, conductor, catalog);
}

// Classification for the shifted equation: (f, g) solves it iff
// (f - lambda g, g) solves the base equation, and the family indices map
// 1 -> 1, 2 -> 2 or 3 (by whether g vanishes), k -> k+1 for k >= 3.
template <class Ctx>
ClassificationReport<Ctx> classify_shifted(const Ctx& ctx,
                                       const typename Ctx::Func& f,
                                       const typename Ctx::Func& g,
                                       const CycScalar& lambda,
                                       unsigned conductor) {
  if (lambda.is_zero()) throw LambdaZero();
  typename Ctx::Func base_f = f - lambda * g;
  ClassificationReport<Ctx> rep = classify_base(ctx, base_f, g, conductor);
  rep.catalog = Catalog::kShifted;
  rep.lambda = lambda;

  FamilyDescriptor<Ctx> d;
  d.catalog = Catalog::kShifted;
  d.lambda = lambda;
  d.constants = rep.constants;
  d.chi = rep.chi;
  d.A = rep.A;
  d.rho = rep.rho;

  switch (rep.family) {
    case 1:
      rep.family = 1;
      d.family = 1;
      d.free_fn = g;
      break;
    case 2: {
      CycScalar kappa = rep.constants.at("kappa");
      if (kappa.is_zero()) {
        rep.family = 2;  // g = 0, f nonzero and vanishing on S S z0
        d.family = 2;
        d.free_fn = base_f;
        rep.constants.erase("kappa");
        d.constants.erase("kappa");
      } else {
        rep.family = 3;  // g nonzero, proportional to f - lambda g
        d.family = 3;
        d.free_fn = g;
      }
      break;
    }
    default:
      rep.family += 1;
      d.family = rep.family;
      break;
  }

  SolutionPair<Ctx> rebuilt = [&] {
    try {
      return construct_shifted_family(ctx, d, conductor);
    } catch (const Error& e) {
      throw InternalInconsistency(
          std::string("shifted reconstruction failed: ") + e.what());
    }
  }();
  rep.reconstruction_exact = (rebuilt.f == f && rebuilt.g == g);
  if (!rep.reconstruction_exact)
    throw InternalInconsistency(
        "shifted reconstruction from the family formula differs");
  return rep;
}

// ---- the symmetric-product equation ----------------------------------------

template <class Ctx>
struct RecoveredExponential {
  CycScalar beta;               // chi = beta f, chi(z0) = 1/beta
  typename Ctx::Func chi;
};

// For a solution f of f(x sigma(y) z0) = f(x) f(y): returns nullopt when
// f = 0 (the trivial solution carries no exponential), otherwise recovers
// the unique sigma-invariant exponential chi with f = chi(z0) chi.
template <class Ctx>
std::optional<RecoveredExponential<Ctx>> recover_symmetric_product(
    const Ctx& ctx, const typename Ctx::Func& f, unsigned conductor);

namespace detail {

inline void require_solution_symmetric_product(const FiniteContext& ctx,
                                  const DenseFunc& f) {
  if (!verify_symmetric_product(ctx, f).ok())
    throw NotASolution("f does not satisfy the symmetric-product equation");
}
inline void require_solution_symmetric_product(const GridContext& ctx, const GridFunc& f) {
  if (!verify_symmetric_product_structural(ctx, f).ok)
    throw NotASolution("f does not satisfy the symmetric-product equation");
}

}  // namespace detail

template <class Ctx>
std::optional<RecoveredExponential<Ctx>> recover_symmetric_product(
    const Ctx& ctx, const typename Ctx::Func& f, unsigned conductor) {
  (void)conductor;
  detail::require_solution_symmetric_product(ctx, f);
  if (f.is_zero()) return std::nullopt;
  CycScalar f_z0 = f.eval(ctx.z0());
  if (f_z0.is_zero())
    throw InternalInconsistency("nonzero solution with f(z0) = 0");
  CycScalar f_sz0z0 = f.eval(ctx.compose(ctx.apply_sigma(ctx.z0()), ctx.z0()));
  if (f_sz0z0.is_zero())
    throw InternalInconsistency("nonzero solution with f(sigma(z0) z0) = 0");
  RecoveredExponential<Ctx> out{f_z0 / f_sz0z0, (f_z0 / f_sz0z0) * f};
  if (!exponential_on(ctx, out.chi))
    throw InternalInconsistency("recovered chi is not an exponential");
  if (pullback_sigma(ctx, out.chi) != out.chi)
    throw InternalInconsistency("recovered chi is not sigma-invariant");
  if (out.chi.eval(ctx.z0()) != out.beta.inverse())
    throw InternalInconsistency("recovered chi(z0) != 1/beta");
  return out;
}

}  // namespace kss
