#pragma once

#include <map>
#include <optional>
#include <string>

#include "kss/function_space.hpp"
#include "kss/functions.hpp"
#include "kss/semigroup.hpp"

namespace kss {

// The two solution catalogs: the base equation
//     f(x sigma(y) z0) = f(x) g(y) - f(y) g(x)
// has seven families; the shifted equation (extra term lambda * g(...) on
// the right, lambda != 0) has eight, obtained from the base catalog by the
// substitution f -> f + lambda g.
enum class Catalog { kBase, kShifted };

std::string catalog_name(Catalog c);

template <class Ctx>
struct SolutionPair {
  typename Ctx::Func f, g;
};

// Everything a family constructor may need.  Which pieces are required
// depends on the family:
//   base 1: free_fn (becomes g)
//   base 2: free_fn (f; nonzero, vanishing on S S z0), constant kappa
//   base 3: chi, constants gamma, b, c
//   base 4: chi, constants beta, b, c
//   base 5: chi, constants alpha, delta, b, c
//   base 6: chi, A, rho, constants gamma, c
//   base 7: chi, A, rho, constants alpha, delta, c
//   shifted 1: free_fn (g); f = lambda g
//   shifted 2: free_fn (f; nonzero, vanishing on S S z0); g = 0
//   shifted 3: free_fn (h), constant kappa != 0; g = h, f = ((1+kappa lambda)/kappa) h
//   shifted k (4..8): ingredients of base family k-1, shifted by lambda.
template <class Ctx>
struct FamilyDescriptor {
  Catalog catalog = Catalog::kBase;
  int family = 1;
  std::map<std::string, CycScalar> constants;
  std::optional<typename Ctx::Func> chi;
  std::optional<typename Ctx::Func> A;
  std::map<typename Ctx::Element, CycScalar> rho;
  std::optional<typename Ctx::Func> free_fn;
  std::optional<CycScalar> lambda;  // shifted catalog only; must be nonzero
};

// ---- small per-world helpers (overload set used by the templates) --------

inline DenseFunc zero_func(const FiniteContext& ctx, unsigned conductor) {
  return DenseFunc::zero(ctx.size(), conductor);
}
inline GridFunc zero_func(const GridContext&, unsigned) {
  return GridFunc::zero();
}

inline DenseFunc pullback_sigma(const FiniteContext& ctx, const DenseFunc& f) {
  return f.pullback(ctx.sigma());
}
inline GridFunc pullback_sigma(const GridContext& ctx, const GridFunc& f) {
  return f.pullback(ctx.sigma_kind());
}

inline bool exponential_on(const FiniteContext& ctx, const DenseFunc& f) {
  return is_exponential(ctx.semigroup(), f);
}
inline bool exponential_on(const GridContext&, const GridFunc& f) {
  return is_exponential(f);
}

// Is S S z0 a proper subset of S?
inline bool squares_proper(const FiniteContext& ctx) {
  return !squares_ideal(ctx).equals_all;
}
inline bool squares_proper(const GridContext&) { return true; }

inline bool vanishes_on_squares(const FiniteContext& ctx, const DenseFunc& f) {
  for (Elem e : squares_ideal(ctx).elements)
    if (!f.eval(e).is_zero()) return false;
  return true;
}
// A nonzero exponential-polynomial form cannot vanish on the upper-right
// cone S S z0, so only the zero function qualifies.
inline bool vanishes_on_squares(const GridContext&, const GridFunc& f) {
  return f.is_zero();
}

inline DenseFunc make_psi(const FiniteContext& ctx, const DenseFunc& chi,
                          const DenseFunc& A,
                          const std::map<Elem, CycScalar>& rho) {
  return build_psi(ctx, chi, A, rho);
}
inline GridFunc make_psi(const GridContext& ctx, const GridFunc& chi,
                         const GridFunc& A,
                         const std::map<GridPoint, CycScalar>& rho) {
  if (!rho.empty())
    throw PreconditionNotMet(
        "the grid has an empty fringe; rho must not be given");
  return build_psi(ctx, chi, A);
}

// ---- constructors ---------------------------------------------------------

template <class Ctx>
SolutionPair<Ctx> construct_base_family(const Ctx& ctx,
                                        const FamilyDescriptor<Ctx>& d,
                                        unsigned conductor);

template <class Ctx>
SolutionPair<Ctx> construct_shifted_family(const Ctx& ctx,
                                           const FamilyDescriptor<Ctx>& d,
                                           unsigned conductor);

// The symmetric-product equation f(x sigma(y) z0) = f(x) f(y): its nonzero
// solutions are exactly f = chi(z0) chi with chi a sigma-invariant
// exponential.
template <class Ctx>
typename Ctx::Func construct_symmetric_product(const Ctx& ctx,
                                               const typename Ctx::Func& chi,
                                               unsigned conductor);

// ---- constraint solving ----------------------------------------------------

// Derives the constants a family's z0-constraints determine, given the
// values u = chi(z0), v = (chi o sigma)(z0), optionally A(z0), and any
// caller-chosen free constants.  Families whose constraints cannot be met
// for these values come back unsatisfiable with the reason spelled out.
struct ConstraintSolveResult {
  bool satisfiable = false;
  std::string reason;
  std::map<std::string, CycScalar> solved;
};

ConstraintSolveResult solve_family_constraints(
    Catalog catalog, int family, const CycScalar& chi_z0,
    const CycScalar& chi_sigma_z0, const std::optional<CycScalar>& A_z0,
    const std::map<std::string, CycScalar>& given, unsigned conductor);

// ---- implementation ---------------------------------------------------------

namespace detail {

inline const CycScalar& require_constant(
    const std::map<std::string, CycScalar>& constants, const std::string& key,
    int family) {
  auto it = constants.find(key);
  if (it == constants.end())
    throw ConstraintViolated("family " + std::to_string(family) +
                             " needs the constant '" + key + "'");
  return it->second;
}

inline const CycScalar& require_nonzero(const CycScalar& v,
                                        const std::string& what) {
  if (v.is_zero()) throw ConstraintViolated(what + " must be nonzero");
  return v;
}

template <class Ctx>
const typename Ctx::Func& require_chi(const Ctx& ctx,
                                      const FamilyDescriptor<Ctx>& d) {
  if (!d.chi)
    throw ConstraintViolated("family " + std::to_string(d.family) +
                             " needs an exponential chi");
  if (!exponential_on(ctx, *d.chi))
    throw ConstraintViolated("chi is not a nonzero exponential");
  return *d.chi;
}

inline void require_equal(const CycScalar& got, const CycScalar& want,
                          const std::string& what) {
  if (got != want)
    throw ConstraintViolated(what + ": got " + got.str() + ", need " +
                             want.str());
}

}  // namespace detail

template <class Ctx>
SolutionPair<Ctx> construct_base_family(const Ctx& ctx,
                                        const FamilyDescriptor<Ctx>& d,
                                        unsigned conductor) {
  using detail::require_constant;
  using detail::require_equal;
  using detail::require_nonzero;

  const CycScalar one = CycScalar::one(conductor);
  const CycScalar two = CycScalar::from_integer(2, conductor);
  auto z0 = ctx.z0();

  switch (d.family) {
    case 1: {
      if (!d.free_fn) throw ConstraintViolated("family 1 needs the free function g");
      return {zero_func(ctx, conductor), *d.free_fn};
    }
    case 2: {
      if (!squares_proper(ctx))
        throw FamilyUnavailable("family 2 needs S S z0 to be a proper subset");
      if (!d.free_fn)
        throw ConstraintViolated("family 2 needs the free function f");
      const auto& f = *d.free_fn;
      if (f.is_zero()) throw ConstraintViolated("family 2 needs f nonzero");
      if (!vanishes_on_squares(ctx, f))
        throw ConstraintViolated("family 2 needs f to vanish on S S z0");
      const CycScalar& kappa = require_constant(d.constants, "kappa", 2);
      return {f, kappa * f};
    }
    case 3: {
      const CycScalar& gamma =
          require_nonzero(require_constant(d.constants, "gamma", 3), "gamma");
      const CycScalar& b =
          require_nonzero(require_constant(d.constants, "b", 3), "b");
      const CycScalar& c = require_constant(d.constants, "c", 3);
      if (c == one || c == -one)
        throw ConstraintViolated("family 3 needs c != 1 and c != -1");
      const auto& chi = detail::require_chi(ctx, d);
      auto chis = pullback_sigma(ctx, chi);
      if (chis == chi)
        throw WrongSigmaParity("family 3 needs chi o sigma != chi");
      require_equal(chi.eval(z0), -two * b / (one + c), "chi(z0)");
      require_equal(chis.eval(z0), two * b / (one - c), "(chi o sigma)(z0)");
      CycScalar inv2g = (two * gamma).inverse();
      return {inv2g * ((one + c) * chi + (one - c) * chis),
              b * chi - b * chis};
    }
    case 4: {
      const CycScalar& beta =
          require_nonzero(require_constant(d.constants, "beta", 4), "beta");
      const CycScalar& b =
          require_nonzero(require_constant(d.constants, "b", 4), "b");
      const CycScalar& c = require_constant(d.constants, "c", 4);
      const auto& chi = detail::require_chi(ctx, d);
      auto chis = pullback_sigma(ctx, chi);
      if (chis == chi)
        throw WrongSigmaParity("family 4 needs chi o sigma != chi");
      require_equal(chi.eval(z0), beta.inverse(), "chi(z0)");
      require_equal(chis.eval(z0), beta.inverse(), "(chi o sigma)(z0)");
      CycScalar inv2b = (two * beta).inverse();
      return {b * chi - b * chis,
              inv2b * ((one + c) * chi + (one - c) * chis)};
    }
    case 5: {
      const CycScalar& alpha =
          require_nonzero(require_constant(d.constants, "alpha", 5), "alpha");
      const CycScalar& delta =
          require_nonzero(require_constant(d.constants, "delta", 5), "delta");
      const CycScalar& b =
          require_nonzero(require_constant(d.constants, "b", 5), "b");
      const CycScalar& c = require_constant(d.constants, "c", 5);
      CycScalar den_plus = alpha * (one + c) + two * b * delta;
      CycScalar den_minus = alpha * (c - one) + two * b * delta;
      if (den_plus.is_zero() || den_minus.is_zero())
        throw ConstraintViolated(
            "family 5 needs alpha != +-(alpha c + 2 b delta)");
      const auto& chi = detail::require_chi(ctx, d);
      auto chis = pullback_sigma(ctx, chi);
      if (chis == chi)
        throw WrongSigmaParity("family 5 needs chi o sigma != chi");
      require_equal(chi.eval(z0), two * b / den_plus, "chi(z0)");
      require_equal(chis.eval(z0), two * b / den_minus, "(chi o sigma)(z0)");
      CycScalar inv2d = (two * delta).inverse();
      CycScalar s = alpha * c + two * b * delta;
      return {inv2d * ((alpha + s) * chi + (alpha - s) * chis),
              inv2d * ((one + c) * chi + (one - c) * chis)};
    }
    case 6: {
      const CycScalar& gamma =
          require_nonzero(require_constant(d.constants, "gamma", 6), "gamma");
      const CycScalar& c =
          require_nonzero(require_constant(d.constants, "c", 6), "c");
      const auto& chi = detail::require_chi(ctx, d);
      if (pullback_sigma(ctx, chi) != chi)
        throw WrongSigmaParity("family 6 needs chi o sigma = chi");
      if (!d.A) throw ConstraintViolated("family 6 needs the additive part A");
      auto psi = make_psi(ctx, chi, *d.A, d.rho);
      CycScalar want = -c.inverse();
      require_equal(chi.eval(z0), want, "chi(z0)");
      require_equal(d.A->eval(z0), want, "A(z0)");
      return {gamma * (chi + c * psi), psi};
    }
    case 7: {
      const CycScalar& alpha = require_constant(d.constants, "alpha", 7);
      const CycScalar& delta =
          require_nonzero(require_constant(d.constants, "delta", 7), "delta");
      const CycScalar& c = require_constant(d.constants, "c", 7);
      CycScalar den = alpha * c + delta;
      if (den.is_zero())
        throw ConstraintViolated("family 7 needs alpha c + delta != 0");
      const auto& chi = detail::require_chi(ctx, d);
      if (pullback_sigma(ctx, chi) != chi)
        throw WrongSigmaParity("family 7 needs chi o sigma = chi");
      if (!d.A) throw ConstraintViolated("family 7 needs the additive part A");
      auto psi = make_psi(ctx, chi, *d.A, d.rho);
      if (psi.is_zero())
        throw ConstraintViolated("family 7 needs Psi != 0");
      require_equal(chi.eval(z0), den.inverse(), "chi(z0)");
      require_equal(d.A->eval(z0), -alpha / den, "A(z0)");
      CycScalar invd = delta.inverse();
      return {invd * (alpha * chi + den * psi), invd * (chi + c * psi)};
    }
    default:
      throw InvalidInput("base catalog families are numbered 1..7");
  }
}

template <class Ctx>
SolutionPair<Ctx> construct_shifted_family(const Ctx& ctx,
                                           const FamilyDescriptor<Ctx>& d,
                                           unsigned conductor) {
  if (!d.lambda || d.lambda->is_zero()) throw LambdaZero();
  const CycScalar& lambda = *d.lambda;
  const CycScalar one = CycScalar::one(conductor);

  switch (d.family) {
    case 1: {
      if (!d.free_fn)
        throw ConstraintViolated("shifted family 1 needs the free function g");
      return {lambda * *d.free_fn, *d.free_fn};
    }
    case 2: {
      if (!squares_proper(ctx))
        throw FamilyUnavailable(
            "shifted family 2 needs S S z0 to be a proper subset");
      if (!d.free_fn)
        throw ConstraintViolated("shifted family 2 needs the free function f");
      const auto& f = *d.free_fn;
      if (f.is_zero())
        throw ConstraintViolated("shifted family 2 needs f nonzero");
      if (!vanishes_on_squares(ctx, f))
        throw ConstraintViolated("shifted family 2 needs f to vanish on S S z0");
      return {f, zero_func(ctx, conductor)};
    }
    case 3: {
      if (!squares_proper(ctx))
        throw FamilyUnavailable(
            "shifted family 3 needs S S z0 to be a proper subset");
      if (!d.free_fn)
        throw ConstraintViolated("shifted family 3 needs the free function h");
      const auto& h = *d.free_fn;
      if (h.is_zero())
        throw ConstraintViolated("shifted family 3 needs h nonzero");
      if (!vanishes_on_squares(ctx, h))
        throw ConstraintViolated("shifted family 3 needs h to vanish on S S z0");
      const CycScalar& kappa =
          detail::require_nonzero(detail::require_constant(d.constants, "kappa", 3),
                                  "kappa");
      return {((one + kappa * lambda) / kappa) * h, h};
    }
    case 4: case 5: case 6: case 7: case 8: {
      // Shift of the corresponding base family: (f, g) -> (f + lambda g, g).
      FamilyDescriptor<Ctx> base = d;
      base.catalog = Catalog::kBase;
      base.family = d.family - 1;
      base.lambda.reset();
      SolutionPair<Ctx> p = construct_base_family(ctx, base, conductor);
      return {p.f + lambda * p.g, p.g};
    }
    default:
      throw InvalidInput("shifted catalog families are numbered 1..8");
  }
}

template <class Ctx>
typename Ctx::Func construct_symmetric_product(const Ctx& ctx,
                                               const typename Ctx::Func& chi,
                                               unsigned conductor) {
  (void)conductor;
  if (!exponential_on(ctx, chi))
    throw ConstraintViolated("the symmetric-product solution needs a nonzero exponential");
  if (pullback_sigma(ctx, chi) != chi)
    throw WrongSigmaParity("the symmetric-product solution needs chi o sigma = chi");
  return chi.eval(ctx.z0()) * chi;
}

}  // namespace kss
