#include "kss/classifier.hpp"

namespace kss {

namespace {

// The antisymmetric shape is symmetric under (chi, b, c) ->
// (chi o sigma, -b, -c); both catalog entries produce the same pair, so the
// second is not a genuine ambiguity.
bool gauge_duplicate(const SineDecomposition<FiniteContext>& a,
                     const SineDecomposition<FiniteContext>& b) {
  return !a.psi_shape && !b.psi_shape && a.chi == b.chi_sigma &&
         a.chi_sigma == b.chi && a.b == -b.b && a.c == -b.c;
}

}  // namespace

SineDecomposition<FiniteContext> decompose_sine_subtraction(
    const FiniteContext& ctx, const DenseFunc& F, const DenseFunc& G,
    unsigned conductor, const CatalogData<FiniteContext>& catalog) {
  if (F.is_zero())
    throw PreconditionNotMet("decomposition needs a nonzero F");

  const CycScalar one = CycScalar::one(conductor);
  std::vector<SineDecomposition<FiniteContext>> found;

  for (const DenseFunc& chi : catalog.exponentials) {
    DenseFunc chis = chi.pullback(ctx.sigma());
    if (chis != chi) {
      // Antisymmetric shape: F = b (chi - chi o sigma),
      // G = ((1+c) chi + (1-c) chi o sigma) / 2.
      auto pf = solve_span({chi, chis}, F, conductor);
      if (!pf) continue;
      const CycScalar& p = (*pf)[0];
      const CycScalar& q = (*pf)[1];
      if (p.is_zero() || q != -p) continue;
      auto pg = solve_span({chi, chis}, G, conductor);
      if (!pg) continue;
      const CycScalar& r = (*pg)[0];
      const CycScalar& s = (*pg)[1];
      if (r + s != one) continue;
      SineDecomposition<FiniteContext> dec;
      dec.psi_shape = false;
      dec.chi = chi;
      dec.chi_sigma = chis;
      dec.b = p;
      dec.c = r - s;
      bool dup = false;
      for (const auto& other : found)
        if (gauge_duplicate(other, dec)) {
          dup = true;
          break;
        }
      if (!dup) found.push_back(std::move(dec));
    } else {
      // Psi shape: F = Psi_{A chi, rho} and G = chi + c F.
      auto c = dependency_ratio(F, G - chi, conductor);
      if (!c) continue;
      NullPartition part = null_partition(ctx.semigroup(), chi);
      DenseFunc A = DenseFunc::zero(ctx.size(), conductor);
      std::map<Elem, CycScalar> rho;
      bool viable = true;
      for (Elem x = 0; x < ctx.size(); ++x) {
        const CycScalar& Fx = F.eval(x);
        if (!part.in_null[x]) {
          A.set(x, Fx / chi.eval(x));
        } else if (part.in_fringe[x]) {
          if (!Fx.is_zero()) rho.emplace(x, Fx);
        } else if (!Fx.is_zero()) {
          viable = false;  // Psi vanishes on I_chi away from the fringe
          break;
        }
      }
      if (!viable) continue;
      try {
        if (build_psi(ctx, chi, A, rho) != F) continue;
      } catch (const Error&) {
        continue;  // A or rho fails the parity / transport requirements
      }
      SineDecomposition<FiniteContext> dec;
      dec.psi_shape = true;
      dec.chi = chi;
      dec.chi_sigma = chi;
      dec.b = CycScalar::zero(conductor);
      dec.c = *c;
      dec.A = std::move(A);
      dec.rho = std::move(rho);
      found.push_back(std::move(dec));
    }
  }

  if (found.empty())
    throw NoCatalogMatch("no exponential in the catalog explains the pair");
  if (found.size() > 1)
    throw AmbiguousDecomposition(
        "several inequivalent decompositions match the pair");
  return found.front();
}

SineDecomposition<GridContext> decompose_sine_subtraction(
    const GridContext& ctx, const GridFunc& F, const GridFunc& G,
    unsigned conductor, const CatalogData<GridContext>&) {
  if (F.is_zero())
    throw PreconditionNotMet("decomposition needs a nonzero F");

  const auto& ft = F.terms();

  // Antisymmetric shape: F = b a1^x a2^y - b a2^x a1^y, which requires the
  // swap involution and a1 != a2.
  if (ctx.sigma_kind() == GridSigma::kSwap && ft.size() == 2 &&
      ft[0].mono == GridMono::kConst && ft[1].mono == GridMono::kConst &&
      ft[1].coeff == -ft[0].coeff && ft[1].a1 == ft[0].a2 &&
      ft[1].a2 == ft[0].a1 && ft[0].a1 != ft[0].a2) {
    CycScalar r = CycScalar::zero(conductor);
    CycScalar s = CycScalar::zero(conductor);
    bool in_span = true;
    for (const auto& t : G.terms()) {
      if (t.mono != GridMono::kConst) {
        in_span = false;
        break;
      }
      if (t.a1 == ft[0].a1 && t.a2 == ft[0].a2) {
        r = t.coeff;
      } else if (t.a1 == ft[1].a1 && t.a2 == ft[1].a2) {
        s = t.coeff;
      } else {
        in_span = false;
        break;
      }
    }
    if (in_span && r + s == CycScalar::one(conductor)) {
      SineDecomposition<GridContext> dec;
      dec.psi_shape = false;
      dec.chi = GridFunc::exponential(ft[0].a1, ft[0].a2);
      dec.chi_sigma = GridFunc::exponential(ft[1].a1, ft[1].a2);
      dec.b = ft[0].coeff;
      dec.c = r - s;
      return dec;
    }
  }

  // Psi shape: F = (b1 x + b2 y) a1^x a2^y with a sigma-invariant
  // exponential.  The identity involution forces A = 0 and hence F = 0, so
  // only the swap involution can reach this branch.
  if (ctx.sigma_kind() == GridSigma::kSwap && !ft.empty()) {
    const CycScalar& a1 = ft[0].a1;
    const CycScalar& a2 = ft[0].a2;
    CycScalar b1 = CycScalar::zero(conductor);
    CycScalar b2 = CycScalar::zero(conductor);
    bool shape_ok = (a1 == a2);  // chi o sigma = chi
    for (const auto& t : ft) {
      if (!shape_ok) break;
      if (t.a1 != a1 || t.a2 != a2 || t.mono == GridMono::kConst) {
        shape_ok = false;
        break;
      }
      if (t.mono == GridMono::kX)
        b1 = t.coeff;
      else
        b2 = t.coeff;
    }
    if (shape_ok && b2 == -b1) {
      GridFunc chi = GridFunc::exponential(a1, a2);
      if (auto c = dependency_ratio(F, G - chi, conductor)) {
        GridFunc A = GridFunc::additive(b1, b2);
        try {
          if (build_psi(ctx, chi, A) == F) {
            SineDecomposition<GridContext> dec;
            dec.psi_shape = true;
            dec.chi = chi;
            dec.chi_sigma = chi;
            dec.b = CycScalar::zero(conductor);
            dec.c = *c;
            dec.A = std::move(A);
            return dec;
          }
        } catch (const Error&) {
          // fall through to the failure below
        }
      }
    }
  }

  throw NoCatalogMatch(
      "the pair does not match any exponential-polynomial decomposition");
}

}  // namespace kss
