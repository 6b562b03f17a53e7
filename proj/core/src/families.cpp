#include "kss/families.hpp"

namespace kss {
namespace {

CycScalar given_or(const std::map<std::string, CycScalar>& given,
                   const std::string& key, const CycScalar& fallback) {
  auto it = given.find(key);
  return it == given.end() ? fallback : it->second;
}

ConstraintSolveResult unsat(std::string reason) {
  ConstraintSolveResult r;
  r.satisfiable = false;
  r.reason = std::move(reason);
  return r;
}

}  // namespace

std::string catalog_name(Catalog c) {
  return c == Catalog::kBase ? "base" : "shifted";
}

ConstraintSolveResult solve_family_constraints(
    Catalog catalog, int family, const CycScalar& chi_z0,
    const CycScalar& chi_sigma_z0, const std::optional<CycScalar>& A_z0,
    const std::map<std::string, CycScalar>& given, unsigned conductor) {
  // The shifted catalog's family k >= 4 carries the constraints of base
  // family k-1 unchanged (the lambda-shift leaves g and the z0-constraints
  // alone); families 1..3 have no z0-constraints to solve.
  if (catalog == Catalog::kShifted) {
    if (family < 1 || family > 8)
      return unsat("shifted catalog families are numbered 1..8");
    if (family <= 3) {
      ConstraintSolveResult r;
      r.satisfiable = true;
      r.solved = given;
      return r;
    }
    return solve_family_constraints(Catalog::kBase, family - 1, chi_z0,
                                    chi_sigma_z0, A_z0, given, conductor);
  }

  const CycScalar one = CycScalar::one(conductor);
  const CycScalar two = CycScalar::from_integer(2, conductor);
  const CycScalar& u = chi_z0;
  const CycScalar& v = chi_sigma_z0;
  ConstraintSolveResult r;

  switch (family) {
    case 1:
    case 2: {
      r.satisfiable = true;
      r.solved = given;
      return r;
    }
    case 3: {
      if (u.is_zero() || v.is_zero())
        return unsat("family 3 needs chi(z0) and (chi o sigma)(z0) nonzero");
      if (u == v)
        return unsat("family 3 needs chi(z0) != (chi o sigma)(z0)");
      CycScalar c = (u + v) / (v - u);
      CycScalar b = -u * (one + c) / two;
      r.satisfiable = true;
      r.solved = given;
      r.solved["c"] = c;
      r.solved["b"] = b;
      r.solved["gamma"] = given_or(given, "gamma", one);
      if (r.solved["gamma"].is_zero()) return unsat("gamma must be nonzero");
      return r;
    }
    case 4: {
      if (u.is_zero()) return unsat("family 4 needs chi(z0) nonzero");
      if (u != v)
        return unsat("family 4 needs chi(z0) = (chi o sigma)(z0)");
      r.satisfiable = true;
      r.solved = given;
      r.solved["beta"] = u.inverse();
      r.solved["b"] = given_or(given, "b", one);
      if (r.solved["b"].is_zero()) return unsat("b must be nonzero");
      r.solved["c"] = given_or(given, "c", CycScalar::zero(conductor));
      return r;
    }
    case 5: {
      if (u.is_zero() || v.is_zero())
        return unsat("family 5 needs chi(z0) and (chi o sigma)(z0) nonzero");
      if (u == v)
        return unsat("family 5 needs chi(z0) != (chi o sigma)(z0)");
      CycScalar alpha = given_or(given, "alpha", one);
      CycScalar delta = given_or(given, "delta", one);
      if (alpha.is_zero()) return unsat("alpha must be nonzero");
      if (delta.is_zero()) return unsat("delta must be nonzero");
      // The z0-constraints are linear in (b, c):
      //   2 b (1 - u delta) - u alpha c = u alpha
      //   2 b (1 - v delta) - v alpha c = -v alpha
      // with determinant 2 alpha (u - v) != 0.
      CycScalar a11 = two * (one - u * delta), a12 = -u * alpha;
      CycScalar a21 = two * (one - v * delta), a22 = -v * alpha;
      CycScalar rhs1 = u * alpha, rhs2 = -v * alpha;
      CycScalar det = a11 * a22 - a12 * a21;
      if (det.is_zero())
        throw InternalInconsistency("family 5 constraint system is singular");
      CycScalar b = (rhs1 * a22 - a12 * rhs2) / det;
      CycScalar c = (a11 * rhs2 - rhs1 * a21) / det;
      if (b.is_zero())
        throw InternalInconsistency("family 5 solved to b = 0");
      r.satisfiable = true;
      r.solved = given;
      r.solved["alpha"] = alpha;
      r.solved["delta"] = delta;
      r.solved["b"] = b;
      r.solved["c"] = c;
      return r;
    }
    case 6: {
      if (!A_z0) return unsat("family 6 needs A(z0)");
      if (u.is_zero()) return unsat("family 6 needs chi(z0) nonzero");
      if (u != *A_z0) return unsat("family 6 needs chi(z0) = A(z0)");
      r.satisfiable = true;
      r.solved = given;
      r.solved["c"] = -u.inverse();
      r.solved["gamma"] = given_or(given, "gamma", one);
      if (r.solved["gamma"].is_zero()) return unsat("gamma must be nonzero");
      return r;
    }
    case 7: {
      if (!A_z0) return unsat("family 7 needs A(z0)");
      if (u.is_zero()) return unsat("family 7 needs chi(z0) nonzero");
      CycScalar c = given_or(given, "c", CycScalar::zero(conductor));
      CycScalar alpha = -*A_z0 / u;
      CycScalar delta = u.inverse() - alpha * c;
      if (delta.is_zero())
        return unsat("derived delta vanishes; pick a different c");
      r.satisfiable = true;
      r.solved = given;
      r.solved["c"] = c;
      r.solved["alpha"] = alpha;
      r.solved["delta"] = delta;
      return r;
    }
    default:
      return unsat("base catalog families are numbered 1..7");
  }
}

}  // namespace kss
