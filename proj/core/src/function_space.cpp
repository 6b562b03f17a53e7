#include "kss/function_space.hpp"

#include <algorithm>
#include <numeric>

namespace kss {
namespace {

// Row echelon rank over Q(zeta_N); destroys `m`.
std::size_t rank_destructive(std::vector<std::vector<CycScalar>>& m) {
  std::size_t rank = 0;
  if (m.empty()) return 0;
  std::size_t cols = m[0].size();
  for (std::size_t col = 0; col < cols && rank < m.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < m.size() && m[pivot][col].is_zero()) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[rank], m[pivot]);
    CycScalar inv = m[rank][col].inverse();
    for (std::size_t j = col; j < cols; ++j) m[rank][j] = inv * m[rank][j];
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == rank || m[r][col].is_zero()) continue;
      CycScalar factor = m[r][col];
      for (std::size_t j = col; j < cols; ++j)
        m[r][j] = m[r][j] - factor * m[rank][j];
    }
    ++rank;
  }
  return rank;
}

std::vector<Elem> mask_to_list(const std::vector<bool>& mask) {
  std::vector<Elem> out;
  for (std::size_t i = 0; i < mask.size(); ++i)
    if (mask[i]) out.push_back(static_cast<Elem>(i));
  return out;
}

}  // namespace

PropertyReport is_multiplicative(const FiniteSemigroup& sg,
                                 const DenseFunc& f) {
  PropertyReport rep;
  if (f.size() != sg.size()) {
    rep.ok = false;
    rep.violation = "function domain does not match semigroup";
    return rep;
  }
  for (Elem x = 0; x < sg.size(); ++x) {
    for (Elem y = 0; y < sg.size(); ++y) {
      if (f.eval(sg.compose(x, y)) != f.eval(x) * f.eval(y)) {
        rep.ok = false;
        rep.violation = "chi(" + sg.name(x) + " " + sg.name(y) +
                        ") != chi(" + sg.name(x) + ") chi(" + sg.name(y) + ")";
        return rep;
      }
    }
  }
  return rep;
}

PropertyReport is_multiplicative(const GridFunc& f) {
  PropertyReport rep;
  if (f.is_zero()) return rep;
  if (f.terms().size() != 1 || f.terms()[0].mono != GridMono::kConst ||
      !f.terms()[0].coeff.is_one()) {
    rep.ok = false;
    rep.violation = "grid function is not of the form a1^x a2^y";
  }
  return rep;
}

bool is_exponential(const FiniteSemigroup& sg, const DenseFunc& f) {
  return !f.is_zero() && is_multiplicative(sg, f).ok;
}

bool is_exponential(const GridFunc& f) {
  return !f.is_zero() && is_multiplicative(f).ok;
}

std::optional<std::pair<CycScalar, CycScalar>> exponential_bases(
    const GridFunc& f) {
  if (!is_exponential(f)) return std::nullopt;
  return std::make_pair(f.terms()[0].a1, f.terms()[0].a2);
}

std::vector<DenseFunc> enumerate_exponentials(const FiniteSemigroup& sg,
                                              unsigned conductor) {
  const std::size_t n = sg.size();
  // Candidate values per element: 0 or a root of unity whose order divides
  // the element's power period.
  unsigned required = 1;
  std::vector<unsigned> periods(n);
  for (Elem x = 0; x < n; ++x) {
    periods[x] = index_period(sg, x).period;
    required = std::lcm(required, periods[x]);
  }
  if (conductor % required != 0)
    throw ConductorTooSmall(conductor, required);

  std::vector<std::vector<CycScalar>> candidates(n);
  for (Elem x = 0; x < n; ++x) {
    candidates[x].push_back(CycScalar::zero(conductor));
    unsigned p = periods[x];
    for (unsigned j = 0; j < p; ++j)
      candidates[x].push_back(
          CycScalar::root_of_unity(conductor, static_cast<long>(j * (conductor / p))));
  }

  std::vector<CycScalar> assignment(n, CycScalar::zero(conductor));
  std::vector<DenseFunc> found;

  // The constraint chi(xy) = chi(x)chi(y) is checked as soon as x, y and xy
  // are all assigned, i.e. at the depth of the latest of the three.
  auto consistent_at = [&](std::size_t depth) {
    for (Elem x = 0; x <= depth; ++x) {
      for (Elem y = 0; y <= depth; ++y) {
        Elem p = sg.compose(x, y);
        if (p > depth) continue;
        if (x != depth && y != depth && p != depth) continue;
        if (assignment[p] != assignment[x] * assignment[y]) return false;
      }
    }
    return true;
  };

  auto rec = [&](auto&& self, std::size_t depth) -> void {
    if (depth == n) {
      bool all_zero = std::all_of(assignment.begin(), assignment.end(),
                                  [](const CycScalar& v) { return v.is_zero(); });
      if (!all_zero) found.push_back(DenseFunc(assignment));
      return;
    }
    for (const CycScalar& v : candidates[depth]) {
      assignment[depth] = v;
      if (consistent_at(depth)) self(self, depth + 1);
    }
    assignment[depth] = CycScalar::zero(conductor);
  };
  rec(rec, 0);
  return found;
}

NullPartition null_partition(const FiniteSemigroup& sg, const DenseFunc& chi) {
  if (!is_exponential(sg, chi))
    throw PreconditionNotMet("null_partition needs a nonzero exponential");
  const std::size_t n = sg.size();
  NullPartition out;
  out.in_null.assign(n, false);
  out.in_null_square.assign(n, false);
  out.in_fringe.assign(n, false);
  for (Elem x = 0; x < n; ++x) out.in_null[x] = chi.eval(x).is_zero();
  for (Elem x = 0; x < n; ++x) {
    if (!out.in_null[x]) continue;
    for (Elem y = 0; y < n; ++y)
      if (out.in_null[y]) out.in_null_square[sg.compose(x, y)] = true;
  }
  std::vector<Elem> units;  // S \ I_chi
  for (Elem u = 0; u < n; ++u)
    if (!out.in_null[u]) units.push_back(u);
  auto in_frontier = [&](Elem e) {  // I \ I^2
    return out.in_null[e] && !out.in_null_square[e];
  };
  for (Elem p = 0; p < n; ++p) {
    if (!in_frontier(p)) continue;
    bool good = true;
    for (Elem u : units) {
      if (!in_frontier(sg.compose(u, p))) { good = false; break; }
      for (Elem v : units) {
        if (!in_frontier(sg.compose(p, v)) ||
            !in_frontier(sg.compose(sg.compose(u, p), v))) {
          good = false;
          break;
        }
      }
      if (!good) break;
    }
    out.in_fringe[p] = good;
  }
  out.null_ideal = mask_to_list(out.in_null);
  out.null_square = mask_to_list(out.in_null_square);
  out.fringe = mask_to_list(out.in_fringe);
  return out;
}

PropertyReport is_additive_on(const FiniteSemigroup& sg, const DenseFunc& A,
                              const std::vector<bool>& domain) {
  PropertyReport rep;
  if (A.size() != sg.size() || domain.size() != sg.size()) {
    rep.ok = false;
    rep.violation = "domain mask or function size mismatch";
    return rep;
  }
  for (Elem x = 0; x < sg.size(); ++x) {
    if (!domain[x]) continue;
    for (Elem y = 0; y < sg.size(); ++y) {
      if (!domain[y]) continue;
      Elem p = sg.compose(x, y);
      if (!domain[p]) {
        rep.ok = false;
        rep.violation = "domain is not closed under multiplication";
        return rep;
      }
      if (A.eval(p) != A.eval(x) + A.eval(y)) {
        rep.ok = false;
        rep.violation = "A(" + sg.name(x) + " " + sg.name(y) + ") != A(" +
                        sg.name(x) + ") + A(" + sg.name(y) + ")";
        return rep;
      }
    }
  }
  return rep;
}

std::optional<std::pair<CycScalar, CycScalar>> additive_coeffs(
    const GridFunc& A) {
  CycScalar b1 = CycScalar::zero(1);
  CycScalar b2 = CycScalar::zero(1);
  for (const auto& t : A.terms()) {
    if (!t.a1.is_one() || !t.a2.is_one()) return std::nullopt;
    switch (t.mono) {
      case GridMono::kX: b1 = t.coeff; break;
      case GridMono::kY: b2 = t.coeff; break;
      case GridMono::kConst: return std::nullopt;  // constants break A(2,2)=2A(1,1)
    }
  }
  return std::make_pair(b1, b2);
}

DenseFunc build_psi(const FiniteContext& ctx, const DenseFunc& chi,
                    const DenseFunc& A,
                    const std::map<Elem, CycScalar>& rho) {
  const FiniteSemigroup& sg = ctx.semigroup();
  if (!is_exponential(sg, chi))
    throw PreconditionNotMet("Psi needs a nonzero exponential chi");
  if (chi.pullback(ctx.sigma()) != chi)
    throw ParityViolation("chi o sigma != chi");
  NullPartition part = null_partition(sg, chi);
  std::vector<bool> units(sg.size());
  for (std::size_t i = 0; i < units.size(); ++i) units[i] = !part.in_null[i];

  auto arep = is_additive_on(sg, A, units);
  if (!arep.ok) throw PreconditionNotMet("A is not additive on S \\ I_chi: " +
                                         arep.violation);
  for (Elem x = 0; x < sg.size(); ++x) {
    if (part.in_null[x]) continue;
    if (A.eval(ctx.apply_sigma(x)) != -A.eval(x))
      throw ParityViolation("A o sigma != -A at " + sg.name(x));
  }

  unsigned conductor = chi.eval(0).conductor();
  auto rho_at = [&](Elem p) {
    auto it = rho.find(p);
    return it == rho.end() ? CycScalar::zero(conductor) : it->second;
  };
  for (const auto& [p, value] : rho) {
    (void)value;
    if (p >= sg.size() || !part.in_fringe[p])
      throw PreconditionNotMet("rho is only defined on the fringe P_chi");
  }
  for (Elem p : part.fringe) {
    Elem sp = ctx.apply_sigma(p);
    if (!part.in_fringe[sp])
      throw InternalInconsistency("sigma does not stabilize the fringe");
    if (rho_at(sp) != -rho_at(p))
      throw ParityViolation("rho o sigma != -rho at " + sg.name(p));
  }
  for (Elem p : part.fringe) {
    for (Elem u = 0; u < sg.size(); ++u) {
      if (!units[u]) continue;
      if (rho_at(sg.compose(u, p)) != chi.eval(u) * rho_at(p))
        throw RhoCompatibilityViolation("rho(" + sg.name(u) + " " +
                                        sg.name(p) + ") != chi(" + sg.name(u) +
                                        ") rho(" + sg.name(p) + ")");
      for (Elem v = 0; v < sg.size(); ++v) {
        if (!units[v]) continue;
        if (rho_at(sg.compose(p, v)) != rho_at(p) * chi.eval(v))
          throw RhoCompatibilityViolation("rho(" + sg.name(p) + " " +
                                          sg.name(v) + ") != rho(" +
                                          sg.name(p) + ") chi(" + sg.name(v) +
                                          ")");
        if (rho_at(sg.compose(sg.compose(u, p), v)) !=
            chi.eval(u) * rho_at(p) * chi.eval(v))
          throw RhoCompatibilityViolation("rho(" + sg.name(u) + " " +
                                          sg.name(p) + " " + sg.name(v) +
                                          ") is not transported correctly");
      }
    }
  }

  DenseFunc psi = DenseFunc::zero(sg.size(), conductor);
  for (Elem x = 0; x < sg.size(); ++x) {
    if (units[x])
      psi.set(x, A.eval(x) * chi.eval(x));
    else if (part.in_fringe[x])
      psi.set(x, rho_at(x));
  }
  return psi;
}

GridFunc build_psi(const GridContext& ctx, const GridFunc& chi,
                   const GridFunc& A) {
  auto bases = exponential_bases(chi);
  if (!bases) throw PreconditionNotMet("Psi needs a nonzero exponential chi");
  if (chi.pullback(ctx.sigma_kind()) != chi)
    throw ParityViolation("chi o sigma != chi");
  auto coeffs = additive_coeffs(A);
  if (!coeffs)
    throw PreconditionNotMet("A must have the additive form b1*x + b2*y");
  if (A.pullback(ctx.sigma_kind()) != -CycScalar::one(1) * A)
    throw ParityViolation("A o sigma != -A");
  // The null set of a grid exponential is empty, so Psi is just A * chi.
  return A * chi;
}

bool linearly_independent(const std::vector<DenseFunc>& fns) {
  if (fns.empty()) return true;
  std::vector<std::vector<CycScalar>> m;
  m.reserve(fns.size());
  for (const auto& f : fns) m.push_back(f.values());
  return rank_destructive(m) == fns.size();
}

bool linearly_independent(const std::vector<GridFunc>& fns) {
  if (fns.empty()) return true;
  // Coordinates over the union of term shapes; normalized term shapes are
  // linearly independent functions, so matrix rank decides.
  struct KeyLess {
    bool operator()(const GridTerm& a, const GridTerm& b) const {
      int c = CycScalar::compare(a.a1, b.a1);
      if (c != 0) return c < 0;
      c = CycScalar::compare(a.a2, b.a2);
      if (c != 0) return c < 0;
      return a.mono < b.mono;
    }
  };
  std::map<GridTerm, std::size_t, KeyLess> columns;
  for (const auto& f : fns)
    for (const auto& t : f.terms())
      columns.emplace(t, columns.size());
  if (columns.empty()) return false;  // every function is zero
  std::vector<std::vector<CycScalar>> m(
      fns.size(), std::vector<CycScalar>(columns.size(), CycScalar::zero(1)));
  for (std::size_t i = 0; i < fns.size(); ++i)
    for (const auto& t : fns[i].terms())
      m[i][columns.find(t)->second] = t.coeff;
  return rank_destructive(m) == fns.size();
}

std::optional<CycScalar> dependency_ratio(const DenseFunc& f,
                                          const DenseFunc& g,
                                          unsigned conductor) {
  if (f.is_zero())
    return g.is_zero() ? std::optional<CycScalar>(CycScalar::zero(conductor))
                       : std::nullopt;
  if (g.is_zero()) return CycScalar::zero(conductor);
  for (Elem x = 0; x < f.size(); ++x) {
    if (f.eval(x).is_zero()) continue;
    CycScalar kappa = g.eval(x) / f.eval(x);
    if (g == kappa * f) return kappa;
    return std::nullopt;
  }
  return std::nullopt;
}

std::optional<CycScalar> dependency_ratio(const GridFunc& f, const GridFunc& g,
                                          unsigned conductor) {
  if (f.is_zero())
    return g.is_zero() ? std::optional<CycScalar>(CycScalar::zero(conductor))
                       : std::nullopt;
  if (g.is_zero()) return CycScalar::zero(conductor);
  // kappa must map the leading term of f to a term of g.
  const GridTerm& lead = f.terms()[0];
  for (const auto& t : g.terms()) {
    if (t.a1 == lead.a1 && t.a2 == lead.a2 && t.mono == lead.mono) {
      CycScalar kappa = t.coeff / lead.coeff;
      if (g == kappa * f) return kappa;
      return std::nullopt;
    }
  }
  return std::nullopt;
}

std::optional<std::vector<CycScalar>> solve_span(
    const std::vector<DenseFunc>& columns, const DenseFunc& target,
    unsigned conductor) {
  const std::size_t k = columns.size();
  if (k == 0) return target.is_zero()
                         ? std::optional<std::vector<CycScalar>>(
                               std::vector<CycScalar>{})
                         : std::nullopt;
  const std::size_t n = columns[0].size();
  // Augmented system [columns | target], reduced over rows = elements.
  std::vector<std::vector<CycScalar>> m(
      n, std::vector<CycScalar>(k + 1, CycScalar::zero(conductor)));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < k; ++c)
      m[r][c] = columns[c].eval(static_cast<Elem>(r));
    m[r][k] = target.eval(static_cast<Elem>(r));
  }
  // Gauss-Jordan on the first k columns.
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_col;
  for (std::size_t col = 0; col < k && rank < n; ++col) {
    std::size_t pivot = rank;
    while (pivot < n && m[pivot][col].is_zero()) ++pivot;
    if (pivot == n) return std::nullopt;  // dependent columns
    std::swap(m[rank], m[pivot]);
    CycScalar inv = m[rank][col].inverse();
    for (std::size_t j = col; j <= k; ++j) m[rank][j] = inv * m[rank][j];
    for (std::size_t r = 0; r < n; ++r) {
      if (r == rank || m[r][col].is_zero()) continue;
      CycScalar factor = m[r][col];
      for (std::size_t j = col; j <= k; ++j)
        m[r][j] = m[r][j] - factor * m[rank][j];
    }
    pivot_col.push_back(col);
    ++rank;
  }
  // Consistency: residual rows must be zero in the augmented column.
  for (std::size_t r = rank; r < n; ++r)
    if (!m[r][k].is_zero()) return std::nullopt;
  std::vector<CycScalar> out(k, CycScalar::zero(conductor));
  for (std::size_t i = 0; i < rank; ++i) out[pivot_col[i]] = m[i][k];
  return out;
}

}  // namespace kss
