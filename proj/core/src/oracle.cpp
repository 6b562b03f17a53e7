#include "kss/oracle.hpp"

#include <cmath>
#include <utility>

#include "kss/errors.hpp"

namespace kss {

namespace {

// w(x, y) = x sigma(y) z0, the anchored product every equation evaluates at.
std::vector<std::vector<Elem>> anchored_products(const FiniteContext& ctx) {
  const std::size_t n = ctx.size();
  std::vector<std::vector<Elem>> w(n, std::vector<Elem>(n));
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      w[x][y] = ctx.compose(ctx.compose(x, ctx.apply_sigma(y)), ctx.z0());
  return w;
}

void check_budget(std::size_t value_count, std::size_t depth, double budget) {
  // Leaf count value_count^depth.  An 80-bit accumulator keeps the product
  // exact for every boundary a realistic budget can hit, so a budget equal to
  // the search space is accepted rather than lost to rounding.
  long double estimated = 1.0L;
  for (std::size_t i = 0; i < depth && estimated <= 1e300L; ++i)
    estimated *= static_cast<long double>(value_count);
  if (estimated > static_cast<long double>(budget))
    throw BudgetExceeded(static_cast<double>(estimated), budget);
}

}  // namespace

std::vector<OracleSolution> brute_force_base(const FiniteContext& ctx,
                                            const std::vector<CycScalar>& values,
                                            const OracleOptions& opts) {
  if (values.empty()) throw InvalidInput("the oracle needs a nonempty value set");
  const std::size_t n = ctx.size();
  check_budget(values.size(), 2 * n, opts.budget);

  const auto w = anchored_products(ctx);

  // Diagonal pairs x = y make the right side vanish, so f(x sigma(x) z0) = 0
  // is a g-free constraint; checking it during the f phase prunes the tree
  // before any g value is chosen.
  std::vector<std::vector<Elem>> diag_at(n);
  for (Elem x = 0; x < n; ++x)
    diag_at[std::max<Elem>(x, w[x][x])].push_back(x);

  // In the g phase every f value is known, so the pair (x, y) becomes
  // checkable once both g(x) and g(y) are assigned.
  std::vector<std::vector<std::pair<Elem, Elem>>> pair_at(n);
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      pair_at[std::max(x, y)].push_back({x, y});

  std::vector<OracleSolution> out;
  std::vector<CycScalar> f(n), g(n);

  auto assign_g = [&](auto&& self, std::size_t k) -> void {
    if (k == n) {
      out.push_back(OracleSolution{DenseFunc(f), DenseFunc(g)});
      return;
    }
    for (const CycScalar& v : values) {
      g[k] = v;
      bool ok = true;
      for (const auto& [x, y] : pair_at[k]) {
        if (f[w[x][y]] != f[x] * g[y] - f[y] * g[x]) {
          ok = false;
          break;
        }
      }
      if (ok) self(self, k + 1);
    }
  };

  auto assign_f = [&](auto&& self, std::size_t k) -> void {
    if (k == n) {
      assign_g(assign_g, 0);
      return;
    }
    for (const CycScalar& v : values) {
      f[k] = v;
      bool ok = true;
      for (Elem x : diag_at[k]) {
        if (!f[w[x][x]].is_zero()) {
          ok = false;
          break;
        }
      }
      if (ok) self(self, k + 1);
    }
  };

  assign_f(assign_f, 0);
  return out;
}

std::vector<DenseFunc> brute_force_symmetric_product(const FiniteContext& ctx,
                                        const std::vector<CycScalar>& values,
                                        const OracleOptions& opts) {
  if (values.empty()) throw InvalidInput("the oracle needs a nonempty value set");
  const std::size_t n = ctx.size();
  check_budget(values.size(), n, opts.budget);

  const auto w = anchored_products(ctx);

  // The pair (x, y) is checkable once f(x), f(y) and f(x sigma(y) z0) are
  // all assigned.
  std::vector<std::vector<std::pair<Elem, Elem>>> pair_at(n);
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      pair_at[std::max({x, y, w[x][y]})].push_back({x, y});

  std::vector<DenseFunc> out;
  std::vector<CycScalar> f(n);

  auto assign = [&](auto&& self, std::size_t k) -> void {
    if (k == n) {
      out.push_back(DenseFunc(f));
      return;
    }
    for (const CycScalar& v : values) {
      f[k] = v;
      bool ok = true;
      for (const auto& [x, y] : pair_at[k]) {
        if (f[w[x][y]] != f[x] * f[y]) {
          ok = false;
          break;
        }
      }
      if (ok) self(self, k + 1);
    }
  };

  assign(assign, 0);
  return out;
}

CrossValidationSummary cross_validate(const FiniteContext& ctx,
                                      const std::vector<OracleSolution>& sols,
                                      unsigned conductor) {
  CrossValidationSummary summary;
  summary.total = sols.size();
  CatalogData<FiniteContext> catalog = make_catalog(ctx, conductor);
  for (const auto& sol : sols) {
    CrossValidationEntry entry;
    entry.solution = sol;
    try {
      entry.report = classify_base(ctx, sol.f, sol.g, conductor, catalog);
      ++summary.per_family[entry.report->family];
    } catch (const Error& e) {
      entry.error = e.what();
      ++summary.unclassified;
    }
    summary.entries.push_back(std::move(entry));
  }
  return summary;
}

}  // namespace kss
