#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "kss/classifier.hpp"
#include "kss/functions.hpp"
#include "kss/semigroup.hpp"

namespace kss {

// Exhaustive search over all value assignments from a finite value set.
// Complete by construction: every solution whose values lie in the given
// set is found, independently of the solution catalog.  Used to
// cross-check both the family constructors and the classifier.
struct OracleOptions {
  // Upper bound on the search-tree leaf count |V|^(2n) (|V|^n for the
  // one-function equation); exceeding it throws BudgetExceeded before the
  // search starts.
  double budget = 1e8;
};

struct OracleSolution {
  DenseFunc f, g;
};

// All pairs (f, g) with values in `values` solving the base equation.
std::vector<OracleSolution> brute_force_base(const FiniteContext& ctx,
                                            const std::vector<CycScalar>& values,
                                            const OracleOptions& opts = {});

// All f with values in `values` solving the symmetric-product equation.
std::vector<DenseFunc> brute_force_symmetric_product(const FiniteContext& ctx,
                                        const std::vector<CycScalar>& values,
                                        const OracleOptions& opts = {});

struct CrossValidationEntry {
  OracleSolution solution;
  std::optional<ClassificationReport<FiniteContext>> report;
  std::string error;  // reason when the classifier rejected the solution
};

struct CrossValidationSummary {
  std::size_t total = 0;
  std::size_t unclassified = 0;
  std::map<int, std::size_t> per_family;
  std::vector<CrossValidationEntry> entries;
};

// Runs the classifier over every oracle solution; any solution the
// classifier cannot place is reported as unclassified (a completeness
// failure of the catalog or a bug, never silently dropped).
CrossValidationSummary cross_validate(const FiniteContext& ctx,
                                      const std::vector<OracleSolution>& sols,
                                      unsigned conductor);

}  // namespace kss
