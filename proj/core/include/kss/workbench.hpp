#pragma once

#include <map>
#include <optional>
#include <string>

namespace kss {

// Thin command layer behind the command line tool.  Inputs are file
// contents and plain option values; the result carries the process exit
// code and everything that should be printed.  Keeping this string-typed
// makes every command testable in-process.
//
// Exit codes: 0 = positive verdict, 1 = negative verdict (violations found,
// constraints unsatisfiable, family unavailable, conductor too small, ...),
// 2 = malformed input (bad JSON, bad literals, bad tables, bad options).
struct RunResult {
  int exit_code = 0;
  std::string output;
};

struct CommonOptions {
  std::optional<unsigned> conductor;  // overrides the context file default
  std::optional<unsigned> window;     // grid window override
  bool pretty = false;
};

// equation: "base" (default), "shifted" (needs lambda), "symmetric-product"
// (f only) or "sine" (no z0 anchoring).  strict_grid switches the grid
// check from the finite window sweep to the window-free structural mode.
RunResult cmd_verify(const std::string& context_json, const std::string& f_json,
                     const std::optional<std::string>& g_json,
                     const std::string& equation,
                     const std::optional<std::string>& lambda_literal,
                     bool strict_grid, const CommonOptions& opts);

RunResult cmd_construct(const std::string& context_json,
                        const std::string& descriptor_json,
                        const CommonOptions& opts);

RunResult cmd_classify(const std::string& context_json,
                       const std::string& f_json,
                       const std::optional<std::string>& g_json,
                       const std::string& equation,
                       const std::optional<std::string>& lambda_literal,
                       const CommonOptions& opts);

RunResult cmd_enumerate(const std::string& context_json,
                        const CommonOptions& opts);

// values_csv: comma-separated scalar literals, e.g. "0,1,-1,i,-i".
// equation: "base" or "symmetric-product".
RunResult cmd_oracle(const std::string& context_json,
                     const std::string& values_csv, const std::string& equation,
                     double budget, bool run_cross_validation,
                     const CommonOptions& opts);

// Showcase for the grid world: builds the chosen family over N^2 with the
// swap involution anchored at z0 = (s0, t0), deriving any constants the
// z0-constraints force, and prints the constraint chains together with the
// constructed pair and its verification.  catalog is "grid" (families 1-6,
// the grid-specific numbering) or "base" (families 1-7); params carry the
// family inputs (a1, a2, b1, gamma, alpha, delta, b, c, ...) as scalar
// literals.
RunResult cmd_example_grid(long long s0, long long t0,
                           const std::string& catalog, int family,
                           const std::map<std::string, std::string>& params,
                           const CommonOptions& opts);

}  // namespace kss
