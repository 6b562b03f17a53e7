#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kss/classifier.hpp"
#include "kss/families.hpp"
#include "kss/oracle.hpp"
#include "kss/semigroup.hpp"
#include "kss/verifier.hpp"

namespace kss {

// JSON file formats, exchanged as plain strings so the JSON implementation
// stays private to the library.
//
// Context file (finite):
//   {"conductor": 12,
//    "kind": "finite",
//    "elements": ["e", "p", "z"],                 (optional; default e0, e1, ...)
//    "table": [[0,1,2],[1,2,2],[2,2,2]],          (indices or element names)
//    "sigma": [0,1,2] | "identity",               (indices or element names)
//    "z0": "e" | 0}
//
// Context file (grid):
//   {"conductor": 12, "kind": "grid2",
//    "sigma": "swap" | "identity",
//    "z0": [1, 2],
//    "window": 12}                                 (optional)
//
// Function file (finite):  {"values": ["0", "1", "-1/2 + z^2", ...]}
// Function file (grid):    {"terms": [{"coeff": "1", "a1": "z^4",
//                                      "a2": "1", "mono": "x"}, ...]}
//
// Family descriptor:
//   {"catalog": "base" | "shifted", "family": 3,
//    "constants": {"gamma": "1", "b": "1/2", "c": "z^3"},
//    "chi": <function>, "A": <function>,
//    "rho": {"p": "1", "q": "-1"},                 (finite only)
//    "free": <function>,
//    "lambda": "1"}                                (shifted only)

// A context file describes one of the two supported worlds; "conductor" is
// the session default unless the caller overrides it.
struct LoadedContext {
  unsigned conductor = 12;
  std::optional<FiniteContext> finite;
  std::optional<GridContext> grid;
  bool is_grid() const { return grid.has_value(); }
};

LoadedContext load_context(const std::string& json_text,
                           std::optional<unsigned> conductor_override = {},
                           std::optional<unsigned> window_override = {});

DenseFunc parse_finite_func(const std::string& json_text, std::size_t size,
                            unsigned conductor);
GridFunc parse_grid_func(const std::string& json_text, unsigned conductor);

std::string finite_func_to_json(const DenseFunc& f, bool pretty = false);
std::string grid_func_to_json(const GridFunc& f, bool pretty = false);

FamilyDescriptor<FiniteContext> parse_finite_descriptor(
    const std::string& json_text, const FiniteContext& ctx,
    unsigned conductor);
FamilyDescriptor<GridContext> parse_grid_descriptor(
    const std::string& json_text, unsigned conductor);

// Reports.  `mode` records how the check ran: "exhaustive" (all pairs of a
// finite semigroup), "window" (all pairs from the grid window) or
// "structural" (window-free normalization).
std::string violation_report_to_json(const ViolationReport<FiniteContext>& rep,
                                     const FiniteContext& ctx,
                                     const std::string& mode,
                                     bool pretty = false);
std::string violation_report_to_json(const ViolationReport<GridContext>& rep,
                                     const GridContext& ctx,
                                     const std::string& mode,
                                     bool pretty = false);
std::string structural_report_to_json(const StructuralReport& rep,
                                      EquationKind kind, bool pretty = false);

std::string classification_to_json(const ClassificationReport<FiniteContext>& rep,
                                   const FiniteContext& ctx,
                                   bool pretty = false);
std::string classification_to_json(const ClassificationReport<GridContext>& rep,
                                   const GridContext& ctx, bool pretty = false);

std::string exponentials_to_json(const std::vector<DenseFunc>& chis,
                                 bool pretty = false);

std::string pair_to_json(const DenseFunc& f, const DenseFunc& g,
                         bool pretty = false);
std::string pair_to_json(const GridFunc& f, const GridFunc& g,
                         bool pretty = false);

// One compact line per solution; callers join them into JSON-lines output.
std::string oracle_solution_to_json(const OracleSolution& sol);
std::string cross_validation_to_json(const CrossValidationSummary& summary,
                                     bool pretty = false);

}  // namespace kss
