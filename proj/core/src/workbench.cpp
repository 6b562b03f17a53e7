#include "kss/workbench.hpp"

#include <json.hpp>
#include <sstream>
#include <vector>

#include "kss/io.hpp"
#include "kss/scalar_io.hpp"

namespace kss {

namespace {

using nlohmann::json;

std::string error_kind(const Error& e) {
  if (dynamic_cast<const DivisionByZero*>(&e)) return "DivisionByZero";
  if (dynamic_cast<const ConductorMismatch*>(&e)) return "ConductorMismatch";
  if (dynamic_cast<const ConductorTooSmall*>(&e)) return "ConductorTooSmall";
  if (dynamic_cast<const ParseError*>(&e)) return "ParseError";
  if (dynamic_cast<const NotAssociative*>(&e)) return "NotAssociative";
  if (dynamic_cast<const NotAnInvolution*>(&e)) return "NotAnInvolution";
  if (dynamic_cast<const IndexOutOfRange*>(&e)) return "IndexOutOfRange";
  if (dynamic_cast<const InvalidInput*>(&e)) return "InvalidInput";
  if (dynamic_cast<const ParityViolation*>(&e)) return "ParityViolation";
  if (dynamic_cast<const RhoCompatibilityViolation*>(&e))
    return "RhoCompatibilityViolation";
  if (dynamic_cast<const ConstraintViolated*>(&e)) return "ConstraintViolated";
  if (dynamic_cast<const WrongSigmaParity*>(&e)) return "WrongSigmaParity";
  if (dynamic_cast<const FamilyUnavailable*>(&e)) return "FamilyUnavailable";
  if (dynamic_cast<const LambdaZero*>(&e)) return "LambdaZero";
  if (dynamic_cast<const PreconditionNotMet*>(&e)) return "PreconditionNotMet";
  if (dynamic_cast<const NotASolution*>(&e)) return "NotASolution";
  if (dynamic_cast<const UnclassifiableWithinConductor*>(&e))
    return "UnclassifiableWithinConductor";
  if (dynamic_cast<const InternalInconsistency*>(&e))
    return "InternalInconsistency";
  if (dynamic_cast<const NoCatalogMatch*>(&e)) return "NoCatalogMatch";
  if (dynamic_cast<const AmbiguousDecomposition*>(&e))
    return "AmbiguousDecomposition";
  if (dynamic_cast<const BudgetExceeded*>(&e)) return "BudgetExceeded";
  return "Error";
}

// Malformed inputs exit with 2; negative mathematical verdicts with 1.
bool is_input_error(const Error& e) {
  return dynamic_cast<const ParseError*>(&e) ||
         dynamic_cast<const InvalidInput*>(&e) ||
         dynamic_cast<const NotAssociative*>(&e) ||
         dynamic_cast<const NotAnInvolution*>(&e) ||
         dynamic_cast<const IndexOutOfRange*>(&e) ||
         dynamic_cast<const LambdaZero*>(&e);
}

std::string dump(const json& j, bool pretty) {
  return pretty ? j.dump(2) : j.dump();
}

template <class Body>
RunResult guarded(bool pretty, Body&& body) {
  try {
    return body();
  } catch (const Error& e) {
    json j{{"ok", false}, {"error", error_kind(e)}, {"message", e.what()}};
    return {is_input_error(e) ? 2 : 1, dump(j, pretty)};
  }
}

json reparse(const std::string& compact_json) { return json::parse(compact_json); }

std::optional<CycScalar> parse_lambda(
    const std::optional<std::string>& lambda_literal, unsigned conductor) {
  if (!lambda_literal) return std::nullopt;
  return parse_scalar(*lambda_literal, conductor);
}

CycScalar require_lambda(const std::optional<CycScalar>& lambda) {
  if (!lambda)
    throw InvalidInput("the shifted equation needs --lambda <literal>");
  return *lambda;
}

}  // namespace

RunResult cmd_verify(const std::string& context_json, const std::string& f_json,
                     const std::optional<std::string>& g_json,
                     const std::string& equation,
                     const std::optional<std::string>& lambda_literal,
                     bool strict_grid, const CommonOptions& opts) {
  return guarded(opts.pretty, [&]() -> RunResult {
    LoadedContext L = load_context(context_json, opts.conductor, opts.window);
    const unsigned N = L.conductor;
    auto lambda = parse_lambda(lambda_literal, N);

    if (!L.is_grid()) {
      const FiniteContext& ctx = *L.finite;
      DenseFunc f = parse_finite_func(f_json, ctx.size(), N);
      auto need_g = [&]() -> DenseFunc {
        if (!g_json) throw InvalidInput("this equation needs --g <file>");
        return parse_finite_func(*g_json, ctx.size(), N);
      };
      ViolationReport<FiniteContext> rep;
      if (equation == "base")
        rep = verify_base(ctx, f, need_g());
      else if (equation == "shifted")
        rep = verify_shifted(ctx, f, need_g(), require_lambda(lambda));
      else if (equation == "symmetric-product")
        rep = verify_symmetric_product(ctx, f);
      else if (equation == "sine")
        rep = verify_sine_subtraction(ctx, f, need_g());
      else
        throw InvalidInput("unknown equation '" + equation + "'");
      return {rep.ok() ? 0 : 1,
              violation_report_to_json(rep, ctx, "exhaustive", opts.pretty)};
    }

    const GridContext& ctx = *L.grid;
    GridFunc f = parse_grid_func(f_json, N);
    auto need_g = [&]() -> GridFunc {
      if (!g_json) throw InvalidInput("this equation needs --g <file>");
      return parse_grid_func(*g_json, N);
    };
    if (strict_grid) {
      StructuralReport rep;
      EquationKind kind;
      if (equation == "base") {
        kind = EquationKind::kBase;
        rep = verify_base_structural(ctx, f, need_g());
      } else if (equation == "shifted") {
        kind = EquationKind::kShifted;
        rep = verify_shifted_structural(ctx, f, need_g(), require_lambda(lambda));
      } else if (equation == "symmetric-product") {
        kind = EquationKind::kSymmetricProduct;
        rep = verify_symmetric_product_structural(ctx, f);
      } else if (equation == "sine") {
        kind = EquationKind::kSineSubtraction;
        rep = verify_sine_subtraction_structural(ctx, f, need_g());
      } else {
        throw InvalidInput("unknown equation '" + equation + "'");
      }
      return {rep.ok ? 0 : 1, structural_report_to_json(rep, kind, opts.pretty)};
    }
    ViolationReport<GridContext> rep;
    if (equation == "base")
      rep = verify_base(ctx, f, need_g());
    else if (equation == "shifted")
      rep = verify_shifted(ctx, f, need_g(), require_lambda(lambda));
    else if (equation == "symmetric-product")
      rep = verify_symmetric_product(ctx, f);
    else if (equation == "sine")
      rep = verify_sine_subtraction(ctx, f, need_g());
    else
      throw InvalidInput("unknown equation '" + equation + "'");
    return {rep.ok() ? 0 : 1,
            violation_report_to_json(rep, ctx, "window", opts.pretty)};
  });
}

RunResult cmd_construct(const std::string& context_json,
                        const std::string& descriptor_json,
                        const CommonOptions& opts) {
  return guarded(opts.pretty, [&]() -> RunResult {
    LoadedContext L = load_context(context_json, opts.conductor, opts.window);
    const unsigned N = L.conductor;

    json out;
    if (!L.is_grid()) {
      const FiniteContext& ctx = *L.finite;
      auto d = parse_finite_descriptor(descriptor_json, ctx, N);
      SolutionPair<FiniteContext> p = d.catalog == Catalog::kBase
                                          ? construct_base_family(ctx, d, N)
                                          : construct_shifted_family(ctx, d, N);
      bool ok = d.catalog == Catalog::kBase
                    ? verify_base(ctx, p.f, p.g).ok()
                    : verify_shifted(ctx, p.f, p.g, *d.lambda).ok();
      if (!ok)
        throw InternalInconsistency("constructed pair failed verification");
      out = json{{"catalog", catalog_name(d.catalog)},
                 {"family", d.family},
                 {"f", reparse(finite_func_to_json(p.f))},
                 {"g", reparse(finite_func_to_json(p.g))},
                 {"verified", true},
                 {"mode", "exhaustive"}};
    } else {
      const GridContext& ctx = *L.grid;
      auto d = parse_grid_descriptor(descriptor_json, N);
      SolutionPair<GridContext> p = d.catalog == Catalog::kBase
                                        ? construct_base_family(ctx, d, N)
                                        : construct_shifted_family(ctx, d, N);
      StructuralReport rep =
          d.catalog == Catalog::kBase
              ? verify_base_structural(ctx, p.f, p.g)
              : verify_shifted_structural(ctx, p.f, p.g, *d.lambda);
      if (!rep.ok)
        throw InternalInconsistency("constructed pair failed verification: " +
                                    rep.residual);
      out = json{{"catalog", catalog_name(d.catalog)},
                 {"family", d.family},
                 {"f", reparse(grid_func_to_json(p.f))},
                 {"g", reparse(grid_func_to_json(p.g))},
                 {"verified", true},
                 {"mode", "structural"}};
    }
    return {0, dump(out, opts.pretty)};
  });
}

RunResult cmd_classify(const std::string& context_json,
                       const std::string& f_json,
                       const std::optional<std::string>& g_json,
                       const std::string& equation,
                       const std::optional<std::string>& lambda_literal,
                       const CommonOptions& opts) {
  return guarded(opts.pretty, [&]() -> RunResult {
    LoadedContext L = load_context(context_json, opts.conductor, opts.window);
    const unsigned N = L.conductor;
    auto lambda = parse_lambda(lambda_literal, N);

    if (equation == "symmetric-product") {
      json out{{"equation", "symmetric-product"}};
      if (!L.is_grid()) {
        const FiniteContext& ctx = *L.finite;
        DenseFunc f = parse_finite_func(f_json, ctx.size(), N);
        auto rec = recover_symmetric_product(ctx, f, N);
        out["trivial"] = !rec.has_value();
        if (rec) {
          out["beta"] = rec->beta.str();
          out["chi"] = reparse(finite_func_to_json(rec->chi));
        }
      } else {
        const GridContext& ctx = *L.grid;
        GridFunc f = parse_grid_func(f_json, N);
        auto rec = recover_symmetric_product(ctx, f, N);
        out["trivial"] = !rec.has_value();
        if (rec) {
          out["beta"] = rec->beta.str();
          out["chi"] = reparse(grid_func_to_json(rec->chi));
        }
      }
      return {0, dump(out, opts.pretty)};
    }

    if (equation != "base" && equation != "shifted")
      throw InvalidInput("classification handles the base, shifted and "
                         "symmetric-product equations");

    std::string report;
    if (!L.is_grid()) {
      const FiniteContext& ctx = *L.finite;
      DenseFunc f = parse_finite_func(f_json, ctx.size(), N);
      if (!g_json) throw InvalidInput("classification needs --g <file>");
      DenseFunc g = parse_finite_func(*g_json, ctx.size(), N);
      auto rep = equation == "base"
                     ? classify_base(ctx, f, g, N)
                     : classify_shifted(ctx, f, g, require_lambda(lambda), N);
      report = classification_to_json(rep, ctx, opts.pretty);
    } else {
      const GridContext& ctx = *L.grid;
      GridFunc f = parse_grid_func(f_json, N);
      if (!g_json) throw InvalidInput("classification needs --g <file>");
      GridFunc g = parse_grid_func(*g_json, N);
      auto rep = equation == "base"
                     ? classify_base(ctx, f, g, N)
                     : classify_shifted(ctx, f, g, require_lambda(lambda), N);
      report = classification_to_json(rep, ctx, opts.pretty);
    }
    return {0, report};
  });
}

RunResult cmd_enumerate(const std::string& context_json,
                        const CommonOptions& opts) {
  return guarded(opts.pretty, [&]() -> RunResult {
    LoadedContext L = load_context(context_json, opts.conductor, opts.window);
    if (L.is_grid())
      throw InvalidInput(
          "enumeration needs a finite semigroup; the grid has a continuum of "
          "exponentials a1^x a2^y");
    auto chis = enumerate_exponentials(L.finite->semigroup(), L.conductor);
    return {0, exponentials_to_json(chis, opts.pretty)};
  });
}

RunResult cmd_oracle(const std::string& context_json,
                     const std::string& values_csv, const std::string& equation,
                     double budget, bool run_cross_validation,
                     const CommonOptions& opts) {
  return guarded(opts.pretty, [&]() -> RunResult {
    LoadedContext L = load_context(context_json, opts.conductor, opts.window);
    if (L.is_grid())
      throw InvalidInput("the oracle enumerates over finite semigroups only");
    const FiniteContext& ctx = *L.finite;
    const unsigned N = L.conductor;

    std::vector<CycScalar> values;
    std::stringstream ss(values_csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
      const auto first = item.find_first_not_of(" \t");
      if (first == std::string::npos)
        throw InvalidInput("empty entry in the value list");
      const auto last = item.find_last_not_of(" \t");
      values.push_back(parse_scalar(item.substr(first, last - first + 1), N));
    }
    if (values.empty()) throw InvalidInput("the value list is empty");

    OracleOptions oopts;
    oopts.budget = budget;

    std::ostringstream lines;
    if (equation == "symmetric-product") {
      if (run_cross_validation)
        throw InvalidInput(
            "cross-validation applies to the base equation only");
      auto sols = brute_force_symmetric_product(ctx, values, oopts);
      for (const auto& f : sols)
        lines << json{{"f", reparse(finite_func_to_json(f))}}.dump() << "\n";
      lines << json{{"summary", {{"total", sols.size()}}}}.dump() << "\n";
      return {0, lines.str()};
    }
    if (equation != "base")
      throw InvalidInput("the oracle handles the base and symmetric-product "
                         "equations");

    auto sols = brute_force_base(ctx, values, oopts);
    if (!run_cross_validation) {
      for (const auto& sol : sols) lines << oracle_solution_to_json(sol) << "\n";
      lines << json{{"summary", {{"total", sols.size()}}}}.dump() << "\n";
      return {0, lines.str()};
    }

    CrossValidationSummary summary = cross_validate(ctx, sols, N);
    for (const auto& entry : summary.entries) {
      json line = reparse(oracle_solution_to_json(entry.solution));
      if (entry.report)
        line["family"] = entry.report->family;
      else
        line["unclassified"] = entry.error;
      lines << line.dump() << "\n";
    }
    lines << json{{"summary", reparse(cross_validation_to_json(summary))}}.dump()
          << "\n";
    return {summary.unclassified == 0 ? 0 : 1, lines.str()};
  });
}

namespace {

// Everything cmd_example_grid derives for one family before construction.
struct GridPlan {
  FamilyDescriptor<GridContext> descriptor;
  // Chains of expressions that the z0-constraints force to be equal; each
  // chain is printed and checked for internal equality.
  std::vector<std::vector<std::pair<std::string, CycScalar>>> chains;
};

CycScalar require_param(const std::map<std::string, CycScalar>& given,
                        const std::string& key) {
  auto it = given.find(key);
  if (it == given.end())
    throw InvalidInput("this family needs --set " + key + "=<literal>");
  return it->second;
}

// The solver overrides derived constants; a user-supplied value that
// disagrees is a contradiction, not a silent fixup.
void check_given_consistency(const std::map<std::string, CycScalar>& given,
                             const std::map<std::string, CycScalar>& solved) {
  for (const auto& [k, v] : given) {
    auto it = solved.find(k);
    if (it != solved.end() && it->second != v)
      throw ConstraintViolated("the supplied " + k + " = " + v.str() +
                               " contradicts the derived value " +
                               it->second.str());
  }
}

std::map<std::string, CycScalar> pruned_constants(
    int base_family, const std::map<std::string, CycScalar>& solved) {
  std::vector<std::string> keys;
  switch (base_family) {
    case 3: keys = {"gamma", "b", "c"}; break;
    case 4: keys = {"beta", "b", "c"}; break;
    case 5: keys = {"alpha", "delta", "b", "c"}; break;
    case 6: keys = {"gamma", "c"}; break;
    case 7: keys = {"alpha", "delta", "c"}; break;
    default: break;
  }
  std::map<std::string, CycScalar> out;
  for (const auto& k : keys) out[k] = solved.at(k);
  return out;
}

GridPlan plan_grid_family(int base_family, long long s0, long long t0,
                          const std::map<std::string, CycScalar>& given,
                          unsigned N) {
  const CycScalar one = CycScalar::one(N);
  const CycScalar two = CycScalar::from_integer(2, N);
  GridPlan plan;
  plan.descriptor.catalog = Catalog::kBase;
  plan.descriptor.family = base_family;

  auto solve = [&](const CycScalar& u, const CycScalar& v,
                   const std::optional<CycScalar>& A0) {
    auto res = solve_family_constraints(Catalog::kBase, base_family, u, v, A0,
                                        given, N);
    if (!res.satisfiable) throw ConstraintViolated(res.reason);
    check_given_consistency(given, res.solved);
    plan.descriptor.constants = pruned_constants(base_family, res.solved);
    return res.solved;
  };

  switch (base_family) {
    case 1: {
      auto a1 = given.count("a1") ? given.at("a1") : one;
      auto a2 = given.count("a2") ? given.at("a2") : one;
      plan.descriptor.free_fn = GridFunc::exponential(a1, a2);
      return plan;
    }
    case 2:
      throw FamilyUnavailable(
          "family 2 needs a nonzero function vanishing on the product cone, "
          "and no exponential polynomial does");
    case 3:
    case 5: {
      CycScalar a1 = require_param(given, "a1");
      CycScalar a2 = require_param(given, "a2");
      if (a1 == a2)
        throw ConstraintViolated("this family needs a1 != a2 so that "
                                 "chi o sigma != chi");
      plan.descriptor.chi = GridFunc::exponential(a1, a2);
      CycScalar u = a1.pow(s0) * a2.pow(t0);
      CycScalar v = a2.pow(s0) * a1.pow(t0);
      auto solved = solve(u, v, std::nullopt);
      const CycScalar& b = solved.at("b");
      const CycScalar& c = solved.at("c");
      if (base_family == 3) {
        plan.chains = {{{"chi(z0)", u}, {"-2b/(1+c)", -two * b / (one + c)}},
                       {{"(chi o sigma)(z0)", v},
                        {"2b/(1-c)", two * b / (one - c)}}};
      } else {
        const CycScalar& alpha = solved.at("alpha");
        const CycScalar& delta = solved.at("delta");
        plan.chains = {
            {{"chi(z0)", u},
             {"2b/(alpha(1+c)+2b delta)",
              two * b / (alpha * (one + c) + two * b * delta)}},
            {{"(chi o sigma)(z0)", v},
             {"2b/(alpha(c-1)+2b delta)",
              two * b / (alpha * (c - one) + two * b * delta)}}};
      }
      return plan;
    }
    case 4: {
      if (s0 != t0)
        throw FamilyUnavailable(
            "family 4 on the grid needs z0 on the diagonal (s0 = t0): "
            "chi(z0) = (chi o sigma)(z0) cannot hold otherwise on this "
            "surface");
      CycScalar a1 = require_param(given, "a1");
      CycScalar a2 = require_param(given, "a2");
      if (a1 == a2)
        throw ConstraintViolated(
            "family 4 needs a1 != a2 so that chi o sigma != chi");
      plan.descriptor.chi = GridFunc::exponential(a1, a2);
      CycScalar u = a1.pow(s0) * a2.pow(t0);
      CycScalar v = a2.pow(s0) * a1.pow(t0);
      auto solved = solve(u, v, std::nullopt);
      plan.chains = {{{"chi(z0)", u},
                      {"(chi o sigma)(z0)", v},
                      {"1/beta", solved.at("beta").inverse()}}};
      return plan;
    }
    case 6: {
      CycScalar a1 = require_param(given, "a1");
      CycScalar u = a1.pow(s0 + t0);
      CycScalar b1;
      if (given.count("b1")) {
        b1 = given.at("b1");
      } else {
        if (s0 == t0)
          throw FamilyUnavailable(
              "family 6 on the grid needs s0 != t0, otherwise A(z0) = 0 "
              "cannot match chi(z0)");
        b1 = u / CycScalar::from_integer(s0 - t0, N);
      }
      CycScalar A0 = b1 * CycScalar::from_integer(s0 - t0, N);
      auto solved = solve(u, u, A0);
      plan.descriptor.chi = GridFunc::exponential(a1, a1);
      plan.descriptor.A = GridFunc::additive(b1, -b1);
      plan.chains = {{{"a1^(s0+t0)", u},
                      {"b1*(s0-t0)", A0},
                      {"-1/c", -solved.at("c").inverse()}}};
      return plan;
    }
    case 7: {
      CycScalar a1 = require_param(given, "a1");
      CycScalar b1 = require_param(given, "b1");
      CycScalar u = a1.pow(s0 + t0);
      CycScalar A0 = b1 * CycScalar::from_integer(s0 - t0, N);
      auto solved = solve(u, u, A0);
      plan.descriptor.chi = GridFunc::exponential(a1, a1);
      plan.descriptor.A = GridFunc::additive(b1, -b1);
      CycScalar den = solved.at("alpha") * solved.at("c") + solved.at("delta");
      plan.chains = {
          {{"a1^(s0+t0)", u}, {"1/(alpha c+delta)", den.inverse()}},
          {{"b1*(s0-t0)", A0},
           {"-alpha/(alpha c+delta)", -solved.at("alpha") / den}}};
      return plan;
    }
    default:
      throw InvalidInput("base catalog families are numbered 1..7");
  }
}

}  // namespace

RunResult cmd_example_grid(long long s0, long long t0,
                           const std::string& catalog, int family,
                           const std::map<std::string, std::string>& params,
                           const CommonOptions& opts) {
  return guarded(opts.pretty, [&]() -> RunResult {
    const unsigned N = opts.conductor.value_or(12);
    const unsigned W = opts.window.value_or(12);
    if (s0 < 1 || t0 < 1)
      throw InvalidInput("z0 coordinates must be positive");
    GridContext ctx(GridSigma::kSwap, GridPoint{s0, t0}, W);

    int base_family = 0;
    if (catalog == "grid") {
      // The grid-specific catalog numbering; families 4..6 are the base
      // families 5..7 (base family 4 only occurs with z0 on the diagonal).
      static const std::map<int, int> to_base{{1, 1}, {2, 2}, {3, 3},
                                              {4, 5}, {5, 6}, {6, 7}};
      auto it = to_base.find(family);
      if (it == to_base.end())
        throw InvalidInput("grid catalog families are numbered 1..6");
      base_family = it->second;
    } else if (catalog == "base") {
      if (family < 1 || family > 7)
        throw InvalidInput("base catalog families are numbered 1..7");
      base_family = family;
    } else {
      throw InvalidInput("catalog must be \"grid\" or \"base\"");
    }

    std::map<std::string, CycScalar> given;
    for (const auto& [k, v] : params) given.emplace(k, parse_scalar(v, N));

    GridPlan plan = plan_grid_family(base_family, s0, t0, given, N);
    SolutionPair<GridContext> p =
        construct_base_family(ctx, plan.descriptor, N);

    StructuralReport srep = verify_base_structural(ctx, p.f, p.g);
    ViolationReport<GridContext> wrep = verify_base(ctx, p.f, p.g);
    if (!srep.ok || !wrep.ok())
      throw InternalInconsistency("constructed pair failed verification");

    json chains = json::array();
    bool satisfied = true;
    for (const auto& chain : plan.chains) {
      json one_chain = json::array();
      for (const auto& [expr, value] : chain) {
        one_chain.push_back(json{{"expr", expr}, {"value", value.str()}});
        if (value != chain.front().second) satisfied = false;
      }
      chains.push_back(one_chain);
    }
    if (!satisfied)
      throw InternalInconsistency("derived constraint chain is not constant");

    json constants = json::object();
    for (const auto& [k, v] : plan.descriptor.constants) constants[k] = v.str();

    json out{{"catalog", catalog},
             {"family", family},
             {"base_family", base_family},
             {"z0", json::array({s0, t0})},
             {"conductor", N},
             {"constants", constants},
             {"chains", chains},
             {"satisfied", satisfied},
             {"f", reparse(grid_func_to_json(p.f))},
             {"g", reparse(grid_func_to_json(p.g))},
             {"structural_ok", srep.ok},
             {"window",
              json{{"size", W},
                   {"checked", wrep.checked},
                   {"violations", wrep.total_violations}}}};
    return {0, dump(out, opts.pretty)};
  });
}

}  // namespace kss
