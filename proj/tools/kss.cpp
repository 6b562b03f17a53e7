// kss: workbench for the anchored sine-subtraction law on semigroups.
//
// Subcommands:
//   verify        check an equation over every pair of the domain
//   construct     build a catalog family from a descriptor file
//   classify      place a solution in its catalog family
//   enumerate     list all exponentials on a finite semigroup
//   oracle        brute-force all solutions over a finite value set
//   example-grid  showcase the catalog on N^2 with the swap involution
//
// All subcommands print JSON (the oracle prints JSON lines).  Exit codes:
// 0 = positive verdict, 1 = negative verdict, 2 = malformed input.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "kss/workbench.hpp"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::cerr << "{\"ok\":false,\"error\":\"FileError\",\"message\":\"cannot "
                 "read file: "
              << path << "\"}\n";
    std::exit(2);
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::optional<std::string> read_optional(const std::optional<std::string>& path) {
  if (!path) return std::nullopt;
  return read_file(*path);
}

std::map<std::string, std::string> split_params(
    const std::vector<std::string>& sets) {
  std::map<std::string, std::string> out;
  for (const auto& kv : sets) {
    auto eq = kv.find('=');
    if (eq == std::string::npos || eq == 0) {
      std::cerr << "{\"ok\":false,\"error\":\"InvalidInput\",\"message\":"
                   "\"--set expects key=value, got: "
                << kv << "\"}\n";
      std::exit(2);
    }
    out[kv.substr(0, eq)] = kv.substr(eq + 1);
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Workbench for the anchored sine-subtraction law on semigroups"};
  app.require_subcommand(1);

  std::optional<unsigned> conductor;
  std::optional<unsigned> window;
  bool pretty = false;
  app.add_option("--conductor", conductor,
                 "Cyclotomic conductor N (overrides the context file)");
  app.add_option("--window", window, "Grid verification window (default 12)");
  app.add_flag("--pretty", pretty, "Pretty-print the JSON output");

  auto common = [&] {
    kss::CommonOptions o;
    o.conductor = conductor;
    o.window = window;
    o.pretty = pretty;
    return o;
  };

  const std::vector<std::string> equations{"base", "shifted",
                                           "symmetric-product", "sine"};

  // verify
  auto* verify = app.add_subcommand("verify", "Check an equation exhaustively");
  verify->fallthrough();
  std::string v_ctx, v_f, v_eq = "base";
  std::optional<std::string> v_g, v_lambda;
  bool v_strict = false;
  verify->add_option("--semigroup", v_ctx, "Context JSON file")->required();
  verify->add_option("--f", v_f, "Function JSON file")->required();
  verify->add_option("--g", v_g, "Second function JSON file");
  verify->add_option("--equation", v_eq, "Equation to check")
      ->check(CLI::IsMember(equations));
  verify->add_option("--lambda", v_lambda, "Shift constant (scalar literal)");
  verify->add_flag("--strict-grid", v_strict,
                   "Grid only: window-free structural verification");

  // construct
  auto* construct =
      app.add_subcommand("construct", "Build a catalog family solution");
  construct->fallthrough();
  std::string c_ctx, c_desc;
  construct->add_option("--semigroup", c_ctx, "Context JSON file")->required();
  construct->add_option("--descriptor", c_desc, "Family descriptor JSON file")
      ->required();

  // classify
  auto* classify =
      app.add_subcommand("classify", "Identify the catalog family of a solution");
  classify->fallthrough();
  std::string k_ctx, k_f, k_eq = "base";
  std::optional<std::string> k_g, k_lambda;
  classify->add_option("--semigroup", k_ctx, "Context JSON file")->required();
  classify->add_option("--f", k_f, "Function JSON file")->required();
  classify->add_option("--g", k_g, "Second function JSON file");
  classify->add_option("--equation", k_eq, "Equation the pair solves")
      ->check(CLI::IsMember({"base", "shifted", "symmetric-product"}));
  classify->add_option("--lambda", k_lambda, "Shift constant (scalar literal)");

  // enumerate
  auto* enumerate =
      app.add_subcommand("enumerate", "List all exponentials on the semigroup");
  enumerate->fallthrough();
  std::string e_ctx;
  enumerate->add_option("--semigroup", e_ctx, "Context JSON file")->required();

  // oracle
  auto* oracle = app.add_subcommand(
      "oracle", "Brute-force all solutions over a finite value set");
  oracle->fallthrough();
  std::string o_ctx, o_values, o_eq = "base";
  double o_budget = 1e8;
  bool o_cross = false;
  oracle->add_option("--semigroup", o_ctx, "Context JSON file")->required();
  oracle->add_option("--values", o_values,
                     "Comma-separated scalar literals, e.g. \"0,1,-1,i,-i\"")
      ->required();
  oracle->add_option("--equation", o_eq, "Equation to enumerate")
      ->check(CLI::IsMember({"base", "symmetric-product"}));
  oracle->add_option("--budget", o_budget,
                     "Search-tree leaf budget (default 1e8)");
  oracle->add_flag("--cross-validate", o_cross,
                   "Classify every solution and fail on unclassified ones");

  // example-grid
  auto* example = app.add_subcommand(
      "example-grid", "Showcase a catalog family on N^2 with the swap involution");
  example->fallthrough();
  long long x_s0 = 1, x_t0 = 1;
  std::string x_catalog = "grid";
  int x_family = 0;
  std::vector<std::string> x_sets;
  example->add_option("--s0", x_s0, "First coordinate of z0")->required();
  example->add_option("--t0", x_t0, "Second coordinate of z0")->required();
  example->add_option("--catalog", x_catalog, "\"grid\" (1..6) or \"base\" (1..7)")
      ->check(CLI::IsMember({"grid", "base"}));
  example->add_option("--family", x_family, "Family number")->required();
  example->add_option("--set", x_sets,
                      "Family parameter key=value (repeatable), e.g. a1=z^4");

  CLI11_PARSE(app, argc, argv);

  kss::RunResult result;
  if (*verify) {
    result = kss::cmd_verify(read_file(v_ctx), read_file(v_f),
                             read_optional(v_g), v_eq, v_lambda, v_strict,
                             common());
  } else if (*construct) {
    result = kss::cmd_construct(read_file(c_ctx), read_file(c_desc), common());
  } else if (*classify) {
    result = kss::cmd_classify(read_file(k_ctx), read_file(k_f),
                               read_optional(k_g), k_eq, k_lambda, common());
  } else if (*enumerate) {
    result = kss::cmd_enumerate(read_file(e_ctx), common());
  } else if (*oracle) {
    result = kss::cmd_oracle(read_file(o_ctx), o_values, o_eq, o_budget,
                             o_cross, common());
  } else if (*example) {
    result = kss::cmd_example_grid(x_s0, x_t0, x_catalog, x_family,
                                   split_params(x_sets), common());
  }

  std::cout << result.output;
  if (!result.output.empty() && result.output.back() != '\n') std::cout << "\n";
  return result.exit_code;
}
