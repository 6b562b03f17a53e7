#include "kss/io.hpp"

#include <json.hpp>

#include "kss/scalar_io.hpp"

namespace kss {

namespace {

using nlohmann::json;

json parse_json(const std::string& text) {
  json j = json::parse(text, nullptr, /*allow_exceptions=*/false);
  if (j.is_discarded()) throw ParseError("malformed JSON document", 0);
  return j;
}

const json& require_key(const json& j, const std::string& key) {
  auto it = j.find(key);
  if (it == j.end()) throw InvalidInput("missing required key '" + key + "'");
  return *it;
}

std::string require_string(const json& j, const std::string& what) {
  if (!j.is_string()) throw InvalidInput(what + " must be a string");
  return j.get<std::string>();
}

unsigned require_positive(const json& j, const std::string& what) {
  if (!j.is_number_unsigned() || j.get<unsigned long long>() == 0)
    throw InvalidInput(what + " must be a positive integer");
  return static_cast<unsigned>(j.get<unsigned long long>());
}

// Elements in context files may be written as table indices or as names.
Elem resolve_element(const json& j, const FiniteSemigroup& sg,
                     const std::string& what) {
  if (j.is_number_unsigned()) {
    auto v = j.get<unsigned long long>();
    if (v >= sg.size()) throw InvalidInput(what + " is out of range");
    return static_cast<Elem>(v);
  }
  if (j.is_string()) {
    if (auto e = sg.index_of(j.get<std::string>())) return *e;
    throw InvalidInput(what + " names an unknown element '" +
                       j.get<std::string>() + "'");
  }
  throw InvalidInput(what + " must be an element index or name");
}

json finite_func_json(const DenseFunc& f) {
  json values = json::array();
  for (const auto& v : f.values()) values.push_back(v.str());
  return json{{"values", values}};
}

json grid_func_json(const GridFunc& f) {
  json terms = json::array();
  for (const auto& t : f.terms()) {
    const char* mono = t.mono == GridMono::kConst ? "1"
                       : t.mono == GridMono::kX   ? "x"
                                                  : "y";
    terms.push_back(json{{"coeff", t.coeff.str()},
                         {"a1", t.a1.str()},
                         {"a2", t.a2.str()},
                         {"mono", mono}});
  }
  return json{{"terms", terms}};
}

DenseFunc finite_func_from_json(const json& j, std::size_t size,
                                unsigned conductor) {
  if (!j.is_object()) throw InvalidInput("a function file must be an object");
  const json& values = require_key(j, "values");
  if (!values.is_array() || values.size() != size)
    throw InvalidInput("'values' must list one literal per element (" +
                       std::to_string(size) + " expected)");
  std::vector<CycScalar> out;
  out.reserve(size);
  for (const auto& v : values)
    out.push_back(parse_scalar(require_string(v, "a value literal"), conductor));
  return DenseFunc(std::move(out));
}

GridFunc grid_func_from_json(const json& j, unsigned conductor) {
  if (!j.is_object()) throw InvalidInput("a function file must be an object");
  const json& terms = require_key(j, "terms");
  if (!terms.is_array()) throw InvalidInput("'terms' must be an array");
  std::vector<GridTerm> out;
  for (const auto& t : terms) {
    if (!t.is_object()) throw InvalidInput("each term must be an object");
    GridTerm term;
    term.coeff =
        parse_scalar(require_string(require_key(t, "coeff"), "coeff"), conductor);
    term.a1 = parse_scalar(require_string(require_key(t, "a1"), "a1"), conductor);
    term.a2 = parse_scalar(require_string(require_key(t, "a2"), "a2"), conductor);
    std::string mono = t.contains("mono")
                           ? require_string(t.at("mono"), "mono")
                           : std::string("1");
    if (mono == "1")
      term.mono = GridMono::kConst;
    else if (mono == "x")
      term.mono = GridMono::kX;
    else if (mono == "y")
      term.mono = GridMono::kY;
    else
      throw InvalidInput("mono must be one of \"1\", \"x\", \"y\"");
    out.push_back(std::move(term));
  }
  return GridFunc(std::move(out));
}

std::string dump(const json& j, bool pretty) {
  return pretty ? j.dump(2) : j.dump();
}

json scalar_map_json(const std::map<std::string, CycScalar>& m) {
  json out = json::object();
  for (const auto& [k, v] : m) out[k] = v.str();
  return out;
}

template <class Ctx>
json element_json(const Ctx& ctx, const typename Ctx::Element& e);

template <>
json element_json<FiniteContext>(const FiniteContext& ctx, const Elem& e) {
  return json(ctx.element_label(e));
}
template <>
json element_json<GridContext>(const GridContext&, const GridPoint& p) {
  return json::array({p.x, p.y});
}

template <class Ctx>
json violation_report_json(const ViolationReport<Ctx>& rep, const Ctx& ctx,
                           const std::string& mode) {
  json violations = json::array();
  for (const auto& v : rep.violations)
    violations.push_back(json{{"x", element_json<Ctx>(ctx, v.x)},
                              {"y", element_json<Ctx>(ctx, v.y)},
                              {"lhs", v.lhs.str()},
                              {"rhs", v.rhs.str()}});
  return json{{"equation", equation_name(rep.equation)},
              {"mode", mode},
              {"ok", rep.ok()},
              {"checked", rep.checked},
              {"total_violations", rep.total_violations},
              {"violations", violations}};
}

template <class Ctx>
json func_json(const Ctx&, const typename Ctx::Func& f);

template <>
json func_json<FiniteContext>(const FiniteContext&, const DenseFunc& f) {
  return finite_func_json(f);
}
template <>
json func_json<GridContext>(const GridContext&, const GridFunc& f) {
  return grid_func_json(f);
}

template <class Ctx>
json classification_json(const ClassificationReport<Ctx>& rep, const Ctx& ctx) {
  json out{{"catalog", catalog_name(rep.catalog)},
           {"family", rep.family},
           {"branch", rep.branch},
           {"constants", scalar_map_json(rep.constants)},
           {"reconstruction_exact", rep.reconstruction_exact}};
  if (rep.lambda) out["lambda"] = rep.lambda->str();
  if (!rep.shape.empty()) out["shape"] = rep.shape;
  if (rep.chi) out["chi"] = func_json<Ctx>(ctx, *rep.chi);
  if (rep.chi_sigma) out["chi_sigma"] = func_json<Ctx>(ctx, *rep.chi_sigma);
  if (rep.A) out["A"] = func_json<Ctx>(ctx, *rep.A);
  if (!rep.rho.empty()) {
    json rho = json::object();
    for (const auto& [e, v] : rep.rho) rho[ctx.element_label(e)] = v.str();
    out["rho"] = rho;
  }
  if (rep.g_sz0z0) out["g_sz0z0"] = rep.g_sz0z0->str();
  if (rep.f_sz0z0) out["f_sz0z0"] = rep.f_sz0z0->str();
  if (rep.compat_checked) out["compat_checked"] = true;
  if (!rep.gauge_note.empty()) out["gauge_note"] = rep.gauge_note;
  return out;
}

}  // namespace

LoadedContext load_context(const std::string& json_text,
                           std::optional<unsigned> conductor_override,
                           std::optional<unsigned> window_override) {
  json j = parse_json(json_text);
  if (!j.is_object()) throw InvalidInput("a context file must be an object");

  LoadedContext out;
  out.conductor = conductor_override
                      ? *conductor_override
                      : (j.contains("conductor")
                             ? require_positive(j.at("conductor"), "conductor")
                             : 12u);

  std::string kind = j.contains("kind")
                         ? require_string(j.at("kind"), "kind")
                         : std::string("finite");
  if (kind == "grid2") {
    const json& z0 = require_key(j, "z0");
    if (!z0.is_array() || z0.size() != 2 || !z0[0].is_number_unsigned() ||
        !z0[1].is_number_unsigned())
      throw InvalidInput("grid z0 must be [s0, t0] with positive entries");
    GridPoint p{static_cast<long long>(z0[0].get<unsigned long long>()),
                static_cast<long long>(z0[1].get<unsigned long long>())};
    std::string sigma = require_string(require_key(j, "sigma"), "sigma");
    GridSigma gs;
    if (sigma == "swap")
      gs = GridSigma::kSwap;
    else if (sigma == "identity")
      gs = GridSigma::kIdentity;
    else
      throw InvalidInput("grid sigma must be \"swap\" or \"identity\"");
    unsigned window = window_override
                          ? *window_override
                          : (j.contains("window")
                                 ? require_positive(j.at("window"), "window")
                                 : 12u);
    out.grid.emplace(gs, p, window);
    return out;
  }
  if (kind != "finite")
    throw InvalidInput("kind must be \"finite\" or \"grid2\"");

  const json& table_j = require_key(j, "table");
  if (!table_j.is_array() || table_j.empty())
    throw InvalidInput("'table' must be a nonempty square array");
  std::size_t n = table_j.size();

  std::optional<std::vector<std::string>> names;
  if (j.contains("elements")) {
    const json& els = j.at("elements");
    if (!els.is_array() || els.size() != n)
      throw InvalidInput("'elements' must name every row of the table");
    names.emplace();
    for (const auto& e : els) names->push_back(require_string(e, "an element name"));
  }

  // First pass to resolve names in the table: build a temporary index.
  auto lookup = [&](const json& cell) -> Elem {
    if (cell.is_number_unsigned()) {
      auto v = cell.get<unsigned long long>();
      if (v >= n) throw InvalidInput("table entry out of range");
      return static_cast<Elem>(v);
    }
    if (cell.is_string() && names) {
      const std::string s = cell.get<std::string>();
      for (std::size_t i = 0; i < names->size(); ++i)
        if ((*names)[i] == s) return static_cast<Elem>(i);
      throw InvalidInput("table entry names an unknown element '" + s + "'");
    }
    throw InvalidInput("table entries must be indices or element names");
  };
  std::vector<std::vector<Elem>> table(n);
  for (std::size_t r = 0; r < n; ++r) {
    const json& row = table_j[r];
    if (!row.is_array() || row.size() != n)
      throw InvalidInput("'table' must be a square array");
    table[r].reserve(n);
    for (const auto& cell : row) table[r].push_back(lookup(cell));
  }

  FiniteSemigroup sg = FiniteSemigroup::from_table(std::move(table), names);

  std::vector<Elem> sigma(n);
  const json& sigma_j = require_key(j, "sigma");
  if (sigma_j.is_string() && sigma_j.get<std::string>() == "identity") {
    for (std::size_t i = 0; i < n; ++i) sigma[i] = static_cast<Elem>(i);
  } else if (sigma_j.is_array() && sigma_j.size() == n) {
    for (std::size_t i = 0; i < n; ++i)
      sigma[i] = resolve_element(sigma_j[i], sg, "sigma entry");
  } else {
    throw InvalidInput("sigma must be \"identity\" or a permutation array");
  }

  Elem z0 = resolve_element(require_key(j, "z0"), sg, "z0");
  out.finite.emplace(std::move(sg), std::move(sigma), z0);
  return out;
}

DenseFunc parse_finite_func(const std::string& json_text, std::size_t size,
                            unsigned conductor) {
  return finite_func_from_json(parse_json(json_text), size, conductor);
}

GridFunc parse_grid_func(const std::string& json_text, unsigned conductor) {
  return grid_func_from_json(parse_json(json_text), conductor);
}

std::string finite_func_to_json(const DenseFunc& f, bool pretty) {
  return dump(finite_func_json(f), pretty);
}

std::string grid_func_to_json(const GridFunc& f, bool pretty) {
  return dump(grid_func_json(f), pretty);
}

namespace {

template <class Ctx, class FuncParser>
FamilyDescriptor<Ctx> descriptor_from_json(const json& j, unsigned conductor,
                                           FuncParser&& parse_func) {
  if (!j.is_object()) throw InvalidInput("a descriptor file must be an object");
  FamilyDescriptor<Ctx> d;
  std::string catalog = j.contains("catalog")
                            ? require_string(j.at("catalog"), "catalog")
                            : std::string("base");
  if (catalog == "base")
    d.catalog = Catalog::kBase;
  else if (catalog == "shifted")
    d.catalog = Catalog::kShifted;
  else
    throw InvalidInput("catalog must be \"base\" or \"shifted\"");

  const json& fam = require_key(j, "family");
  if (!fam.is_number_integer())
    throw InvalidInput("family must be an integer");
  d.family = fam.get<int>();

  if (j.contains("constants")) {
    const json& cs = j.at("constants");
    if (!cs.is_object()) throw InvalidInput("constants must be an object");
    for (const auto& [k, v] : cs.items())
      d.constants[k] = parse_scalar(require_string(v, "constant " + k), conductor);
  }
  if (j.contains("chi")) d.chi = parse_func(j.at("chi"));
  if (j.contains("A")) d.A = parse_func(j.at("A"));
  if (j.contains("free")) d.free_fn = parse_func(j.at("free"));
  if (j.contains("lambda"))
    d.lambda = parse_scalar(require_string(j.at("lambda"), "lambda"), conductor);
  return d;
}

}  // namespace

FamilyDescriptor<FiniteContext> parse_finite_descriptor(
    const std::string& json_text, const FiniteContext& ctx,
    unsigned conductor) {
  json j = parse_json(json_text);
  auto d = descriptor_from_json<FiniteContext>(
      j, conductor, [&](const json& fj) {
        return finite_func_from_json(fj, ctx.size(), conductor);
      });
  if (j.contains("rho")) {
    const json& rho = j.at("rho");
    if (!rho.is_object()) throw InvalidInput("rho must be an object");
    for (const auto& [k, v] : rho.items()) {
      Elem e = resolve_element(json(k), ctx.semigroup(), "rho key");
      d.rho[e] = parse_scalar(require_string(v, "rho value"), conductor);
    }
  }
  return d;
}

FamilyDescriptor<GridContext> parse_grid_descriptor(const std::string& json_text,
                                                    unsigned conductor) {
  json j = parse_json(json_text);
  if (j.contains("rho") && !j.at("rho").empty())
    throw InvalidInput("the grid has an empty fringe; rho is not meaningful");
  return descriptor_from_json<GridContext>(j, conductor, [&](const json& fj) {
    return grid_func_from_json(fj, conductor);
  });
}

std::string violation_report_to_json(const ViolationReport<FiniteContext>& rep,
                                     const FiniteContext& ctx,
                                     const std::string& mode, bool pretty) {
  return dump(violation_report_json(rep, ctx, mode), pretty);
}

std::string violation_report_to_json(const ViolationReport<GridContext>& rep,
                                     const GridContext& ctx,
                                     const std::string& mode, bool pretty) {
  return dump(violation_report_json(rep, ctx, mode), pretty);
}

std::string structural_report_to_json(const StructuralReport& rep,
                                      EquationKind kind, bool pretty) {
  json out{{"equation", equation_name(kind)},
           {"mode", "structural"},
           {"ok", rep.ok}};
  if (!rep.ok) out["residual"] = rep.residual;
  return dump(out, pretty);
}

std::string classification_to_json(const ClassificationReport<FiniteContext>& rep,
                                   const FiniteContext& ctx, bool pretty) {
  return dump(classification_json(rep, ctx), pretty);
}

std::string classification_to_json(const ClassificationReport<GridContext>& rep,
                                   const GridContext& ctx, bool pretty) {
  return dump(classification_json(rep, ctx), pretty);
}

std::string exponentials_to_json(const std::vector<DenseFunc>& chis,
                                 bool pretty) {
  json arr = json::array();
  for (const auto& chi : chis) arr.push_back(finite_func_json(chi));
  return dump(json{{"count", chis.size()}, {"exponentials", arr}}, pretty);
}

std::string pair_to_json(const DenseFunc& f, const DenseFunc& g, bool pretty) {
  return dump(json{{"f", finite_func_json(f)}, {"g", finite_func_json(g)}},
              pretty);
}

std::string pair_to_json(const GridFunc& f, const GridFunc& g, bool pretty) {
  return dump(json{{"f", grid_func_json(f)}, {"g", grid_func_json(g)}}, pretty);
}

std::string oracle_solution_to_json(const OracleSolution& sol) {
  return json{{"f", finite_func_json(sol.f)}, {"g", finite_func_json(sol.g)}}
      .dump();
}

std::string cross_validation_to_json(const CrossValidationSummary& summary,
                                     bool pretty) {
  json per_family = json::object();
  for (const auto& [family, count] : summary.per_family)
    per_family[std::to_string(family)] = count;
  return dump(json{{"total", summary.total},
                   {"unclassified", summary.unclassified},
                   {"per_family", per_family}},
              pretty);
}

}  // namespace kss
