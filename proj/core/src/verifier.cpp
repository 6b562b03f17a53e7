#include "kss/verifier.hpp"

namespace kss {
namespace {

using LinearArg = Exp4Poly::LinearArg;

struct PointArgs {
  LinearArg u, v;
};

// Variable layout: 0 = x1, 1 = x2, 2 = y1, 3 = y2.
PointArgs point_x() {
  PointArgs p;
  p.u.vars = {true, false, false, false};
  p.v.vars = {false, true, false, false};
  return p;
}

PointArgs point_y() {
  PointArgs p;
  p.u.vars = {false, false, true, false};
  p.v.vars = {false, false, false, true};
  return p;
}

PointArgs point_sigma_y(const GridContext& ctx) {
  PointArgs p = point_y();
  if (ctx.sigma_kind() == GridSigma::kSwap) std::swap(p.u, p.v);
  return p;
}

PointArgs add(const PointArgs& a, const PointArgs& b) {
  PointArgs out;
  for (int i = 0; i < 4; ++i) {
    auto idx = static_cast<std::size_t>(i);
    out.u.vars[idx] = a.u.vars[idx] || b.u.vars[idx];
    out.v.vars[idx] = a.v.vars[idx] || b.v.vars[idx];
  }
  out.u.constant = a.u.constant + b.u.constant;
  out.v.constant = a.v.constant + b.v.constant;
  return out;
}

PointArgs constant_point(GridPoint p) {
  PointArgs out;
  out.u.constant = p.x;
  out.v.constant = p.y;
  return out;
}

Exp4Poly at(const GridFunc& f, const PointArgs& p) {
  return Exp4Poly::substitute(f, p.u, p.v);
}

StructuralReport from_poly(const Exp4Poly& e) {
  StructuralReport rep;
  rep.ok = e.is_zero();
  if (!rep.ok) rep.residual = e.str();
  return rep;
}

}  // namespace

std::string equation_name(EquationKind k) {
  switch (k) {
    case EquationKind::kBase: return "base";
    case EquationKind::kShifted: return "shifted";
    case EquationKind::kSymmetricProduct: return "symmetric-product";
    case EquationKind::kSineSubtraction: return "sine-subtraction";
    case EquationKind::kCompatibility: return "compatibility";
  }
  return "unknown";
}

StructuralReport verify_base_structural(const GridContext& ctx,
                                       const GridFunc& f, const GridFunc& g) {
  PointArgs w = add(add(point_x(), point_sigma_y(ctx)), constant_point(ctx.z0()));
  Exp4Poly e = at(f, w) - (at(f, point_x()) * at(g, point_y()) -
                           at(f, point_y()) * at(g, point_x()));
  return from_poly(e);
}

StructuralReport verify_shifted_structural(const GridContext& ctx,
                                       const GridFunc& f, const GridFunc& g,
                                       const CycScalar& lambda) {
  if (lambda.is_zero()) throw LambdaZero();
  PointArgs w = add(add(point_x(), point_sigma_y(ctx)), constant_point(ctx.z0()));
  Exp4Poly e = at(f, w) - (at(f, point_x()) * at(g, point_y()) -
                           at(f, point_y()) * at(g, point_x()) +
                           lambda * at(g, w));
  return from_poly(e);
}

StructuralReport verify_symmetric_product_structural(const GridContext& ctx,
                                        const GridFunc& f) {
  PointArgs w = add(add(point_x(), point_sigma_y(ctx)), constant_point(ctx.z0()));
  Exp4Poly e = at(f, w) - at(f, point_x()) * at(f, point_y());
  return from_poly(e);
}

StructuralReport verify_sine_subtraction_structural(const GridContext& ctx,
                                                    const GridFunc& F,
                                                    const GridFunc& G) {
  PointArgs w = add(point_x(), point_sigma_y(ctx));
  Exp4Poly e = at(F, w) - (at(F, point_x()) * at(G, point_y()) -
                           at(F, point_y()) * at(G, point_x()));
  return from_poly(e);
}

}  // namespace kss
