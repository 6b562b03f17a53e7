#pragma once

#include <string>
#include <vector>

#include "kss/function_space.hpp"
#include "kss/functions.hpp"
#include "kss/semigroup.hpp"

namespace kss {

enum class EquationKind { kBase, kShifted, kSymmetricProduct, kSineSubtraction, kCompatibility };

std::string equation_name(EquationKind k);

template <class Ctx>
struct Violation {
  typename Ctx::Element x, y;
  CycScalar lhs, rhs;
};

// Result of checking an equation over all pairs from the context's domain
// (every pair for a finite semigroup; all pairs from the [1, W]^2 window on
// the grid).  Deterministic: pairs are visited in domain order and the first
// kMaxStored violations are kept verbatim, every violation is counted.
template <class Ctx>
struct ViolationReport {
  static constexpr std::size_t kMaxStored = 100;

  EquationKind equation = EquationKind::kBase;
  std::size_t checked = 0;
  std::size_t total_violations = 0;
  std::vector<Violation<Ctx>> violations;

  bool ok() const { return total_violations == 0; }
};

namespace detail {

// Point evaluation as seen by the pair sweeps.  The generic version defers
// to Func::eval, which is a table lookup for finite semigroups.
template <class Ctx>
class Evaluator {
 public:
  Evaluator(const Ctx&, const typename Ctx::Func& f) : f_(f) {}
  decltype(auto) operator()(const typename Ctx::Element& x) const {
    return f_.eval(x);
  }

 private:
  const typename Ctx::Func& f_;
};

// Grid specialization: evaluating an exponential polynomial afresh costs a
// power chain per term, which dominates window sweeps.  Every point a sweep
// can visit has coordinates <= 2 * window + z0, so tabulate the function
// once over that rectangle with incremental powers and serve lookups.
template <>
class Evaluator<GridContext> {
 public:
  Evaluator(const GridContext& ctx, const GridFunc& f)
      : x_max_(2LL * ctx.window() + ctx.z0().x),
        y_max_(2LL * ctx.window() + ctx.z0().y),
        stride_(static_cast<std::size_t>(y_max_) + 1) {
    const unsigned conductor =
        f.terms().empty() ? 1u : f.terms()[0].coeff.conductor();
    table_.assign(static_cast<std::size_t>(x_max_ + 1) * stride_,
                  CycScalar::zero(conductor));
    for (const GridTerm& t : f.terms()) {
      const std::vector<CycScalar> px = powers(t.a1, x_max_);
      const std::vector<CycScalar> py = powers(t.a2, y_max_);
      for (long long x = 0; x <= x_max_; ++x) {
        CycScalar row = t.coeff * px[static_cast<std::size_t>(x)];
        if (t.mono == GridMono::kX)
          row = CycScalar::from_integer(x, row.conductor()) * row;
        for (long long y = 0; y <= y_max_; ++y) {
          CycScalar v = row * py[static_cast<std::size_t>(y)];
          if (t.mono == GridMono::kY)
            v = CycScalar::from_integer(y, v.conductor()) * v;
          CycScalar& cell = table_[cell_index(x, y)];
          cell = cell + v;
        }
      }
    }
  }

  const CycScalar& operator()(GridPoint p) const {
    return table_[cell_index(p.x, p.y)];
  }

 private:
  static std::vector<CycScalar> powers(const CycScalar& base, long long emax) {
    std::vector<CycScalar> out;
    out.reserve(static_cast<std::size_t>(emax) + 1);
    out.push_back(CycScalar::from_integer(1, base.conductor()));
    for (long long e = 1; e <= emax; ++e) out.push_back(out.back() * base);
    return out;
  }
  std::size_t cell_index(long long x, long long y) const {
    return static_cast<std::size_t>(x) * stride_ + static_cast<std::size_t>(y);
  }

  long long x_max_, y_max_;
  std::size_t stride_;
  std::vector<CycScalar> table_;
};

// Generic pair sweep; `eval_pair` returns (lhs, rhs) for one pair.
template <class Ctx, class EvalPair>
ViolationReport<Ctx> sweep(const Ctx& ctx, EquationKind kind,
                           EvalPair&& eval_pair) {
  ViolationReport<Ctx> rep;
  rep.equation = kind;
  for (const auto& x : ctx.domain()) {
    for (const auto& y : ctx.domain()) {
      ++rep.checked;
      auto [lhs, rhs] = eval_pair(x, y);
      if (lhs != rhs) {
        ++rep.total_violations;
        if (rep.violations.size() < ViolationReport<Ctx>::kMaxStored)
          rep.violations.push_back(Violation<Ctx>{x, y, lhs, rhs});
      }
    }
  }
  return rep;
}

}  // namespace detail

// f(x sigma(y) z0) = f(x) g(y) - f(y) g(x)
template <class Ctx>
ViolationReport<Ctx> verify_base(const Ctx& ctx, const typename Ctx::Func& f,
                                const typename Ctx::Func& g) {
  detail::Evaluator<Ctx> fe(ctx, f), ge(ctx, g);
  return detail::sweep(ctx, EquationKind::kBase, [&](auto x, auto y) {
    auto w = ctx.compose(ctx.compose(x, ctx.apply_sigma(y)), ctx.z0());
    return std::make_pair(fe(w), fe(x) * ge(y) - fe(y) * ge(x));
  });
}

// f(x sigma(y) z0) = f(x) g(y) - f(y) g(x) + lambda g(x sigma(y) z0),
// lambda != 0.
template <class Ctx>
ViolationReport<Ctx> verify_shifted(const Ctx& ctx, const typename Ctx::Func& f,
                                const typename Ctx::Func& g,
                                const CycScalar& lambda) {
  if (lambda.is_zero()) throw LambdaZero();
  detail::Evaluator<Ctx> fe(ctx, f), ge(ctx, g);
  return detail::sweep(ctx, EquationKind::kShifted, [&](auto x, auto y) {
    auto w = ctx.compose(ctx.compose(x, ctx.apply_sigma(y)), ctx.z0());
    return std::make_pair(fe(w),
                          fe(x) * ge(y) - fe(y) * ge(x) + lambda * ge(w));
  });
}

// f(x sigma(y) z0) = f(x) f(y)
template <class Ctx>
ViolationReport<Ctx> verify_symmetric_product(const Ctx& ctx,
                                 const typename Ctx::Func& f) {
  detail::Evaluator<Ctx> fe(ctx, f);
  return detail::sweep(ctx, EquationKind::kSymmetricProduct, [&](auto x, auto y) {
    auto w = ctx.compose(ctx.compose(x, ctx.apply_sigma(y)), ctx.z0());
    return std::make_pair(fe(w), fe(x) * fe(y));
  });
}

// F(x sigma(y)) = F(x) G(y) - F(y) G(x)   (no z0 anchoring)
template <class Ctx>
ViolationReport<Ctx> verify_sine_subtraction(const Ctx& ctx,
                                             const typename Ctx::Func& F,
                                             const typename Ctx::Func& G) {
  detail::Evaluator<Ctx> fe(ctx, F), ge(ctx, G);
  return detail::sweep(ctx, EquationKind::kSineSubtraction, [&](auto x, auto y) {
    auto w = ctx.compose(x, ctx.apply_sigma(y));
    return std::make_pair(fe(w), fe(x) * ge(y) - fe(y) * ge(x));
  });
}

// Structural facts every independent solution of the base equation obeys:
// f vanishes at z0, g does not, the compatibility identity
//   g(sigma(z0) z0) f(x sigma(y))
//     = g(z0) [f(x) g(y) - f(y) g(x)] + f(sigma(z0) z0) g(x sigma(y))
// holds on all pairs, and g(sigma(z0) z0) = 0 forces
// f(sigma(z0) z0) != 0.
template <class Ctx>
struct LemmaSuiteReport {
  CycScalar f_z0, g_z0;
  bool f_z0_zero = false;
  bool g_z0_nonzero = false;
  CycScalar f_sz0z0, g_sz0z0;
  bool implication_ok = false;
  ViolationReport<Ctx> compat;
  bool ok() const {
    return f_z0_zero && g_z0_nonzero && implication_ok && compat.ok();
  }
};

// pre: (f, g) solves the base equation on the context's domain and the pair
// is linearly independent; throws PreconditionNotMet otherwise.
template <class Ctx>
LemmaSuiteReport<Ctx> verify_lemma_suite(const Ctx& ctx,
                                         const typename Ctx::Func& f,
                                         const typename Ctx::Func& g,
                                         unsigned conductor) {
  if (!verify_base(ctx, f, g).ok())
    throw PreconditionNotMet("lemma suite needs a solution of the base equation");
  if (dependency_ratio(f, g, conductor) || f.is_zero())
    throw PreconditionNotMet("lemma suite needs a linearly independent pair");

  LemmaSuiteReport<Ctx> rep;
  auto z0 = ctx.z0();
  auto sz0z0 = ctx.compose(ctx.apply_sigma(z0), z0);
  rep.f_z0 = f.eval(z0);
  rep.g_z0 = g.eval(z0);
  rep.f_z0_zero = rep.f_z0.is_zero();
  rep.g_z0_nonzero = !rep.g_z0.is_zero();
  rep.f_sz0z0 = f.eval(sz0z0);
  rep.g_sz0z0 = g.eval(sz0z0);
  rep.implication_ok = !rep.g_sz0z0.is_zero() || !rep.f_sz0z0.is_zero();
  detail::Evaluator<Ctx> fe(ctx, f), ge(ctx, g);
  rep.compat = detail::sweep(ctx, EquationKind::kCompatibility, [&](auto x, auto y) {
    auto xsy = ctx.compose(x, ctx.apply_sigma(y));
    CycScalar lhs = rep.g_sz0z0 * fe(xsy);
    CycScalar rhs = rep.g_z0 * (fe(x) * ge(y) - fe(y) * ge(x)) +
                    rep.f_sz0z0 * ge(xsy);
    return std::make_pair(lhs, rhs);
  });
  return rep;
}

// ---- strict grid mode -----------------------------------------------------
// Window-free verification: the equation is expanded as an exponential
// polynomial in the four coordinates of (x, y) and must normalize to the
// zero polynomial.  Exact and complete, no sampling involved.

struct StructuralReport {
  bool ok = true;
  std::string residual;  // rendering of the nonzero part when !ok
};

StructuralReport verify_base_structural(const GridContext& ctx,
                                       const GridFunc& f, const GridFunc& g);
StructuralReport verify_shifted_structural(const GridContext& ctx,
                                       const GridFunc& f, const GridFunc& g,
                                       const CycScalar& lambda);
StructuralReport verify_symmetric_product_structural(const GridContext& ctx,
                                        const GridFunc& f);
StructuralReport verify_sine_subtraction_structural(const GridContext& ctx,
                                                    const GridFunc& F,
                                                    const GridFunc& G);

}  // namespace kss
