#include <doctest.h>

#include "kss/families.hpp"
#include "kss/verifier.hpp"
#include "support/contexts.hpp"
#include "support/instances.hpp"

using namespace kss;
using namespace kss::test;

TEST_SUITE_BEGIN("verifier");

TEST_CASE("the base equation sweep checks every pair") {
  Rng rng(1);
  FiniteInstance inst = finite_family3(rng);
  auto rep = verify_base(inst.ctx, inst.pair.f, inst.pair.g);
  CHECK(rep.ok());
  CHECK(rep.checked == 9);
  CHECK(rep.equation == EquationKind::kBase);
}

TEST_CASE("violations carry the offending pair and both sides") {
  Rng rng(2);
  FiniteInstance inst = finite_family3(rng);
  DenseFunc bad = inst.pair.f;
  bad.set(0, bad.eval(0) + S("1"));
  auto rep = verify_base(inst.ctx, bad, inst.pair.g);
  CHECK(!rep.ok());
  CHECK(rep.total_violations > 0);
  CHECK(rep.violations.size() == rep.total_violations);
  for (const auto& v : rep.violations) {
    CHECK(v.lhs != v.rhs);
    // the recorded sides are exactly the two sides of the equation
    Elem w = inst.ctx.compose(inst.ctx.compose(v.x, inst.ctx.apply_sigma(v.y)),
                              inst.ctx.z0());
    CHECK(v.lhs == bad.eval(w));
    CHECK(v.rhs == bad.eval(v.x) * inst.pair.g.eval(v.y) -
                       bad.eval(v.y) * inst.pair.g.eval(v.x));
  }
}

TEST_CASE("only the first hundred violations are stored, all are counted") {
  FiniteContext ctx = z12_identity_ctx();
  DenseFunc f = DenseFunc::constant(12, S("1"));
  DenseFunc g = DenseFunc::zero(12, kN);
  auto rep = verify_base(ctx, f, g);
  CHECK(rep.checked == 144);
  CHECK(rep.total_violations == 144);
  CHECK(rep.violations.size() == ViolationReport<FiniteContext>::kMaxStored);
}

TEST_CASE("shifted equation") {
  Rng rng(3);
  FiniteInstance base = finite_family4(rng);
  CycScalar lambda = S("1+i");
  DenseFunc f = base.pair.f + lambda * base.pair.g;
  CHECK(verify_shifted(base.ctx, f, base.pair.g, lambda).ok());
  CHECK(!verify_shifted(base.ctx, f, base.pair.g, S("2")).ok());
  CHECK_THROWS_AS(verify_shifted(base.ctx, f, base.pair.g, S("0")), LambdaZero);
}

TEST_CASE("symmetric-product equation") {
  FiniteContext ctx = z3_identity_ctx();
  DenseFunc chi = cyclic_chi(3, 1);
  CHECK(verify_symmetric_product(ctx, chi.eval(1) * chi).ok());
  // chi itself misses the chi(z0) factor
  auto rep = verify_symmetric_product(ctx, chi);
  CHECK(rep.total_violations == 9);
}

TEST_CASE("sine subtraction law without anchoring") {
  // Any b and c give a solution; no z0 constraint is involved.
  FiniteContext ctx = z3_ctx();
  DenseFunc chi = cyclic_chi(3, 1);
  DenseFunc chis = chi.pullback(ctx.sigma());
  for (const char* c_lit : {"0", "1", "-5/7", "i"}) {
    CycScalar c = S(c_lit), b = S("3*z");
    DenseFunc F = b * chi - b * chis;
    DenseFunc G = S("1/2") * ((S("1") + c) * chi + (S("1") - c) * chis);
    CAPTURE(c_lit);
    CHECK(verify_sine_subtraction(ctx, F, G).ok());
  }
  // but F = chi alone is not antisymmetric under the pair swap
  CHECK(!verify_sine_subtraction(ctx, chi, chi).ok());
}

TEST_CASE("lemma suite on an independent solution") {
  Rng rng(4);
  for (auto make : {finite_family3, finite_family4, finite_family5,
                    finite_family7}) {
    FiniteInstance inst = make(rng);
    auto rep = verify_lemma_suite(inst.ctx, inst.pair.f, inst.pair.g, kN);
    CAPTURE(inst.desc.family);
    CHECK(rep.ok());
    CHECK(rep.f_z0_zero);
    CHECK(rep.g_z0_nonzero);
    CHECK(rep.implication_ok);
    CHECK(rep.compat.ok());
    CHECK(rep.compat.equation == EquationKind::kCompatibility);
  }
}

TEST_CASE("lemma suite preconditions") {
  FiniteContext ctx = constant2_ctx();
  DenseFunc f = dense({"0", "1"});
  // dependent solution
  CHECK_THROWS_AS(verify_lemma_suite(ctx, f, S("2") * f, kN),
                  PreconditionNotMet);
  // zero f
  CHECK_THROWS_AS(
      verify_lemma_suite(ctx, DenseFunc::zero(2, kN), dense({"1", "1"}), kN),
      PreconditionNotMet);
  // not a solution at all
  CHECK_THROWS_AS(verify_lemma_suite(ctx, dense({"1", "1"}), dense({"1", "0"}),
                                     kN),
                  PreconditionNotMet);
}

TEST_CASE("lemma suite on the grid") {
  Rng rng(5);
  GridInstance inst = grid_family6(rng);
  auto rep = verify_lemma_suite(inst.ctx, inst.pair.f, inst.pair.g, kN);
  CHECK(rep.ok());
}

TEST_CASE("structural verification is window-free and exact") {
  Rng rng(6);
  GridInstance inst = grid_family5(rng);
  const GridContext& ctx = inst.ctx;

  auto rep = verify_base_structural(ctx, inst.pair.f, inst.pair.g);
  CHECK(rep.ok);
  CHECK(rep.residual.empty());

  SUBCASE("a perturbed pair leaves a nonzero residual") {
    GridFunc bad = inst.pair.f + GridFunc::exponential(S("5"), S("7"));
    auto bad_rep = verify_base_structural(ctx, bad, inst.pair.g);
    CHECK(!bad_rep.ok);
    CHECK(!bad_rep.residual.empty());
  }
  SUBCASE("windowed and structural verdicts agree on solutions") {
    CHECK(verify_base(ctx, inst.pair.f, inst.pair.g).ok());
    CHECK(verify_base(GridContext(GridSigma::kSwap, ctx.z0(), 4), inst.pair.f,
                     inst.pair.g)
              .ok());
  }
  SUBCASE("shifted and symmetric-product structural modes") {
    CycScalar lambda = S("z^3");
    GridFunc f2 = inst.pair.f + lambda * inst.pair.g;
    CHECK(verify_shifted_structural(ctx, f2, inst.pair.g, lambda).ok);
    CHECK(!verify_shifted_structural(ctx, f2, inst.pair.g, S("1+z^3")).ok);

    GridFunc chi = GridFunc::exponential(S("z^2"), S("z^2"));
    GridFunc sp = chi.eval(ctx.z0()) * chi;
    CHECK(verify_symmetric_product_structural(ctx, sp).ok);
    CHECK(!verify_symmetric_product_structural(ctx, chi + chi).ok);
  }
  SUBCASE("sine subtraction, structurally") {
    GridFunc chi = GridFunc::exponential(S("z"), S("z^5"));
    GridFunc chis = chi.pullback(GridSigma::kSwap);
    GridFunc F = chi - chis;
    GridFunc G = S("1/2") * (chi + chis);
    CHECK(verify_sine_subtraction_structural(ctx, F, G).ok);
    // G is determined only up to multiples of F, so chi = G + F/2 also works.
    CHECK(verify_sine_subtraction_structural(ctx, F, chi).ok);
    // Doubling G scales the right side by two and genuinely fails.
    CHECK(!verify_sine_subtraction_structural(ctx, F, chi + chis).ok);
  }
}

TEST_CASE("single-value mutations of a small solution are detected") {
  Rng rng(7);
  FiniteInstance inst = finite_family3(rng);
  for (Elem x = 0; x < 3; ++x) {
    for (const char* delta : {"1", "z", "-1/2"}) {
      DenseFunc f = inst.pair.f;
      f.set(x, f.eval(x) + S(delta));
      CHECK(!verify_base(inst.ctx, f, inst.pair.g).ok());
      DenseFunc g = inst.pair.g;
      g.set(x, g.eval(x) + S(delta));
      CHECK(!verify_base(inst.ctx, inst.pair.f, g).ok());
    }
  }
}

TEST_SUITE_END();
