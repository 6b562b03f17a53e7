#include <doctest.h>

#include "kss/families.hpp"
#include "kss/verifier.hpp"
#include "support/contexts.hpp"
#include "support/instances.hpp"

using namespace kss;
using namespace kss::test;

TEST_SUITE_BEGIN("families");

TEST_CASE("family 1: f = 0, g arbitrary") {
  FiniteContext ctx = z3_ctx();
  FamilyDescriptor<FiniteContext> d;
  d.family = 1;
  d.free_fn = dense({"1", "i", "-2/3"});
  auto pair = construct_base_family(ctx, d, kN);
  CHECK(pair.f == DenseFunc::zero(3, kN));
  CHECK(pair.g == *d.free_fn);
  CHECK(verify_base(ctx, pair.f, pair.g).ok());

  d.free_fn.reset();
  CHECK_THROWS_AS(construct_base_family(ctx, d, kN), ConstraintViolated);
}

TEST_CASE("family 2: dependent pair vanishing on S S z0") {
  FiniteContext ctx = constant2_ctx();
  FamilyDescriptor<FiniteContext> d;
  d.family = 2;
  d.free_fn = dense({"0", "2"});
  d.constants["kappa"] = S("i");
  auto pair = construct_base_family(ctx, d, kN);
  CHECK(pair.f == dense({"0", "2"}));
  CHECK(pair.g == dense({"0", "2*i"}));
  CHECK(verify_base(ctx, pair.f, pair.g).ok());

  SUBCASE("f must vanish on S S z0 = {e0}") {
    d.free_fn = dense({"1", "1"});
    CHECK_THROWS_AS(construct_base_family(ctx, d, kN), ConstraintViolated);
  }
  SUBCASE("unavailable when S S z0 is everything") {
    FiniteContext all = z3_ctx();
    FamilyDescriptor<FiniteContext> d3;
    d3.family = 2;
    d3.free_fn = dense({"1", "0", "0"});
    d3.constants["kappa"] = S("1");
    CHECK_THROWS_AS(construct_base_family(all, d3, kN), FamilyUnavailable);
  }
  SUBCASE("no nonzero exponential polynomial vanishes on the grid cone") {
    GridContext gctx = grid_swap_ctx(1, 2);
    FamilyDescriptor<GridContext> gd;
    gd.family = 2;
    gd.free_fn = GridFunc::exponential(S("z"), S("z"));
    gd.constants["kappa"] = S("1");
    CHECK_THROWS_AS(construct_base_family(gctx, gd, kN), ConstraintViolated);
  }
}

TEST_CASE("family 3 on Z_3: constraints pin b and c") {
  FiniteContext ctx = z3_ctx();
  DenseFunc chi = cyclic_chi(3, 1);
  DenseFunc chis = chi.pullback(ctx.sigma());
  CycScalar u = chi.eval(1), v = chis.eval(1);

  auto solved = solve_family_constraints(Catalog::kBase, 3, u, v, std::nullopt,
                                         {{"gamma", S("z")}}, kN);
  REQUIRE(solved.satisfiable);
  const CycScalar &b = solved.solved.at("b"), &c = solved.solved.at("c");
  CHECK(S("-2") * b / (S("1") + c) == u);
  CHECK(S("2") * b / (S("1") - c) == v);
  CHECK(!b.is_zero());
  CHECK(c != S("1"));
  CHECK(c != S("-1"));

  FamilyDescriptor<FiniteContext> d;
  d.family = 3;
  d.chi = chi;
  d.constants = solved.solved;
  auto pair = construct_base_family(ctx, d, kN);
  CHECK(verify_base(ctx, pair.f, pair.g).ok());
  CHECK(pair.f.eval(ctx.z0()).is_zero());
  CHECK(!pair.g.eval(ctx.z0()).is_zero());
  CHECK(pair.g == b * chi - b * chis);

  SUBCASE("the antisymmetric gauge produces the same pair") {
    FamilyDescriptor<FiniteContext> gauge;
    gauge.family = 3;
    gauge.chi = chis;
    gauge.constants = {
        {"gamma", S("z")}, {"b", -b}, {"c", -c}};
    auto pair2 = construct_base_family(ctx, gauge, kN);
    CHECK(pair2.f == pair.f);
    CHECK(pair2.g == pair.g);
  }
  SUBCASE("c = +-1 is rejected") {
    d.constants["c"] = S("1");
    CHECK_THROWS_AS(construct_base_family(ctx, d, kN), ConstraintViolated);
  }
  SUBCASE("a sigma-invariant chi is the wrong parity") {
    FiniteContext idctx = z3_identity_ctx();
    CHECK_THROWS_AS(construct_base_family(idctx, d, kN), WrongSigmaParity);
  }
  SUBCASE("a chi violating its z0 constraint is rejected") {
    d.chi = cyclic_chi(3, 2);  // swaps u and v
    CHECK_THROWS_AS(construct_base_family(ctx, d, kN), ConstraintViolated);
  }
  SUBCASE("constants must be present") {
    d.constants.erase("b");
    CHECK_THROWS_AS(construct_base_family(ctx, d, kN), ConstraintViolated);
  }
}

TEST_CASE("family 4 on Z_6: sigma fixes z0") {
  FiniteContext ctx = z6_ctx();
  DenseFunc chi = cyclic_chi(6, 1);
  CycScalar u = chi.eval(3);  // = -1, shared with chi o sigma
  CHECK(chi.pullback(ctx.sigma()).eval(3) == u);

  FamilyDescriptor<FiniteContext> d;
  d.family = 4;
  d.chi = chi;
  d.constants = {{"beta", u.inverse()}, {"b", S("3")}, {"c", S("i")}};
  auto pair = construct_base_family(ctx, d, kN);
  CHECK(verify_base(ctx, pair.f, pair.g).ok());
  CHECK(pair.f == S("3") * (chi - chi.pullback(ctx.sigma())));

  SUBCASE("wrong beta") {
    d.constants["beta"] = S("2");
    CHECK_THROWS_AS(construct_base_family(ctx, d, kN), ConstraintViolated);
  }
  SUBCASE("the grid pins family 4 the same way") {
    // z0 = (1,3), bases (a, -a): chi != chi o sigma but they agree at z0.
    GridContext gctx = grid_swap_ctx(1, 3);
    GridFunc gchi = GridFunc::exponential(S("z"), S("-z"));
    CycScalar gu = gchi.eval({1, 3});
    FamilyDescriptor<GridContext> gd;
    gd.family = 4;
    gd.chi = gchi;
    gd.constants = {{"beta", gu.inverse()}, {"b", S("1")}, {"c", S("0")}};
    auto gpair = construct_base_family(gctx, gd, kN);
    CHECK(verify_base_structural(gctx, gpair.f, gpair.g).ok);
    CHECK(verify_base(gctx, gpair.f, gpair.g).ok());
  }
}

TEST_CASE("family 5 on Z_3") {
  FiniteContext ctx = z3_ctx();
  DenseFunc chi = cyclic_chi(3, 1);
  DenseFunc chis = chi.pullback(ctx.sigma());
  auto solved = solve_family_constraints(
      Catalog::kBase, 5, chi.eval(1), chis.eval(1), std::nullopt,
      {{"alpha", S("2")}, {"delta", S("-1/2")}}, kN);
  REQUIRE(solved.satisfiable);
  const CycScalar &b = solved.solved.at("b"), &c = solved.solved.at("c");
  const CycScalar &alpha = solved.solved.at("alpha"),
                  &delta = solved.solved.at("delta");
  // the two z0 constraints of the family hold for the solved (b, c)
  CHECK(S("2") * b / (alpha * (S("1") + c) + S("2") * b * delta) == chi.eval(1));
  CHECK(S("2") * b / (alpha * (c - S("1")) + S("2") * b * delta) ==
        chis.eval(1));

  FamilyDescriptor<FiniteContext> d;
  d.family = 5;
  d.chi = chi;
  d.constants = solved.solved;
  auto pair = construct_base_family(ctx, d, kN);
  CHECK(verify_base(ctx, pair.f, pair.g).ok());

  SUBCASE("degenerate denominators are rejected") {
    FamilyDescriptor<FiniteContext> bad;
    bad.family = 5;
    bad.chi = chi;
    // alpha (1 + c) + 2 b delta = 2(1-2) + 2 = 0
    bad.constants = {
        {"alpha", S("2")}, {"delta", S("1")}, {"b", S("1")}, {"c", S("-2")}};
    CHECK_THROWS_AS(construct_base_family(ctx, bad, kN), ConstraintViolated);
  }
}

TEST_CASE("family 6 lives on the grid") {
  GridContext ctx = grid_swap_ctx(1, 2);
  CycScalar a = S("z");
  CycScalar u = a.pow(3);             // chi(z0)
  CycScalar b1 = u / S("1 - 2");      // A(z0) = b1 (s0 - t0) = u
  GridFunc chi = GridFunc::exponential(a, a);
  GridFunc A = GridFunc::additive(b1, -b1);

  FamilyDescriptor<GridContext> d;
  d.family = 6;
  d.chi = chi;
  d.A = A;
  d.constants = {{"gamma", S("2")}, {"c", -u.inverse()}};
  auto pair = construct_base_family(ctx, d, kN);
  CHECK(verify_base_structural(ctx, pair.f, pair.g).ok);
  CHECK(verify_base(ctx, pair.f, pair.g).ok());
  CHECK(pair.g == build_psi(ctx, chi, A));

  SUBCASE("c is pinned to -1/chi(z0)") {
    d.constants["c"] = S("1");
    CHECK_THROWS_AS(construct_base_family(ctx, d, kN), ConstraintViolated);
  }
  SUBCASE("no finite instance: additive parts vanish on a finite semigroup") {
    // On Z_3 only A = 0 is additive, so A(z0) = 0 != chi(z0) always.
    FiniteContext fctx = z3_identity_ctx();
    FamilyDescriptor<FiniteContext> fd;
    fd.family = 6;
    fd.chi = cyclic_chi(3, 0);
    fd.A = DenseFunc::zero(3, kN);
    fd.constants = {{"gamma", S("1")}, {"c", S("-1")}};
    CHECK_THROWS_AS(construct_base_family(fctx, fd, kN), ConstraintViolated);
  }
}

TEST_CASE("family 7 on the grid and on the fringe semigroup") {
  SUBCASE("grid, alpha derived from A(z0)") {
    GridContext ctx = grid_swap_ctx(1, 2);
    CycScalar a = S("2"), b1 = S("z");
    CycScalar u = a.pow(3);
    CycScalar a_z0 = b1 * S("-1");
    auto solved = solve_family_constraints(Catalog::kBase, 7, u, u, a_z0,
                                           {{"c", S("1/2")}}, kN);
    REQUIRE(solved.satisfiable);
    FamilyDescriptor<GridContext> d;
    d.family = 7;
    d.chi = GridFunc::exponential(a, a);
    d.A = GridFunc::additive(b1, -b1);
    d.constants = solved.solved;
    auto pair = construct_base_family(ctx, d, kN);
    CHECK(verify_base_structural(ctx, pair.f, pair.g).ok);
    CHECK(verify_base(ctx, pair.f, pair.g).ok());
  }
  SUBCASE("finite: alpha = 0 and Psi carried by rho") {
    FiniteContext ctx = m4_ctx();
    FamilyDescriptor<FiniteContext> d;
    d.family = 7;
    d.chi = dense({"1", "0", "0", "0"});
    d.A = DenseFunc::zero(4, kN);
    d.rho = {{1, S("1")}, {2, S("-1")}};
    d.constants = {{"alpha", S("0")}, {"delta", S("1")}, {"c", S("1")}};
    auto pair = construct_base_family(ctx, d, kN);
    CHECK(pair.f == dense({"0", "1", "-1", "0"}));
    CHECK(pair.g == dense({"1", "1", "-1", "0"}));
    CHECK(verify_base(ctx, pair.f, pair.g).ok());
  }
  SUBCASE("Psi must not vanish") {
    FiniteContext ctx = m4_ctx();
    FamilyDescriptor<FiniteContext> d;
    d.family = 7;
    d.chi = dense({"1", "0", "0", "0"});
    d.A = DenseFunc::zero(4, kN);
    d.constants = {{"alpha", S("0")}, {"delta", S("1")}, {"c", S("1")}};
    CHECK_THROWS_AS(construct_base_family(ctx, d, kN), ConstraintViolated);
  }
}

TEST_CASE("every generated instance verifies on its context") {
  Rng rng(20260814);
  for (int i = 0; i < 5; ++i) {
    for (auto make : {finite_family1, finite_family2, finite_family3,
                      finite_family4, finite_family5, finite_family7}) {
      FiniteInstance inst = make(rng);
      CAPTURE(inst.desc.family);
      CHECK(verify_base(inst.ctx, inst.pair.f, inst.pair.g).ok());
    }
    for (auto make : {grid_family3, grid_family4, grid_family5, grid_family6,
                      grid_family7}) {
      GridInstance inst = make(rng);
      CAPTURE(inst.desc.family);
      CHECK(verify_base_structural(inst.ctx, inst.pair.f, inst.pair.g).ok);
    }
  }
}

TEST_CASE("shifted catalog") {
  FiniteContext ctx = constant2_ctx();
  CycScalar lambda = S("z");

  SUBCASE("family 1: f = lambda g") {
    FamilyDescriptor<FiniteContext> d;
    d.catalog = Catalog::kShifted;
    d.family = 1;
    d.lambda = lambda;
    d.free_fn = dense({"1", "i"});
    auto pair = construct_shifted_family(ctx, d, kN);
    CHECK(pair.f == lambda * *d.free_fn);
    CHECK(pair.g == *d.free_fn);
    CHECK(verify_shifted(ctx, pair.f, pair.g, lambda).ok());
  }
  SUBCASE("family 2: g = 0, f vanishing and nonzero") {
    FamilyDescriptor<FiniteContext> d;
    d.catalog = Catalog::kShifted;
    d.family = 2;
    d.lambda = lambda;
    d.free_fn = dense({"0", "3"});
    auto pair = construct_shifted_family(ctx, d, kN);
    CHECK(pair.g == DenseFunc::zero(2, kN));
    CHECK(verify_shifted(ctx, pair.f, pair.g, lambda).ok());
  }
  SUBCASE("family 3: f = ((1 + kappa lambda)/kappa) h, g = h") {
    FamilyDescriptor<FiniteContext> d;
    d.catalog = Catalog::kShifted;
    d.family = 3;
    d.lambda = lambda;
    d.free_fn = dense({"0", "3"});
    d.constants["kappa"] = S("1/2");
    auto pair = construct_shifted_family(ctx, d, kN);
    CHECK(pair.g == *d.free_fn);
    CHECK(pair.f ==
          ((S("1") + S("1/2") * lambda) / S("1/2")) * *d.free_fn);
    CHECK(verify_shifted(ctx, pair.f, pair.g, lambda).ok());
    d.constants["kappa"] = S("0");
    CHECK_THROWS_AS(construct_shifted_family(ctx, d, kN), ConstraintViolated);
  }
  SUBCASE("families 4-8 shift the base catalog") {
    Rng rng(7);
    FiniteInstance base = finite_family5(rng);
    FamilyDescriptor<FiniteContext> d = base.desc;
    d.catalog = Catalog::kShifted;
    d.family = 6;
    d.lambda = lambda;
    auto pair = construct_shifted_family(base.ctx, d, kN);
    CHECK(pair.f == base.pair.f + lambda * base.pair.g);
    CHECK(pair.g == base.pair.g);
    CHECK(verify_shifted(base.ctx, pair.f, pair.g, lambda).ok());
    // reduction: (f - lambda g, g) solves the base equation
    CHECK(verify_base(base.ctx, pair.f - lambda * pair.g, pair.g).ok());
  }
  SUBCASE("lambda must be present and nonzero") {
    FamilyDescriptor<FiniteContext> d;
    d.catalog = Catalog::kShifted;
    d.family = 1;
    d.free_fn = dense({"1", "1"});
    CHECK_THROWS_AS(construct_shifted_family(ctx, d, kN), LambdaZero);
    d.lambda = S("0");
    CHECK_THROWS_AS(construct_shifted_family(ctx, d, kN), LambdaZero);
  }
}

TEST_CASE("symmetric product solutions") {
  FiniteContext ctx = z3_identity_ctx();
  DenseFunc chi = cyclic_chi(3, 1);
  DenseFunc f = construct_symmetric_product(ctx, chi, kN);
  CHECK(f == chi.eval(1) * chi);
  CHECK(verify_symmetric_product(ctx, f).ok());

  // chi must be sigma-invariant
  CHECK_THROWS_AS(construct_symmetric_product(z3_ctx(), chi, kN),
                  WrongSigmaParity);
  CHECK_THROWS_AS(construct_symmetric_product(ctx, DenseFunc::zero(3, kN), kN),
                  ConstraintViolated);

  GridContext gctx = grid_swap_ctx(1, 2);
  GridFunc gchi = GridFunc::exponential(S("z^2"), S("z^2"));
  GridFunc gf = construct_symmetric_product(gctx, gchi, kN);
  CHECK(verify_symmetric_product_structural(gctx, gf).ok);
  CHECK(verify_symmetric_product(gctx, gf).ok());
}

TEST_CASE("constraint solver edge cases") {
  CycScalar u = CycScalar::root_of_unity(12, 4);  // zeta_3
  CycScalar v = u * u;

  SUBCASE("family 4 needs matching values at z0") {
    auto r = solve_family_constraints(Catalog::kBase, 4, u, v, std::nullopt,
                                      {}, kN);
    CHECK(!r.satisfiable);
    CHECK(!r.reason.empty());
  }
  SUBCASE("family 3 needs distinct values at z0") {
    CHECK(!solve_family_constraints(Catalog::kBase, 3, u, u, std::nullopt, {},
                                    kN)
               .satisfiable);
    CHECK(!solve_family_constraints(Catalog::kBase, 3, S("0"), v, std::nullopt,
                                    {}, kN)
               .satisfiable);
  }
  SUBCASE("family 6 ties A(z0) to chi(z0)") {
    CHECK(!solve_family_constraints(Catalog::kBase, 6, u, u, S("1"), {}, kN)
               .satisfiable);
    CHECK(solve_family_constraints(Catalog::kBase, 6, u, u, u, {}, kN)
              .satisfiable);
    CHECK(!solve_family_constraints(Catalog::kBase, 6, u, u, std::nullopt, {},
                                    kN)
               .satisfiable);
  }
  SUBCASE("family 7 rejects a c that kills delta") {
    // alpha = -A(z0)/u = 1, delta = 1/u - alpha c; c = 1/u makes delta 0.
    auto r = solve_family_constraints(Catalog::kBase, 7, u, u, -u,
                                      {{"c", u.inverse()}}, kN);
    CHECK(!r.satisfiable);
    auto ok = solve_family_constraints(Catalog::kBase, 7, u, u, -u,
                                       {{"c", S("0")}}, kN);
    REQUIRE(ok.satisfiable);
    CHECK(ok.solved.at("alpha") == S("1"));
    CHECK(ok.solved.at("delta") == u.inverse());
  }
  SUBCASE("shifted families defer to the base catalog") {
    auto direct = solve_family_constraints(Catalog::kBase, 4, u, u,
                                           std::nullopt, {}, kN);
    auto shifted = solve_family_constraints(Catalog::kShifted, 5, u, u,
                                            std::nullopt, {}, kN);
    REQUIRE(direct.satisfiable);
    REQUIRE(shifted.satisfiable);
    CHECK(direct.solved.at("beta") == shifted.solved.at("beta"));
    // shifted families 1-3 have no z0 constraints: the givens pass through
    auto echo = solve_family_constraints(Catalog::kShifted, 3, u, v,
                                         std::nullopt, {{"kappa", S("2")}}, kN);
    REQUIRE(echo.satisfiable);
    CHECK(echo.solved.at("kappa") == S("2"));
  }
}

TEST_SUITE_END();
