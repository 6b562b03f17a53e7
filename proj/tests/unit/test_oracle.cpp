#include <doctest.h>

#include <algorithm>

#include "kss/oracle.hpp"
#include "kss/verifier.hpp"
#include "support/contexts.hpp"

using namespace kss;
using namespace kss::test;

namespace {

std::vector<CycScalar> signs() { return {S("0"), S("1"), S("-1")}; }

std::vector<CycScalar> gaussian_units() {
  return {S("0"), S("1"), S("-1"), S("i"), S("-i")};
}

}  // namespace

TEST_SUITE_BEGIN("oracle");

TEST_CASE("one-point semigroup over {0, 1}") {
  FiniteContext ctx = trivial_ctx();
  auto sols = brute_force_base(ctx, {S("0"), S("1")});
  // f(z0) = f*g - f*g = 0 forces f = 0; both g values survive.
  REQUIRE(sols.size() == 2);
  for (const auto& s : sols) {
    CHECK(s.f.is_zero());
    CHECK(verify_base(ctx, s.f, s.g).ok());
  }
}

TEST_CASE("order-two group forces f = 0") {
  FiniteContext ctx = z2_ctx();
  auto sols = brute_force_base(ctx, signs());
  REQUIRE(sols.size() == 9);
  for (const auto& s : sols) {
    CHECK(s.f.is_zero());
    CHECK(verify_base(ctx, s.f, s.g).ok());
  }

  auto summary = cross_validate(ctx, sols, kN);
  CHECK(summary.total == 9);
  CHECK(summary.unclassified == 0);
  CHECK(summary.per_family.at(1) == 9);
  REQUIRE(summary.entries.size() == 9);
  for (const auto& e : summary.entries) {
    REQUIRE(e.report.has_value());
    CHECK(e.report->family == 1);
    CHECK(e.error.empty());
  }
}

TEST_CASE("null semigroup admits a dependent family") {
  FiniteContext ctx = constant2_ctx();
  auto sols = brute_force_base(ctx, signs());
  REQUIRE(sols.size() == 15);

  auto summary = cross_validate(ctx, sols, kN);
  CHECK(summary.total == 15);
  CHECK(summary.unclassified == 0);
  CHECK(summary.per_family.at(1) == 9);
  CHECK(summary.per_family.at(2) == 6);
  for (const auto& e : summary.entries) {
    REQUIRE(e.report.has_value());
    if (e.report->family == 2) {
      // kappa is the exact dependency ratio g = kappa * f.
      const CycScalar& kappa = e.report->constants.at("kappa");
      CHECK(e.solution.g == kappa * e.solution.f);
      CHECK(!e.solution.f.is_zero());
    }
  }
}

TEST_CASE("fringe semigroup exhibits the Psi family exhaustively") {
  FiniteContext ctx = m4_ctx();
  auto sols = brute_force_base(ctx, signs());
  REQUIRE(sols.size() == 87);
  for (const auto& s : sols) CHECK(verify_base(ctx, s.f, s.g).ok());

  auto summary = cross_validate(ctx, sols, kN);
  CHECK(summary.total == 87);
  CHECK(summary.unclassified == 0);
  CHECK(summary.per_family.at(1) == 81);
  CHECK(summary.per_family.at(7) == 6);
  for (const auto& e : summary.entries) {
    REQUIRE(e.report.has_value());
    CHECK(e.report->reconstruction_exact);
    if (e.report->family == 7) {
      // Psi lives on the fringe {p, q} and vanishes at e and z.
      CHECK(e.solution.f.eval(0).is_zero());
      CHECK(e.solution.f.eval(3).is_zero());
      CHECK(e.solution.f.eval(1) == -e.solution.f.eval(2));
      CHECK(!e.solution.f.eval(1).is_zero());
    }
  }
}

TEST_CASE("wider value set keeps the census classified") {
  FiniteContext ctx = z2_ctx();
  auto sols = brute_force_base(ctx, gaussian_units());
  REQUIRE(sols.size() == 25);  // f = 0, g free over five values squared
  auto summary = cross_validate(ctx, sols, kN);
  CHECK(summary.unclassified == 0);
  CHECK(summary.per_family.at(1) == 25);
}

TEST_CASE("symmetric-product census on the cyclic group") {
  FiniteContext ctx = z3_identity_ctx();
  std::vector<CycScalar> values = {S("0"), S("1"), S("z^4"), S("-z^2")};
  auto sols = brute_force_symmetric_product(ctx, values);
  REQUIRE(sols.size() == 4);

  DenseFunc chi1 = cyclic_chi(3, 1);
  DenseFunc chi2 = cyclic_chi(3, 2);
  std::vector<DenseFunc> expected = {
      DenseFunc::zero(3, kN),
      DenseFunc::constant(3, S("1")),
      S("z^4") * chi1,   // zeta_3 * chi1
      S("-z^2") * chi2,  // zeta_3^2 * chi2
  };
  for (const auto& want : expected) {
    CHECK(std::count(sols.begin(), sols.end(), want) == 1);
  }
  for (const auto& f : sols) CHECK(verify_symmetric_product(ctx, f).ok());
}

TEST_CASE("search budget is enforced up front") {
  FiniteContext ctx = z3_ctx();
  OracleOptions tiny;
  tiny.budget = 10;  // 3^6 = 729 assignments needed
  CHECK_THROWS_AS(brute_force_base(ctx, signs(), tiny), BudgetExceeded);
  CHECK_THROWS_AS(brute_force_symmetric_product(ctx, signs(), tiny), BudgetExceeded);
  OracleOptions enough;
  enough.budget = 729;
  auto sols = brute_force_base(ctx, signs(), enough);
  // 27 pairs with f = 0, plus two antisymmetric pairs each for the
  // case-1 and subcase-2.2 shapes.
  CHECK(sols.size() == 31);
  auto summary = cross_validate(ctx, sols, kN);
  CHECK(summary.unclassified == 0);
  CHECK(summary.per_family.at(1) == 27);
  CHECK(summary.per_family.at(3) == 2);
  CHECK(summary.per_family.at(5) == 2);
}

TEST_SUITE_END();
