#include <benchmark/benchmark.h>

#include <cstdint>
#include <numeric>
#include <vector>

#include "kss/classifier.hpp"
#include "kss/families.hpp"
#include "kss/function_space.hpp"
#include "kss/oracle.hpp"
#include "kss/scalar_io.hpp"
#include "kss/verifier.hpp"

namespace {

constexpr unsigned kN = 12;

kss::CycScalar lit(const char* text) { return kss::parse_scalar(text, kN); }

kss::FiniteContext z6_context() {
  std::vector<std::vector<kss::Elem>> table(6, std::vector<kss::Elem>(6));
  for (kss::Elem x = 0; x < 6; ++x)
    for (kss::Elem y = 0; y < 6; ++y) table[x][y] = (x + y) % 6;
  return kss::FiniteContext(kss::FiniteSemigroup::from_table(table),
                            {0, 5, 4, 3, 2, 1}, 3);
}

kss::FiniteContext m4_context() {
  kss::FiniteSemigroup sg = kss::FiniteSemigroup::from_table(
      {{0, 1, 2, 3}, {1, 3, 3, 3}, {2, 3, 3, 3}, {3, 3, 3, 3}},
      std::vector<std::string>{"e", "p", "q", "z"});
  return kss::FiniteContext(std::move(sg), {0, 2, 1, 3}, 0);
}

kss::SolutionPair<kss::FiniteContext> z6_family4_pair(
    const kss::FiniteContext& ctx) {
  std::vector<kss::CycScalar> chi_values;
  for (int x = 0; x < 6; ++x)
    chi_values.push_back(kss::CycScalar::root_of_unity(kN, 2 * x));
  kss::FamilyDescriptor<kss::FiniteContext> d;
  d.family = 4;
  d.chi = kss::DenseFunc(std::move(chi_values));
  d.constants = {{"beta", lit("-1")}, {"b", lit("1")}, {"c", lit("0")}};
  return kss::construct_base_family(ctx, d, kN);
}

kss::SolutionPair<kss::GridContext> grid_family6_pair(
    const kss::GridContext& ctx) {
  kss::FamilyDescriptor<kss::GridContext> d;
  d.family = 6;
  d.chi = kss::GridFunc::exponential(lit("z^4"), lit("z^4"));
  d.A = kss::GridFunc::additive(lit("-1"), lit("1"));
  d.constants = {{"gamma", lit("1")}, {"c", lit("-1")}};
  return kss::construct_base_family(ctx, d, kN);
}

void BM_ScalarMultiply(benchmark::State& state) {
  kss::CycScalar a = lit("3/7 - 2*z + z^3");
  kss::CycScalar b = lit("1/2 + z^2 - 5*z^3");
  for (auto _ : state) {
    kss::CycScalar c = a * b;
    benchmark::DoNotOptimize(c);
  }
}
BENCHMARK(BM_ScalarMultiply);

void BM_ScalarInverse(benchmark::State& state) {
  kss::CycScalar a = lit("3/7 - 2*z + z^3");
  for (auto _ : state) {
    kss::CycScalar inv = a.inverse();
    benchmark::DoNotOptimize(inv);
  }
}
BENCHMARK(BM_ScalarInverse);

void BM_ScalarParse(benchmark::State& state) {
  for (auto _ : state) {
    kss::CycScalar v = lit("-1/2 + 3*z^2 - (1 - z)^2 / 4");
    benchmark::DoNotOptimize(v);
  }
}
BENCHMARK(BM_ScalarParse);

void BM_VerifyFinite(benchmark::State& state) {
  kss::FiniteContext ctx = z6_context();
  auto pair = z6_family4_pair(ctx);
  for (auto _ : state) {
    auto rep = kss::verify_base(ctx, pair.f, pair.g);
    benchmark::DoNotOptimize(rep);
  }
  state.SetItemsProcessed(static_cast<int64_t>(state.iterations()) * 36);
}
BENCHMARK(BM_VerifyFinite);

void BM_VerifyGridWindow(benchmark::State& state) {
  const unsigned window = static_cast<unsigned>(state.range(0));
  kss::GridContext ctx(kss::GridSigma::kSwap, kss::GridPoint{1, 2}, window);
  auto pair = grid_family6_pair(ctx);
  for (auto _ : state) {
    auto rep = kss::verify_base(ctx, pair.f, pair.g);
    benchmark::DoNotOptimize(rep);
  }
  state.SetItemsProcessed(static_cast<int64_t>(state.iterations()) * window *
                          window * window * window);
}
BENCHMARK(BM_VerifyGridWindow)->Arg(4)->Arg(8)->Arg(12);

void BM_VerifyGridStructural(benchmark::State& state) {
  kss::GridContext ctx(kss::GridSigma::kSwap, kss::GridPoint{1, 2}, 12);
  auto pair = grid_family6_pair(ctx);
  for (auto _ : state) {
    auto rep = kss::verify_base_structural(ctx, pair.f, pair.g);
    benchmark::DoNotOptimize(rep);
  }
}
BENCHMARK(BM_VerifyGridStructural);

void BM_EnumerateExponentials(benchmark::State& state) {
  kss::FiniteContext ctx = m4_context();
  for (auto _ : state) {
    auto chis = kss::enumerate_exponentials(ctx.semigroup(), kN);
    benchmark::DoNotOptimize(chis);
  }
}
BENCHMARK(BM_EnumerateExponentials);

void BM_ClassifyFinite(benchmark::State& state) {
  kss::FiniteContext ctx = z6_context();
  auto pair = z6_family4_pair(ctx);
  auto catalog = kss::make_catalog(ctx, kN);
  for (auto _ : state) {
    auto rep = kss::classify_base(ctx, pair.f, pair.g, kN, catalog);
    benchmark::DoNotOptimize(rep);
  }
}
BENCHMARK(BM_ClassifyFinite);

void BM_OracleSmall(benchmark::State& state) {
  kss::FiniteSemigroup sg = kss::FiniteSemigroup::from_table({{0, 0}, {0, 0}});
  kss::FiniteContext ctx(std::move(sg), {0, 1}, 0);
  std::vector<kss::CycScalar> values = {lit("0"), lit("1"), lit("-1")};
  for (auto _ : state) {
    auto sols = kss::brute_force_base(ctx, values);
    benchmark::DoNotOptimize(sols);
  }
}
BENCHMARK(BM_OracleSmall);

}  // namespace

BENCHMARK_MAIN();
