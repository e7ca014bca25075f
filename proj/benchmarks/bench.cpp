#include <benchmark/benchmark.h>

#include "qpweyl/evolution.hpp"
#include "qpweyl/laxgauge.hpp"
#include "qpweyl/normal_form.hpp"
#include "qpweyl/parse.hpp"

using namespace qpweyl;

namespace {

IdentityConfig config() {
  IdentityConfig cfg;
  cfg.seed = 1;
  return cfg;
}

OrbitState sample_state() {
  OrbitState st;
  st.q = 2;
  for (int i = 0; i < 7; ++i) st.nu[i] = i + 1;
  st.kappa1 = 3;
  st.kappa2 = 5;
  st.f = 1;
  st.g = 3;
  st.solve_nu8();
  return st;
}

void BM_ParsePrint(benchmark::State& state) {
  const char* text = "nu1*nu2*(z - q*nu3)*(z - q*nu4)/(q*(q*f - z)) + (g - nu5/kappa2)^2";
  for (auto _ : state) benchmark::DoNotOptimize(print(parse(text)));
}
BENCHMARK(BM_ParsePrint);

void BM_TimeEvolution(benchmark::State& state) {
  auto fam = make_family(family_names()[state.range(0)]);
  for (auto _ : state) benchmark::DoNotOptimize(time_evolution(fam));
  state.SetLabel(fam.name);
}
BENCHMARK(BM_TimeEvolution)->DenseRange(0, 2);

void BM_IdentityTest(benchmark::State& state) {
  auto fam = make_family("D5");
  Transformation t = time_evolution(fam);
  for (auto _ : state)
    benchmark::DoNotOptimize(identities_equal(t.image(sym::kappa1), parse("kappa1/q"), fam.constraint_ptr(), config()));
}
BENCHMARK(BM_IdentityTest);

void BM_RelationSuite(benchmark::State& state) {
  auto fam = make_family(family_names()[state.range(0)]);
  for (auto _ : state) benchmark::DoNotOptimize(verify_relations(fam, config()));
  state.SetLabel(fam.name);
}
BENCHMARK(BM_RelationSuite)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);

void BM_TheoremI(benchmark::State& state) {
  auto fam = make_family(family_names()[state.range(0)]);
  for (auto _ : state) benchmark::DoNotOptimize(verify_theorem_i(fam, config()));
  state.SetLabel(fam.name);
}
BENCHMARK(BM_TheoremI)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);

void BM_ExactRelation(benchmark::State& state) {
  auto fam = make_family("D5");
  auto rel = nonlinear_relations(fam, time_evolution(fam)).at(0);
  Expr residual = fam.constraint_ptr()->eliminate(rel.lhs - rel.rhs);
  for (auto _ : state) benchmark::DoNotOptimize(normalize(residual));
}
BENCHMARK(BM_ExactRelation)->Unit(benchmark::kMillisecond);

void BM_GaugeClaims(benchmark::State& state) {
  auto fam = make_family(family_names()[state.range(0)]);
  for (auto _ : state) benchmark::DoNotOptimize(verify_gauge_claims(fam, config()));
  state.SetLabel(fam.name);
}
BENCHMARK(BM_GaugeClaims)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);

void BM_Orbit(benchmark::State& state) {
  auto fam = make_family("D5");
  OrbitState st = sample_state();
  for (auto _ : state) benchmark::DoNotOptimize(orbit(fam, st, state.range(0)));
}
BENCHMARK(BM_Orbit)->Arg(10)->Arg(20)->Arg(40)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
