#include <benchmark/benchmark.h>

#include "phlo/calculus.hpp"
#include "phlo/connections.hpp"
#include "phlo/fields4.hpp"
#include "phlo/probes.hpp"
#include "phlo/quadrature.hpp"
#include "phlo/solutions.hpp"

namespace {

using namespace phlo;

Solution make_solution() { return build_solution(SolutionConfig{}); }

void BM_FieldValue(benchmark::State& state) {
  Solution sol = make_solution();
  Point4 pt{1.1, 0.9, 0.2, 0.3};
  for (auto _ : state) benchmark::DoNotOptimize(sol.u(pt));
}
BENCHMARK(BM_FieldValue);

void BM_FieldJet(benchmark::State& state) {
  Solution sol = make_solution();
  Point4 pt{1.1, 0.9, 0.2, 0.3};
  for (auto _ : state) benchmark::DoNotOptimize(sol.u.jet1(pt));
}
BENCHMARK(BM_FieldJet);

void BM_HodgeTwoForm(benchmark::State& state) {
  Solution sol = make_solution();
  PhLOState st = sol.state();
  PFormField dualized = hodge(st.F);
  Point4 pt{1.1, 0.9, 0.2, 0.3};
  for (auto _ : state) benchmark::DoNotOptimize(dualized.value(pt));
}
BENCHMARK(BM_HodgeTwoForm);

void BM_CurvatureValue(benchmark::State& state) {
  Solution sol = make_solution();
  ConnectionCurvature cc =
      connection_curvature(sol.u, sol.p, sol.cfg.prm.eps, sol.cfg.prov);
  Point4 pt{1.1, 0.9, 0.2, 0.3};
  for (auto _ : state) benchmark::DoNotOptimize(cc.ksq(pt));
}
BENCHMARK(BM_CurvatureValue);

void BM_EnergySlice(benchmark::State& state) {
  Solution sol = make_solution();
  int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    EnergyReport er = energy_at(sol, 0.5, GridSpec{n, n, n}, 1);
    benchmark::DoNotOptimize(er.quad.refined);
  }
}
BENCHMARK(BM_EnergySlice)->Arg(8)->Arg(16)->Arg(32);

void BM_NijenhuisValue(benchmark::State& state) {
  Solution sol = make_solution();
  ProjectionSet proj = build_projections(sol.u, sol.p, sol.cfg.prm.eps);
  VectorValued2Form nj = nijenhuis(proj.v, sol.cfg.prov);
  const int zx[2] = {AZ, AXI};
  VectorField4 pair = nj.pair_comp[slot_of(2, zx)];
  Point4 pt{1.1, 0.9, 0.2, 0.3};
  for (auto _ : state) benchmark::DoNotOptimize(pair.comp[0](pt));
}
BENCHMARK(BM_NijenhuisValue);

}  // namespace

BENCHMARK_MAIN();
