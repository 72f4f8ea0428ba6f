// Serial versus OpenMP execution of the hot kernels. The first argument is the
// grid size N (N x N cells); the second selects the policy (0 serial, 1 OpenMP).

#include <benchmark/benchmark.h>

#include <cmath>

#include "sg/bench.hpp"
#include "sg/integrators.hpp"
#include "sg/model.hpp"
#include "sg/spectral.hpp"

namespace {

using namespace sg;

struct Setup {
  GridPtr grid;
  Field phi;
  State state;
};

Setup make_setup(const benchmark::State& st) {
  const auto n = static_cast<std::size_t>(st.range(0));
  const Exec exec = st.range(1) == 0 ? Exec::Serial : Exec::Parallel;
  const BenchmarkCase& bc = find_case("ring");
  GridPtr g = make_grid(bc.problem.domain, GridFamily::MidPoint, n, n, exec);
  Field phi = sample(bc.problem.phi, g);
  State s{sample(bc.problem.init_u, g), sample(bc.problem.init_v, g)};
  return {g, std::move(phi), std::move(s)};
}

void label(benchmark::State& st) { st.SetLabel(st.range(1) == 0 ? "serial" : "openmp"); }

void BM_Laplacian(benchmark::State& st) {
  const Setup s = make_setup(st);
  for (auto _ : st) benchmark::DoNotOptimize(laplacian(s.state.u));
  label(st);
}

void BM_Helmholtz(benchmark::State& st) {
  const Setup s = make_setup(st);
  for (auto _ : st) benchmark::DoNotOptimize(helmholtz_solve(s.state.u, 2.5e-5));
  label(st);
}

void BM_Energy(benchmark::State& st) {
  const Setup s = make_setup(st);
  for (auto _ : st) benchmark::DoNotOptimize(energy(s.state, s.phi));
  label(st);
}

void BM_SvmStep(benchmark::State& st) {
  const Setup s = make_setup(st);
  SchemeConfig cfg;
  cfg.scheme = Scheme::Svm;
  const double h0 = energy(s.state, s.phi);
  for (auto _ : st) benchmark::DoNotOptimize(startup_step(s.state, s.phi, h0, cfg).multiplier);
  label(st);
}

void sizes(benchmark::internal::Benchmark* b) {
  for (long n : {64, 128, 256, 512}) {
    for (long exec : {0, 1}) b->Args({n, exec});
  }
  b->Unit(benchmark::kMicrosecond);
}

BENCHMARK(BM_Laplacian)->Apply(sizes);
BENCHMARK(BM_Helmholtz)->Apply(sizes);
BENCHMARK(BM_Energy)->Apply(sizes);
BENCHMARK(BM_SvmStep)->Apply(sizes);

}  // namespace

BENCHMARK_MAIN();
