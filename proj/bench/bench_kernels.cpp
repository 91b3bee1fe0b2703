// Serial reference vs OpenMP kernels on the desk-scale problem.
#include <benchmark/benchmark.h>

#include <vector>

#include "pinnfluence/influence.hpp"
#include "pinnfluence/loss.hpp"
#include "pinnfluence/pinn_problem.hpp"

using namespace pinnfluence;

namespace {

struct Fixture {
  PinnSetup setup;
  CollocationSet colloc;
  ParamVector params;

  Fixture(std::size_t width, std::size_t n_pde, std::size_t n_bc) {
    setup.model.hidden_width = width;
    colloc = CollocationSet(sample_interior(setup.domain, n_pde), sample_boundary(setup.domain, n_bc));
    params = init_params(setup.model);
  }
};

void BM_LossGradSerial(benchmark::State& state) {
  Fixture f(16, 750, 250);
  std::vector<double> g(f.params.size());
  for (auto _ : state) benchmark::DoNotOptimize(loss_and_gradient_serial(f.params, f.colloc, f.setup, g));
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(f.colloc.size()));
}

void BM_LossGradParallel(benchmark::State& state) {
  Fixture f(16, 750, 250);
  std::vector<double> g(f.params.size());
  for (auto _ : state) benchmark::DoNotOptimize(loss_and_gradient(f.params, f.colloc, f.setup, g));
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(f.colloc.size()));
}

void BM_HessianSerial(benchmark::State& state) {
  Fixture f(8, 96, 32);
  const PinnProblem problem(f.setup, f.colloc);
  for (auto _ : state) benchmark::DoNotOptimize(hessian_columns_serial(problem, f.params));
}

void BM_HessianParallel(benchmark::State& state) {
  Fixture f(8, 96, 32);
  const PinnProblem problem(f.setup, f.colloc);
  for (auto _ : state) benchmark::DoNotOptimize(assemble_hessian(problem, f.params).matrix());
}

}  // namespace

BENCHMARK(BM_LossGradSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_LossGradParallel)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_HessianSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_HessianParallel)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
