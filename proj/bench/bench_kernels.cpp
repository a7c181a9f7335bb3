// Serial reference versus OpenMP kernels.
#include <memory>

#include <benchmark/benchmark.h>

#include "histo/error_norm.hpp"
#include "histo/operators.hpp"
#include "histo/test_functions.hpp"
#include "histo/tuning.hpp"

using namespace histo;

namespace {

std::shared_ptr<const Mesh> mesh_of(int n) { return std::make_shared<const Mesh>(friedrichs_keller(n)); }

void BM_reconstruct_serial(benchmark::State& state) {
  const auto mesh = mesh_of(static_cast<int>(state.range(0)));
  const auto scheme = Scheme::enriched(Density::jacobi(1.0, 2.0), 2);
  const auto f = test_function("f3");
  for (auto _ : state) benchmark::DoNotOptimize(reference::reconstruct_global(f.eval, mesh, scheme));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(mesh->size()));
}

void BM_reconstruct_omp(benchmark::State& state) {
  const auto mesh = mesh_of(static_cast<int>(state.range(0)));
  const auto scheme = Scheme::enriched(Density::jacobi(1.0, 2.0), 2);
  const auto f = test_function("f3");
  for (auto _ : state) benchmark::DoNotOptimize(reconstruct_global(f.eval, mesh, scheme));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(mesh->size()));
}

void BM_error_serial(benchmark::State& state) {
  const auto mesh = mesh_of(static_cast<int>(state.range(0)));
  const auto f = test_function("f3");
  const auto recon = reconstruct_global(f.eval, mesh, Scheme::enriched(Density::uniform(), 2));
  for (auto _ : state) benchmark::DoNotOptimize(reference::lp_error(f.eval, recon, Norm::l1));
}

void BM_error_omp(benchmark::State& state) {
  const auto mesh = mesh_of(static_cast<int>(state.range(0)));
  const auto f = test_function("f3");
  const auto recon = reconstruct_global(f.eval, mesh, Scheme::enriched(Density::uniform(), 2));
  for (auto _ : state) benchmark::DoNotOptimize(lp_error(f.eval, recon, Norm::l1));
}

ValidationSet small_set() { return {{test_function("f1"), test_function("f3")}, {mesh_of(4), mesh_of(9)}}; }

void BM_grid_search_serial(benchmark::State& state) {
  const auto set = small_set();
  const auto grid = CandidateGrid::default_grid();
  for (auto _ : state) benchmark::DoNotOptimize(reference::grid_search(grid, set, {}));
}

void BM_grid_search_omp(benchmark::State& state) {
  const auto set = small_set();
  const auto grid = CandidateGrid::default_grid();
  for (auto _ : state) benchmark::DoNotOptimize(grid_search(grid, set, {}));
}

}  // namespace

BENCHMARK(BM_reconstruct_serial)->Arg(20)->Arg(50)->Arg(100)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_reconstruct_omp)->Arg(20)->Arg(50)->Arg(100)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_error_serial)->Arg(20)->Arg(50)->Arg(100)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_error_omp)->Arg(20)->Arg(50)->Arg(100)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_grid_search_serial)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_grid_search_omp)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
