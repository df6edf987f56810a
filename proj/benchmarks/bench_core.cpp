#include <benchmark/benchmark.h>

#include "adjspec/families.hpp"
#include "adjspec/kernel.hpp"
#include "adjspec/numeric.hpp"
#include "adjspec/operators.hpp"
#include "adjspec/structure.hpp"

using namespace adjspec;

namespace {

Family fock(benchmark::State& state) {
  return gen_fock_layer(gen_lattice(1, static_cast<unsigned>(state.range(1))), static_cast<unsigned>(state.range(0)));
}

void BM_FockLayer(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(fock(state));
}
BENCHMARK(BM_FockLayer)->Args({2, 8})->Args({3, 8})->Args({4, 8})->Unit(benchmark::kMillisecond);

void BM_Admissible(benchmark::State& state) {
  const Family f = fock(state);
  for (auto _ : state) benchmark::DoNotOptimize(check_admissible(f.window));
  state.SetLabel(std::to_string(f.window.graph.size()) + " vertices");
}
BENCHMARK(BM_Admissible)->Args({2, 8})->Args({3, 8})->Args({4, 8})->Unit(benchmark::kMillisecond);

void BM_Identities(benchmark::State& state) {
  const Family f = gen_lattice(static_cast<unsigned>(state.range(0)), static_cast<unsigned>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(verify_identities(f.window, f.phi));
}
BENCHMARK(BM_Identities)->Args({1, 16})->Args({2, 6})->Args({3, 4})->Unit(benchmark::kMillisecond);

void BM_StructuralKernel(benchmark::State& state) {
  const Family f = gen_ladder_alt(static_cast<unsigned>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(structural_kernel_basis(f.window));
}
BENCHMARK(BM_StructuralKernel)->Arg(8)->Arg(32)->Arg(128)->Unit(benchmark::kMillisecond);

void BM_CompactProbe(benchmark::State& state) {
  const auto n = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        compact_support_probe([n](unsigned w) { return gen_fock_layer(gen_lattice(1, w), n).window; }, {8}, 1));
  }
}
BENCHMARK(BM_CompactProbe)->Arg(2)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

// Dense eigensolve dominates; sizes kept small enough for one core.
void BM_Spectrum(benchmark::State& state) {
  const Family f = fock(state);
  const auto h = assemble(f.window, OperatorKind::H);
  for (auto _ : state) benchmark::DoNotOptimize(spectrum(h));
  state.SetLabel(std::to_string(h.dim()) + " x " + std::to_string(h.dim()));
}
BENCHMARK(BM_Spectrum)->Args({2, 8})->Args({3, 6})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
