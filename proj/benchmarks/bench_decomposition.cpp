#include <benchmark/benchmark.h>

#include "sopq/irreducibility.hpp"
#include "sopq/report.hpp"
#include "sopq/roots.hpp"
#include "sopq/weights.hpp"

using namespace sopq;

namespace {

void BM_FullRootSystem(benchmark::State& state)
{
  const Signature sig = make_signature(static_cast<int>(state.range(0)),
                                       static_cast<int>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(full_root_system(sig));
}
BENCHMARK(BM_FullRootSystem)->Args({4, 2})->Args({6, 3})->Args({8, 4});

void BM_FullWeightSystem(benchmark::State& state)
{
  const Signature sig = make_signature(static_cast<int>(state.range(0)),
                                       static_cast<int>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(full_weight_system(sig));
}
BENCHMARK(BM_FullWeightSystem)->Args({4, 2})->Args({6, 3})->Args({8, 4});

void BM_InvariantClosure(benchmark::State& state)
{
  const Signature sig = make_signature(static_cast<int>(state.range(0)),
                                       static_cast<int>(state.range(1)));
  const Mat seed = complement_basis(sig).front();
  for (auto _ : state) benchmark::DoNotOptimize(invariant_closure(sig, seed));
}
BENCHMARK(BM_InvariantClosure)->Args({2, 1})->Args({3, 2})->Args({4, 2});

void BM_CommutantCertificate(benchmark::State& state)
{
  const Signature sig = make_signature(static_cast<int>(state.range(0)),
                                       static_cast<int>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(commutant_certificate(sig));
}
BENCHMARK(BM_CommutantCertificate)->Args({2, 1})->Args({3, 2})->Args({4, 2});

void BM_LadderCertificate(benchmark::State& state)
{
  const Signature sig = make_signature(static_cast<int>(state.range(0)),
                                       static_cast<int>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(ladder_certificate(sig));
}
BENCHMARK(BM_LadderCertificate)->Args({3, 2})->Args({4, 2})->Args({5, 3});

void BM_EmitJson(benchmark::State& state)
{
  const DecompositionReport report = build_report(make_signature(4, 2));
  for (auto _ : state) benchmark::DoNotOptimize(emit_json(report));
}
BENCHMARK(BM_EmitJson);

} // namespace

BENCHMARK_MAIN();
