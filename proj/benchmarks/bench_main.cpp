#include <benchmark/benchmark.h>

#include <random>

#include "sncqa/cqa.hpp"
#include "sncqa/schur.hpp"
#include "sncqa/spinmodel.hpp"
#include "sncqa/yor.hpp"

using namespace sncqa;

static void BM_BuildIrrep(benchmark::State& state) {
  const int half = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(IrrepRep(Partition({half, half})).dim());
}
BENCHMARK(BM_BuildIrrep)->Arg(4)->Arg(5)->Arg(6)->Arg(7);

static void BM_HeisenbergIrrep(benchmark::State& state) {
  const IrrepRep rep(Partition({6, 6}));
  const auto lat = builtin_lattice("rect3x4", 1.0, 0.5);
  for (auto _ : state) benchmark::DoNotOptimize(heisenberg_irrep(rep, lat).matrix.data());
}
BENCHMARK(BM_HeisenbergIrrep);

static void BM_Gradient(benchmark::State& state) {
  const IrrepRep rep(Partition({6, 6}));
  const CQAAnsatz ansatz(rep, heisenberg_irrep(rep, builtin_lattice("rect3x4", 1.0, 0.5)));
  CQAParams params(12, static_cast<int>(state.range(0)));
  std::mt19937_64 rng(0);
  std::normal_distribution<double> g;
  for (Eigen::Index i = 0; i < params.size(); ++i) params.values()[i] = g(rng);
  const auto init = default_initial_state(rep);
  for (auto _ : state) benchmark::DoNotOptimize(ansatz.gradient(params, init).data());
}
BENCHMARK(BM_Gradient)->Arg(4)->Arg(6);

static void BM_SchurBlock(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(build_schur_block(n, Partition({n / 2 + 1, n / 2 - 1})).vectors.size());
}
BENCHMARK(BM_SchurBlock)->Arg(6)->Arg(8)->Arg(10);

BENCHMARK_MAIN();
