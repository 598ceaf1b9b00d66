#include <benchmark/benchmark.h>

#include <omp.h>

#include <map>
#include <memory>
#include <vector>

#include "artifact/groups.hpp"
#include "artifact/numeric.hpp"
#include "artifact/pairing.hpp"

using namespace msym;

namespace {

struct GramInput {
  FareyGroup::Ptr group;
  ModSymSpace::Ptr space;
  std::unique_ptr<PairingContext> ctx;
  std::vector<Cocycle> rows;
  std::vector<ModSym> cols;
};

const GramInput& gram_input(i64 N, int k) {
  static std::map<std::pair<i64, int>, GramInput> cache;
  auto it = cache.find({N, k});
  if (it != cache.end()) return it->second;
  GramInput in;
  in.group = FareyGroup::build(gamma0(N));
  in.space = ModSymSpace::build(in.group, k);
  in.ctx = std::make_unique<PairingContext>(in.group, k);
  for (std::size_t b = 0; b < in.space->dim(); ++b) {
    in.rows.push_back(modsym_cocycle(in.space->element(b)));
    in.cols.push_back(in.space->element(b));
  }
  return cache.emplace(std::make_pair(N, k), std::move(in)).first->second;
}

void BM_gram_serial(benchmark::State& state) {
  const GramInput& in = gram_input(state.range(0), static_cast<int>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(gram_matrix_serial(*in.ctx, in.rows, in.cols));
  state.counters["dim"] = static_cast<double>(in.space->dim());
}

void BM_gram_parallel(benchmark::State& state) {
  const GramInput& in = gram_input(state.range(0), static_cast<int>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(gram_matrix(*in.ctx, in.rows, in.cols));
  state.counters["dim"] = static_cast<double>(in.space->dim());
  state.counters["threads"] = omp_get_max_threads();
}

void BM_petersson_serial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(petersson_norm_delta_serial(static_cast<int>(state.range(0)), static_cast<int>(state.range(1))));
}

void BM_petersson_parallel(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(petersson_norm_delta(static_cast<int>(state.range(0)), static_cast<int>(state.range(1))));
  state.counters["threads"] = omp_get_max_threads();
}

}  // namespace

BENCHMARK(BM_gram_serial)->Args({11, 4})->Args({23, 4})->Args({37, 2})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_gram_parallel)->Args({11, 4})->Args({23, 4})->Args({37, 2})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_petersson_serial)->Args({24, 12})->Args({48, 24})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_petersson_parallel)->Args({24, 12})->Args({48, 24})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
