#include <random>

#include <benchmark/benchmark.h>

#include "lyagraph/checker.hpp"
#include "lyagraph/enumerate.hpp"
#include "lyagraph/io.hpp"
#include "lyagraph/sft.hpp"

using namespace lyagraph;

namespace {

IntMatrix random_matrix(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::int64_t> d(0, 3);
  IntMatrix a(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a(i, j) = d(rng);
  return a;
}

std::vector<LyapunovGraph> sample_graphs(std::size_t count) {
  EnumerationBounds b;
  b.max_vertices = 6;
  b.max_weight = 2;
  b.max_parallel_edges = 2;
  b.label_pool = default_label_pool();
  std::vector<LyapunovGraph> out;
  for (std::uint64_t s = 0; s < count; ++s) out.push_back(random_graph(s, b));
  return out;
}

}  // namespace

static void BM_KInvariant(benchmark::State& state) {
  const auto a = random_matrix(static_cast<std::size_t>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(k_invariant(a));
}
BENCHMARK(BM_KInvariant)->Arg(2)->Arg(10)->Arg(64);

static void BM_SmithNormalForm(benchmark::State& state) {
  const auto a = identity_minus(random_matrix(static_cast<std::size_t>(state.range(0)), 2));
  for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(a));
}
BENCHMARK(BM_SmithNormalForm)->Arg(4)->Arg(10)->Arg(20);

static void BM_Check(benchmark::State& state) {
  const auto graphs = sample_graphs(256);
  const auto detail = state.range(0) ? ReportDetail::Full : ReportDetail::Summary;
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(check(graphs[i++ % graphs.size()], Target::S2xS1, detail));
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()));
}
BENCHMARK(BM_Check)->Arg(0)->Arg(1);

static void BM_Enumerate(benchmark::State& state) {
  EnumerationBounds b;
  b.max_vertices = 3;
  b.max_weight = 2;
  b.max_parallel_edges = 2;
  b.label_pool = default_label_pool();
  for (auto _ : state) {
    std::uint64_t n = 0;
    enumerate_graphs(b, [&](const LyapunovGraph&) { ++n; });
    benchmark::DoNotOptimize(n);
    state.SetItemsProcessed(state.items_processed() + static_cast<std::int64_t>(n));
  }
}
BENCHMARK(BM_Enumerate);

static void BM_RoundTrip(benchmark::State& state) {
  const auto graphs = sample_graphs(256);
  const bool json = state.range(0) != 0;
  std::size_t i = 0;
  for (auto _ : state) {
    const auto& g = graphs[i++ % graphs.size()];
    benchmark::DoNotOptimize(json ? parse_json(render_json(g)) : parse_dsl(render_dsl(g)));
  }
}
BENCHMARK(BM_RoundTrip)->Arg(0)->Arg(1);

BENCHMARK_MAIN();
