// Serial reference vs OpenMP kernels on random connected networks.
//   ./bench/bench_kernels --benchmark_filter=Betweenness

#include <benchmark/benchmark.h>

#include <random>

#include "gridcomm/kernels.hpp"
#include "support.hpp"

namespace {

gridcomm::SimpleGraph make_graph(int nodes) {
    std::mt19937 rng(static_cast<unsigned>(nodes));
    gridcomm::testing::RandomNetworkOptions opt;
    opt.min_nodes = opt.max_nodes = nodes;
    opt.extra_edge_factor = 0.4;  // sparse, roughly utility-like
    return gridcomm::SimpleGraph(gridcomm::testing::random_network(rng, opt));
}

void BM_BetweennessSerial(benchmark::State& state) {
    const auto g = make_graph(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(gridcomm::kernels::serial::edge_betweenness(g));
}

void BM_BetweennessParallel(benchmark::State& state) {
    const auto g = make_graph(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(gridcomm::kernels::parallel::edge_betweenness(g));
}

std::vector<int> every_kth(int n, int k) {
    std::vector<int> out;
    for (int i = 0; i < n; i += k) out.push_back(i);
    return out;
}

void BM_MinHopsSerial(benchmark::State& state) {
    const auto n = static_cast<int>(state.range(0));
    const auto g = make_graph(n);
    const auto sources = every_kth(n, 16);
    for (auto _ : state) benchmark::DoNotOptimize(gridcomm::kernels::serial::min_hops(g, sources));
}

void BM_MinHopsParallel(benchmark::State& state) {
    const auto n = static_cast<int>(state.range(0));
    const auto g = make_graph(n);
    const auto sources = every_kth(n, 16);
    for (auto _ : state) benchmark::DoNotOptimize(gridcomm::kernels::parallel::min_hops(g, sources));
}

}  // namespace

BENCHMARK(BM_BetweennessSerial)->Arg(333)->Arg(1000)->Arg(3000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BetweennessParallel)->Arg(333)->Arg(1000)->Arg(3000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MinHopsSerial)->Arg(1000)->Arg(10000)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_MinHopsParallel)->Arg(1000)->Arg(10000)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
