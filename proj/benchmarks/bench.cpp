#include <benchmark/benchmark.h>

#include <cmath>

#include "georec/graph_reconstruct.hpp"
#include "georec/harness.hpp"
#include "georec/instance.hpp"
#include "georec/order_reconstruct.hpp"

using namespace georec;

static void BM_BuildGraph(benchmark::State& state) {
    const std::int64_t n = state.range(0);
    const double r = 2.0 * std::sqrt(std::log((double)n));
    Embedding psi = sample_embedding(n, 1);
    for (auto _ : state) {
        auto g = build_graph(psi, r);
        benchmark::DoNotOptimize(g.m);
    }
}
BENCHMARK(BM_BuildGraph)->Arg(1000)->Arg(10000)->Arg(100000);

static void BM_BallSquareArea(benchmark::State& state) {
    SquareDomain d(10000);
    double x = -49.0;
    for (auto _ : state) {
        x += 0.1;
        if (x > 49) x = -49;
        benchmark::DoNotOptimize(ball_square_area(d, Point{x, x / 3}, 7.0));
    }
}
BENCHMARK(BM_BallSquareArea);

static void BM_BfsDistances(benchmark::State& state) {
    const std::int64_t n = state.range(0);
    const double r = 2.0 * std::sqrt(std::log((double)n));
    auto g = build_graph(sample_embedding(n, 2), r);
    for (auto _ : state) {
        auto d = bfs_distances(g, 0);
        benchmark::DoNotOptimize(d[n - 1]);
    }
}
BENCHMARK(BM_BfsDistances)->Arg(10000)->Arg(100000);

static void BM_ReconstructGraph(benchmark::State& state) {
    const std::int64_t n = state.range(0);
    const double r = 2.0 * std::sqrt(std::log((double)n));
    auto g = build_graph(sample_embedding(n, 3), r);
    for (auto _ : state) {
        auto rec = reconstruct_from_graph(g);
        benchmark::DoNotOptimize(rec.phi.points.back().x);
    }
}
BENCHMARK(BM_ReconstructGraph)->Arg(1000)->Arg(10000);

static void BM_ReconstructOrders(benchmark::State& state) {
    const std::int64_t n = state.range(0);
    Embedding psi = sample_embedding(n, 4);
    auto oracle = build_ordering_oracle(psi);
    for (auto _ : state) {
        auto rec = reconstruct_from_orders(oracle, PlacementParams{});
        benchmark::DoNotOptimize(rec.phi.points.back().x);
    }
}
BENCHMARK(BM_ReconstructOrders)->Arg(1000)->Arg(4000);

BENCHMARK_MAIN();
