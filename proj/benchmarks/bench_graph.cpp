#include <benchmark/benchmark.h>

#include "socsim/communities.hpp"
#include "socsim/linkpred.hpp"
#include "socsim/rng.hpp"
#include "socsim/sna.hpp"

using namespace socsim;

namespace {

RelationGraph bench_graph(int n, double avg_degree) {
    Rng rng(7);
    RelationGraph g;
    auto name = [](int i) {
        char buf[16];
        std::snprintf(buf, sizeof buf, "n%05d", i);
        return std::string(buf);
    };
    for (int i = 0; i < n; ++i) g.add_node(name(i));
    const double p = avg_degree / n;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j || rng.uniform01() >= p) continue;
            RelationEdge e;
            e.initiator = name(i);
            e.receiver = name(j);
            e.strength = 0.5;
            g.add_edge(std::move(e));
        }
    return g;
}

} // namespace

static void BM_Betweenness(benchmark::State& state) {
    auto g = bench_graph(static_cast<int>(state.range(0)), 8.0);
    for (auto _ : state) {
        auto values = betweenness(g, PathMode::Symmetrized);
        benchmark::DoNotOptimize(values);
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Betweenness)->Range(64, 1024)->Complexity();

static void BM_Closeness(benchmark::State& state) {
    auto g = bench_graph(static_cast<int>(state.range(0)), 8.0);
    for (auto _ : state) {
        auto values = closeness(g, PathMode::Symmetrized);
        benchmark::DoNotOptimize(values);
    }
}
BENCHMARK(BM_Closeness)->Range(64, 1024);

static void BM_Pagerank(benchmark::State& state) {
    auto g = bench_graph(static_cast<int>(state.range(0)), 8.0);
    for (auto _ : state) {
        auto values = pagerank(g);
        benchmark::DoNotOptimize(values);
    }
}
BENCHMARK(BM_Pagerank)->Range(256, 4096);

static void BM_CpmCommunities(benchmark::State& state) {
    auto g = bench_graph(static_cast<int>(state.range(0)), 10.0);
    for (auto _ : state) {
        auto groups = cpm_communities(g, 3);
        benchmark::DoNotOptimize(groups);
    }
}
BENCHMARK(BM_CpmCommunities)->Range(64, 1024);

static void BM_PredictTopk(benchmark::State& state) {
    auto g = bench_graph(static_cast<int>(state.range(0)), 8.0);
    for (auto _ : state) {
        auto ranked = predict_topk(g, LinkModel::AdamicAdar, 50);
        benchmark::DoNotOptimize(ranked);
    }
}
BENCHMARK(BM_PredictTopk)->Range(128, 1024);
