#include <benchmark/benchmark.h>

#include "socsim/fixture.hpp"
#include "socsim/simulator.hpp"

using namespace socsim;

namespace {

InteractionLog bench_log(int entities) {
    fixture::Options opts;
    opts.entities = entities;
    opts.windows = 3;
    opts.seed = 13;
    return fixture::generate(opts);
}

} // namespace

static void BM_DeriveRelations(benchmark::State& state) {
    auto log = bench_log(static_cast<int>(state.range(0)));
    RelationConfig cfg;
    const Timestamp now = 1600000000 + 3 * 604800;
    for (auto _ : state) {
        auto g = derive_relations(log.events(), cfg, now);
        benchmark::DoNotOptimize(g);
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(log.size()));
}
BENCHMARK(BM_DeriveRelations)->Range(128, 1024);

static void BM_Snapshot(benchmark::State& state) {
    auto log = bench_log(static_cast<int>(state.range(0)));
    SnapshotConfig cfg;
    const Timestamp t = 1600000000 + 3 * 604800;
    for (auto _ : state) {
        auto s = snapshot(log, t, cfg);
        benchmark::DoNotOptimize(s);
    }
}
BENCHMARK(BM_Snapshot)->Range(128, 512);

static void BM_SimStep(benchmark::State& state) {
    auto log = bench_log(static_cast<int>(state.range(0)));
    SimConfig cfg;
    cfg.steps = 1;
    cfg.seed = 5;
    cfg.arrival_rate = 5.0;
    const Timestamp t0 = 1600000000 + 3 * 604800;

    ArrivalModel arrivals;
    SimWorld prototype = init_world(log, t0, cfg, &arrivals);
    Rng rng(cfg.seed);
    for (auto _ : state) {
        SimWorld world = prototype;
        step(world, cfg, arrivals, rng);
        benchmark::DoNotOptimize(world);
    }
}
BENCHMARK(BM_SimStep)->Range(128, 1024);
