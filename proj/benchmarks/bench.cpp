#include <benchmark/benchmark.h>

#include "sssst/compiler.hpp"
#include "sssst/oracle.hpp"
#include "sssst/verifier.hpp"

using namespace sssst;

static const Tileset& tileset() {
    static const Tileset ts = generate();
    return ts;
}

static void BM_Generate(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(generate());
}
BENCHMARK(BM_Generate)->Unit(benchmark::kMillisecond);

static void BM_RunStage(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    std::uint64_t seed = 0;
    std::size_t events = 0;
    for (auto _ : state) {
        const Trace t = run(tileset(), StopPolicy::stage_complete(n), ++seed);
        events += t.events.size();
    }
    state.counters["events/s"] = benchmark::Counter(static_cast<double>(events), benchmark::Counter::kIsRate);
}
BENCHMARK(BM_RunStage)->Arg(2)->Arg(4)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

static void BM_OracleGrid(benchmark::State& state) {
    const Prefix s(static_cast<std::size_t>(state.range(0)), 2);
    for (auto _ : state) benchmark::DoNotOptimize(stage_grid(s));
}
BENCHMARK(BM_OracleGrid)->Arg(6)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);

static void BM_DeterminismAudit(benchmark::State& state) {
    const Trace t = run(tileset(), StopPolicy::stage_complete(static_cast<int>(state.range(0))), 1);
    std::set<Loc> excluded;
    for (const auto& d : decision_locations(t, tileset())) excluded.insert(d.loc);
    for (auto _ : state) benchmark::DoNotOptimize(check_local_determinism(t, tileset(), excluded));
}
BENCHMARK(BM_DeterminismAudit)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
