#include <benchmark/benchmark.h>

#include "tailmine/indicators.hpp"
#include "tailmine/synth.hpp"
#include "tailmine/ward.hpp"

using namespace tailmine;

static void BM_IndicatorTable(benchmark::State& state) {
    SynthSpec spec;
    spec.total_cases = static_cast<std::size_t>(state.range(0));
    spec.variant_templates = 25;
    auto synth = generate_synthetic_log(spec);
    auto fm = build_vector_space(synth.log, NGramConfig{});
    auto assignment = cut_dendrogram(ward_cluster(fm), 25);
    auto registry = ResourceRegistry::build(synth.log);
    auto ctx = ContextIndex::build(synth.log);
    for (auto _ : state) {
        auto table = compute_indicator_table(synth.log, assignment, registry, ctx,
                                             DurationMode::NextEvent, 1);
        benchmark::DoNotOptimize(table.rows.data());
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(synth.log.event_count()));
}
BENCHMARK(BM_IndicatorTable)->Arg(500)->Arg(2000)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
