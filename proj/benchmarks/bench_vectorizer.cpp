#include <benchmark/benchmark.h>

#include "tailmine/distance.hpp"
#include "tailmine/synth.hpp"

using namespace tailmine;

namespace {

EventLog bench_log(std::size_t cases, std::size_t variants) {
    SynthSpec spec;
    spec.total_cases = cases;
    spec.variant_templates = variants;
    spec.min_template_length = 5;
    spec.max_template_length = 20;
    return generate_synthetic_log(spec).log;
}

} // namespace

static void BM_BuildVectorSpace(benchmark::State& state) {
    auto log = bench_log(static_cast<std::size_t>(state.range(0)), 30);
    NGramConfig cfg;
    for (auto _ : state) {
        auto fm = build_vector_space(log, cfg);
        benchmark::DoNotOptimize(fm.rows.data());
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(log.event_count()));
}
BENCHMARK(BM_BuildVectorSpace)->Arg(200)->Arg(1000)->Arg(4000);

static void BM_DistanceMatrix(benchmark::State& state) {
    auto log = bench_log(static_cast<std::size_t>(state.range(0)), 30);
    auto fm = build_vector_space(log, NGramConfig{});
    for (auto _ : state) {
        auto dm = distance_matrix(fm, 1);
        benchmark::DoNotOptimize(dm.condensed.data());
    }
}
BENCHMARK(BM_DistanceMatrix)->Arg(200)->Arg(600);

