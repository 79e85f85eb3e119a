#include <benchmark/benchmark.h>

#include "tailmine/synth.hpp"
#include "tailmine/validity.hpp"
#include "tailmine/ward.hpp"

using namespace tailmine;

static void BM_WardCluster(benchmark::State& state) {
    SynthSpec spec;
    spec.total_cases = static_cast<std::size_t>(state.range(0));
    spec.variant_templates = 30;
    spec.min_template_length = 5;
    spec.max_template_length = 20;
    auto log = generate_synthetic_log(spec).log;
    auto fm = build_vector_space(log, NGramConfig{});
    for (auto _ : state) {
        auto dg = ward_cluster(fm);
        benchmark::DoNotOptimize(dg.merges.data());
    }
}
BENCHMARK(BM_WardCluster)->Arg(200)->Arg(600)->Arg(1200)->Unit(benchmark::kMillisecond);

static void BM_ValiditySweep(benchmark::State& state) {
    SynthSpec spec;
    spec.total_cases = 300;
    spec.variant_templates = 20;
    auto log = generate_synthetic_log(spec).log;
    auto fm = build_vector_space(log, NGramConfig{});
    auto dg = ward_cluster(fm);
    std::vector<std::size_t> ks;
    for (std::size_t k = 2; k <= 40; k += 2) ks.push_back(k);
    for (auto _ : state) {
        auto report = validity_sweep(fm, dg, ks, 1);
        benchmark::DoNotOptimize(report.rows.data());
    }
}
BENCHMARK(BM_ValiditySweep)->Unit(benchmark::kMillisecond);

