#pragma once

#include <array>
#include <optional>
#include <string>

#include "tailmine/contact_rule.hpp"
#include "tailmine/csv_log.hpp"
#include "tailmine/duration.hpp"
#include "tailmine/ngram.hpp"
#include "tailmine/preprocess.hpp"

namespace tailmine {

struct PipelineConfig {
    std::string input_path;
    std::string format = "xes";  // "xes" | "csv"
    ColumnMap column_map = canonical_column_map();
    CustomerContactRule contact_rule;  // applied regardless of input format
    PreprocessSpec preprocess;
    NGramConfig ngram;
    std::optional<std::size_t> k;  // required for clustering stages
    std::optional<std::pair<std::size_t, std::size_t>> k_sweep;  // validity sweep range
    double pareto_fraction = 0.2;
    DurationMode duration_mode = DurationMode::NextEvent;
    std::string cost_table_path;  // CSV resource,cost; empty = inverse-count scores
    std::array<double, 9> indicator_weights = {1, 1, 1, 1, 1, 1, 1, 1, 1};
    std::string out_dir = "out";
    bool strict = false;
    bool dump_features = false;   // write features.csv (debugging)
    bool dump_distances = false;  // write distances.csv (debugging, O(n^2))
    unsigned threads = 0;  // 0 = all cores
    std::uint64_t seed = 42;  // synth subcommand only; echoed for reproducibility

    void validate_for_analysis() const;
};

// Reads a JSON config file into a PipelineConfig (missing keys keep defaults).
PipelineConfig load_pipeline_config(const std::string& path);
// The fully resolved configuration as JSON, echoed so every run is self-describing.
std::string pipeline_config_to_json(const PipelineConfig& cfg);

struct PipelineSummary {
    std::size_t cases = 0;
    std::size_t events = 0;
    std::size_t k = 0;
    std::size_t head_size = 0;
    double aggregate_head_share = 0.0;
    double aggregate_tail_share = 0.0;
    std::vector<std::string> written_files;
};

// Which stages to run. Analyze is the full pipeline; the others stop early.
enum class PipelineMode { Stats, Cluster, Sweep, Analyze };

// parse -> preprocess -> stats -> vectorize -> ward -> cut(k) -> indicators ->
// normalize -> rank/split -> contribution -> distribution export. Writes all
// artifacts under cfg.out_dir. On a stage failure every file written by this
// run is removed and a StageError is thrown naming the stage.
PipelineSummary run_pipeline(const PipelineConfig& cfg, PipelineMode mode = PipelineMode::Analyze);

} // namespace tailmine
