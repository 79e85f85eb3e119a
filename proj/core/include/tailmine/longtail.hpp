#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "tailmine/indicators.hpp"

namespace tailmine {

// Per-indicator min-max normalized table. Constant raw columns map to all
// zeros with the flag set, so a degenerate indicator cannot inflate scores.
struct NormalizedTable {
    std::vector<std::array<double, 9>> rows;  // cluster-id order, values in [0,1]
    std::array<double, 9> column_min{};
    std::array<double, 9> column_max{};
    std::array<bool, 9> constant_column{};
};

enum class Segment { ShortHead, LongTail };

struct LongTailRow {
    std::uint32_t cluster_id = 0;
    double score = 0.0;  // in [0,1]
    std::size_t rank = 0;  // 1 = highest score
    Segment segment = Segment::LongTail;
};

struct LongTailReport {
    double pareto_fraction = 0.2;
    std::size_t n_clusters = 0;
    std::size_t head_size = 0;  // ceil(pareto_fraction * n)
    std::vector<LongTailRow> rows;  // sorted by rank: the score curve
};

struct IndicatorContribution {
    double head_share = 0.0;  // percent of the indicator's normalized mass
    double tail_share = 0.0;
    bool degenerate = false;  // zero total mass; shares fall back to cluster counts
};

struct ContributionReport {
    std::array<IndicatorContribution, 9> per_indicator;
    IndicatorContribution aggregate;  // across all nine indicators
};

// Plot-ready per-indicator curves: each indicator's normalized values sorted
// descending (independently), plus the aggregate-score curve.
struct DistributionPoint {
    std::size_t rank = 0;  // 1-based
    std::uint32_t cluster_id = 0;
    double value = 0.0;
};
struct DistributionTables {
    std::array<std::vector<DistributionPoint>, 9> per_indicator;
    std::vector<DistributionPoint> aggregate;
};

// Min-max scaling per indicator column. A single-row table normalizes to all
// zeros with every flag set.
NormalizedTable normalize(const IndicatorTable& table);

// Quadratic mean of the nine normalized values, optionally weighted
// (score = sqrt(sum w_k v_k^2 / sum w_k)). Defaults to equal weights.
double aggregate_score(const std::array<double, 9>& values);
double aggregate_score(const std::array<double, 9>& values, const std::array<double, 9>& weights);

// Sorts by score descending (ties by smaller cluster id), labels the top
// ceil(fraction * n) clusters as the short head. Throws AnalysisError for a
// fraction outside (0,1).
LongTailReport rank_and_split(const NormalizedTable& nt, double pareto_fraction);
LongTailReport rank_and_split(const NormalizedTable& nt, double pareto_fraction,
                              const std::array<double, 9>& weights);

// head_share_k = 100 * head mass / total mass per indicator; zero-mass columns
// fall back to the head's share of clusters and are flagged.
ContributionReport contribution_analysis(const NormalizedTable& nt, const LongTailReport& report);

DistributionTables distribution_export(const NormalizedTable& nt, const LongTailReport& report);

const char* to_string(Segment s);

} // namespace tailmine
