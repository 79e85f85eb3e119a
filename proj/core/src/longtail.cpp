#include "tailmine/longtail.hpp"

#include <algorithm>
#include <cmath>

#include "tailmine/errors.hpp"

namespace tailmine {

NormalizedTable normalize(const IndicatorTable& table) {
    if (table.rows.empty()) throw AnalysisError("normalize: empty indicator table");

    NormalizedTable nt;
    nt.rows.resize(table.rows.size());

    for (std::size_t k = 0; k < 9; ++k) {
        double lo = table.rows[0].as_array()[k];
        double hi = lo;
        for (const auto& row : table.rows) {
            double v = row.as_array()[k];
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
        nt.column_min[k] = lo;
        nt.column_max[k] = hi;
        nt.constant_column[k] = (hi == lo);
        for (std::size_t r = 0; r < table.rows.size(); ++r) {
            double v = table.rows[r].as_array()[k];
            nt.rows[r][k] = nt.constant_column[k] ? 0.0 : (v - lo) / (hi - lo);
        }
    }
    return nt;
}

double aggregate_score(const std::array<double, 9>& values) {
    return aggregate_score(values, {1, 1, 1, 1, 1, 1, 1, 1, 1});
}

double aggregate_score(const std::array<double, 9>& values, const std::array<double, 9>& weights) {
    double num = 0.0, den = 0.0;
    for (std::size_t k = 0; k < 9; ++k) {
        if (weights[k] < 0.0) throw ConfigError("indicator weights must be non-negative");
        num += weights[k] * values[k] * values[k];
        den += weights[k];
    }
    if (den <= 0.0) throw ConfigError("indicator weights must not all be zero");
    return std::sqrt(num / den);
}

LongTailReport rank_and_split(const NormalizedTable& nt, double pareto_fraction) {
    return rank_and_split(nt, pareto_fraction, {1, 1, 1, 1, 1, 1, 1, 1, 1});
}

LongTailReport rank_and_split(const NormalizedTable& nt, double pareto_fraction,
                              const std::array<double, 9>& weights) {
    if (!(pareto_fraction > 0.0 && pareto_fraction < 1.0))
        throw AnalysisError("rank_and_split: pareto fraction must be in (0,1)");
    const std::size_t n = nt.rows.size();
    if (n == 0) throw AnalysisError("rank_and_split: empty table");

    LongTailReport report;
    report.pareto_fraction = pareto_fraction;
    report.n_clusters = n;
    report.head_size = static_cast<std::size_t>(
        std::ceil(pareto_fraction * static_cast<double>(n)));

    report.rows.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        LongTailRow row;
        row.cluster_id = static_cast<std::uint32_t>(i);
        row.score = aggregate_score(nt.rows[i], weights);
        report.rows.push_back(row);
    }
    std::sort(report.rows.begin(), report.rows.end(), [](const LongTailRow& a, const LongTailRow& b) {
        if (a.score != b.score) return a.score > b.score;
        return a.cluster_id < b.cluster_id;
    });
    for (std::size_t i = 0; i < n; ++i) {
        report.rows[i].rank = i + 1;
        report.rows[i].segment = i < report.head_size ? Segment::ShortHead : Segment::LongTail;
    }
    return report;
}

ContributionReport contribution_analysis(const NormalizedTable& nt, const LongTailReport& report) {
    if (report.rows.size() != nt.rows.size())
        throw AnalysisError("contribution_analysis: report does not match table");

    std::vector<bool> in_head(nt.rows.size(), false);
    for (const auto& row : report.rows)
        if (row.segment == Segment::ShortHead) in_head[row.cluster_id] = true;

    const double cluster_fallback =
        100.0 * static_cast<double>(report.head_size) / static_cast<double>(report.n_clusters);

    ContributionReport out;
    double head_all = 0.0, total_all = 0.0;
    for (std::size_t k = 0; k < 9; ++k) {
        double head = 0.0, total = 0.0;
        for (std::size_t i = 0; i < nt.rows.size(); ++i) {
            total += nt.rows[i][k];
            if (in_head[i]) head += nt.rows[i][k];
        }
        head_all += head;
        total_all += total;
        IndicatorContribution& c = out.per_indicator[k];
        if (total <= 0.0) {
            c.degenerate = true;
            c.head_share = cluster_fallback;
        } else {
            c.head_share = 100.0 * head / total;
        }
        c.tail_share = 100.0 - c.head_share;
    }
    if (total_all <= 0.0) {
        out.aggregate.degenerate = true;
        out.aggregate.head_share = cluster_fallback;
    } else {
        out.aggregate.head_share = 100.0 * head_all / total_all;
    }
    out.aggregate.tail_share = 100.0 - out.aggregate.head_share;
    return out;
}

DistributionTables distribution_export(const NormalizedTable& nt, const LongTailReport& report) {
    DistributionTables dt;
    const std::size_t n = nt.rows.size();

    for (std::size_t k = 0; k < 9; ++k) {
        auto& curve = dt.per_indicator[k];
        curve.reserve(n);
        for (std::size_t i = 0; i < n; ++i)
            curve.push_back({0, static_cast<std::uint32_t>(i), nt.rows[i][k]});
        std::sort(curve.begin(), curve.end(), [](const DistributionPoint& a, const DistributionPoint& b) {
            if (a.value != b.value) return a.value > b.value;
            return a.cluster_id < b.cluster_id;
        });
        for (std::size_t i = 0; i < n; ++i) curve[i].rank = i + 1;
    }

    dt.aggregate.reserve(n);
    for (const auto& row : report.rows)  // already sorted by rank
        dt.aggregate.push_back({row.rank, row.cluster_id, row.score});
    return dt;
}

const char* to_string(Segment s) {
    return s == Segment::ShortHead ? "SHORT_HEAD" : "LONG_TAIL";
}

} // namespace tailmine
