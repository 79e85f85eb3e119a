#pragma once

#include <string>
#include <vector>

#include "tailmine/duration.hpp"
#include "tailmine/event_log.hpp"

namespace tailmine {

// Descriptive log statistics, sorted descending for plot-ready output
// (ties broken by label so runs are deterministic).
struct StatsReport {
    std::size_t case_count = 0;
    std::size_t event_count = 0;
    std::size_t min_trace_length = 0;
    std::size_t max_trace_length = 0;
    std::vector<std::pair<std::string, std::size_t>> activity_counts;
    std::vector<std::pair<std::string, double>> activity_mean_duration_s;
    std::vector<std::pair<std::string, std::size_t>> resource_involvements;
};

// Throws AnalysisError on an empty log.
StatsReport descriptive_stats(const EventLog& log, DurationMode mode);

} // namespace tailmine
