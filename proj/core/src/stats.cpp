#include "tailmine/stats.hpp"

#include <algorithm>
#include <map>

#include "tailmine/errors.hpp"

namespace tailmine {

namespace {

template <typename V>
std::vector<std::pair<std::string, V>> sorted_desc(const std::map<std::string, V>& m) {
    std::vector<std::pair<std::string, V>> v(m.begin(), m.end());
    std::stable_sort(v.begin(), v.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second) return a.second > b.second;
        return a.first < b.first;
    });
    return v;
}

} // namespace

StatsReport descriptive_stats(const EventLog& log, DurationMode mode) {
    if (log.cases.empty()) throw AnalysisError("descriptive_stats: empty log");

    StatsReport r;
    r.case_count = log.case_count();
    r.min_trace_length = SIZE_MAX;

    std::map<std::string, std::size_t> act_counts;
    std::map<std::string, double> act_duration_sum;
    std::map<std::string, std::size_t> res_counts;

    for (const auto& c : log.cases) {
        r.event_count += c.events.size();
        r.min_trace_length = std::min(r.min_trace_length, c.events.size());
        r.max_trace_length = std::max(r.max_trace_length, c.events.size());
        for (const auto& e : c.events) {
            ++act_counts[e.activity];
            ++res_counts[e.resource];
        }
        for (const auto& d : extract_event_durations(c, mode))
            act_duration_sum[d.activity] += d.seconds;
    }

    std::map<std::string, double> act_mean;
    for (const auto& [a, sum] : act_duration_sum)
        act_mean[a] = sum / static_cast<double>(act_counts[a]);

    r.activity_counts = sorted_desc(act_counts);
    r.activity_mean_duration_s = sorted_desc(act_mean);
    r.resource_involvements = sorted_desc(res_counts);
    return r;
}

} // namespace tailmine
