#pragma once

#include <array>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "tailmine/duration.hpp"
#include "tailmine/event_log.hpp"
#include "tailmine/ward.hpp"

namespace tailmine {

// Log-wide execution counts per resource, plus optional per-resource cost.
// Built once over the whole log and shared by all clusters. When a cost table
// is supplied it must cover every resource in the log; mixing priced and
// inverse-count scores would make the utilization values incomparable.
struct ResourceRegistry {
    std::map<std::string, std::size_t> executions;  // >= 1 per entry
    std::map<std::string, double> costs;            // empty unless configured

    static ResourceRegistry build(const EventLog& log);
    static ResourceRegistry build(const EventLog& log, const std::map<std::string, double>& costs);

    // RR(resource): cost if configured, else 1 / log-wide execution count.
    double resource_score(const std::string& resource) const;
    bool has_costs() const { return !costs.empty(); }
};

// Distinct (predecessor, successor) contexts per activity label across the
// whole log, with start/end sentinels at trace boundaries.
struct ContextIndex {
    std::map<std::string, std::set<std::pair<std::string, std::string>>> contexts;

    static ContextIndex build(const EventLog& log);
    std::size_t context_count(const std::string& activity) const;  // NC, >= 1
};

// The nine per-variant values. Units: ef cases; ru dimensionless (or currency
// per activity when costs are configured); cc fraction; av and etv seconds^2;
// er count; sac, s, l dimensionless.
struct IndicatorVector {
    double ef = 0, ru = 0, cc = 0, av = 0, etv = 0, er = 0, sac = 0, s = 0, l = 0;

    std::array<double, 9> as_array() const { return {ef, ru, cc, av, etv, er, sac, s, l}; }
    // Range checks (cc in [0,1]; sac,s,l in (0,1]; all finite, >= 0).
    void validate() const;
};

constexpr std::array<const char*, 9> kIndicatorNames = {"ef",  "ru", "cc", "av", "etv",
                                                        "er", "sac", "s",  "l"};

struct IndicatorTable {
    std::vector<IndicatorVector> rows;  // indexed by cluster id
};

// A cluster is a list of cases (borrowed from the log).
using ClusterView = std::vector<const Case*>;

// Eq-by-eq operations. All throw AnalysisError on an empty cluster.
double execution_frequency(const ClusterView& cluster);
double resource_utilization(const ClusterView& cluster, const ResourceRegistry& registry);
double customer_contacts(const ClusterView& cluster);
double activity_duration_variance(const ClusterView& cluster, DurationMode mode);
double execution_time_variance(const ClusterView& cluster, DurationMode mode);
double execution_redundancies(const ClusterView& cluster);
double shared_activity_contexts(const ClusterView& cluster, const ContextIndex& ctx);
double stakeholder_involvement(const ClusterView& cluster);
double process_length(const ClusterView& cluster);

// Kernel behind activity_duration_variance: mean squared deviation from the
// per-activity minimum duration, over the given (activity, seconds) samples.
double duration_variance_from_min(const std::vector<EventDuration>& durations);

// One IndicatorVector per cluster. Registry and context index are built once
// over the whole log. Throws AnalysisError when the assignment does not match
// the log or a computed row violates its range invariants.
IndicatorTable compute_indicator_table(const EventLog& log, const ClusterAssignment& assignment,
                                       const ResourceRegistry& registry, const ContextIndex& ctx,
                                       DurationMode mode, unsigned threads = 0);

} // namespace tailmine
