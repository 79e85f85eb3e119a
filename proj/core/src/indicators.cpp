#include "tailmine/indicators.hpp"

#include <cmath>
#include <unordered_map>

#include "tailmine/errors.hpp"
#include "tailmine/parallel.hpp"

namespace tailmine {

namespace {

void require_nonempty(const ClusterView& cluster, const char* op) {
    if (cluster.empty()) throw AnalysisError(std::string(op) + ": empty cluster");
}

std::size_t total_events(const ClusterView& cluster) {
    std::size_t n = 0;
    for (const Case* c : cluster) n += c->events.size();
    return n;
}

} // namespace

ResourceRegistry ResourceRegistry::build(const EventLog& log) {
    ResourceRegistry r;
    for (const auto& c : log.cases)
        for (const auto& e : c.events) ++r.executions[e.resource];
    return r;
}

ResourceRegistry ResourceRegistry::build(const EventLog& log,
                                         const std::map<std::string, double>& costs) {
    ResourceRegistry r = build(log);
    if (!costs.empty()) {
        for (const auto& [res, count] : r.executions) {
            (void)count;
            if (!costs.count(res))
                throw ConfigError("cost table missing resource '" + res + "'");
        }
        r.costs = costs;
    }
    return r;
}

double ResourceRegistry::resource_score(const std::string& resource) const {
    if (!costs.empty()) {
        auto it = costs.find(resource);
        if (it == costs.end())
            throw AnalysisError("resource '" + resource + "' missing from cost table");
        return it->second;
    }
    auto it = executions.find(resource);
    if (it == executions.end())
        throw AnalysisError("resource '" + resource + "' missing from registry");
    return 1.0 / static_cast<double>(it->second);
}

ContextIndex ContextIndex::build(const EventLog& log) {
    ContextIndex idx;
    for (const auto& c : log.cases) {
        for (std::size_t i = 0; i < c.events.size(); ++i) {
            const std::string& pred =
                i == 0 ? kStartSentinel : c.events[i - 1].activity;
            const std::string& succ =
                i + 1 == c.events.size() ? kEndSentinel : c.events[i + 1].activity;
            idx.contexts[c.events[i].activity].emplace(pred, succ);
        }
    }
    return idx;
}

std::size_t ContextIndex::context_count(const std::string& activity) const {
    auto it = contexts.find(activity);
    if (it == contexts.end())
        throw AnalysisError("activity '" + activity + "' missing from context index");
    return it->second.size();
}

void IndicatorVector::validate() const {
    auto finite_nonneg = [](double v) { return std::isfinite(v) && v >= 0.0; };
    for (double v : as_array())
        if (!finite_nonneg(v)) throw AnalysisError("indicator value not finite and non-negative");
    if (cc > 1.0) throw AnalysisError("cc outside [0,1]");
    if (sac <= 0.0 || sac > 1.0) throw AnalysisError("sac outside (0,1]");
    if (s <= 0.0 || s > 1.0) throw AnalysisError("s outside (0,1]");
    if (l <= 0.0 || l > 1.0) throw AnalysisError("l outside (0,1]");
}

double execution_frequency(const ClusterView& cluster) {
    require_nonempty(cluster, "execution_frequency");
    return static_cast<double>(cluster.size());
}

double resource_utilization(const ClusterView& cluster, const ResourceRegistry& registry) {
    require_nonempty(cluster, "resource_utilization");
    double sum = 0.0;
    for (const Case* c : cluster)
        for (const auto& e : c->events) sum += registry.resource_score(e.resource);
    return sum / static_cast<double>(total_events(cluster));
}

double customer_contacts(const ClusterView& cluster) {
    require_nonempty(cluster, "customer_contacts");
    std::size_t flagged = 0;
    for (const Case* c : cluster)
        for (const auto& e : c->events)
            if (e.customer_contact) ++flagged;
    return static_cast<double>(flagged) / static_cast<double>(total_events(cluster));
}

double duration_variance_from_min(const std::vector<EventDuration>& durations) {
    if (durations.empty()) throw AnalysisError("duration_variance_from_min: no samples");
    std::unordered_map<std::string, double> min_by_activity;
    for (const auto& d : durations) {
        auto [it, inserted] = min_by_activity.emplace(d.activity, d.seconds);
        if (!inserted && d.seconds < it->second) it->second = d.seconds;
    }
    double sum = 0.0;
    for (const auto& d : durations) {
        double dev = d.seconds - min_by_activity[d.activity];
        sum += dev * dev;
    }
    return sum / static_cast<double>(durations.size());
}

double activity_duration_variance(const ClusterView& cluster, DurationMode mode) {
    require_nonempty(cluster, "activity_duration_variance");
    std::vector<EventDuration> all;
    all.reserve(total_events(cluster));
    for (const Case* c : cluster) {
        auto ds = extract_event_durations(*c, mode);
        all.insert(all.end(), ds.begin(), ds.end());
    }
    return duration_variance_from_min(all);
}

double execution_time_variance(const ClusterView& cluster, DurationMode /*mode*/) {
    require_nonempty(cluster, "execution_time_variance");
    // Case duration is the wall-clock span, independent of the per-event mode.
    double mean = 0.0;
    for (const Case* c : cluster) mean += case_duration_seconds(*c);
    mean /= static_cast<double>(cluster.size());
    double var = 0.0;
    for (const Case* c : cluster) {
        double d = case_duration_seconds(*c) - mean;
        var += d * d;
    }
    return var / static_cast<double>(cluster.size());
}

double execution_redundancies(const ClusterView& cluster) {
    require_nonempty(cluster, "execution_redundancies");
    double total = 0.0;
    std::map<std::pair<std::string, std::string>, int> pair_count;
    for (const Case* c : cluster) {
        pair_count.clear();
        for (std::size_t i = 0; i + 1 < c->events.size(); ++i)
            ++pair_count[{c->events[i].activity, c->events[i + 1].activity}];
        for (const auto& [p, count] : pair_count) {
            (void)p;
            if (count >= 2) total += 1.0;
        }
    }
    return total;
}

double shared_activity_contexts(const ClusterView& cluster, const ContextIndex& ctx) {
    require_nonempty(cluster, "shared_activity_contexts");
    double nc_sum = 0.0;
    for (const Case* c : cluster)
        for (const auto& e : c->events)
            nc_sum += static_cast<double>(ctx.context_count(e.activity));
    return static_cast<double>(total_events(cluster)) / nc_sum;
}

double stakeholder_involvement(const ClusterView& cluster) {
    require_nonempty(cluster, "stakeholder_involvement");
    std::set<std::string> resources;
    for (const Case* c : cluster)
        for (const auto& e : c->events) resources.insert(e.resource);
    return 1.0 / static_cast<double>(resources.size());
}

double process_length(const ClusterView& cluster) {
    require_nonempty(cluster, "process_length");
    return static_cast<double>(cluster.size()) / static_cast<double>(total_events(cluster));
}

IndicatorTable compute_indicator_table(const EventLog& log, const ClusterAssignment& assignment,
                                       const ResourceRegistry& registry, const ContextIndex& ctx,
                                       DurationMode mode, unsigned threads) {
    if (assignment.labels.size() != log.case_count())
        throw AnalysisError("compute_indicator_table: assignment does not match log");
    if (assignment.k == 0) throw AnalysisError("compute_indicator_table: empty assignment");

    std::vector<ClusterView> clusters(assignment.k);
    for (std::size_t i = 0; i < log.cases.size(); ++i) {
        if (assignment.labels[i] >= assignment.k)
            throw AnalysisError("compute_indicator_table: label out of range");
        clusters[assignment.labels[i]].push_back(&log.cases[i]);
    }
    for (std::size_t g = 0; g < clusters.size(); ++g)
        if (clusters[g].empty())
            throw AnalysisError("compute_indicator_table: cluster " + std::to_string(g) +
                                " is empty");

    IndicatorTable table;
    table.rows.resize(assignment.k);
    parallel_for(0, assignment.k, threads, [&](std::size_t g) {
        const ClusterView& cl = clusters[g];
        IndicatorVector& v = table.rows[g];
        v.ef = execution_frequency(cl);
        v.ru = resource_utilization(cl, registry);
        v.cc = customer_contacts(cl);
        v.av = activity_duration_variance(cl, mode);
        v.etv = execution_time_variance(cl, mode);
        v.er = execution_redundancies(cl);
        v.sac = shared_activity_contexts(cl, ctx);
        v.s = stakeholder_involvement(cl);
        v.l = process_length(cl);
        v.validate();
    });
    return table;
}

} // namespace tailmine
