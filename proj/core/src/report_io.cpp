#include "tailmine/report_io.hpp"

#include <charconv>
#include <ostream>

#include <json.hpp>

#include "tailmine/csv.hpp"

namespace tailmine {

using json = nlohmann::ordered_json;

std::string format_double(double v) {
    char buf[40];
    auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

namespace {

std::string dump(const json& j) { return j.dump(2) + "\n"; }

json counts_array(const std::vector<std::pair<std::string, std::size_t>>& v) {
    json arr = json::array();
    for (const auto& [name, count] : v) arr.push_back({{"label", name}, {"count", count}});
    return arr;
}

} // namespace

std::string stats_to_json(const StatsReport& r) {
    json j;
    j["case_count"] = r.case_count;
    j["event_count"] = r.event_count;
    j["min_trace_length"] = r.min_trace_length;
    j["max_trace_length"] = r.max_trace_length;
    j["activity_counts"] = counts_array(r.activity_counts);
    json durations = json::array();
    for (const auto& [name, secs] : r.activity_mean_duration_s)
        durations.push_back({{"label", name}, {"mean_duration_s", secs}});
    j["activity_mean_duration_s"] = durations;
    j["resource_involvements"] = counts_array(r.resource_involvements);
    return dump(j);
}

void write_stats_csv(std::ostream& out, const StatsReport& r) {
    write_csv_record(out, {"section", "label", "value"});
    write_csv_record(out, {"totals", "case_count", std::to_string(r.case_count)});
    write_csv_record(out, {"totals", "event_count", std::to_string(r.event_count)});
    write_csv_record(out, {"totals", "min_trace_length", std::to_string(r.min_trace_length)});
    write_csv_record(out, {"totals", "max_trace_length", std::to_string(r.max_trace_length)});
    for (const auto& [name, count] : r.activity_counts)
        write_csv_record(out, {"activity_count", name, std::to_string(count)});
    for (const auto& [name, secs] : r.activity_mean_duration_s)
        write_csv_record(out, {"activity_mean_duration_s", name, format_double(secs)});
    for (const auto& [name, count] : r.resource_involvements)
        write_csv_record(out, {"resource_involvement", name, std::to_string(count)});
}

std::string drop_report_to_json(const DropReport& r) {
    json j;
    j["input_cases"] = r.input_cases;
    j["retained_cases"] = r.retained_cases;
    j["dropped_total"] = r.total_dropped();
    j["dropped"] = {{"missing_required_start", r.missing_required_start},
                    {"missing_required_end", r.missing_required_end},
                    {"too_few_events", r.too_few_events},
                    {"outside_window", r.outside_window}};
    j["empty_result"] = r.empty_result;
    return dump(j);
}

void write_drop_report_csv(std::ostream& out, const DropReport& r) {
    write_csv_record(out, {"reason", "count"});
    write_csv_record(out, {"input_cases", std::to_string(r.input_cases)});
    write_csv_record(out, {"retained_cases", std::to_string(r.retained_cases)});
    write_csv_record(out, {"missing_required_start", std::to_string(r.missing_required_start)});
    write_csv_record(out, {"missing_required_end", std::to_string(r.missing_required_end)});
    write_csv_record(out, {"too_few_events", std::to_string(r.too_few_events)});
    write_csv_record(out, {"outside_window", std::to_string(r.outside_window)});
}

std::string parse_report_to_json(const ParseReport& r) {
    json j;
    j["raw_event_count"] = r.raw_event_count;
    j["dropped_events"] = r.dropped_events;
    j["dropped_traces"] = r.dropped_traces;
    j["warnings"] = r.warnings;
    return dump(j);
}

std::string dendrogram_to_json(const Dendrogram& d) {
    json j;
    j["n_leaves"] = d.n_leaves;
    json merges = json::array();
    for (const auto& m : d.merges)
        merges.push_back(
            {{"left", m.left}, {"right", m.right}, {"height", m.height}, {"size", m.size}});
    j["merges"] = merges;
    return dump(j);
}

void write_linkage_csv(std::ostream& out, const Dendrogram& d) {
    write_csv_record(out, {"left", "right", "height", "size"});
    for (const auto& m : d.merges)
        write_csv_record(out, {std::to_string(m.left), std::to_string(m.right),
                               format_double(m.height), std::to_string(m.size)});
}

void write_elbow_csv(std::ostream& out, const Dendrogram& d) {
    write_csv_record(out, {"k", "merge_height"});
    for (const auto& [k, h] : elbow_data(d))
        write_csv_record(out, {std::to_string(k), format_double(h)});
}

void write_validity_csv(std::ostream& out, const ValidityReport& r) {
    write_csv_record(out, {"k", "within_cluster_ss", "silhouette", "dunn", "calinski_harabasz"});
    auto opt = [](const std::optional<double>& v) {
        return v ? format_double(*v) : std::string("NA");
    };
    for (const auto& row : r.rows)
        write_csv_record(out, {std::to_string(row.k), format_double(row.within_cluster_ss),
                               opt(row.silhouette), opt(row.dunn), opt(row.calinski_harabasz)});
}

namespace {

json indicator_row_json(const IndicatorVector& v) {
    json j;
    auto arr = v.as_array();
    for (std::size_t k = 0; k < 9; ++k) j[kIndicatorNames[k]] = arr[k];
    return j;
}

} // namespace

std::string indicator_table_to_json(const IndicatorTable& t) {
    json j;
    json rows = json::array();
    for (std::size_t g = 0; g < t.rows.size(); ++g) {
        json row = indicator_row_json(t.rows[g]);
        row["cluster_id"] = g;
        rows.push_back(std::move(row));
    }
    j["rows"] = rows;
    return dump(j);
}

void write_indicator_table_csv(std::ostream& out, const IndicatorTable& t) {
    std::vector<std::string> header = {"cluster_id"};
    for (const char* name : kIndicatorNames) header.push_back(name);
    write_csv_record(out, header);
    for (std::size_t g = 0; g < t.rows.size(); ++g) {
        std::vector<std::string> rec = {std::to_string(g)};
        for (double v : t.rows[g].as_array()) rec.push_back(format_double(v));
        write_csv_record(out, rec);
    }
}

namespace {

json long_tail_json(const LongTailReport& r) {
    json j;
    j["pareto_fraction"] = r.pareto_fraction;
    j["n_clusters"] = r.n_clusters;
    j["head_size"] = r.head_size;
    json rows = json::array();
    for (const auto& row : r.rows)
        rows.push_back({{"rank", row.rank},
                        {"cluster_id", row.cluster_id},
                        {"score", row.score},
                        {"segment", to_string(row.segment)}});
    j["rows"] = rows;
    return j;
}

json contribution_json(const ContributionReport& r) {
    json j;
    for (std::size_t k = 0; k < 9; ++k) {
        const auto& c = r.per_indicator[k];
        j[kIndicatorNames[k]] = {{"head_share", c.head_share},
                                 {"tail_share", c.tail_share},
                                 {"degenerate", c.degenerate}};
    }
    j["aggregate"] = {{"head_share", r.aggregate.head_share},
                      {"tail_share", r.aggregate.tail_share},
                      {"degenerate", r.aggregate.degenerate}};
    return j;
}

} // namespace

std::string long_tail_report_to_json(const LongTailReport& r) { return dump(long_tail_json(r)); }

std::string contribution_report_to_json(const ContributionReport& r) {
    return dump(contribution_json(r));
}

std::string analysis_report_to_json(const NormalizedTable& nt, const LongTailReport& lt,
                                    const ContributionReport& cr) {
    json j;
    j["long_tail"] = long_tail_json(lt);
    j["contribution"] = contribution_json(cr);
    json norm;
    for (std::size_t k = 0; k < 9; ++k)
        norm[kIndicatorNames[k]] = {{"min", nt.column_min[k]},
                                    {"max", nt.column_max[k]},
                                    {"constant", nt.constant_column[k]}};
    j["normalization"] = norm;
    return dump(j);
}

void write_distribution_csv(std::ostream& out, const std::vector<DistributionPoint>& curve) {
    write_csv_record(out, {"rank", "cluster_id", "value"});
    for (const auto& p : curve)
        write_csv_record(out, {std::to_string(p.rank), std::to_string(p.cluster_id),
                               format_double(p.value)});
}

void write_assignment_csv(std::ostream& out, const EventLog& log, const ClusterAssignment& ca) {
    write_csv_record(out, {"case_id", "cluster"});
    for (std::size_t i = 0; i < log.cases.size(); ++i)
        write_csv_record(out, {log.cases[i].case_id, std::to_string(ca.labels[i])});
}

void write_feature_matrix_csv(std::ostream& out, const FeatureMatrix& fm) {
    std::vector<std::string> header = {"case_id"};
    for (std::uint32_t c = 0; c < fm.n_features(); ++c) header.push_back(fm.feature_label(c));
    write_csv_record(out, header);
    for (std::size_t r = 0; r < fm.n_rows(); ++r) {
        std::vector<std::string> rec = {fm.case_ids[r]};
        std::size_t ir = 0;
        for (std::uint32_t c = 0; c < fm.n_features(); ++c) {
            double v = 0.0;
            if (ir < fm.rows[r].size() && fm.rows[r][ir].first == c) v = fm.rows[r][ir++].second;
            rec.push_back(format_double(v));
        }
        write_csv_record(out, rec);
    }
}

void write_distance_matrix_csv(std::ostream& out, const DistanceMatrix& dm,
                               const std::vector<std::string>& case_ids) {
    std::vector<std::string> header = {"case_id"};
    for (std::size_t i = 0; i < dm.n; ++i) header.push_back(case_ids.at(i));
    write_csv_record(out, header);
    for (std::size_t i = 0; i < dm.n; ++i) {
        std::vector<std::string> rec = {case_ids.at(i)};
        for (std::size_t j = 0; j < dm.n; ++j) rec.push_back(format_double(dm.at(i, j)));
        write_csv_record(out, rec);
    }
}

} // namespace tailmine
