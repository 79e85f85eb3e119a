#pragma once

#include <iosfwd>
#include <string>

#include "tailmine/distance.hpp"
#include "tailmine/event_log.hpp"
#include "tailmine/longtail.hpp"
#include "tailmine/preprocess.hpp"
#include "tailmine/stats.hpp"
#include "tailmine/validity.hpp"
#include "tailmine/ward.hpp"

namespace tailmine {

// All JSON output is UTF-8 with stable key order and deterministic number
// formatting; CSV output is RFC-4180 with '.' decimal points. Identical inputs
// produce identical bytes.

std::string stats_to_json(const StatsReport& r);
void write_stats_csv(std::ostream& out, const StatsReport& r);

std::string drop_report_to_json(const DropReport& r);
void write_drop_report_csv(std::ostream& out, const DropReport& r);

std::string parse_report_to_json(const ParseReport& r);

std::string dendrogram_to_json(const Dendrogram& d);
// Linkage matrix, one row per merge: left, right, height, size.
void write_linkage_csv(std::ostream& out, const Dendrogram& d);
void write_elbow_csv(std::ostream& out, const Dendrogram& d);

void write_validity_csv(std::ostream& out, const ValidityReport& r);

std::string indicator_table_to_json(const IndicatorTable& t);
void write_indicator_table_csv(std::ostream& out, const IndicatorTable& t);

std::string long_tail_report_to_json(const LongTailReport& r);
std::string contribution_report_to_json(const ContributionReport& r);
// Combined analysis report (long tail + contribution + normalization metadata).
std::string analysis_report_to_json(const NormalizedTable& nt, const LongTailReport& lt,
                                    const ContributionReport& cr);

// One curve: rank, cluster_id, value.
void write_distribution_csv(std::ostream& out, const std::vector<DistributionPoint>& curve);

// Case-to-cluster labels: case_id, cluster.
void write_assignment_csv(std::ostream& out, const EventLog& log, const ClusterAssignment& ca);

// Debug exports.
void write_feature_matrix_csv(std::ostream& out, const FeatureMatrix& fm);
void write_distance_matrix_csv(std::ostream& out, const DistanceMatrix& dm,
                               const std::vector<std::string>& case_ids);

// Shortest round-trip decimal rendering (used by every CSV writer).
std::string format_double(double v);

} // namespace tailmine
