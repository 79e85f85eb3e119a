#include "tailmine/pipeline.hpp"

#include <filesystem>
#include <fstream>
#include <functional>

#include <json.hpp>

#include "tailmine/csv.hpp"
#include "tailmine/distance.hpp"
#include "tailmine/errors.hpp"
#include "tailmine/indicators.hpp"
#include "tailmine/longtail.hpp"
#include "tailmine/report_io.hpp"
#include "tailmine/stats.hpp"
#include "tailmine/validity.hpp"
#include "tailmine/ward.hpp"
#include "tailmine/xes.hpp"

namespace tailmine {

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;

void PipelineConfig::validate_for_analysis() const {
    if (input_path.empty()) throw ConfigError("no input file configured");
    if (format != "xes" && format != "csv")
        throw ConfigError("format must be 'xes' or 'csv', got '" + format + "'");
    if (!k) throw ConfigError("clustering requires k (number of variants)");
    if (*k < 2) throw ConfigError("k must be >= 2 when clustering is requested");
    if (!(pareto_fraction > 0.0 && pareto_fraction < 1.0))
        throw ConfigError("pareto fraction must be in (0,1)");
    ngram.validate();
    preprocess.validate();
    contact_rule.validate();
}

namespace {

CustomerContactRule::Mode contact_mode_from_string(const std::string& s) {
    if (s == "none") return CustomerContactRule::Mode::None;
    if (s == "activity_patterns") return CustomerContactRule::Mode::ActivityPatterns;
    if (s == "attribute_flag") return CustomerContactRule::Mode::AttributeFlag;
    throw ConfigError("unknown contact rule mode '" + s + "'");
}

const char* contact_mode_to_string(CustomerContactRule::Mode m) {
    switch (m) {
    case CustomerContactRule::Mode::None: return "none";
    case CustomerContactRule::Mode::ActivityPatterns: return "activity_patterns";
    case CustomerContactRule::Mode::AttributeFlag: return "attribute_flag";
    }
    return "none";
}

std::optional<TimestampMs> instant_from_json(const json& j, const char* key) {
    if (!j.contains(key) || j[key].is_null()) return std::nullopt;
    auto ts = parse_iso8601(j[key].get<std::string>());
    if (!ts) throw ConfigError(std::string("config: bad instant in '") + key + "'");
    return ts;
}

} // namespace

PipelineConfig load_pipeline_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file '" + path + "'");
    json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw ConfigError("config file '" + path + "': " + e.what());
    }

    PipelineConfig cfg;
    try {
        if (j.contains("input")) cfg.input_path = j["input"].get<std::string>();
        if (j.contains("format")) cfg.format = j["format"].get<std::string>();
        if (j.contains("column_map")) {
            const json& m = j["column_map"];
            if (m.contains("case_id")) cfg.column_map.case_id_column = m["case_id"];
            if (m.contains("activity")) cfg.column_map.activity_column = m["activity"];
            if (m.contains("timestamp")) cfg.column_map.timestamp_column = m["timestamp"];
            if (m.contains("resource")) cfg.column_map.resource_column = m["resource"];
            if (m.contains("lifecycle")) cfg.column_map.lifecycle_column = m["lifecycle"];
            if (m.contains("timestamp_format"))
                cfg.column_map.timestamp_format = m["timestamp_format"];
            if (m.contains("delimiter")) {
                std::string d = m["delimiter"].get<std::string>();
                if (d.size() != 1) throw ConfigError("config: delimiter must be one character");
                cfg.column_map.delimiter = d[0];
            }
        }
        if (j.contains("contact_rule")) {
            const json& r = j["contact_rule"];
            if (r.contains("mode")) cfg.contact_rule.mode = contact_mode_from_string(r["mode"]);
            if (r.contains("patterns"))
                cfg.contact_rule.patterns = r["patterns"].get<std::vector<std::string>>();
            if (r.contains("attribute")) cfg.contact_rule.attribute = r["attribute"];
            if (r.contains("truthy_values"))
                cfg.contact_rule.truthy_values = r["truthy_values"].get<std::vector<std::string>>();
        }
        if (j.contains("preprocess")) {
            const json& p = j["preprocess"];
            if (p.contains("required_start_activities"))
                cfg.preprocess.required_start_activities =
                    p["required_start_activities"].get<std::set<std::string>>();
            if (p.contains("required_end_activities"))
                cfg.preprocess.required_end_activities =
                    p["required_end_activities"].get<std::set<std::string>>();
            if (p.contains("min_events")) cfg.preprocess.min_events = p["min_events"];
            cfg.preprocess.window_from = instant_from_json(p, "window_from");
            cfg.preprocess.window_to = instant_from_json(p, "window_to");
        }
        if (j.contains("ngram")) {
            const json& g = j["ngram"];
            if (g.contains("sizes")) cfg.ngram.sizes = g["sizes"].get<std::set<int>>();
            if (g.contains("boundary_sentinels"))
                cfg.ngram.boundary_sentinels = g["boundary_sentinels"];
            if (g.contains("weighting")) {
                std::string w = g["weighting"].get<std::string>();
                if (w == "count") cfg.ngram.weighting = NGramConfig::Weighting::Count;
                else if (w == "binary") cfg.ngram.weighting = NGramConfig::Weighting::Binary;
                else throw ConfigError("config: weighting must be 'count' or 'binary'");
            }
        }
        if (j.contains("k") && !j["k"].is_null()) cfg.k = j["k"].get<std::size_t>();
        if (j.contains("k_sweep") && !j["k_sweep"].is_null()) {
            auto v = j["k_sweep"].get<std::vector<std::size_t>>();
            if (v.size() != 2 || v[0] > v[1])
                throw ConfigError("config: k_sweep must be [lo, hi] with lo <= hi");
            cfg.k_sweep = {v[0], v[1]};
        }
        if (j.contains("pareto_fraction")) cfg.pareto_fraction = j["pareto_fraction"];
        if (j.contains("duration_mode"))
            cfg.duration_mode = parse_duration_mode(j["duration_mode"].get<std::string>());
        if (j.contains("cost_table")) cfg.cost_table_path = j["cost_table"].get<std::string>();
        if (j.contains("indicator_weights")) {
            auto w = j["indicator_weights"].get<std::vector<double>>();
            if (w.size() != 9) throw ConfigError("config: indicator_weights needs 9 entries");
            std::copy(w.begin(), w.end(), cfg.indicator_weights.begin());
        }
        if (j.contains("out_dir")) cfg.out_dir = j["out_dir"].get<std::string>();
        if (j.contains("strict")) cfg.strict = j["strict"].get<bool>();
        if (j.contains("dump_features")) cfg.dump_features = j["dump_features"].get<bool>();
        if (j.contains("dump_distances")) cfg.dump_distances = j["dump_distances"].get<bool>();
        if (j.contains("threads")) cfg.threads = j["threads"].get<unsigned>();
        if (j.contains("seed")) cfg.seed = j["seed"].get<std::uint64_t>();
    } catch (const ConfigError&) {
        throw;
    } catch (const std::exception& e) {
        throw ConfigError("config file '" + path + "': " + e.what());
    }
    return cfg;
}

std::string pipeline_config_to_json(const PipelineConfig& cfg) {
    json j;
    j["input"] = cfg.input_path;
    j["format"] = cfg.format;
    j["column_map"] = {{"case_id", cfg.column_map.case_id_column},
                       {"activity", cfg.column_map.activity_column},
                       {"timestamp", cfg.column_map.timestamp_column},
                       {"resource", cfg.column_map.resource_column},
                       {"lifecycle", cfg.column_map.lifecycle_column},
                       {"timestamp_format", cfg.column_map.timestamp_format},
                       {"delimiter", std::string(1, cfg.column_map.delimiter)}};
    j["contact_rule"] = {{"mode", contact_mode_to_string(cfg.contact_rule.mode)},
                         {"patterns", cfg.contact_rule.patterns},
                         {"attribute", cfg.contact_rule.attribute},
                         {"truthy_values", cfg.contact_rule.truthy_values}};
    json pre;
    pre["required_start_activities"] = cfg.preprocess.required_start_activities;
    pre["required_end_activities"] = cfg.preprocess.required_end_activities;
    pre["min_events"] = cfg.preprocess.min_events;
    pre["window_from"] =
        cfg.preprocess.window_from ? json(format_iso8601_utc(*cfg.preprocess.window_from)) : json();
    pre["window_to"] =
        cfg.preprocess.window_to ? json(format_iso8601_utc(*cfg.preprocess.window_to)) : json();
    j["preprocess"] = pre;
    j["ngram"] = {{"sizes", cfg.ngram.sizes},
                  {"boundary_sentinels", cfg.ngram.boundary_sentinels},
                  {"weighting",
                   cfg.ngram.weighting == NGramConfig::Weighting::Count ? "count" : "binary"}};
    j["k"] = cfg.k ? json(*cfg.k) : json();
    j["k_sweep"] = cfg.k_sweep ? json(std::vector<std::size_t>{cfg.k_sweep->first,
                                                               cfg.k_sweep->second})
                               : json();
    j["pareto_fraction"] = cfg.pareto_fraction;
    j["duration_mode"] = to_string(cfg.duration_mode);
    j["cost_table"] = cfg.cost_table_path;
    j["indicator_weights"] = cfg.indicator_weights;
    j["out_dir"] = cfg.out_dir;
    j["strict"] = cfg.strict;
    j["dump_features"] = cfg.dump_features;
    j["dump_distances"] = cfg.dump_distances;
    j["threads"] = cfg.threads;
    j["seed"] = cfg.seed;
    return j.dump(2) + "\n";
}

namespace {

std::map<std::string, double> load_cost_table(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open cost table '" + path + "'");
    std::map<std::string, double> costs;
    CsvReader reader(in);
    std::vector<std::string> fields;
    if (!reader.next(fields) || fields.size() < 2 || fields[0] != "resource" ||
        fields[1] != "cost")
        throw ParseError("cost table must start with header 'resource,cost'");
    while (reader.next(fields)) {
        if (fields.size() < 2) throw ParseError("cost table: short row", reader.record_line(), 0);
        try {
            costs[fields[0]] = std::stod(fields[1]);
        } catch (...) {
            throw ParseError("cost table: bad cost '" + fields[1] + "'", reader.record_line(), 0);
        }
    }
    return costs;
}

// Tracks files written by one run so a failed stage leaves no partial output.
class OutputTracker {
public:
    explicit OutputTracker(const fs::path& dir) : dir_(dir) { fs::create_directories(dir_); }

    void write(const std::string& name, const std::string& content) {
        fs::path p = dir_ / name;
        std::ofstream out(p, std::ios::binary);
        if (!out) throw AnalysisError("cannot write '" + p.string() + "'");
        out << content;
        written_.push_back(p.string());
    }

    void write_with(const std::string& name, const std::function<void(std::ostream&)>& fn) {
        fs::path p = dir_ / name;
        std::ofstream out(p, std::ios::binary);
        if (!out) throw AnalysisError("cannot write '" + p.string() + "'");
        fn(out);
        written_.push_back(p.string());
    }

    void discard_all() {
        for (const auto& p : written_) {
            std::error_code ec;
            fs::remove(p, ec);
        }
        written_.clear();
    }

    const std::vector<std::string>& written() const { return written_; }

private:
    fs::path dir_;
    std::vector<std::string> written_;
};

} // namespace

PipelineSummary run_pipeline(const PipelineConfig& cfg, PipelineMode mode) {
    if (mode == PipelineMode::Analyze) cfg.validate_for_analysis();
    if (mode == PipelineMode::Sweep && !cfg.k_sweep)
        throw ConfigError("sweep requires a k_sweep range");

    OutputTracker out(cfg.out_dir);
    PipelineSummary summary;
    std::string stage = "setup";
    try {
        out.write("resolved_config.json", pipeline_config_to_json(cfg));

        stage = "parse";
        std::ifstream in(cfg.input_path, std::ios::binary);
        if (!in) throw ParseError("cannot open input '" + cfg.input_path + "'");
        ParsedLog parsed;
        if (cfg.format == "xes") {
            parsed = parse_xes(in, XesParseOptions{cfg.strict});
            apply_customer_contact_rule(parsed.log, cfg.contact_rule);
        } else if (cfg.format == "csv") {
            ColumnMap map = cfg.column_map;
            map.customer_contact_rule = cfg.contact_rule;
            parsed = parse_csv(in, map, CsvParseOptions{cfg.strict});
        } else {
            throw ConfigError("format must be 'xes' or 'csv', got '" + cfg.format + "'");
        }
        parsed.log.source_meta.file = cfg.input_path;
        out.write("parse_report.json", parse_report_to_json(parsed.report));

        stage = "preprocess";
        PreprocessResult pre = preprocess(parsed.log, cfg.preprocess);
        out.write("drop_report.json", drop_report_to_json(pre.report));
        out.write_with("drop_report.csv",
                       [&](std::ostream& os) { write_drop_report_csv(os, pre.report); });
        const EventLog& log = pre.log;
        summary.cases = log.case_count();
        summary.events = log.event_count();

        stage = "stats";
        StatsReport stats = descriptive_stats(log, cfg.duration_mode);
        out.write("stats.json", stats_to_json(stats));
        out.write_with("stats.csv", [&](std::ostream& os) { write_stats_csv(os, stats); });
        if (mode == PipelineMode::Stats) {
            summary.written_files = out.written();
            return summary;
        }

        stage = "vectorize";
        FeatureMatrix fm = build_vector_space(log, cfg.ngram);
        if (cfg.dump_features)
            out.write_with("features.csv",
                           [&](std::ostream& os) { write_feature_matrix_csv(os, fm); });
        if (cfg.dump_distances) {
            DistanceMatrix dm = distance_matrix(fm, cfg.threads);
            out.write_with("distances.csv", [&](std::ostream& os) {
                write_distance_matrix_csv(os, dm, fm.case_ids);
            });
        }

        stage = "ward_cluster";
        Dendrogram dendro = ward_cluster(fm);
        out.write("dendrogram.json", dendrogram_to_json(dendro));
        out.write_with("linkage.csv", [&](std::ostream& os) { write_linkage_csv(os, dendro); });
        out.write_with("elbow.csv", [&](std::ostream& os) { write_elbow_csv(os, dendro); });

        if (cfg.k_sweep) {
            stage = "validity_sweep";
            std::vector<std::size_t> ks;
            for (std::size_t k = cfg.k_sweep->first; k <= cfg.k_sweep->second; ++k)
                if (k >= 1 && k <= log.case_count()) ks.push_back(k);
            ValidityReport vr = validity_sweep(fm, dendro, ks, cfg.threads);
            out.write_with("validity.csv", [&](std::ostream& os) { write_validity_csv(os, vr); });
        }
        if (mode == PipelineMode::Sweep || (mode == PipelineMode::Cluster && !cfg.k)) {
            summary.written_files = out.written();
            return summary;
        }

        stage = "cut_dendrogram";
        if (!cfg.k) throw ConfigError("clustering requires k");
        ClusterAssignment assignment = cut_dendrogram(dendro, *cfg.k);
        summary.k = assignment.k;
        out.write_with("clusters.csv",
                       [&](std::ostream& os) { write_assignment_csv(os, log, assignment); });
        if (mode == PipelineMode::Cluster) {
            summary.written_files = out.written();
            return summary;
        }

        stage = "indicators";
        ResourceRegistry registry =
            cfg.cost_table_path.empty()
                ? ResourceRegistry::build(log)
                : ResourceRegistry::build(log, load_cost_table(cfg.cost_table_path));
        ContextIndex ctx = ContextIndex::build(log);
        IndicatorTable table =
            compute_indicator_table(log, assignment, registry, ctx, cfg.duration_mode,
                                    cfg.threads);
        out.write("indicators.json", indicator_table_to_json(table));
        out.write_with("indicators.csv",
                       [&](std::ostream& os) { write_indicator_table_csv(os, table); });

        stage = "long_tail";
        NormalizedTable nt = normalize(table);
        LongTailReport report = rank_and_split(nt, cfg.pareto_fraction, cfg.indicator_weights);
        ContributionReport contrib = contribution_analysis(nt, report);
        out.write("report.json", analysis_report_to_json(nt, report, contrib));
        summary.head_size = report.head_size;
        summary.aggregate_head_share = contrib.aggregate.head_share;
        summary.aggregate_tail_share = contrib.aggregate.tail_share;

        stage = "distribution_export";
        DistributionTables dist = distribution_export(nt, report);
        for (std::size_t k = 0; k < 9; ++k) {
            std::string name = std::string("distribution_") + kIndicatorNames[k] + ".csv";
            out.write_with(name, [&](std::ostream& os) {
                write_distribution_csv(os, dist.per_indicator[k]);
            });
        }
        out.write_with("distribution_aggregate_score.csv", [&](std::ostream& os) {
            write_distribution_csv(os, dist.aggregate);
        });
    } catch (const StageError&) {
        out.discard_all();
        throw;
    } catch (const std::exception& e) {
        bool is_parse = dynamic_cast<const ParseError*>(&e) != nullptr;
        out.discard_all();
        throw StageError(stage, e.what(), is_parse);
    }

    summary.written_files = out.written();
    return summary;
}

} // namespace tailmine
