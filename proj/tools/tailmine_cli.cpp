// tailmine: discover process variants from event logs, score them with nine
// importance/health/feasibility indicators, and report the Pareto head/tail
// split with per-indicator contributions.
//
// Exit codes: 0 success, 1 usage/config, 2 input or parse failure, 3 analysis
// failure.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "tailmine/csv_log.hpp"
#include "tailmine/errors.hpp"
#include "tailmine/pipeline.hpp"
#include "tailmine/synth.hpp"

using namespace tailmine;
namespace fs = std::filesystem;

namespace {

struct CommonFlags {
    std::string config_path;
    std::string input;
    std::string format;
    std::string out_dir;
    std::string duration_mode;
    std::string ngram_sizes;  // e.g. "2,3"
    std::vector<std::string> contact_patterns;
    std::string contact_attribute;
    std::string cost_table;
    std::size_t k = 0;
    std::size_t k_min = 0, k_max = 0;
    double pareto = 0.0;
    unsigned threads = 0;
    std::uint64_t seed = 0;
    bool strict = false;
    bool no_sentinels = false;
    bool dump_features = false;
    bool dump_distances = false;

    CLI::App* attach(CLI::App* cmd, bool wants_k, bool wants_sweep) {
        cmd->add_option("--config", config_path, "JSON config file; flags override its values");
        cmd->add_option("-i,--input", input, "event log file");
        cmd->add_option("--format", format, "input format: xes or csv")
            ->check(CLI::IsMember({"xes", "csv"}));
        cmd->add_option("-o,--out", out_dir, "output directory (default: out)");
        cmd->add_option("--duration-mode", duration_mode,
                        "activity duration extraction: next_event or lifecycle_pair")
            ->check(CLI::IsMember({"next_event", "lifecycle_pair"}));
        cmd->add_option("--ngram", ngram_sizes, "n-gram sizes, e.g. 2,3 (subset of 1..3)");
        cmd->add_flag("--no-sentinels", no_sentinels, "do not pad traces with START/END markers");
        cmd->add_option("--contact-pattern", contact_patterns,
                        "activity pattern marking customer contact (repeatable, glob/substring)");
        cmd->add_option("--contact-attribute", contact_attribute,
                        "event attribute whose truthy value marks customer contact");
        cmd->add_option("--cost-table", cost_table, "resource cost CSV (resource,cost)");
        if (wants_k) {
            cmd->add_option("-k,--k", k, "number of process variants (clusters)");
            cmd->add_flag("--dump-features", dump_features, "also write features.csv");
            cmd->add_flag("--dump-distances", dump_distances,
                          "also write distances.csv (quadratic in cases)");
        }
        if (wants_sweep) {
            cmd->add_option("--k-min", k_min, "validity sweep: smallest k");
            cmd->add_option("--k-max", k_max, "validity sweep: largest k");
        }
        cmd->add_option("--pareto", pareto, "short-head fraction in (0,1), default 0.2");
        cmd->add_option("--threads", threads, "max worker threads (0 = all cores)");
        cmd->add_option("--seed", seed, "random seed (synthetic data only)");
        cmd->add_flag("--strict", strict, "fail on any malformed event instead of dropping it");
        return cmd;
    }

    PipelineConfig resolve(const CLI::App* cmd) const {
        PipelineConfig cfg;
        if (!config_path.empty()) cfg = load_pipeline_config(config_path);
        auto given = [cmd](const char* name) {
            const CLI::Option* o = cmd->get_option_no_throw(name);
            return o != nullptr && o->count() > 0;
        };
        if (given("--input")) cfg.input_path = input;
        if (given("--format")) cfg.format = format;
        if (given("--out")) cfg.out_dir = out_dir;
        if (given("--duration-mode")) cfg.duration_mode = parse_duration_mode(duration_mode);
        if (given("--ngram")) {
            cfg.ngram.sizes.clear();
            std::stringstream ss(ngram_sizes);
            std::string tok;
            while (std::getline(ss, tok, ','))
                if (!tok.empty()) cfg.ngram.sizes.insert(std::stoi(tok));
        }
        if (given("--no-sentinels")) cfg.ngram.boundary_sentinels = false;
        if (given("--contact-pattern")) {
            cfg.contact_rule.mode = CustomerContactRule::Mode::ActivityPatterns;
            cfg.contact_rule.patterns = contact_patterns;
        }
        if (given("--contact-attribute")) {
            cfg.contact_rule.mode = CustomerContactRule::Mode::AttributeFlag;
            cfg.contact_rule.attribute = contact_attribute;
        }
        if (given("--cost-table")) cfg.cost_table_path = cost_table;
        if (given("--k")) cfg.k = k;
        if (given("--k-min") || given("--k-max")) {
            if (!(given("--k-min") && given("--k-max")))
                throw ConfigError("--k-min and --k-max must be given together");
            if (k_min > k_max) throw ConfigError("--k-min must not exceed --k-max");
            cfg.k_sweep = {k_min, k_max};
        }
        if (given("--pareto")) cfg.pareto_fraction = pareto;
        if (given("--threads")) cfg.threads = threads;
        if (given("--seed")) cfg.seed = seed;
        if (given("--strict")) cfg.strict = strict;
        if (given("--dump-features")) cfg.dump_features = dump_features;
        if (given("--dump-distances")) cfg.dump_distances = dump_distances;
        return cfg;
    }
};

void print_summary(const PipelineSummary& s, const PipelineConfig& cfg, PipelineMode mode) {
    std::cout << "cases: " << s.cases << "  events: " << s.events;
    if (mode == PipelineMode::Analyze || mode == PipelineMode::Cluster)
        std::cout << "  k: " << s.k;
    if (mode == PipelineMode::Analyze) {
        char head[64], tail[64];
        std::snprintf(head, sizeof head, "%.2f", s.aggregate_head_share);
        std::snprintf(tail, sizeof tail, "%.2f", s.aggregate_tail_share);
        std::cout << "  head size: " << s.head_size << "  head share: " << head
                  << "%  tail share: " << tail << "%";
    }
    std::cout << "\n" << s.written_files.size() << " file(s) written to " << cfg.out_dir
              << " (see resolved_config.json for the full configuration)\n";
}

int run_mode(const CommonFlags& flags, const CLI::App* cmd, PipelineMode mode) {
    PipelineConfig cfg = flags.resolve(cmd);
    auto summary = run_pipeline(cfg, mode);
    print_summary(summary, cfg, mode);
    return 0;
}

int run_synth(const CLI::App* cmd, const SynthSpec& spec, const std::string& out_path) {
    spec.validate();
    (void)cmd;
    auto result = generate_synthetic_log(spec);

    fs::path out(out_path);
    if (out.has_parent_path()) fs::create_directories(out.parent_path());
    std::ofstream csv(out, std::ios::binary);
    if (!csv) throw AnalysisError("cannot write '" + out.string() + "'");
    write_csv_log(csv, result.log);

    // Ground truth next to the log, for recovery checks and demos.
    nlohmann::ordered_json truth;
    truth["seed"] = spec.seed;
    truth["templates"] = result.templates;
    truth["template_case_counts"] = result.template_case_counts;
    truth["template_of_case"] = result.template_of_case;
    fs::path truth_path = out.parent_path() / (out.stem().string() + "_truth.json");
    std::ofstream tj(truth_path, std::ios::binary);
    tj << truth.dump(2) << "\n";

    std::cout << "wrote " << result.log.case_count() << " cases / "
              << result.log.event_count() << " events to " << out.string() << "\n"
              << "ground truth: " << truth_path.string() << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"process variant discovery and long-tail prioritization"};
    app.require_subcommand(1);

    CommonFlags stats_flags, cluster_flags, sweep_flags, analyze_flags;
    auto* cmd_stats =
        stats_flags.attach(app.add_subcommand("stats", "parse, preprocess, descriptive stats"),
                           false, false);
    auto* cmd_cluster = cluster_flags.attach(
        app.add_subcommand("cluster", "cluster traces; write dendrogram, linkage, elbow data"),
        true, false);
    auto* cmd_sweep = sweep_flags.attach(
        app.add_subcommand("sweep", "validity indices over a k range"), false, true);
    auto* cmd_analyze = analyze_flags.attach(
        app.add_subcommand("analyze", "full pipeline: variants, indicators, long-tail report"),
        true, true);

    SynthSpec synth_spec;
    std::string synth_out = "synthetic_log.csv";
    auto* cmd_synth = app.add_subcommand("synth", "generate a seeded synthetic event log");
    cmd_synth->add_option("-o,--out", synth_out, "output CSV path");
    cmd_synth->add_option("--seed", synth_spec.seed, "random seed");
    cmd_synth->add_option("--cases", synth_spec.total_cases, "total cases");
    cmd_synth->add_option("--variants", synth_spec.variant_templates, "variant template count");
    cmd_synth->add_option("--zipf", synth_spec.zipf_exponent, "Zipf exponent for variant sizes");
    cmd_synth->add_option("--min-length", synth_spec.min_template_length, "min template length");
    cmd_synth->add_option("--max-length", synth_spec.max_template_length, "max template length");
    cmd_synth->add_option("--resources", synth_spec.resource_pool, "resource pool size");
    cmd_synth->add_option("--contact-fraction", synth_spec.contact_fraction,
                          "fraction of activities flagged as customer contact");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        if (cmd_stats->parsed()) return run_mode(stats_flags, cmd_stats, PipelineMode::Stats);
        if (cmd_cluster->parsed())
            return run_mode(cluster_flags, cmd_cluster, PipelineMode::Cluster);
        if (cmd_sweep->parsed()) return run_mode(sweep_flags, cmd_sweep, PipelineMode::Sweep);
        if (cmd_analyze->parsed())
            return run_mode(analyze_flags, cmd_analyze, PipelineMode::Analyze);
        if (cmd_synth->parsed()) return run_synth(cmd_synth, synth_spec, synth_out);
    } catch (const ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const StageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.is_parse_failure() ? 2 : 3;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
