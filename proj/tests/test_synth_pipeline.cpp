#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "tailmine/csv_log.hpp"
#include "tailmine/distance.hpp"
#include "tailmine/errors.hpp"
#include "tailmine/pipeline.hpp"
#include "tailmine/synth.hpp"
#include "tailmine/ward.hpp"

using namespace tailmine;
namespace fs = std::filesystem;

TEST_SUITE_BEGIN("synth_pipeline");

namespace {

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    REQUIRE(in);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

struct TempDir {
    fs::path path;
    explicit TempDir(const std::string& name) : path(fs::temp_directory_path() / name) {
        fs::remove_all(path);
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
};

} // namespace

TEST_CASE("same seed, same log; different seed, different log") {
    SynthSpec spec;
    spec.total_cases = 60;
    spec.variant_templates = 6;
    auto a = generate_synthetic_log(spec);
    auto b = generate_synthetic_log(spec);
    CHECK(a.log.cases == b.log.cases);
    CHECK(a.template_of_case == b.template_of_case);

    spec.seed = 43;
    auto c = generate_synthetic_log(spec);
    CHECK(a.log.cases != c.log.cases);
}

TEST_CASE("V=1: all cases share one sequence; k=1 groups everything") {
    SynthSpec spec;
    spec.variant_templates = 1;
    spec.total_cases = 10;
    auto r = generate_synthetic_log(spec);
    REQUIRE(r.log.case_count() == 10);
    for (const auto& c : r.log.cases) {
        REQUIRE(c.events.size() == r.templates[0].size());
        for (std::size_t i = 0; i < c.events.size(); ++i)
            CHECK(c.events[i].activity == r.templates[0][i]);
    }
    auto fm = build_vector_space(r.log, NGramConfig{});
    auto dg = ward_cluster(fm);
    auto cut = cut_dendrogram(dg, 1);
    CHECK(cut.cluster_sizes == std::vector<std::size_t>{10});
    for (const auto& m : dg.merges) CHECK(m.height == 0.0);
}

TEST_CASE("zipf allocation: counts sum to N, every template occupied, head share right") {
    SynthSpec spec;  // V=20, N=500, exponent 1.0
    auto r = generate_synthetic_log(spec);
    std::size_t sum = 0;
    for (auto c : r.template_case_counts) {
        CHECK(c >= 1);
        sum += c;
    }
    CHECK(sum == 500);
    // Largest-remainder allocation stays within one case of N * mass.
    auto masses = zipf_masses(20, 1.0);
    CHECK(std::abs(double(r.template_case_counts[0]) - 500.0 * masses[0]) <= 1.0);
    // Zipf(1.0) over 20 templates gives the top template ~27.8% of the mass.
    double share = double(r.template_case_counts[0]) / 500.0;
    CHECK(share == doctest::Approx(masses[0]).epsilon(0.02));
}

TEST_CASE("contact flags follow the labeled fraction") {
    SynthSpec spec;
    spec.contact_fraction = 0.5;
    spec.total_cases = 50;
    spec.variant_templates = 5;
    auto r = generate_synthetic_log(spec);
    bool saw_contact = false;
    for (const auto& c : r.log.cases)
        for (const auto& e : c.events) {
            CHECK(e.customer_contact == (e.activity.rfind("contact_", 0) == 0));
            saw_contact |= e.customer_contact;
        }
    CHECK(saw_contact);
}

TEST_CASE("template recovery at k=V on the reference spec") {
    SynthSpec spec;  // seed 42, V=20, N=500
    auto r = generate_synthetic_log(spec);
    auto fm = build_vector_space(r.log, NGramConfig{});
    auto dg = ward_cluster(fm);
    auto cut = cut_dendrogram(dg, 20);

    // Every cluster holds exactly the cases of one template.
    std::map<std::uint32_t, std::set<std::uint32_t>> cluster_templates;
    for (std::size_t i = 0; i < cut.labels.size(); ++i)
        cluster_templates[cut.labels[i]].insert(r.template_of_case[i]);
    CHECK(cluster_templates.size() == 20);
    for (const auto& [cl, tmpls] : cluster_templates) CHECK(tmpls.size() == 1);

    // Cluster sizes equal the generator counts (as multisets).
    std::multiset<std::size_t> got(cut.cluster_sizes.begin(), cut.cluster_sizes.end());
    std::multiset<std::size_t> want(r.template_case_counts.begin(),
                                    r.template_case_counts.end());
    CHECK(got == want);
}

TEST_CASE("invalid specs are rejected") {
    SynthSpec spec;
    spec.variant_templates = 0;
    CHECK_THROWS_AS(generate_synthetic_log(spec), ConfigError);
    spec = SynthSpec{};
    spec.total_cases = 5;
    spec.variant_templates = 10;
    CHECK_THROWS_AS(generate_synthetic_log(spec), ConfigError);
    spec = SynthSpec{};
    spec.zipf_exponent = 0.0;
    CHECK_THROWS_AS(generate_synthetic_log(spec), ConfigError);
}

TEST_CASE("analyze pipeline end to end on a synthetic log") {
    TempDir tmp("tailmine_test_pipeline");
    SynthSpec spec;
    spec.total_cases = 120;
    spec.variant_templates = 8;
    auto synth = generate_synthetic_log(spec);
    fs::path input = tmp.path / "log.csv";
    {
        std::ofstream out(input, std::ios::binary);
        write_csv_log(out, synth.log);
    }

    PipelineConfig cfg;
    cfg.input_path = input.string();
    cfg.format = "csv";
    cfg.contact_rule.mode = CustomerContactRule::Mode::ActivityPatterns;
    cfg.contact_rule.patterns = {"contact_*"};
    cfg.k = 8;
    cfg.out_dir = (tmp.path / "out").string();
    cfg.threads = 1;

    auto summary = run_pipeline(cfg);
    CHECK(summary.cases == 120);
    CHECK(summary.k == 8);
    CHECK(summary.head_size == 2);  // ceil(0.2 * 8)
    CHECK(summary.aggregate_head_share + summary.aggregate_tail_share ==
          doctest::Approx(100.0).epsilon(1e-9));

    for (const char* name :
         {"resolved_config.json", "parse_report.json", "drop_report.json", "stats.json",
          "stats.csv", "dendrogram.json", "linkage.csv", "elbow.csv", "clusters.csv",
          "indicators.json", "indicators.csv", "report.json", "distribution_ef.csv",
          "distribution_aggregate_score.csv"})
        CHECK(fs::exists(tmp.path / "out" / name));
}

TEST_CASE("rerun with the same config is byte-identical") {
    TempDir tmp("tailmine_test_determinism");
    SynthSpec spec;
    spec.total_cases = 80;
    spec.variant_templates = 6;
    auto synth = generate_synthetic_log(spec);
    fs::path input = tmp.path / "log.csv";
    {
        std::ofstream out(input, std::ios::binary);
        write_csv_log(out, synth.log);
    }

    PipelineConfig cfg;
    cfg.input_path = input.string();
    cfg.format = "csv";
    cfg.k = 6;

    cfg.out_dir = (tmp.path / "out1").string();
    cfg.threads = 1;
    auto s1 = run_pipeline(cfg);
    cfg.out_dir = (tmp.path / "out2").string();
    cfg.threads = 4;  // results must not depend on thread count
    auto s2 = run_pipeline(cfg);

    for (const auto& f1 : s1.written_files) {
        fs::path p1(f1);
        if (p1.filename() == "resolved_config.json") continue;  // echoes out_dir/threads
        fs::path p2 = fs::path(cfg.out_dir) / p1.filename();
        CHECK_MESSAGE(slurp(p1) == slurp(p2), "differs: ", p1.filename().string());
    }
}

TEST_CASE("k larger than the case count fails naming cut_dendrogram") {
    TempDir tmp("tailmine_test_bigk");
    SynthSpec spec;
    spec.total_cases = 10;
    spec.variant_templates = 3;
    auto synth = generate_synthetic_log(spec);
    fs::path input = tmp.path / "log.csv";
    {
        std::ofstream out(input, std::ios::binary);
        write_csv_log(out, synth.log);
    }
    PipelineConfig cfg;
    cfg.input_path = input.string();
    cfg.format = "csv";
    cfg.k = 999;
    cfg.out_dir = (tmp.path / "out").string();
    try {
        run_pipeline(cfg);
        FAIL("expected StageError");
    } catch (const StageError& e) {
        CHECK(e.stage() == "cut_dendrogram");
        CHECK(std::string(e.what()).find("cut_dendrogram") != std::string::npos);
        // Partial outputs were removed.
        CHECK(!fs::exists(tmp.path / "out" / "stats.json"));
    }
}

TEST_CASE("missing input fails in the parse stage with parse classification") {
    TempDir tmp("tailmine_test_noinput");
    PipelineConfig cfg;
    cfg.input_path = (tmp.path / "nope.csv").string();
    cfg.format = "csv";
    cfg.k = 2;
    cfg.out_dir = (tmp.path / "out").string();
    try {
        run_pipeline(cfg);
        FAIL("expected StageError");
    } catch (const StageError& e) {
        CHECK(e.stage() == "parse");
        CHECK(e.is_parse_failure());
    }
}

TEST_CASE("stats mode works on an XES input") {
    TempDir tmp("tailmine_test_xes_pipeline");
    fs::path input = tmp.path / "tiny.xes";
    {
        std::ofstream out(input, std::ios::binary);
        out << R"(<log>
          <trace><string key="concept:name" value="t1"/>
            <event><string key="concept:name" value="open"/>
                   <date key="time:timestamp" value="2020-01-01T00:00:00Z"/></event>
            <event><string key="concept:name" value="mail to customer"/>
                   <date key="time:timestamp" value="2020-01-01T01:00:00Z"/></event>
            <event><string key="concept:name" value="closed"/>
                   <date key="time:timestamp" value="2020-01-01T02:00:00Z"/></event>
          </trace>
          <trace><string key="concept:name" value="t2"/>
            <event><string key="concept:name" value="open"/>
                   <date key="time:timestamp" value="2020-01-02T00:00:00Z"/></event>
            <event><string key="concept:name" value="closed"/>
                   <date key="time:timestamp" value="2020-01-02T00:30:00Z"/></event>
          </trace>
        </log>)";
    }
    PipelineConfig cfg;
    cfg.input_path = input.string();
    cfg.format = "xes";
    cfg.contact_rule.mode = CustomerContactRule::Mode::ActivityPatterns;
    cfg.contact_rule.patterns = {"*customer*"};
    cfg.out_dir = (tmp.path / "out").string();
    auto summary = run_pipeline(cfg, PipelineMode::Stats);
    CHECK(summary.cases == 2);
    CHECK(summary.events == 5);
    CHECK(fs::exists(tmp.path / "out" / "stats.json"));
    std::string stats = slurp(tmp.path / "out" / "stats.json");
    CHECK(stats.find("\"case_count\": 2") != std::string::npos);
}

TEST_CASE("cluster mode can dump feature and distance matrices") {
    TempDir tmp("tailmine_test_dumps");
    SynthSpec spec;
    spec.total_cases = 12;
    spec.variant_templates = 3;
    auto synth = generate_synthetic_log(spec);
    fs::path input = tmp.path / "log.csv";
    {
        std::ofstream out(input, std::ios::binary);
        write_csv_log(out, synth.log);
    }
    PipelineConfig cfg;
    cfg.input_path = input.string();
    cfg.format = "csv";
    cfg.k = 3;
    cfg.dump_features = true;
    cfg.dump_distances = true;
    cfg.out_dir = (tmp.path / "out").string();
    run_pipeline(cfg, PipelineMode::Cluster);
    REQUIRE(fs::exists(tmp.path / "out" / "features.csv"));
    REQUIRE(fs::exists(tmp.path / "out" / "distances.csv"));
    // Header carries case ids; the matrix is square with a zero diagonal.
    std::istringstream dist(slurp(tmp.path / "out" / "distances.csv"));
    std::string header, first;
    std::getline(dist, header);
    std::getline(dist, first);
    CHECK(header.rfind("case_id,case_000000", 0) == 0);
    CHECK(first.rfind("case_000000,0,", 0) == 0);
}

TEST_CASE("config json round-trips through load") {
    TempDir tmp("tailmine_test_config");
    PipelineConfig cfg;
    cfg.input_path = "some.xes";
    cfg.format = "xes";
    cfg.k = 17;
    cfg.k_sweep = {{4, 9}};
    cfg.pareto_fraction = 0.25;
    cfg.duration_mode = DurationMode::LifecyclePair;
    cfg.contact_rule.mode = CustomerContactRule::Mode::ActivityPatterns;
    cfg.contact_rule.patterns = {"*customer*", "call*"};
    cfg.preprocess.min_events = 2;
    cfg.preprocess.required_start_activities = {"open"};
    cfg.ngram.sizes = {1, 2};
    cfg.ngram.boundary_sentinels = false;
    cfg.strict = true;
    cfg.threads = 3;
    cfg.seed = 99;

    fs::path p = tmp.path / "config.json";
    {
        std::ofstream out(p);
        out << pipeline_config_to_json(cfg);
    }
    auto loaded = load_pipeline_config(p.string());
    CHECK(loaded.input_path == cfg.input_path);
    CHECK(loaded.k == cfg.k);
    CHECK(loaded.k_sweep == cfg.k_sweep);
    CHECK(loaded.pareto_fraction == cfg.pareto_fraction);
    CHECK(loaded.duration_mode == cfg.duration_mode);
    CHECK(loaded.contact_rule.patterns == cfg.contact_rule.patterns);
    CHECK(loaded.preprocess.min_events == cfg.preprocess.min_events);
    CHECK(loaded.preprocess.required_start_activities ==
          cfg.preprocess.required_start_activities);
    CHECK(loaded.ngram.sizes == cfg.ngram.sizes);
    CHECK(loaded.ngram.boundary_sentinels == cfg.ngram.boundary_sentinels);
    CHECK(loaded.strict == cfg.strict);
    CHECK(loaded.threads == cfg.threads);
    CHECK(loaded.seed == cfg.seed);
}

TEST_SUITE_END();
