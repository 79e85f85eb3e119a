#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "helpers.hpp"
#include "oracles/brute_indicators.hpp"
#include "tailmine/errors.hpp"
#include "tailmine/indicators.hpp"

using namespace tailmine;
using testutil::Ev;

TEST_SUITE_BEGIN("indicators");

namespace {

ClusterView view_of(const EventLog& log, const std::vector<std::size_t>& idx) {
    ClusterView v;
    for (auto i : idx) v.push_back(&log.cases[i]);
    return v;
}

// Random valid assignment: k non-empty clusters over the log's cases.
ClusterAssignment random_assignment(std::mt19937_64& rng, std::size_t n_cases) {
    std::size_t k = 1 + rng() % n_cases;
    ClusterAssignment ca;
    ca.k = k;
    ca.labels.resize(n_cases);
    // Guarantee non-empty clusters by seeding one case per cluster.
    std::vector<std::size_t> order(n_cases);
    for (std::size_t i = 0; i < n_cases; ++i) order[i] = i;
    std::shuffle(order.begin(), order.end(), rng);
    for (std::size_t g = 0; g < k; ++g) ca.labels[order[g]] = static_cast<std::uint32_t>(g);
    for (std::size_t i = k; i < n_cases; ++i)
        ca.labels[order[i]] = static_cast<std::uint32_t>(rng() % k);
    ca.cluster_sizes.assign(k, 0);
    for (auto l : ca.labels) ++ca.cluster_sizes[l];
    return ca;
}

constexpr double kHour = 3600.0;

} // namespace

TEST_CASE("execution frequency counts cases") {
    auto log = testutil::make_log({testutil::make_case("c1", {Ev{"a", 0}}),
                                   testutil::make_case("c2", {Ev{"a", 0}}),
                                   testutil::make_case("c3", {Ev{"a", 0}})});
    CHECK(execution_frequency(view_of(log, {0, 1, 2})) == 3.0);
    CHECK(execution_frequency(view_of(log, {0})) == 1.0);
    CHECK_THROWS_AS(execution_frequency({}), AnalysisError);
}

TEST_CASE("resource utilization from inverse involvements") {
    // Resource r executes 4 activities log-wide; cluster is one 2-event case.
    auto log = testutil::make_log(
        {testutil::make_case("c1", {Ev{"a", 0, "r"}, Ev{"b", 1, "r"}}),
         testutil::make_case("c2", {Ev{"a", 0, "r"}, Ev{"b", 1, "r"}})});
    auto reg = ResourceRegistry::build(log);
    CHECK(resource_utilization(view_of(log, {0}), reg) == doctest::Approx(0.25).epsilon(1e-12));

    // Every resource executes exactly one activity -> RU = 1.
    auto log2 = testutil::make_log(
        {testutil::make_case("c1", {Ev{"a", 0, "r1"}, Ev{"b", 1, "r2"}})});
    CHECK(resource_utilization(view_of(log2, {0}), ResourceRegistry::build(log2)) == 1.0);
}

TEST_CASE("resource utilization with costs is the mean cost") {
    auto log = testutil::make_log(
        {testutil::make_case("c1", {Ev{"a", 0, "r"}, Ev{"b", 1, "r"}})});
    auto reg = ResourceRegistry::build(log, {{"r", 10.0}});
    CHECK(resource_utilization(view_of(log, {0}), reg) == 10.0);

    // Cost table must cover every resource in the log.
    auto log2 = testutil::make_log(
        {testutil::make_case("c1", {Ev{"a", 0, "r"}, Ev{"b", 1, "other"}})});
    CHECK_THROWS_AS(ResourceRegistry::build(log2, {{"r", 10.0}}), ConfigError);
}

TEST_CASE("customer contacts fraction") {
    auto log = testutil::make_log({testutil::make_case(
        "c1", {Ev{"a", 0, "r", "", true}, Ev{"b", 1}, Ev{"c", 2, "r", "", true}, Ev{"d", 3}})});
    CHECK(customer_contacts(view_of(log, {0})) == doctest::Approx(0.5).epsilon(1e-12));

    auto none = testutil::make_log({testutil::make_case("c1", {Ev{"a", 0}})});
    CHECK(customer_contacts(view_of(none, {0})) == 0.0);
    auto all = testutil::make_log(
        {testutil::make_case("c1", {Ev{"a", 0, "r", "", true}, Ev{"b", 1, "r", "", true}})});
    CHECK(customer_contacts(view_of(all, {0})) == 1.0);
}

TEST_CASE("activity duration variance kernel: spec example") {
    // Durations {2h, 4h} of one activity over two single-event cases:
    // T_min = 2h, AV = (0 + 7200^2) / 2.
    std::vector<EventDuration> durations = {{"x", 2 * kHour}, {"x", 4 * kHour}};
    CHECK(duration_variance_from_min(durations) == doctest::Approx(25920000.0).epsilon(1e-12));
}

TEST_CASE("duration variance is shift-invariant per activity") {
    std::mt19937_64 rng(3);
    for (int iter = 0; iter < 20; ++iter) {
        std::vector<EventDuration> durations;
        std::size_t n = 2 + rng() % 10;
        for (std::size_t i = 0; i < n; ++i)
            durations.push_back({"a" + std::to_string(rng() % 3),
                                 static_cast<double>(rng() % 1000)});
        double before = duration_variance_from_min(durations);
        double shift = static_cast<double>(rng() % 500);
        for (auto& d : durations)
            if (d.activity == "a0") d.seconds += shift;
        CHECK(duration_variance_from_min(durations) == doctest::Approx(before).epsilon(1e-9));
    }
}

TEST_CASE("activity duration variance: constant durations give zero") {
    // Every activity always takes the same time. The final event carries the
    // zero next-event duration, so it gets its own label.
    auto log = testutil::make_log(
        {testutil::make_case("c1", {Ev{"a", 0}, Ev{"b", 1000}, Ev{"a", 2000}, Ev{"end", 3000}}),
         testutil::make_case("c2", {Ev{"a", 0}, Ev{"b", 1000}, Ev{"a", 2000}, Ev{"end", 3000}})});
    CHECK(activity_duration_variance(view_of(log, {0, 1}), DurationMode::NextEvent) == 0.0);
}

TEST_CASE("execution time variance") {
    // Case durations {1s, 3s}: AD = 2, ETV = 1.
    auto log = testutil::make_log({testutil::make_case("c1", {Ev{"a", 0}, Ev{"b", 1000}}),
                                   testutil::make_case("c2", {Ev{"a", 0}, Ev{"b", 3000}})});
    CHECK(execution_time_variance(view_of(log, {0, 1}), DurationMode::NextEvent) ==
          doctest::Approx(1.0).epsilon(1e-12));
    // Equal durations and single cases give zero.
    CHECK(execution_time_variance(view_of(log, {0}), DurationMode::NextEvent) == 0.0);
    auto eq = testutil::make_log({testutil::make_case("c1", {Ev{"a", 0}, Ev{"b", 5000}}),
                                  testutil::make_case("c2", {Ev{"a", 100}, Ev{"b", 5100}})});
    CHECK(execution_time_variance(view_of(eq, {0, 1}), DurationMode::NextEvent) == 0.0);
}

TEST_CASE("execution redundancies counts distinct duplicated pairs per case") {
    auto abc = testutil::make_log(
        {testutil::make_case("c1", {Ev{"a", 0}, Ev{"b", 1}, Ev{"c", 2}})});
    CHECK(execution_redundancies(view_of(abc, {0})) == 0.0);

    auto ababa = testutil::make_log({testutil::make_case(
        "c1", {Ev{"a", 0}, Ev{"b", 1}, Ev{"a", 2}, Ev{"b", 3}, Ev{"a", 4}})});
    CHECK(execution_redundancies(view_of(ababa, {0})) == 2.0);

    auto aaa = testutil::make_log(
        {testutil::make_case("c1", {Ev{"a", 0}, Ev{"a", 1}, Ev{"a", 2}})});
    CHECK(execution_redundancies(view_of(aaa, {0})) == 1.0);
}

TEST_CASE("the rejected occurrence-counting reading differs on loops") {
    auto ababa = testutil::make_log({testutil::make_case(
        "c1", {Ev{"a", 0}, Ev{"b", 1}, Ev{"a", 2}, Ev{"b", 3}, Ev{"a", 4}})});
    CHECK(execution_redundancies(view_of(ababa, {0})) == 2.0);          // set semantics
    CHECK(testutil::brute_er_occurrences(ababa, {0}) == 4.0);           // occurrence semantics
}

TEST_CASE("shared activity contexts") {
    // Log of one trace [a,b,c]: every activity has exactly one context.
    auto abc = testutil::make_log(
        {testutil::make_case("c1", {Ev{"a", 0}, Ev{"b", 1}, Ev{"c", 2}})});
    CHECK(shared_activity_contexts(view_of(abc, {0}), ContextIndex::build(abc)) == 1.0);

    // Activity x with 2 log-wide contexts; cluster holds only x events.
    auto log = testutil::make_log({testutil::make_case("c1", {Ev{"x", 0}}),
                                   testutil::make_case("c2", {Ev{"a", 0}, Ev{"x", 1}})});
    auto ctx = ContextIndex::build(log);
    CHECK(ctx.context_count("x") == 2);
    CHECK(shared_activity_contexts(view_of(log, {0}), ctx) == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("stakeholder involvement is the inverse distinct-resource count") {
    auto log = testutil::make_log(
        {testutil::make_case("c1", {Ev{"a", 0, "r1"}, Ev{"b", 1, "r2"}}),
         testutil::make_case("c2", {Ev{"a", 0, "r2"}, Ev{"b", 1, "r3"}})});
    CHECK(stakeholder_involvement(view_of(log, {0, 1})) == doctest::Approx(1.0 / 3).epsilon(1e-12));
    CHECK(stakeholder_involvement(view_of(log, {0})) == 0.5);

    auto one = testutil::make_log({testutil::make_case("c1", {Ev{"a", 0, "only"}})});
    CHECK(stakeholder_involvement(view_of(one, {0})) == 1.0);

    auto four = testutil::make_log({testutil::make_case(
        "c1", {Ev{"a", 0, "r1"}, Ev{"a", 1, "r2"}, Ev{"a", 2, "r3"}, Ev{"a", 3, "r4"}})});
    CHECK(stakeholder_involvement(view_of(four, {0})) == 0.25);
}

TEST_CASE("process length is the inverse mean case length") {
    auto log = testutil::make_log(
        {testutil::make_case("c1", {Ev{"a", 0}, Ev{"b", 1}}),
         testutil::make_case("c2", {Ev{"a", 0}, Ev{"b", 1}, Ev{"c", 2}, Ev{"d", 3}})});
    CHECK(process_length(view_of(log, {0, 1})) == doctest::Approx(1.0 / 3).epsilon(1e-12));

    auto ones = testutil::make_log({testutil::make_case("c1", {Ev{"a", 0}}),
                                    testutil::make_case("c2", {Ev{"b", 0}})});
    CHECK(process_length(view_of(ones, {0, 1})) == 1.0);

    // Single 178-event case.
    std::vector<Ev> long_trace;
    for (int i = 0; i < 178; ++i) long_trace.push_back(Ev{"a" + std::to_string(i % 7), i * 1000});
    auto bpi_like = testutil::make_log({testutil::make_case("c1", long_trace)});
    CHECK(process_length(view_of(bpi_like, {0})) == doctest::Approx(1.0 / 178).epsilon(1e-12));
}

TEST_CASE("k=1 table equals whole-log values; EF partitions the case count") {
    std::mt19937_64 rng(5);
    auto log = testutil::random_log(rng, {.max_cases = 20, .max_events = 8});
    auto reg = ResourceRegistry::build(log);
    auto ctx = ContextIndex::build(log);

    ClusterAssignment whole;
    whole.k = 1;
    whole.labels.assign(log.case_count(), 0);
    whole.cluster_sizes = {log.case_count()};
    auto table = compute_indicator_table(log, whole, reg, ctx, DurationMode::NextEvent);
    REQUIRE(table.rows.size() == 1);
    std::vector<std::size_t> all;
    for (std::size_t i = 0; i < log.case_count(); ++i) all.push_back(i);
    CHECK(table.rows[0].ef == execution_frequency(view_of(log, all)));
    CHECK(table.rows[0].sac ==
          doctest::Approx(shared_activity_contexts(view_of(log, all), ctx)).epsilon(1e-12));

    for (int iter = 0; iter < 10; ++iter) {
        auto ca = random_assignment(rng, log.case_count());
        auto t = compute_indicator_table(log, ca, reg, ctx, DurationMode::NextEvent);
        double ef_sum = 0.0;
        for (const auto& row : t.rows) ef_sum += row.ef;
        CHECK(ef_sum == static_cast<double>(log.case_count()));
    }
}

TEST_CASE("matches the brute-force oracle on random logs and clusterings") {
    std::mt19937_64 rng(7);
    for (int iter = 0; iter < 30; ++iter) {
        testutil::RandomLogParams params;
        params.max_cases = 20;
        params.max_events = 10;
        params.lifecycle = (iter % 3 == 0);
        auto log = testutil::random_log(rng, params);
        DurationMode mode =
            (iter % 3 == 0) ? DurationMode::LifecyclePair : DurationMode::NextEvent;
        auto reg = ResourceRegistry::build(log);
        auto ctx = ContextIndex::build(log);
        auto ca = random_assignment(rng, log.case_count());
        auto table = compute_indicator_table(log, ca, reg, ctx, mode);

        for (std::size_t g = 0; g < ca.k; ++g) {
            std::vector<std::size_t> members;
            for (std::size_t i = 0; i < ca.labels.size(); ++i)
                if (ca.labels[i] == g) members.push_back(i);
            auto brute = testutil::brute_indicators(log, members, mode);
            const auto& row = table.rows[g];
            CHECK(row.ef == brute.ef);
            CHECK(row.er == brute.er);
            auto close = [](double a, double b) {
                return std::abs(a - b) <= 1e-9 * std::max({1.0, std::abs(a), std::abs(b)});
            };
            CHECK(close(row.ru, brute.ru));
            CHECK(close(row.cc, brute.cc));
            CHECK(close(row.av, brute.av));
            CHECK(close(row.etv, brute.etv));
            CHECK(close(row.sac, brute.sac));
            CHECK(close(row.s, brute.s));
            CHECK(close(row.l, brute.l));
        }
    }
}

TEST_CASE("timestamp-shifted copies of one template give zero AV and ETV") {
    // Template with distinct activities (repeats with unequal gaps would make
    // the per-activity minimum a cross-position mix and AV > 0 by definition).
    std::mt19937_64 rng(11);
    for (int iter = 0; iter < 10; ++iter) {
        std::size_t len = 2 + rng() % 6;
        std::vector<TimestampMs> gaps;
        for (std::size_t i = 0; i + 1 < len; ++i)
            gaps.push_back(static_cast<TimestampMs>(1000 + rng() % 100000));
        std::vector<Case> cases;
        for (int c = 0; c < 4; ++c) {
            TimestampMs ts = 1600000000000 + c * 86400000;
            std::vector<Ev> evs;
            for (std::size_t i = 0; i < len; ++i) {
                evs.push_back(Ev{"act" + std::to_string(i), ts});
                if (i + 1 < len) ts += gaps[i];
            }
            cases.push_back(testutil::make_case("c" + std::to_string(c), evs));
        }
        auto log = testutil::make_log(std::move(cases));
        std::vector<std::size_t> all = {0, 1, 2, 3};
        CHECK(activity_duration_variance(view_of(log, all), DurationMode::NextEvent) == 0.0);
        CHECK(execution_time_variance(view_of(log, all), DurationMode::NextEvent) == 0.0);
    }
}

TEST_CASE("indicators are invariant under activity relabeling, except CC") {
    std::mt19937_64 rng(13);
    auto log = testutil::random_log(rng, {.max_cases = 15, .max_events = 8});
    auto reg = ResourceRegistry::build(log);
    auto ca = random_assignment(rng, log.case_count());
    auto before =
        compute_indicator_table(log, ca, reg, ContextIndex::build(log), DurationMode::NextEvent);

    // Bijective renaming a<i> -> z<i>.
    EventLog renamed = log;
    for (auto& c : renamed.cases)
        for (auto& e : c.events) e.activity = "z" + e.activity.substr(1);
    renamed.rebuild_index();
    auto after = compute_indicator_table(renamed, ca, ResourceRegistry::build(renamed),
                                         ContextIndex::build(renamed), DurationMode::NextEvent);
    for (std::size_t g = 0; g < ca.k; ++g) {
        CHECK(before.rows[g].ef == after.rows[g].ef);
        CHECK(before.rows[g].ru == after.rows[g].ru);
        CHECK(before.rows[g].av == after.rows[g].av);
        CHECK(before.rows[g].etv == after.rows[g].etv);
        CHECK(before.rows[g].er == after.rows[g].er);
        CHECK(before.rows[g].sac == after.rows[g].sac);
        CHECK(before.rows[g].s == after.rows[g].s);
        CHECK(before.rows[g].l == after.rows[g].l);
    }
}

TEST_CASE("range invariants hold on random inputs (property)") {
    std::mt19937_64 rng(17);
    for (int iter = 0; iter < 20; ++iter) {
        auto log = testutil::random_log(rng, {.max_cases = 25, .max_events = 10});
        auto reg = ResourceRegistry::build(log);
        auto ctx = ContextIndex::build(log);
        auto ca = random_assignment(rng, log.case_count());
        auto table = compute_indicator_table(log, ca, reg, ctx, DurationMode::NextEvent);
        for (const auto& row : table.rows) {
            CHECK(row.cc >= 0.0);
            CHECK(row.cc <= 1.0);
            CHECK(row.sac > 0.0);
            CHECK(row.sac <= 1.0);
            CHECK(row.s > 0.0);
            CHECK(row.s <= 1.0);
            CHECK(row.l > 0.0);
            CHECK(row.l <= 1.0);
            CHECK(row.av >= 0.0);
            CHECK(row.etv >= 0.0);
            CHECK(row.er >= 0.0);
            // Without costs, 0 < RU <= 1.
            CHECK(row.ru > 0.0);
            CHECK(row.ru <= 1.0);
        }
    }
}

TEST_CASE("mismatched assignment is rejected") {
    auto log = testutil::make_log({testutil::make_case("c1", {Ev{"a", 0}})});
    ClusterAssignment ca;
    ca.k = 2;
    ca.labels = {0, 1};  // two labels, one case
    ca.cluster_sizes = {1, 1};
    CHECK_THROWS_AS(compute_indicator_table(log, ca, ResourceRegistry::build(log),
                                            ContextIndex::build(log), DurationMode::NextEvent),
                    AnalysisError);
}

TEST_SUITE_END();
