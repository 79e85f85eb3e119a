#pragma once

// Shared test fixtures: compact log construction and a seeded random-log
// generator used by the property tests and the acceptance suite.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "tailmine/event_log.hpp"

namespace testutil {

struct Ev {
    std::string activity;
    tailmine::TimestampMs ts = 0;
    std::string resource = "r1";
    std::string lifecycle;
    bool contact = false;
};

inline tailmine::Case make_case(std::string id, const std::vector<Ev>& evs) {
    tailmine::Case c;
    c.case_id = std::move(id);
    for (const auto& e : evs) {
        tailmine::Event ev;
        ev.activity = e.activity;
        ev.timestamp = e.ts;
        ev.resource = e.resource;
        ev.lifecycle = e.lifecycle;
        ev.customer_contact = e.contact;
        c.events.push_back(std::move(ev));
    }
    tailmine::sort_events(c);
    return c;
}

inline tailmine::EventLog make_log(std::vector<tailmine::Case> cases) {
    tailmine::EventLog log;
    log.cases = std::move(cases);
    log.source_meta = {"synthetic", "test"};
    log.rebuild_index();
    return log;
}

struct RandomLogParams {
    std::size_t max_cases = 50;
    std::size_t max_events = 15;
    std::size_t alphabet = 8;
    std::size_t resources = 5;
    double contact_prob = 0.3;
    bool lifecycle = false;  // emit start/complete transitions
};

inline tailmine::EventLog random_log(std::mt19937_64& rng, const RandomLogParams& p = {}) {
    auto below = [&](std::size_t bound) { return static_cast<std::size_t>(rng() % bound); };
    std::size_t n_cases = 1 + below(p.max_cases);
    std::vector<tailmine::Case> cases;
    for (std::size_t ci = 0; ci < n_cases; ++ci) {
        tailmine::Case c;
        c.case_id = "case" + std::to_string(ci);
        std::size_t n_events = 1 + below(p.max_events);
        tailmine::TimestampMs ts =
            1600000000000 + static_cast<tailmine::TimestampMs>(ci) * 1000000;
        for (std::size_t ei = 0; ei < n_events; ++ei) {
            tailmine::Event e;
            e.activity = "a" + std::to_string(below(p.alphabet));
            e.timestamp = ts;
            e.resource = "r" + std::to_string(below(p.resources));
            e.customer_contact = (rng() % 1000) < static_cast<std::uint64_t>(p.contact_prob * 1000);
            if (p.lifecycle) e.lifecycle = (rng() % 2) ? "start" : "complete";
            c.events.push_back(std::move(e));
            ts += static_cast<tailmine::TimestampMs>(below(100000));
        }
        cases.push_back(std::move(c));
    }
    return make_log(std::move(cases));
}

} // namespace testutil
