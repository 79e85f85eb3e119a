#pragma once

#include <optional>
#include <set>
#include <string>

#include "tailmine/event_log.hpp"

namespace tailmine {

// Case-retention criteria applied before analysis. Empty sets / unset fields
// disable the corresponding criterion.
struct PreprocessSpec {
    std::set<std::string> required_start_activities;  // case must contain >=1 of these
    std::set<std::string> required_end_activities;    // and >=1 of these
    std::size_t min_events = 1;
    std::optional<TimestampMs> window_from;  // first event must fall inside
    std::optional<TimestampMs> window_to;

    void validate() const;
    bool enabled() const;
};

// Drop counts per reason. A case failing several criteria is attributed to the
// first failing one, checked in the order below.
struct DropReport {
    std::size_t input_cases = 0;
    std::size_t retained_cases = 0;
    std::size_t missing_required_start = 0;
    std::size_t missing_required_end = 0;
    std::size_t too_few_events = 0;
    std::size_t outside_window = 0;
    bool empty_result = false;

    std::size_t total_dropped() const {
        return missing_required_start + missing_required_end + too_few_events + outside_window;
    }
};

struct PreprocessResult {
    EventLog log;
    DropReport report;
};

// Keeps only cases satisfying every enabled criterion. Idempotent. An empty
// result is not an error here; downstream operations reject empty logs.
PreprocessResult preprocess(const EventLog& log, const PreprocessSpec& spec);

} // namespace tailmine
