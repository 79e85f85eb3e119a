#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "tailmine/timestamp.hpp"

namespace tailmine {

// Sentinel resource label for events that carry no resource information.
// It participates in resource counts as a single ordinary label, which keeps
// the resource-based indicators total functions.
inline const std::string kUnknownResource = "__UNKNOWN_RESOURCE__";

// Scalar attribute payload. Instants are stored as TimestampMs.
struct InstantValue {
    TimestampMs ms = 0;
    bool operator==(const InstantValue&) const = default;
};
using AttributeValue = std::variant<std::string, std::int64_t, double, bool, InstantValue>;

std::string attribute_to_string(const AttributeValue& v);

struct Event {
    std::string activity;                     // non-empty
    TimestampMs timestamp = 0;                // UTC milliseconds
    std::string resource = kUnknownResource;  // label or kUnknownResource
    std::string lifecycle;                    // empty when absent
    bool customer_contact = false;
    std::map<std::string, AttributeValue> extra_attributes;

    bool operator==(const Event&) const = default;
};

struct Case {
    std::string case_id;
    std::vector<Event> events;  // sorted by (timestamp, original order), non-empty

    std::size_t length() const { return events.size(); }
    TimestampMs start() const { return events.front().timestamp; }
    TimestampMs end() const { return events.back().timestamp; }

    bool operator==(const Case&) const = default;
};

struct SourceMeta {
    std::string format;  // "xes", "csv", "synthetic"
    std::string file;    // file path or generator tag
};

struct EventLog {
    std::vector<Case> cases;
    std::set<std::string> activity_alphabet;
    std::set<std::string> resource_set;
    SourceMeta source_meta;

    std::size_t case_count() const { return cases.size(); }
    std::size_t event_count() const;

    // Recomputes activity_alphabet and resource_set from the cases.
    void rebuild_index();
    // Checks all Event/Case/EventLog invariants; throws AnalysisError on violation.
    void validate() const;
};

// Stable sort of a case's events by (timestamp, original index).
void sort_events(Case& c);

// Warnings collected during lenient parsing.
struct ParseReport {
    std::vector<std::string> warnings;
    std::size_t dropped_events = 0;
    std::size_t dropped_traces = 0;
    std::size_t raw_event_count = 0;  // events seen in the input before any drop
};

struct ParsedLog {
    EventLog log;
    ParseReport report;
};

} // namespace tailmine
