#include "tailmine/event_log.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "tailmine/errors.hpp"

namespace tailmine {

std::string attribute_to_string(const AttributeValue& v) {
    struct Visitor {
        std::string operator()(const std::string& s) const { return s; }
        std::string operator()(std::int64_t i) const { return std::to_string(i); }
        std::string operator()(double d) const {
            char buf[32];
            std::snprintf(buf, sizeof buf, "%.17g", d);
            return buf;
        }
        std::string operator()(bool b) const { return b ? "true" : "false"; }
        std::string operator()(const InstantValue& t) const { return format_iso8601_utc(t.ms); }
    };
    return std::visit(Visitor{}, v);
}

std::size_t EventLog::event_count() const {
    std::size_t n = 0;
    for (const auto& c : cases) n += c.events.size();
    return n;
}

void EventLog::rebuild_index() {
    activity_alphabet.clear();
    resource_set.clear();
    for (const auto& c : cases) {
        for (const auto& e : c.events) {
            activity_alphabet.insert(e.activity);
            resource_set.insert(e.resource);
        }
    }
}

void EventLog::validate() const {
    std::set<std::string> seen_ids;
    for (const auto& c : cases) {
        if (c.events.empty())
            throw AnalysisError("case '" + c.case_id + "' has no events");
        if (!seen_ids.insert(c.case_id).second)
            throw AnalysisError("duplicate case id '" + c.case_id + "'");
        TimestampMs prev = c.events.front().timestamp;
        for (const auto& e : c.events) {
            if (e.activity.empty())
                throw AnalysisError("empty activity label in case '" + c.case_id + "'");
            if (e.timestamp < prev)
                throw AnalysisError("events out of order in case '" + c.case_id + "'");
            prev = e.timestamp;
        }
        if (c.events.front().timestamp > c.events.back().timestamp)
            throw AnalysisError("case '" + c.case_id + "' starts after it ends");
    }
    for (const auto& c : cases) {
        for (const auto& e : c.events) {
            if (!activity_alphabet.count(e.activity))
                throw AnalysisError("activity_alphabet missing '" + e.activity + "'");
            if (!resource_set.count(e.resource))
                throw AnalysisError("resource_set missing '" + e.resource + "'");
        }
    }
}

void sort_events(Case& c) {
    std::stable_sort(c.events.begin(), c.events.end(),
                     [](const Event& a, const Event& b) { return a.timestamp < b.timestamp; });
}

} // namespace tailmine
