#include "tailmine/csv_log.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <ostream>

#include "tailmine/csv.hpp"
#include "tailmine/errors.hpp"

namespace tailmine {

void ColumnMap::validate() const {
    if (case_id_column.empty() || activity_column.empty() || timestamp_column.empty())
        throw ConfigError("column map requires case id, activity, and timestamp columns");
    if (case_id_column == activity_column || case_id_column == timestamp_column ||
        activity_column == timestamp_column)
        throw ConfigError("case id, activity, and timestamp columns must be distinct");
    customer_contact_rule.validate();
}

namespace {

std::size_t find_column(const std::vector<std::string>& header, const std::string& name) {
    auto it = std::find(header.begin(), header.end(), name);
    if (it == header.end())
        throw ParseError("mapped column '" + name + "' not found in CSV header");
    return static_cast<std::size_t>(it - header.begin());
}

} // namespace

ParsedLog parse_csv(std::istream& in, const ColumnMap& map, const CsvParseOptions& opts) {
    map.validate();

    CsvReader reader(in, map.delimiter);
    std::vector<std::string> header;
    if (!reader.next(header))
        throw ParseError("CSV input is empty (no header row)");

    const std::size_t ci = find_column(header, map.case_id_column);
    const std::size_t ai = find_column(header, map.activity_column);
    const std::size_t ti = find_column(header, map.timestamp_column);
    const std::size_t ri =
        map.resource_column.empty() ? SIZE_MAX : find_column(header, map.resource_column);
    const std::size_t li =
        map.lifecycle_column.empty() ? SIZE_MAX : find_column(header, map.lifecycle_column);

    ParsedLog out;
    out.log.source_meta = {"csv", ""};

    // Cases in first-appearance order of their case id.
    std::map<std::string, std::size_t> case_slot;
    std::vector<std::string> fields;
    while (reader.next(fields)) {
        if (fields.size() == 1 && fields[0].empty()) continue;  // blank trailing line
        ++out.report.raw_event_count;
        auto field_at = [&](std::size_t idx) -> std::string {
            return idx < fields.size() ? fields[idx] : std::string();
        };

        const std::string case_id = field_at(ci);
        const std::string activity = field_at(ai);
        const std::string ts_text = field_at(ti);

        std::string problem;
        if (case_id.empty()) problem = "empty case id";
        else if (activity.empty()) problem = "empty activity";

        std::optional<TimestampMs> ts;
        if (problem.empty()) {
            ts = parse_timestamp(ts_text, map.timestamp_format);
            if (!ts) problem = "unparseable timestamp '" + ts_text + "'";
        }
        if (!problem.empty()) {
            if (opts.strict)
                throw ParseError(problem, reader.record_line(), 0);
            out.report.warnings.push_back("row " + std::to_string(reader.record_line()) + ": " +
                                          problem + "; row dropped");
            ++out.report.dropped_events;
            continue;
        }

        Event e;
        e.activity = activity;
        e.timestamp = *ts;
        if (ri != SIZE_MAX && !field_at(ri).empty()) e.resource = field_at(ri);
        if (li != SIZE_MAX) e.lifecycle = field_at(li);
        for (std::size_t i = 0; i < header.size() && i < fields.size(); ++i) {
            if (i == ci || i == ai || i == ti || i == ri || i == li) continue;
            e.extra_attributes.emplace(header[i], fields[i]);
        }

        auto [it, inserted] = case_slot.emplace(case_id, out.log.cases.size());
        if (inserted) out.log.cases.push_back(Case{case_id, {}});
        out.log.cases[it->second].events.push_back(std::move(e));
    }

    for (auto& c : out.log.cases) sort_events(c);
    out.log.rebuild_index();
    apply_customer_contact_rule(out.log, map.customer_contact_rule);
    return out;
}

void write_csv_log(std::ostream& out, const EventLog& log) {
    write_csv_record(out, {"case_id", "activity", "timestamp", "resource", "lifecycle",
                           "customer_contact"});
    for (const auto& c : log.cases) {
        for (const auto& e : c.events) {
            write_csv_record(out, {c.case_id, e.activity, format_iso8601_utc(e.timestamp),
                                   e.resource, e.lifecycle, e.customer_contact ? "true" : "false"});
        }
    }
}

ColumnMap canonical_column_map() {
    ColumnMap m;
    m.case_id_column = "case_id";
    m.activity_column = "activity";
    m.timestamp_column = "timestamp";
    m.resource_column = "resource";
    m.lifecycle_column = "lifecycle";
    m.customer_contact_rule.mode = CustomerContactRule::Mode::AttributeFlag;
    m.customer_contact_rule.attribute = "customer_contact";
    return m;
}

} // namespace tailmine
