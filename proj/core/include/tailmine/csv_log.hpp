#pragma once

#include <iosfwd>
#include <string>

#include "tailmine/contact_rule.hpp"
#include "tailmine/event_log.hpp"

namespace tailmine {

// Maps CSV columns onto the event model.
struct ColumnMap {
    std::string case_id_column;
    std::string activity_column;
    std::string timestamp_column;
    std::string resource_column;   // optional
    std::string lifecycle_column;  // optional
    std::string timestamp_format;  // parse_timestamp pattern; empty = ISO-8601
    CustomerContactRule customer_contact_rule;
    char delimiter = ',';

    // Required columns must be distinct and non-empty.
    void validate() const;
};

struct CsvParseOptions {
    bool strict = false;  // strict: any bad row is fatal; lenient: drop with warning
};

// Parses a CSV event log: rows grouped by case id, events sorted by
// (timestamp, file order), unmapped columns kept as string extra attributes,
// contact flags applied per the rule.
ParsedLog parse_csv(std::istream& in, const ColumnMap& map, const CsvParseOptions& opts = {});

// Canonical CSV writer: header
//   case_id,activity,timestamp,resource,lifecycle,customer_contact
// comma-delimited, RFC-4180 quoting, ISO-8601 UTC timestamps. parse_csv on the
// output with canonical_column_map() round-trips all written fields.
void write_csv_log(std::ostream& out, const EventLog& log);

// ColumnMap matching write_csv_log's output.
ColumnMap canonical_column_map();

} // namespace tailmine
