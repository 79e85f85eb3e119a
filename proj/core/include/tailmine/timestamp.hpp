#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace tailmine {

// Instants are UTC milliseconds since the Unix epoch. Millisecond precision is
// what XES timestamps carry and is plenty for event logs.
using TimestampMs = std::int64_t;

// Parses an ISO-8601 date-time: YYYY-MM-DD['T'|' ']HH:MM:SS[.fff][Z|±HH:MM|±HHMM].
// Fractional seconds beyond milliseconds are truncated. Missing zone means UTC.
std::optional<TimestampMs> parse_iso8601(std::string_view text);

// Formats as YYYY-MM-DDTHH:MM:SS.fffZ (always UTC, always milliseconds).
std::string format_iso8601_utc(TimestampMs ts);

// strptime-like pattern parser for CSV timestamp columns. Supported tokens:
//   %Y %m %d %H %M %S  - the usual numeric fields
//   %f                 - fractional seconds (1..9 digits, truncated to ms)
//   %z                 - zone offset (Z, ±HH:MM or ±HHMM)
//   %%                 - literal percent
// Any other character must match literally. An empty pattern means "ISO-8601".
std::optional<TimestampMs> parse_timestamp(std::string_view text, std::string_view pattern);

// Days-from-civil / civil-from-days arithmetic, exposed for the formatter and tests.
std::int64_t days_from_civil(int year, unsigned month, unsigned day);
void civil_from_days(std::int64_t z, int& year, unsigned& month, unsigned& day);

} // namespace tailmine
