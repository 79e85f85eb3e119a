#include "tailmine/timestamp.hpp"

#include <cctype>
#include <cstdio>

namespace tailmine {

namespace {

bool parse_digits(std::string_view s, std::size_t& pos, int width, long long& out) {
    long long v = 0;
    int used = 0;
    while (used < width && pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
        v = v * 10 + (s[pos] - '0');
        ++pos;
        ++used;
    }
    if (used == 0) return false;
    out = v;
    return true;
}

// Reads up to 9 fraction digits, returns value in milliseconds (truncated).
bool parse_fraction_ms(std::string_view s, std::size_t& pos, long long& ms) {
    int digits = 0;
    long long v = 0;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])) && digits < 9) {
        if (digits < 3) v = v * 10 + (s[pos] - '0');
        ++pos;
        ++digits;
    }
    if (digits == 0) return false;
    while (digits < 3) {
        v *= 10;
        ++digits;
    }
    ms = v;
    return true;
}

// Zone offset in minutes east of UTC. Accepts Z, ±HH:MM, ±HHMM, ±HH.
bool parse_zone(std::string_view s, std::size_t& pos, int& offset_min) {
    if (pos >= s.size()) return false;
    char c = s[pos];
    if (c == 'Z' || c == 'z') {
        ++pos;
        offset_min = 0;
        return true;
    }
    if (c != '+' && c != '-') return false;
    int sign = (c == '+') ? 1 : -1;
    ++pos;
    long long hh = 0, mm = 0;
    if (!parse_digits(s, pos, 2, hh)) return false;
    if (pos < s.size() && s[pos] == ':') ++pos;
    std::size_t before = pos;
    if (!parse_digits(s, pos, 2, mm)) {
        pos = before;
        mm = 0;
    }
    offset_min = sign * static_cast<int>(hh * 60 + mm);
    return true;
}

struct CivilTime {
    long long year = 0;
    long long month = 1;
    long long day = 1;
    long long hour = 0;
    long long minute = 0;
    long long second = 0;
    long long millisecond = 0;
    int zone_offset_min = 0;
};

std::optional<TimestampMs> to_timestamp(const CivilTime& ct) {
    if (ct.month < 1 || ct.month > 12 || ct.day < 1 || ct.day > 31) return std::nullopt;
    if (ct.hour > 23 || ct.minute > 59 || ct.second > 60) return std::nullopt;
    std::int64_t days = days_from_civil(static_cast<int>(ct.year),
                                        static_cast<unsigned>(ct.month),
                                        static_cast<unsigned>(ct.day));
    std::int64_t secs = days * 86400 + ct.hour * 3600 + ct.minute * 60 + ct.second;
    secs -= static_cast<std::int64_t>(ct.zone_offset_min) * 60;
    return secs * 1000 + ct.millisecond;
}

} // namespace

std::int64_t days_from_civil(int y, unsigned m, unsigned d) {
    // Howard Hinnant's algorithm.
    y -= m <= 2;
    const std::int64_t era = (y >= 0 ? y : y - 399) / 400;
    const unsigned yoe = static_cast<unsigned>(y - era * 400);
    const unsigned doy = (153 * (m + (m > 2 ? -3 : 9)) + 2) / 5 + d - 1;
    const unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
    return era * 146097 + static_cast<std::int64_t>(doe) - 719468;
}

void civil_from_days(std::int64_t z, int& year, unsigned& month, unsigned& day) {
    z += 719468;
    const std::int64_t era = (z >= 0 ? z : z - 146096) / 146097;
    const unsigned doe = static_cast<unsigned>(z - era * 146097);
    const unsigned yoe = (doe - doe / 1460 + doe / 36524 - doe / 146096) / 365;
    const std::int64_t y = static_cast<std::int64_t>(yoe) + era * 400;
    const unsigned doy = doe - (365 * yoe + yoe / 4 - yoe / 100);
    const unsigned mp = (5 * doy + 2) / 153;
    day = doy - (153 * mp + 2) / 5 + 1;
    month = mp + (mp < 10 ? 3 : -9);
    year = static_cast<int>(y + (month <= 2));
}

std::optional<TimestampMs> parse_iso8601(std::string_view s) {
    // Trim surrounding whitespace.
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    s = s.substr(b, e - b);

    std::size_t pos = 0;
    CivilTime ct;
    bool neg_year = false;
    if (pos < s.size() && s[pos] == '-') {
        neg_year = true;
        ++pos;
    }
    if (!parse_digits(s, pos, 4, ct.year)) return std::nullopt;
    if (neg_year) ct.year = -ct.year;
    if (pos >= s.size() || s[pos] != '-') return std::nullopt;
    ++pos;
    if (!parse_digits(s, pos, 2, ct.month)) return std::nullopt;
    if (pos >= s.size() || s[pos] != '-') return std::nullopt;
    ++pos;
    if (!parse_digits(s, pos, 2, ct.day)) return std::nullopt;

    if (pos < s.size()) {
        if (s[pos] != 'T' && s[pos] != 't' && s[pos] != ' ') return std::nullopt;
        ++pos;
        if (!parse_digits(s, pos, 2, ct.hour)) return std::nullopt;
        if (pos >= s.size() || s[pos] != ':') return std::nullopt;
        ++pos;
        if (!parse_digits(s, pos, 2, ct.minute)) return std::nullopt;
        if (pos < s.size() && s[pos] == ':') {
            ++pos;
            if (!parse_digits(s, pos, 2, ct.second)) return std::nullopt;
        }
        if (pos < s.size() && (s[pos] == '.' || s[pos] == ',')) {
            ++pos;
            if (!parse_fraction_ms(s, pos, ct.millisecond)) return std::nullopt;
        }
        if (pos < s.size()) {
            if (!parse_zone(s, pos, ct.zone_offset_min)) return std::nullopt;
        }
    }
    if (pos != s.size()) return std::nullopt;
    return to_timestamp(ct);
}

std::string format_iso8601_utc(TimestampMs ts) {
    std::int64_t ms = ts % 1000;
    std::int64_t secs = ts / 1000;
    if (ms < 0) {
        ms += 1000;
        secs -= 1;
    }
    std::int64_t days = secs / 86400;
    std::int64_t sod = secs % 86400;
    if (sod < 0) {
        sod += 86400;
        days -= 1;
    }
    int year;
    unsigned month, day;
    civil_from_days(days, year, month, day);
    char buf[40];
    std::snprintf(buf, sizeof buf, "%04d-%02u-%02uT%02lld:%02lld:%02lld.%03lldZ",
                  year, month, day,
                  static_cast<long long>(sod / 3600),
                  static_cast<long long>((sod % 3600) / 60),
                  static_cast<long long>(sod % 60),
                  static_cast<long long>(ms));
    return buf;
}

std::optional<TimestampMs> parse_timestamp(std::string_view text, std::string_view pattern) {
    if (pattern.empty()) return parse_iso8601(text);

    CivilTime ct;
    std::size_t tp = 0;
    for (std::size_t pp = 0; pp < pattern.size(); ++pp) {
        char pc = pattern[pp];
        if (pc != '%') {
            if (tp >= text.size() || text[tp] != pc) return std::nullopt;
            ++tp;
            continue;
        }
        if (++pp >= pattern.size()) return std::nullopt;
        long long v = 0;
        switch (pattern[pp]) {
        case 'Y':
            if (!parse_digits(text, tp, 4, v)) return std::nullopt;
            ct.year = v;
            break;
        case 'm':
            if (!parse_digits(text, tp, 2, v)) return std::nullopt;
            ct.month = v;
            break;
        case 'd':
            if (!parse_digits(text, tp, 2, v)) return std::nullopt;
            ct.day = v;
            break;
        case 'H':
            if (!parse_digits(text, tp, 2, v)) return std::nullopt;
            ct.hour = v;
            break;
        case 'M':
            if (!parse_digits(text, tp, 2, v)) return std::nullopt;
            ct.minute = v;
            break;
        case 'S':
            if (!parse_digits(text, tp, 2, v)) return std::nullopt;
            ct.second = v;
            break;
        case 'f':
            if (!parse_fraction_ms(text, tp, v)) return std::nullopt;
            ct.millisecond = v;
            break;
        case 'z':
            if (!parse_zone(text, tp, ct.zone_offset_min)) return std::nullopt;
            break;
        case '%':
            if (tp >= text.size() || text[tp] != '%') return std::nullopt;
            ++tp;
            break;
        default:
            return std::nullopt;
        }
    }
    if (tp != text.size()) return std::nullopt;
    return to_timestamp(ct);
}

} // namespace tailmine
