#pragma once

#include <string>
#include <vector>

#include "tailmine/event_log.hpp"

namespace tailmine {

// How per-event activity durations are derived from timestamps. Logs rarely
// record durations directly, so both readings are offered:
//   NextEvent     - duration of event k is timestamp(k+1) - timestamp(k); the
//                   last event of a case gets 0.
//   LifecyclePair - FIFO-match "start"/"complete" lifecycle events of the same
//                   activity within a case; the matched duration is assigned to
//                   the start event, everything unmatched gets 0.
enum class DurationMode { NextEvent, LifecyclePair };

struct EventDuration {
    std::string activity;
    double seconds = 0.0;
};

// One entry per event, in event order. Durations are non-negative (events are
// time-sorted).
std::vector<EventDuration> extract_event_durations(const Case& c, DurationMode mode);

// Wall-clock case span, first to last event, in seconds.
double case_duration_seconds(const Case& c);

const char* to_string(DurationMode mode);
DurationMode parse_duration_mode(const std::string& name);

} // namespace tailmine
