#pragma once

#include <iosfwd>

#include "tailmine/event_log.hpp"

namespace tailmine {

struct XesParseOptions {
    bool strict = false;  // strict: events missing required keys are fatal
};

// Reads an XES (IEEE 1849-2016) log. Pragmatic subset: log/trace/event
// structure with flat typed attributes. Standard extension keys are mapped
//   concept:name      -> case id (trace) / activity (event)
//   time:timestamp    -> timestamp
//   org:resource      -> resource (org:group as fallback)
//   lifecycle:transition -> lifecycle
// Everything else lands in extra_attributes; <list>/<container> children are
// folded into a single serialized string value. Events missing concept:name or
// time:timestamp are dropped with a warning (fatal in strict mode); traces
// left with no valid events are dropped with a warning.
ParsedLog parse_xes(std::istream& in, const XesParseOptions& opts = {});

} // namespace tailmine
