#include "tailmine/xes.hpp"

#include <istream>
#include <map>
#include <optional>

#include "tailmine/errors.hpp"
#include "tailmine/xml.hpp"

namespace tailmine {

namespace {

bool is_scalar_attr(const std::string& tag) {
    return tag == "string" || tag == "date" || tag == "int" || tag == "float" ||
           tag == "boolean" || tag == "id";
}

std::optional<AttributeValue> typed_value(const std::string& tag, const std::string& raw) {
    if (tag == "string" || tag == "id") return AttributeValue{raw};
    if (tag == "date") {
        auto ts = parse_iso8601(raw);
        if (!ts) return std::nullopt;
        return AttributeValue{InstantValue{*ts}};
    }
    if (tag == "int") {
        try {
            return AttributeValue{static_cast<std::int64_t>(std::stoll(raw))};
        } catch (...) {
            return std::nullopt;
        }
    }
    if (tag == "float") {
        try {
            return AttributeValue{std::stod(raw)};
        } catch (...) {
            return std::nullopt;
        }
    }
    if (tag == "boolean") {
        if (raw == "true" || raw == "1") return AttributeValue{true};
        if (raw == "false" || raw == "0") return AttributeValue{false};
        return std::nullopt;
    }
    return std::nullopt;
}

// Serializes the subtree of the element the parser just entered into a compact
// XML string. Used to keep nested <list>/<container> attributes as opaque text.
std::string fold_subtree(XmlPullParser& xml) {
    std::string out;
    std::size_t depth = 1;
    while (depth > 0) {
        auto tok = xml.next();
        if (tok == XmlPullParser::Token::StartElement) {
            ++depth;
            out += '<' + xml.name();
            for (const auto& [k, v] : xml.attributes()) out += ' ' + k + "=\"" + v + '"';
            out += '>';
        } else if (tok == XmlPullParser::Token::EndElement) {
            --depth;
            if (depth > 0) out += "</" + xml.name() + '>';
        } else {
            break;  // Eof; the parser will have thrown already for open tags
        }
    }
    return out;
}

struct PendingEvent {
    Event event;
    bool has_activity = false;
    bool has_timestamp = false;
};

} // namespace

ParsedLog parse_xes(std::istream& in, const XesParseOptions& opts) {
    XmlPullParser xml(in);
    ParsedLog out;
    out.log.source_meta = {"xes", ""};

    enum class Where { Root, Log, Trace, Event, Other };
    std::vector<Where> stack;
    Case current_case;
    PendingEvent pending;
    std::size_t trace_ordinal = 0;

    auto warn = [&](const std::string& msg) {
        if (out.report.warnings.size() < 1000) out.report.warnings.push_back(msg);
    };

    for (;;) {
        auto tok = xml.next();
        if (tok == XmlPullParser::Token::Eof) break;

        if (tok == XmlPullParser::Token::StartElement) {
            const std::string& tag = xml.name();
            Where here = stack.empty() ? Where::Root : stack.back();

            if (tag == "log" && here == Where::Root) {
                stack.push_back(Where::Log);
            } else if (tag == "trace" && here == Where::Log) {
                stack.push_back(Where::Trace);
                current_case = Case{};
                ++trace_ordinal;
            } else if (tag == "event" && here == Where::Trace) {
                stack.push_back(Where::Event);
                pending = PendingEvent{};
            } else if (is_scalar_attr(tag) && (here == Where::Trace || here == Where::Event)) {
                const std::string* key = xml.attribute("key");
                const std::string* value = xml.attribute("value");
                std::string k = key ? *key : "";
                std::string v = value ? *value : "";
                if (here == Where::Event) {
                    if (k == "concept:name") {
                        pending.event.activity = v;
                        pending.has_activity = !v.empty();
                    } else if (k == "time:timestamp") {
                        auto ts = parse_iso8601(v);
                        if (ts) {
                            pending.event.timestamp = *ts;
                            pending.has_timestamp = true;
                        } else if (opts.strict) {
                            throw ParseError("bad time:timestamp '" + v + "'", xml.line(),
                                             xml.column());
                        }
                    } else if (k == "org:resource") {
                        if (!v.empty()) pending.event.resource = v;
                    } else if (k == "org:group") {
                        if (pending.event.resource == kUnknownResource && !v.empty())
                            pending.event.resource = v;
                    } else if (k == "lifecycle:transition") {
                        pending.event.lifecycle = v;
                    } else if (!k.empty()) {
                        auto tv = typed_value(tag, v);
                        if (tv) pending.event.extra_attributes.emplace(k, std::move(*tv));
                    }
                } else {  // trace-level
                    if (k == "concept:name") current_case.case_id = v;
                }
                stack.push_back(Where::Other);
            } else if ((tag == "list" || tag == "container") &&
                       (here == Where::Trace || here == Where::Event)) {
                const std::string* key = xml.attribute("key");
                std::string k = key ? *key : "";
                std::string folded = fold_subtree(xml);  // consumes through the end tag
                if (here == Where::Event && !k.empty())
                    pending.event.extra_attributes.emplace(k, folded);
                continue;  // end tag already consumed by fold_subtree
            } else {
                // extensions, classifiers, globals, nested scalars: ignore subtree shape
                stack.push_back(Where::Other);
            }
            continue;
        }

        // EndElement
        if (stack.empty()) throw ParseError("XES: unbalanced document", xml.line(), xml.column());
        Where closing = stack.back();
        stack.pop_back();

        if (closing == Where::Event) {
            ++out.report.raw_event_count;
            if (!pending.has_activity || !pending.has_timestamp) {
                std::string what = !pending.has_activity ? "concept:name" : "time:timestamp";
                if (opts.strict)
                    throw ParseError("event missing " + what, xml.line(), xml.column());
                warn("trace " + std::to_string(trace_ordinal) + ": event missing " + what +
                     "; event dropped");
                ++out.report.dropped_events;
            } else {
                current_case.events.push_back(std::move(pending.event));
            }
        } else if (closing == Where::Trace) {
            if (current_case.events.empty()) {
                warn("trace " + std::to_string(trace_ordinal) + " ('" + current_case.case_id +
                     "') has no valid events; trace dropped");
                ++out.report.dropped_traces;
            } else {
                if (current_case.case_id.empty())
                    current_case.case_id = "trace_" + std::to_string(trace_ordinal);
                sort_events(current_case);
                out.log.cases.push_back(std::move(current_case));
            }
        }
    }

    // Deduplicate case ids (rare, but some logs repeat concept:name).
    {
        std::map<std::string, int> seen;
        for (auto& c : out.log.cases) {
            auto [it, inserted] = seen.emplace(c.case_id, 1);
            if (!inserted) {
                ++it->second;
                std::string renamed = c.case_id + "#" + std::to_string(it->second);
                if (opts.strict)
                    throw ParseError("duplicate trace id '" + c.case_id + "'");
                warn("duplicate trace id '" + c.case_id + "' renamed to '" + renamed + "'");
                c.case_id = std::move(renamed);
            }
        }
    }

    out.log.rebuild_index();
    return out;
}

} // namespace tailmine
