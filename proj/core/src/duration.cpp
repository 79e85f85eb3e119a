#include "tailmine/duration.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <map>

#include "tailmine/errors.hpp"

namespace tailmine {

namespace {

std::string lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return s;
}

} // namespace

std::vector<EventDuration> extract_event_durations(const Case& c, DurationMode mode) {
    std::vector<EventDuration> out;
    out.reserve(c.events.size());
    for (const auto& e : c.events) out.push_back({e.activity, 0.0});

    if (mode == DurationMode::NextEvent) {
        for (std::size_t i = 0; i + 1 < c.events.size(); ++i)
            out[i].seconds =
                static_cast<double>(c.events[i + 1].timestamp - c.events[i].timestamp) / 1000.0;
        return out;
    }

    // LifecyclePair: FIFO queues of open "start" events per activity label.
    std::map<std::string, std::deque<std::size_t>> open_starts;
    for (std::size_t i = 0; i < c.events.size(); ++i) {
        std::string lc = lower(c.events[i].lifecycle);
        if (lc == "start") {
            open_starts[c.events[i].activity].push_back(i);
        } else if (lc == "complete") {
            auto it = open_starts.find(c.events[i].activity);
            if (it != open_starts.end() && !it->second.empty()) {
                std::size_t start_idx = it->second.front();
                it->second.pop_front();
                out[start_idx].seconds =
                    static_cast<double>(c.events[i].timestamp - c.events[start_idx].timestamp) /
                    1000.0;
            }
        }
    }
    return out;
}

double case_duration_seconds(const Case& c) {
    return static_cast<double>(c.end() - c.start()) / 1000.0;
}

const char* to_string(DurationMode mode) {
    return mode == DurationMode::NextEvent ? "next_event" : "lifecycle_pair";
}

DurationMode parse_duration_mode(const std::string& name) {
    std::string n = lower(name);
    if (n == "next_event") return DurationMode::NextEvent;
    if (n == "lifecycle_pair") return DurationMode::LifecyclePair;
    throw ConfigError("unknown duration mode '" + name + "' (next_event | lifecycle_pair)");
}

} // namespace tailmine
