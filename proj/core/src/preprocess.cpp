#include "tailmine/preprocess.hpp"

#include "tailmine/errors.hpp"

namespace tailmine {

void PreprocessSpec::validate() const {
    if (min_events < 1) throw ConfigError("preprocess: min_events must be >= 1");
    if (window_from && window_to && *window_from > *window_to)
        throw ConfigError("preprocess: window_from is after window_to");
}

bool PreprocessSpec::enabled() const {
    return !required_start_activities.empty() || !required_end_activities.empty() ||
           min_events > 1 || window_from || window_to;
}

PreprocessResult preprocess(const EventLog& log, const PreprocessSpec& spec) {
    spec.validate();

    PreprocessResult out;
    out.report.input_cases = log.case_count();
    out.log.source_meta = log.source_meta;

    auto contains_any = [](const Case& c, const std::set<std::string>& wanted) {
        for (const auto& e : c.events)
            if (wanted.count(e.activity)) return true;
        return false;
    };

    for (const auto& c : log.cases) {
        if (!spec.required_start_activities.empty() &&
            !contains_any(c, spec.required_start_activities)) {
            ++out.report.missing_required_start;
            continue;
        }
        if (!spec.required_end_activities.empty() &&
            !contains_any(c, spec.required_end_activities)) {
            ++out.report.missing_required_end;
            continue;
        }
        if (c.events.size() < spec.min_events) {
            ++out.report.too_few_events;
            continue;
        }
        TimestampMs first = c.start();
        if ((spec.window_from && first < *spec.window_from) ||
            (spec.window_to && first > *spec.window_to)) {
            ++out.report.outside_window;
            continue;
        }
        out.log.cases.push_back(c);
    }

    out.report.retained_cases = out.log.cases.size();
    out.report.empty_result = out.log.cases.empty();
    out.log.rebuild_index();
    return out;
}

} // namespace tailmine
