#pragma once

#include <string>
#include <vector>

#include "tailmine/event_log.hpp"

namespace tailmine {

// How customer-contact flags are derived from the log. Event logs never mark
// contacts directly, so detection has to be configured per log.
struct CustomerContactRule {
    enum class Mode { None, ActivityPatterns, AttributeFlag };

    Mode mode = Mode::None;
    // Mode::ActivityPatterns: case-insensitive substring or glob (*, ?) patterns
    // matched against activity labels. A pattern without metacharacters is a
    // substring match.
    std::vector<std::string> patterns;
    // Mode::AttributeFlag: name of the extra attribute and the values treated
    // as true. Empty truthy set means {"true", "1", "yes"}.
    std::string attribute;
    std::vector<std::string> truthy_values;

    // Throws ConfigError if the mode's required fields are missing.
    void validate() const;
};

// Case-insensitive match of `text` against a substring-or-glob pattern.
bool matches_contact_pattern(const std::string& pattern, const std::string& text);

// Evaluates the rule for a single event.
bool contact_flag_for(const CustomerContactRule& rule, const Event& e);

// Sets customer_contact on every event of the log per the rule.
void apply_customer_contact_rule(EventLog& log, const CustomerContactRule& rule);

} // namespace tailmine
