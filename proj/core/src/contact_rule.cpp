#include "tailmine/contact_rule.hpp"

#include <algorithm>
#include <cctype>

#include "tailmine/errors.hpp"

namespace tailmine {

namespace {

std::string to_lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return s;
}

// Iterative glob match with * and ?.
bool glob_match(const std::string& pat, const std::string& text) {
    std::size_t p = 0, t = 0;
    std::size_t star = std::string::npos, mark = 0;
    while (t < text.size()) {
        if (p < pat.size() && (pat[p] == '?' || pat[p] == text[t])) {
            ++p;
            ++t;
        } else if (p < pat.size() && pat[p] == '*') {
            star = p++;
            mark = t;
        } else if (star != std::string::npos) {
            p = star + 1;
            t = ++mark;
        } else {
            return false;
        }
    }
    while (p < pat.size() && pat[p] == '*') ++p;
    return p == pat.size();
}

const std::vector<std::string> kDefaultTruthy = {"true", "1", "yes"};

} // namespace

void CustomerContactRule::validate() const {
    if (mode == Mode::ActivityPatterns && patterns.empty())
        throw ConfigError("contact rule mode ACTIVITY_PATTERNS requires at least one pattern");
    if (mode == Mode::AttributeFlag && attribute.empty())
        throw ConfigError("contact rule mode ATTRIBUTE_FLAG requires an attribute name");
}

bool matches_contact_pattern(const std::string& pattern, const std::string& text) {
    std::string p = to_lower(pattern);
    std::string t = to_lower(text);
    if (p.find('*') == std::string::npos && p.find('?') == std::string::npos)
        return t.find(p) != std::string::npos;
    return glob_match(p, t);
}

bool contact_flag_for(const CustomerContactRule& rule, const Event& e) {
    switch (rule.mode) {
    case CustomerContactRule::Mode::None:
        return false;
    case CustomerContactRule::Mode::ActivityPatterns:
        for (const auto& p : rule.patterns)
            if (matches_contact_pattern(p, e.activity)) return true;
        return false;
    case CustomerContactRule::Mode::AttributeFlag: {
        auto it = e.extra_attributes.find(rule.attribute);
        if (it == e.extra_attributes.end()) return false;
        std::string v = to_lower(attribute_to_string(it->second));
        const auto& truthy = rule.truthy_values.empty() ? kDefaultTruthy : rule.truthy_values;
        for (const auto& t : truthy)
            if (v == to_lower(t)) return true;
        return false;
    }
    }
    return false;
}

void apply_customer_contact_rule(EventLog& log, const CustomerContactRule& rule) {
    rule.validate();
    for (auto& c : log.cases)
        for (auto& e : c.events) e.customer_contact = contact_flag_for(rule, e);
}

} // namespace tailmine
