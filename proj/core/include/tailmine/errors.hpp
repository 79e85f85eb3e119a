#pragma once

#include <stdexcept>
#include <string>

namespace tailmine {

// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed or unreadable input (XES, CSV, config files, cost tables).
class ParseError : public Error {
public:
    explicit ParseError(const std::string& msg) : Error(msg) {}
    ParseError(const std::string& msg, std::size_t line, std::size_t column)
        : Error(msg + " (line " + std::to_string(line) + ", column " + std::to_string(column) + ")"),
          line_(line), column_(column) {}

    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    std::size_t line_ = 0;
    std::size_t column_ = 0;
};

// Violated preconditions or invariants in an analysis stage.
class AnalysisError : public Error {
public:
    explicit AnalysisError(const std::string& msg) : Error(msg) {}
};

// Invalid user-supplied configuration (bad flag combinations, bad config file values).
class ConfigError : public Error {
public:
    explicit ConfigError(const std::string& msg) : Error(msg) {}
};

// Pipeline stage failure; carries the stage name so the CLI can report it.
class StageError : public Error {
public:
    StageError(const std::string& stage, const std::string& cause, bool is_parse)
        : Error("stage '" + stage + "' failed: " + cause), stage_(stage), is_parse_(is_parse) {}

    const std::string& stage() const { return stage_; }
    bool is_parse_failure() const { return is_parse_; }

private:
    std::string stage_;
    bool is_parse_;
};

} // namespace tailmine
