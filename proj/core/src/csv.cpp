#include "tailmine/csv.hpp"

#include <istream>
#include <ostream>

#include "tailmine/errors.hpp"

namespace tailmine {

CsvReader::CsvReader(std::istream& in, char delimiter) : in_(in), delim_(delimiter) {}

bool CsvReader::next(std::vector<std::string>& fields) {
    fields.clear();
    int ci = in_.get();
    if (ci == EOF) return false;
    record_line_ = line_;

    std::string field;
    bool in_quotes = false;
    bool quoted_field = false;
    for (;;) {
        if (ci == EOF) {
            if (in_quotes)
                throw ParseError("unterminated quoted CSV field", record_line_, 0);
            fields.push_back(std::move(field));
            return true;
        }
        char c = static_cast<char>(ci);
        if (in_quotes) {
            if (c == '"') {
                int peek = in_.get();
                if (peek == '"') {
                    field.push_back('"');
                } else {
                    in_quotes = false;
                    ci = peek;
                    continue;
                }
            } else {
                if (c == '\n') ++line_;
                field.push_back(c);
            }
        } else if (c == '"' && field.empty() && !quoted_field) {
            in_quotes = true;
            quoted_field = true;
        } else if (c == delim_) {
            fields.push_back(std::move(field));
            field.clear();
            quoted_field = false;
        } else if (c == '\r') {
            int peek = in_.get();
            if (peek == '\n') {
                ++line_;
                fields.push_back(std::move(field));
                return true;
            }
            field.push_back(c);
            ci = peek;
            continue;
        } else if (c == '\n') {
            ++line_;
            fields.push_back(std::move(field));
            return true;
        } else {
            field.push_back(c);
        }
        ci = in_.get();
    }
}

std::string csv_quote(const std::string& field, char delimiter) {
    bool needs = false;
    for (char c : field) {
        if (c == delimiter || c == '"' || c == '\n' || c == '\r') {
            needs = true;
            break;
        }
    }
    if (!needs) return field;
    std::string out;
    out.reserve(field.size() + 2);
    out.push_back('"');
    for (char c : field) {
        if (c == '"') out.push_back('"');
        out.push_back(c);
    }
    out.push_back('"');
    return out;
}

void write_csv_record(std::ostream& out, const std::vector<std::string>& fields, char delimiter) {
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i) out.put(delimiter);
        out << csv_quote(fields[i], delimiter);
    }
    out.put('\n');
}

} // namespace tailmine
