#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tailmine {

// RFC-4180 CSV tokenizer. Handles quoted fields, embedded quotes (""),
// embedded delimiters and newlines inside quotes, and both LF and CRLF rows.
class CsvReader {
public:
    explicit CsvReader(std::istream& in, char delimiter = ',');

    // Reads the next record, returning false at end of input.
    // Throws ParseError on an unterminated quoted field.
    bool next(std::vector<std::string>& fields);

    // 1-based line number of the first line of the most recent record.
    std::size_t record_line() const { return record_line_; }

private:
    std::istream& in_;
    char delim_;
    std::size_t line_ = 1;
    std::size_t record_line_ = 0;
};

// Writes one CSV record, quoting fields only when they need it.
void write_csv_record(std::ostream& out, const std::vector<std::string>& fields,
                      char delimiter = ',');

// Quotes a single field per RFC-4180 if it contains the delimiter, a quote,
// or a newline; otherwise returns it unchanged.
std::string csv_quote(const std::string& field, char delimiter = ',');

} // namespace tailmine
