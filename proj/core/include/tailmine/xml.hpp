#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace tailmine {

// Minimal streaming XML pull parser: elements, attributes, self-closing tags,
// comments, processing instructions, DOCTYPE and CDATA are recognized; text
// content is skipped. Attribute values get the five predefined entities and
// numeric character references decoded. That subset is all XES needs, and the
// parser reports exact line/column positions on malformed input.
class XmlPullParser {
public:
    enum class Token { StartElement, EndElement, Eof };

    explicit XmlPullParser(std::istream& in);

    // Advances to the next start/end element. Throws ParseError on bad XML.
    Token next();

    const std::string& name() const { return name_; }
    const std::vector<std::pair<std::string, std::string>>& attributes() const { return attrs_; }
    const std::string* attribute(const std::string& key) const;

    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    int peek();
    int get();
    void refill();
    [[noreturn]] void fail(const std::string& what) const;
    void skip_whitespace();
    void expect(char c);
    bool consume_if(const char* literal);
    std::string read_name();
    std::string read_attr_value();
    void skip_until(const char* terminator);
    void parse_attributes(bool& self_closing);

    std::istream& in_;
    std::string buf_;
    std::size_t pos_ = 0;
    bool eof_ = false;
    std::size_t line_ = 1;
    std::size_t column_ = 1;

    std::string name_;
    std::vector<std::pair<std::string, std::string>> attrs_;
    std::vector<std::string> open_;  // element stack, for self-closing EndElement synthesis
    bool pending_end_ = false;       // self-closing: StartElement already emitted
};

} // namespace tailmine
