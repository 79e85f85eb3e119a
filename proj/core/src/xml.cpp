#include "tailmine/xml.hpp"

#include <cctype>
#include <cstring>
#include <istream>

#include "tailmine/errors.hpp"

namespace tailmine {

namespace {
constexpr std::size_t kBufSize = 1 << 16;

bool is_name_start(int c) {
    return std::isalpha(c) || c == '_' || c == ':' || c >= 0x80;
}
bool is_name_char(int c) {
    return is_name_start(c) || std::isdigit(c) || c == '-' || c == '.';
}
} // namespace

XmlPullParser::XmlPullParser(std::istream& in) : in_(in) {
    buf_.reserve(kBufSize);
    refill();
}

void XmlPullParser::refill() {
    if (eof_) return;
    buf_.resize(kBufSize);
    in_.read(buf_.data(), static_cast<std::streamsize>(kBufSize));
    buf_.resize(static_cast<std::size_t>(in_.gcount()));
    pos_ = 0;
    if (buf_.empty()) eof_ = true;
}

int XmlPullParser::peek() {
    if (pos_ >= buf_.size()) {
        refill();
        if (eof_) return EOF;
    }
    return static_cast<unsigned char>(buf_[pos_]);
}

int XmlPullParser::get() {
    int c = peek();
    if (c == EOF) return EOF;
    ++pos_;
    if (c == '\n') {
        ++line_;
        column_ = 1;
    } else {
        ++column_;
    }
    return c;
}

void XmlPullParser::fail(const std::string& what) const {
    throw ParseError("XML: " + what, line_, column_);
}

void XmlPullParser::skip_whitespace() {
    int c;
    while ((c = peek()) != EOF && std::isspace(c)) get();
}

void XmlPullParser::expect(char c) {
    int got = get();
    if (got != c)
        fail(std::string("expected '") + c + "'");
}

bool XmlPullParser::consume_if(const char* literal) {
    // Forward stream, no pushback: callers pass literals with disjoint first
    // characters, so a mismatch after the first char means malformed markup.
    std::size_t n = std::strlen(literal);
    for (std::size_t i = 0; i < n; ++i) {
        if (peek() != static_cast<unsigned char>(literal[i])) {
            if (i != 0) fail("truncated markup");
            return false;
        }
        get();
    }
    return true;
}

std::string XmlPullParser::read_name() {
    int c = peek();
    if (c == EOF || !is_name_start(c)) fail("expected a name");
    std::string name;
    while ((c = peek()) != EOF && is_name_char(c)) name.push_back(static_cast<char>(get()));
    return name;
}

std::string XmlPullParser::read_attr_value() {
    int quote = get();
    if (quote != '"' && quote != '\'') fail("expected quoted attribute value");
    std::string value;
    for (;;) {
        int c = get();
        if (c == EOF) fail("unterminated attribute value");
        if (c == quote) break;
        if (c == '&') {
            std::string ent;
            int ec;
            while ((ec = get()) != EOF && ec != ';' && ent.size() < 12)
                ent.push_back(static_cast<char>(ec));
            if (ec != ';') fail("malformed entity reference");
            if (ent == "amp") value.push_back('&');
            else if (ent == "lt") value.push_back('<');
            else if (ent == "gt") value.push_back('>');
            else if (ent == "quot") value.push_back('"');
            else if (ent == "apos") value.push_back('\'');
            else if (!ent.empty() && ent[0] == '#') {
                long code = 0;
                try {
                    code = (ent.size() > 1 && (ent[1] == 'x' || ent[1] == 'X'))
                               ? std::stol(ent.substr(2), nullptr, 16)
                               : std::stol(ent.substr(1));
                } catch (...) {
                    fail("malformed character reference &" + ent + ";");
                }
                // UTF-8 encode.
                if (code < 0x80) {
                    value.push_back(static_cast<char>(code));
                } else if (code < 0x800) {
                    value.push_back(static_cast<char>(0xC0 | (code >> 6)));
                    value.push_back(static_cast<char>(0x80 | (code & 0x3F)));
                } else if (code < 0x10000) {
                    value.push_back(static_cast<char>(0xE0 | (code >> 12)));
                    value.push_back(static_cast<char>(0x80 | ((code >> 6) & 0x3F)));
                    value.push_back(static_cast<char>(0x80 | (code & 0x3F)));
                } else {
                    value.push_back(static_cast<char>(0xF0 | (code >> 18)));
                    value.push_back(static_cast<char>(0x80 | ((code >> 12) & 0x3F)));
                    value.push_back(static_cast<char>(0x80 | ((code >> 6) & 0x3F)));
                    value.push_back(static_cast<char>(0x80 | (code & 0x3F)));
                }
            } else {
                fail("unknown entity &" + ent + ";");
            }
        } else {
            value.push_back(static_cast<char>(c));
        }
    }
    return value;
}

void XmlPullParser::skip_until(const char* terminator) {
    std::size_t n = std::strlen(terminator);
    std::size_t matched = 0;
    for (;;) {
        int c = get();
        if (c == EOF) fail(std::string("unterminated section (expected '") + terminator + "')");
        if (c == terminator[matched]) {
            if (++matched == n) return;
        } else {
            matched = (c == terminator[0]) ? 1 : 0;
        }
    }
}

void XmlPullParser::parse_attributes(bool& self_closing) {
    attrs_.clear();
    self_closing = false;
    for (;;) {
        skip_whitespace();
        int c = peek();
        if (c == EOF) fail("unterminated start tag");
        if (c == '>') {
            get();
            return;
        }
        if (c == '/') {
            get();
            expect('>');
            self_closing = true;
            return;
        }
        std::string key = read_name();
        skip_whitespace();
        expect('=');
        skip_whitespace();
        attrs_.emplace_back(std::move(key), read_attr_value());
    }
}

XmlPullParser::Token XmlPullParser::next() {
    if (pending_end_) {
        pending_end_ = false;
        name_ = open_.back();
        open_.pop_back();
        attrs_.clear();
        return Token::EndElement;
    }
    for (;;) {
        int c = get();
        if (c == EOF) {
            if (!open_.empty()) fail("unexpected end of input, '" + open_.back() + "' still open");
            return Token::Eof;
        }
        if (c != '<') continue;  // text content is skipped

        int d = peek();
        if (d == '?') {
            get();
            skip_until("?>");
            continue;
        }
        if (d == '!') {
            get();
            if (consume_if("--")) {
                skip_until("-->");
            } else if (consume_if("[CDATA[")) {
                skip_until("]]>");
            } else {
                // DOCTYPE or similar declaration; skip to the closing '>'.
                skip_until(">");
            }
            continue;
        }
        if (d == '/') {
            get();
            name_ = read_name();
            skip_whitespace();
            expect('>');
            if (open_.empty() || open_.back() != name_)
                fail("mismatched end tag </" + name_ + ">");
            open_.pop_back();
            attrs_.clear();
            return Token::EndElement;
        }
        name_ = read_name();
        bool self_closing = false;
        parse_attributes(self_closing);
        open_.push_back(name_);
        pending_end_ = self_closing;
        return Token::StartElement;
    }
}

const std::string* XmlPullParser::attribute(const std::string& key) const {
    for (const auto& [k, v] : attrs_)
        if (k == key) return &v;
    return nullptr;
}

} // namespace tailmine
