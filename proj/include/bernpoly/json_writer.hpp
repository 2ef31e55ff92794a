#ifndef BERNPOLY_JSON_WRITER_HPP
#define BERNPOLY_JSON_WRITER_HPP

#include <cstdio>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace bernpoly {

/* Minimal streaming JSON emitter with byte-stable output.
 *
 * The CLI output contract fixes key order, emits exact rationals as
 * "num/den" strings and floating values as decimal literals with 12
 * significant digits; general-purpose JSON libraries serialize doubles by
 * shortest-round-trip instead, so this thin writer keeps the output format
 * pinned.
 */
class JsonWriter {
public:
    explicit JsonWriter(std::ostream& os, bool pretty = false) : os_(os), pretty_(pretty) {}

    JsonWriter& begin_object() { return open('{'); }
    JsonWriter& end_object() { return close('}'); }
    JsonWriter& begin_array() { return open('['); }
    JsonWriter& end_array() { return close(']'); }

    JsonWriter& key(std::string_view k) {
        separator();
        write_string(k);
        os_ << (pretty_ ? ": " : ":");
        just_wrote_key_ = true;
        return *this;
    }

    JsonWriter& value(std::string_view s) {
        separator();
        write_string(s);
        return *this;
    }
    JsonWriter& value(const char* s) { return value(std::string_view(s)); }
    JsonWriter& value(long v) {
        separator();
        os_ << v;
        return *this;
    }
    JsonWriter& value(int v) { return value(static_cast<long>(v)); }
    JsonWriter& value(bool v) {
        separator();
        os_ << (v ? "true" : "false");
        return *this;
    }
    // Decimal literal with 12 significant digits.
    JsonWriter& value(double v) {
        separator();
        os_ << format_double(v);
        return *this;
    }

    static std::string format_double(double v, int significant = 12) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.*g", significant, v);
        return buf;
    }

private:
    JsonWriter& open(char c) {
        separator();
        os_ << c;
        depth_.push_back(false);
        return *this;
    }
    JsonWriter& close(char c) {
        depth_.pop_back();
        if (pretty_) newline_indent();
        os_ << c;
        if (depth_.empty() && pretty_) os_ << '\n';
        return *this;
    }
    void separator() {
        if (just_wrote_key_) {
            just_wrote_key_ = false;
            return;
        }
        if (!depth_.empty()) {
            if (depth_.back()) os_ << ',';
            depth_.back() = true;
            if (pretty_) newline_indent();
        }
    }
    void newline_indent() {
        os_ << '\n';
        for (std::size_t i = 0; i < depth_.size(); ++i) os_ << "  ";
    }
    void write_string(std::string_view s) {
        os_ << '"';
        for (char c : s) {
            switch (c) {
                case '"': os_ << "\\\""; break;
                case '\\': os_ << "\\\\"; break;
                case '\n': os_ << "\\n"; break;
                case '\t': os_ << "\\t"; break;
                case '\r': os_ << "\\r"; break;
                default:
                    if (static_cast<unsigned char>(c) < 0x20) {
                        char buf[8];
                        std::snprintf(buf, sizeof buf, "\\u%04x", c);
                        os_ << buf;
                    } else {
                        os_ << c;
                    }
            }
        }
        os_ << '"';
    }

    std::ostream& os_;
    bool pretty_;
    std::vector<bool> depth_;  // per level: "already wrote an element"
    bool just_wrote_key_ = false;
};

}  // namespace bernpoly

#endif
