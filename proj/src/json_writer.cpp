// SPDX-License-Identifier: Apache-2.0

#include "mnofdm/json_writer.hpp"

#include <charconv>
#include <cmath>
#include <string>

namespace mnofdm {

std::string format_number(double v)
{
    if (std::isnan(v)) {
        return "nan";
    }
    if (std::isinf(v)) {
        return v > 0 ? "inf" : "-inf";
    }
    if (v == 0.0) {
        v = 0.0; // drop the sign of -0
    }
    char buf[40];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::scientific, 14);
    return std::string(buf, res.ptr);
}

void JsonWriter::newline()
{
    out_ << '\n';
    for (std::size_t i = 0; i < stack_.size(); ++i) {
        out_ << "  ";
    }
}

void JsonWriter::before_value()
{
    if (after_key_) {
        after_key_ = false;
        return;
    }
    if (!stack_.empty()) {
        if (!stack_.back().empty) {
            out_ << ',';
        }
        stack_.back().empty = false;
        newline();
    }
}

JsonWriter& JsonWriter::begin_object()
{
    before_value();
    out_ << '{';
    stack_.push_back({true});
    return *this;
}

void JsonWriter::close(char bracket)
{
    const bool empty = stack_.back().empty;
    stack_.pop_back();
    if (!empty) {
        newline();
    }
    out_ << bracket;
}

void JsonWriter::write_string(std::string_view v)
{
    out_ << '"';
    for (char c : v) {
        switch (c) {
        case '"': out_ << "\\\""; break;
        case '\\': out_ << "\\\\"; break;
        case '\n': out_ << "\\n"; break;
        case '\t': out_ << "\\t"; break;
        default:
            if (static_cast<unsigned char>(c) < 0x20) {
                static constexpr char kHex[] = "0123456789abcdef";
                out_ << "\\u00" << kHex[(c >> 4) & 0xf] << kHex[c & 0xf];
            } else {
                out_ << c;
            }
        }
    }
    out_ << '"';
}

JsonWriter& JsonWriter::end_object()
{
    close('}');
    return *this;
}

JsonWriter& JsonWriter::begin_array()
{
    before_value();
    out_ << '[';
    stack_.push_back({false});
    return *this;
}

JsonWriter& JsonWriter::end_array()
{
    close(']');
    return *this;
}

JsonWriter& JsonWriter::key(std::string_view name)
{
    before_value();
    write_string(name);
    out_ << ": ";
    after_key_ = true;
    return *this;
}

JsonWriter& JsonWriter::value(double v)
{
    before_value();
    // JSON has no literal for non-finite numbers.
    if (!std::isfinite(v)) {
        out_ << "null";
    } else {
        out_ << format_number(v);
    }
    return *this;
}

JsonWriter& JsonWriter::value(std::int64_t v)
{
    before_value();
    out_ << std::to_string(v);
    return *this;
}

JsonWriter& JsonWriter::value(std::uint64_t v)
{
    before_value();
    out_ << std::to_string(v);
    return *this;
}

JsonWriter& JsonWriter::value(bool v)
{
    before_value();
    out_ << (v ? "true" : "false");
    return *this;
}

JsonWriter& JsonWriter::value(std::string_view v)
{
    before_value();
    write_string(v);
    return *this;
}

void JsonWriter::finish()
{
    out_ << '\n';
}

} // namespace mnofdm
