// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace mnofdm {

/// Streaming pretty-printer for the JSON documents the tools emit. Doubles
/// are written with 15 significant digits in exponent form, so output never
/// depends on locale or on shortest-representation heuristics.
class JsonWriter {
public:
    explicit JsonWriter(std::ostream& out) : out_(out) {}

    JsonWriter& begin_object();
    JsonWriter& end_object();
    JsonWriter& begin_array();
    JsonWriter& end_array();
    JsonWriter& key(std::string_view name);

    JsonWriter& value(double v);
    JsonWriter& value(std::int64_t v);
    JsonWriter& value(std::uint64_t v);
    JsonWriter& value(int v) { return value(static_cast<std::int64_t>(v)); }
    JsonWriter& value(bool v);
    JsonWriter& value(std::string_view v);
    JsonWriter& value(const char* v) { return value(std::string_view(v)); }

    template <typename T>
    JsonWriter& field(std::string_view name, const T& v)
    {
        key(name);
        return value(v);
    }

    /// Terminates the document with a newline.
    void finish();

private:
    void before_value();
    void newline();
    void close(char bracket);
    void write_string(std::string_view v);

    struct Level {
        bool is_object;
        bool empty = true;
    };

    std::ostream& out_;
    std::vector<Level> stack_;
    bool after_key_ = false;
};

/// 15 significant digits, exponent form ("7.07106781186548e-01"); "nan",
/// "inf", "-inf" for non-finite input.
std::string format_number(double v);

} // namespace mnofdm
