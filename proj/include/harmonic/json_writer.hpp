#pragma once

// Minimal streaming JSON emitter with fixed key order and 17-significant-digit
// floats, so identical inputs give byte-identical output.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace harmonic {

class JsonWriter {
public:
    JsonWriter& begin_object();
    JsonWriter& end_object();
    JsonWriter& begin_array();
    JsonWriter& end_array();
    JsonWriter& key(std::string_view name);

    JsonWriter& value(std::string_view s);
    JsonWriter& value(const char* s) { return value(std::string_view(s)); }
    JsonWriter& value(const std::string& s) { return value(std::string_view(s)); }
    JsonWriter& value(std::int64_t v);
    JsonWriter& value(std::uint64_t v);
    JsonWriter& value(int v) { return value(static_cast<std::int64_t>(v)); }
    JsonWriter& value(unsigned v) { return value(static_cast<std::uint64_t>(v)); }
    JsonWriter& value(double v);
    JsonWriter& value(bool v);
    JsonWriter& null();

    const std::string& str() const { return out_; }

private:
    void separate();

    std::string out_;
    std::vector<bool> has_members_;
    bool pending_key_ = false;
};

/// "%.17g", always carrying a '.' or exponent so the token reads back as a float.
std::string format_double(double v);

} // namespace harmonic
