#include "harmonic/json_writer.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdio>

namespace harmonic {

std::string format_double(double v)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    std::string out(buf);
    if (out.find_first_of(".eEn") == std::string::npos)
        out += ".0";
    return out;
}

void JsonWriter::separate()
{
    if (pending_key_) {
        pending_key_ = false;
        return;
    }
    if (!has_members_.empty()) {
        if (has_members_.back())
            out_ += ',';
        has_members_.back() = true;
    }
}

JsonWriter& JsonWriter::begin_object()
{
    separate();
    out_ += '{';
    has_members_.push_back(false);
    return *this;
}

JsonWriter& JsonWriter::end_object()
{
    out_ += '}';
    has_members_.pop_back();
    return *this;
}

JsonWriter& JsonWriter::begin_array()
{
    separate();
    out_ += '[';
    has_members_.push_back(false);
    return *this;
}

JsonWriter& JsonWriter::end_array()
{
    out_ += ']';
    has_members_.pop_back();
    return *this;
}

JsonWriter& JsonWriter::key(std::string_view name)
{
    separate();
    out_ += nlohmann::json(std::string(name)).dump();
    out_ += ':';
    pending_key_ = true;
    return *this;
}

JsonWriter& JsonWriter::value(std::string_view s)
{
    separate();
    out_ += nlohmann::json(std::string(s)).dump();
    return *this;
}

JsonWriter& JsonWriter::value(std::int64_t v)
{
    separate();
    out_ += std::to_string(v);
    return *this;
}

JsonWriter& JsonWriter::value(std::uint64_t v)
{
    separate();
    out_ += std::to_string(v);
    return *this;
}

JsonWriter& JsonWriter::value(double v)
{
    if (!std::isfinite(v))
        return null();
    separate();
    out_ += format_double(v);
    return *this;
}

JsonWriter& JsonWriter::value(bool v)
{
    separate();
    out_ += v ? "true" : "false";
    return *this;
}

JsonWriter& JsonWriter::null()
{
    separate();
    out_ += "null";
    return *this;
}

} // namespace harmonic
