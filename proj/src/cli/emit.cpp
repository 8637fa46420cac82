#include "emit.hpp"

#include <cmath>

#include <fmt/format.h>

namespace optact::cli {

std::string json_number(double v) {
    if (!std::isfinite(v)) {
        return "null";
    }
    return csv_number(v);
}

std::string csv_number(double v) {
    // Negative zero prints as 0.
    return fmt::format("{:.17g}", v == 0.0 ? 0.0 : v);
}

std::string json_string(std::string_view s) {
    std::string out;
    out.reserve(s.size() + 2);
    out.push_back('"');
    for (const char ch : s) {
        switch (ch) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\r': out += "\\r"; break;
            case '\t': out += "\\t"; break;
            default:
                if (static_cast<unsigned char>(ch) < 0x20) {
                    out += fmt::format("\\u{:04x}", static_cast<unsigned>(ch));
                } else {
                    out.push_back(ch);
                }
        }
    }
    out.push_back('"');
    return out;
}

std::string json_array(const std::vector<std::string>& items) {
    std::string out = "[";
    for (std::size_t i = 0; i < items.size(); ++i) {
        if (i > 0) {
            out += ',';
        }
        out += items[i];
    }
    out += ']';
    return out;
}

std::string json_matrix(const Mat2& m) {
    return json_array({json_array({json_number(m.a11), json_number(m.a12)}),
                       json_array({json_number(m.a21), json_number(m.a22)})});
}

std::string json_matrix(const Mat4& m) {
    std::vector<std::string> rows;
    for (std::size_t r = 0; r < 4; ++r) {
        rows.push_back(json_array(
            {json_number(m(r, 0)), json_number(m(r, 1)), json_number(m(r, 2)), json_number(m(r, 3))}));
    }
    return json_array(rows);
}

std::string json_vector(const FourVector& v) {
    return json_array({json_number(v.x), json_number(v.y), json_number(v.z), json_number(v.t)});
}

JsonObject& JsonObject::raw(std::string_view key, std::string value) {
    fields_.emplace_back(std::string(key), std::move(value));
    return *this;
}

std::string JsonObject::str() const {
    std::string out = "{";
    for (std::size_t i = 0; i < fields_.size(); ++i) {
        if (i > 0) {
            out += ',';
        }
        out += json_string(fields_[i].first);
        out += ':';
        out += fields_[i].second;
    }
    out += '}';
    return out;
}

}  // namespace optact::cli
