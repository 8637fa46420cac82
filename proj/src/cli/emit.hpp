#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "optact/mat_core.hpp"

namespace optact::cli {

/// 17 significant digits; non-finite values become `null` in JSON and `nan`/`inf` in CSV.
/// Negative zero is written as 0.
std::string json_number(double v);
std::string csv_number(double v);
std::string json_string(std::string_view s);

std::string json_matrix(const Mat2& m);
std::string json_matrix(const Mat4& m);
std::string json_vector(const FourVector& v);

/// Insertion-ordered JSON object with pre-rendered values.
class JsonObject {
public:
    JsonObject& raw(std::string_view key, std::string value);
    JsonObject& number(std::string_view key, double v) { return raw(key, json_number(v)); }
    JsonObject& string(std::string_view key, std::string_view v) { return raw(key, json_string(v)); }

    [[nodiscard]] std::string str() const;

private:
    std::vector<std::pair<std::string, std::string>> fields_;
};

std::string json_array(const std::vector<std::string>& items);

}  // namespace optact::cli
