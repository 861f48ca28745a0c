#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace qneuron::text {

/// "%.17g": lossless for IEEE-754 binary64.
std::string format_double(double v);

/// Comma-joined format_double values.
std::string join(std::span<const double> values);

/// Whole-token parse; nullopt on trailing garbage, empty input, or non-finite values.
std::optional<double> parse_double(std::string_view token);

std::vector<std::string_view> split(std::string_view line, char sep = ',');

std::string_view trim(std::string_view s);

} // namespace qneuron::text
