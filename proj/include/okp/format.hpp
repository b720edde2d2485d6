#pragma once

#include <string>
#include <string_view>

namespace okp {

/// Shortest decimal representation that round-trips to the same double.
std::string format_double(double x);

/// Strict full-string parse; throws DataError naming `what` on failure.
double parse_double(std::string_view text, std::string_view what = "number");
unsigned long long parse_u64(std::string_view text, std::string_view what = "integer");

std::string_view trim(std::string_view s) noexcept;

}  // namespace okp
