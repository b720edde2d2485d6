#include "okp/format.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <limits>
#include <string>

#include "okp/core.hpp"

namespace okp {

std::string format_double(double x) {
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  if (std::isnan(x)) return "nan";
  std::array<char, 64> buf{};
  auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), x);
  return std::string(buf.data(), ptr);
}

std::string_view trim(std::string_view s) noexcept {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) {
    s.remove_prefix(1);
  }
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r' ||
                        s.back() == '\n')) {
    s.remove_suffix(1);
  }
  return s;
}

double parse_double(std::string_view text, std::string_view what) {
  text = trim(text);
  if (text == "inf") return std::numeric_limits<double>::infinity();
  double out = 0.0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), out);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
    throw DataError("cannot parse " + std::string(what) + " from '" + std::string(text) + "'");
  }
  return out;
}

unsigned long long parse_u64(std::string_view text, std::string_view what) {
  text = trim(text);
  unsigned long long out = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), out);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
    throw DataError("cannot parse " + std::string(what) + " from '" + std::string(text) + "'");
  }
  return out;
}

}  // namespace okp
