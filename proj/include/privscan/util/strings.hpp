#pragma once

#include <string>
#include <string_view>

namespace privscan::util {

std::string to_lower(std::string_view s);

/// Strips leading/trailing ASCII whitespace.
std::string_view trim(std::string_view s);

/// Collapses every run of whitespace (including newlines) to a single space
/// and trims the ends.
std::string normalize_whitespace(std::string_view s);

bool starts_with(std::string_view s, std::string_view prefix);

/// Number of UTF-8 code points; malformed bytes count as one point each.
std::size_t utf8_length(std::string_view s);

/// Longest prefix holding at most max_points code points.
std::string_view utf8_prefix(std::string_view s, std::size_t max_points);

} // namespace privscan::util
