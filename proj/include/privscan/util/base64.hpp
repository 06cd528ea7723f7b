#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace privscan::util {

std::string base64_encode(std::string_view bytes);

/// Decodes standard base64 (padding required). Throws privscan::Error on
/// malformed input.
std::string base64_decode(std::string_view text);

} // namespace privscan::util
