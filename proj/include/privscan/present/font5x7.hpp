#pragma once

#include <cstdint>

namespace privscan::present::font {

inline constexpr int kGlyphWidth = 5;
inline constexpr int kGlyphHeight = 7;
inline constexpr int kAdvance = 6; // glyph plus one column of spacing

/// Column bitmap for a code point, 5 bytes, bit 0 = top row. Covers ASCII
/// 32..126 plus U+2026; anything else maps to a placeholder box.
const std::uint8_t* glyph(char32_t cp);

} // namespace privscan::present::font
