#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "privscan/raster.hpp"

namespace privscan::util {

struct PngDims {
    std::uint32_t width = 0;
    std::uint32_t height = 0;
};

/// Reads width/height from the PNG signature + IHDR chunk without decoding
/// any pixel data. Throws NotAPngError (bad signature) or CorruptImageError.
PngDims read_png_dims(std::string_view bytes);

/// Full decode to 8-bit RGBA. Throws NotAPngError / CorruptImageError.
RasterImage decode_png(std::string_view bytes);

/// Lossless RGBA encode. Output is deterministic for identical input.
std::string encode_png(const RasterImage& image);

} // namespace privscan::util
