#include "privscan/util/png_io.hpp"

#include <png.h>

#include <cstring>

#include "privscan/errors.hpp"

namespace privscan::util {

namespace {

constexpr unsigned char kPngSignature[8] = {137, 80, 78, 71, 13, 10, 26, 10};

std::uint32_t read_be32(const unsigned char* p) {
    return (static_cast<std::uint32_t>(p[0]) << 24) | (static_cast<std::uint32_t>(p[1]) << 16) |
           (static_cast<std::uint32_t>(p[2]) << 8) | static_cast<std::uint32_t>(p[3]);
}

} // namespace

PngDims read_png_dims(std::string_view bytes) {
    const auto* p = reinterpret_cast<const unsigned char*>(bytes.data());
    if (bytes.size() < 8 || std::memcmp(p, kPngSignature, 8) != 0) {
        throw NotAPngError("not a PNG: bad signature");
    }
    // signature(8) + chunk length(4) + chunk type(4) + IHDR payload(13)
    if (bytes.size() < 33 || read_be32(p + 8) != 13 || std::memcmp(p + 12, "IHDR", 4) != 0) {
        throw CorruptImageError("PNG: missing IHDR chunk");
    }
    PngDims dims{read_be32(p + 16), read_be32(p + 20)};
    if (dims.width == 0 || dims.height == 0) {
        throw CorruptImageError("PNG: zero dimension in IHDR");
    }
    return dims;
}

RasterImage decode_png(std::string_view bytes) {
    read_png_dims(bytes); // signature / IHDR validation with precise errors

    png_image image;
    std::memset(&image, 0, sizeof(image));
    image.version = PNG_IMAGE_VERSION;
    if (!png_image_begin_read_from_memory(&image, bytes.data(), bytes.size())) {
        throw CorruptImageError(std::string("PNG decode failed: ") + image.message);
    }
    image.format = PNG_FORMAT_RGBA;

    RasterImage out;
    out.width = static_cast<int>(image.width);
    out.height = static_cast<int>(image.height);
    out.rgba.resize(PNG_IMAGE_SIZE(image));
    if (!png_image_finish_read(&image, nullptr, out.rgba.data(), 0, nullptr)) {
        png_image_free(&image);
        throw CorruptImageError(std::string("PNG decode failed: ") + image.message);
    }
    return out;
}

std::string encode_png(const RasterImage& img) {
    if (!img.valid()) throw CorruptImageError("PNG encode: invalid raster");

    png_image image;
    std::memset(&image, 0, sizeof(image));
    image.version = PNG_IMAGE_VERSION;
    image.width = static_cast<png_uint_32>(img.width);
    image.height = static_cast<png_uint_32>(img.height);
    image.format = PNG_FORMAT_RGBA;

    png_alloc_size_t size = 0;
    if (!png_image_write_to_memory(&image, nullptr, &size, 0, img.rgba.data(), 0, nullptr)) {
        throw CorruptImageError(std::string("PNG encode failed: ") + image.message);
    }
    std::string out(size, '\0');
    if (!png_image_write_to_memory(&image, out.data(), &size, 0, img.rgba.data(), 0, nullptr)) {
        throw CorruptImageError(std::string("PNG encode failed: ") + image.message);
    }
    out.resize(size);
    return out;
}

} // namespace privscan::util
