#pragma once

#include <cstdint>
#include <vector>

namespace privscan {

struct Rgba {
    std::uint8_t r = 0, g = 0, b = 0, a = 255;

    friend bool operator==(const Rgba&, const Rgba&) = default;
};

/// 8-bit RGBA raster, row-major, no padding.
struct RasterImage {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> rgba;

    RasterImage() = default;
    RasterImage(int w, int h, Rgba fill = {255, 255, 255, 255})
        : width(w), height(h), rgba(static_cast<std::size_t>(w) * h * 4) {
        for (std::size_t i = 0; i < rgba.size(); i += 4) {
            rgba[i] = fill.r;
            rgba[i + 1] = fill.g;
            rgba[i + 2] = fill.b;
            rgba[i + 3] = fill.a;
        }
    }

    bool valid() const {
        return width >= 1 && height >= 1 &&
               rgba.size() == static_cast<std::size_t>(width) * height * 4;
    }

    std::size_t offset(int x, int y) const {
        return (static_cast<std::size_t>(y) * width + x) * 4;
    }

    Rgba at(int x, int y) const {
        const std::size_t o = offset(x, y);
        return Rgba{rgba[o], rgba[o + 1], rgba[o + 2], rgba[o + 3]};
    }

    void set(int x, int y, Rgba c) {
        const std::size_t o = offset(x, y);
        rgba[o] = c.r;
        rgba[o + 1] = c.g;
        rgba[o + 2] = c.b;
        rgba[o + 3] = c.a;
    }

    friend bool operator==(const RasterImage&, const RasterImage&) = default;
};

} // namespace privscan
