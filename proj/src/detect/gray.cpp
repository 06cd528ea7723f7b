#include "privscan/detect/gray.hpp"

#include <algorithm>
#include <cmath>

namespace privscan::detect {

GrayImage to_gray(const RasterImage& image) {
    GrayImage out;
    out.width = image.width;
    out.height = image.height;
    out.v.resize(static_cast<std::size_t>(image.width) * image.height);
    const std::uint8_t* p = image.rgba.data();
    for (std::size_t i = 0; i < out.v.size(); ++i, p += 4) {
        out.v[i] = 0.299 * p[0] + 0.587 * p[1] + 0.114 * p[2];
    }
    return out;
}

RasterImage resize_bilinear(const RasterImage& src, int out_width, int out_height) {
    RasterImage out;
    out.width = std::max(1, out_width);
    out.height = std::max(1, out_height);
    out.rgba.resize(static_cast<std::size_t>(out.width) * out.height * 4);

    const double sx = static_cast<double>(src.width) / out.width;
    const double sy = static_cast<double>(src.height) / out.height;

    for (int y = 0; y < out.height; ++y) {
        const double fy = (y + 0.5) * sy - 0.5;
        const int y0 = std::clamp(static_cast<int>(std::floor(fy)), 0, src.height - 1);
        const int y1 = std::min(y0 + 1, src.height - 1);
        const double wy = std::clamp(fy - y0, 0.0, 1.0);
        for (int x = 0; x < out.width; ++x) {
            const double fx = (x + 0.5) * sx - 0.5;
            const int x0 = std::clamp(static_cast<int>(std::floor(fx)), 0, src.width - 1);
            const int x1 = std::min(x0 + 1, src.width - 1);
            const double wx = std::clamp(fx - x0, 0.0, 1.0);
            const std::size_t o = out.offset(x, y);
            for (int c = 0; c < 4; ++c) {
                const double v00 = src.rgba[src.offset(x0, y0) + c];
                const double v10 = src.rgba[src.offset(x1, y0) + c];
                const double v01 = src.rgba[src.offset(x0, y1) + c];
                const double v11 = src.rgba[src.offset(x1, y1) + c];
                const double v = (1 - wy) * ((1 - wx) * v00 + wx * v10) +
                                 wy * ((1 - wx) * v01 + wx * v11);
                out.rgba[o + c] = static_cast<std::uint8_t>(std::lround(std::clamp(v, 0.0, 255.0)));
            }
        }
    }
    return out;
}

MaskedTemplate make_masked_template(const RasterImage& rgba) {
    MaskedTemplate t;
    t.width = rgba.width;
    t.height = rgba.height;
    const std::size_t n = static_cast<std::size_t>(rgba.width) * rgba.height;
    t.gray.assign(n, 0.0);
    t.mask.assign(n, 0);

    double sum = 0.0;
    const std::uint8_t* p = rgba.rgba.data();
    for (std::size_t i = 0; i < n; ++i, p += 4) {
        if (p[3] >= 128) {
            t.mask[i] = 1;
            t.gray[i] = 0.299 * p[0] + 0.587 * p[1] + 0.114 * p[2];
            sum += t.gray[i];
            ++t.on_count;
        }
    }
    if (t.on_count > 0) {
        t.mean = sum / t.on_count;
        for (std::size_t i = 0; i < n; ++i) {
            if (t.mask[i]) {
                const double d = t.gray[i] - t.mean;
                t.ss += d * d;
            }
        }
    }
    return t;
}

} // namespace privscan::detect
