#include "privscan/client/capture.hpp"

#include <algorithm>

#include "privscan/util/png_io.hpp"

namespace privscan::client {

namespace {

std::uint8_t channel_median(std::vector<std::uint8_t>& values) {
    const std::size_t mid = values.size() / 2;
    std::nth_element(values.begin(), values.begin() + mid, values.end());
    return values[mid];
}

} // namespace

Rgba median_border_color(const RasterImage& image) {
    std::vector<std::uint8_t> r, g, b;
    auto take = [&](int x, int y) {
        const Rgba p = image.at(x, y);
        r.push_back(p.r);
        g.push_back(p.g);
        b.push_back(p.b);
    };
    for (int x = 0; x < image.width; ++x) {
        take(x, 0);
        if (image.height > 1) take(x, image.height - 1);
    }
    for (int y = 1; y + 1 < image.height; ++y) {
        take(0, y);
        if (image.width > 1) take(image.width - 1, y);
    }
    return Rgba{channel_median(r), channel_median(g), channel_median(b), 255};
}

RasterImage sanitize_capture(const RasterImage& capture, const CaptureInsets& insets) {
    if (insets.top_px < 0 || insets.bottom_px < 0) {
        throw InsetsExceedImageError("insets must be non-negative");
    }
    if (insets.top_px + insets.bottom_px >= capture.height) {
        throw InsetsExceedImageError("top and bottom insets cover the whole capture");
    }
    for (const BoundingBox& box : insets.exclusion_boxes) {
        if (!box.valid() || box.left < 0 || box.top < 0 || box.right > capture.width ||
            box.bottom > capture.height) {
            throw InsetsExceedImageError("exclusion box lies outside the capture");
        }
    }

    RasterImage work = capture;
    if (!insets.exclusion_boxes.empty()) {
        const Rgba fill = median_border_color(capture);
        for (const BoundingBox& box : insets.exclusion_boxes) {
            for (int y = box.top; y < box.bottom; ++y) {
                for (int x = box.left; x < box.right; ++x) work.set(x, y, fill);
            }
        }
    }

    if (insets.top_px == 0 && insets.bottom_px == 0) return work;

    const int out_h = capture.height - insets.top_px - insets.bottom_px;
    RasterImage out(capture.width, out_h, Rgba{0, 0, 0, 255});
    const std::size_t row_bytes = static_cast<std::size_t>(capture.width) * 4;
    for (int y = 0; y < out_h; ++y) {
        const std::uint8_t* src = work.rgba.data() + work.offset(0, y + insets.top_px);
        std::copy(src, src + row_bytes, out.rgba.data() + out.offset(0, y));
    }
    return out;
}

std::string compress_capture(const RasterImage& image) {
    std::string png = util::encode_png(image);
    if (png.size() > kMaxUploadBytes) {
        throw CaptureTooLargeError("compressed capture is " + std::to_string(png.size()) +
                                   " bytes; the upload limit is 5 MB");
    }
    return png;
}

} // namespace privscan::client
