#pragma once

#include <string>
#include <vector>

#include "privscan/errors.hpp"
#include "privscan/geometry.hpp"
#include "privscan/raster.hpp"

namespace privscan::client {

struct InsetsExceedImageError : Error {
    explicit InsetsExceedImageError(const std::string& m) : Error(m) {}
};

struct CaptureTooLargeError : Error {
    explicit CaptureTooLargeError(const std::string& m) : Error(m) {}
};

/// Regions to exclude from a capture before upload: OS chrome rows at the
/// top/bottom plus arbitrary boxes (such as the host's own floating widget).
struct CaptureInsets {
    int top_px = 0;
    int bottom_px = 0;
    std::vector<BoundingBox> exclusion_boxes;
};

/// Crops the inset rows and paints every exclusion box with the capture's
/// median border color, so no template can match inside an excluded region.
/// Exclusion boxes are in pre-crop coordinates and must lie within bounds.
RasterImage sanitize_capture(const RasterImage& capture, const CaptureInsets& insets);

/// Median border color of the image (per-channel median over the 1-px edge
/// ring), used as the neutral fill.
Rgba median_border_color(const RasterImage& image);

constexpr std::size_t kMaxUploadBytes = 5 * 1024 * 1024;

/// Lossless PNG bytes, capped at 5 MB.
std::string compress_capture(const RasterImage& image);

} // namespace privscan::client
