#pragma once

#include <cstdint>
#include <vector>

#include "privscan/raster.hpp"

namespace privscan::detect {

/// Luma plane in [0,255], row-major doubles.
struct GrayImage {
    int width = 0;
    int height = 0;
    std::vector<double> v;

    double at(int x, int y) const { return v[static_cast<std::size_t>(y) * width + x]; }
};

/// Rec.601 luma; alpha is ignored here (the template mask carries it).
GrayImage to_gray(const RasterImage& image);

/// Bilinear resample with edge clamping, all four channels.
RasterImage resize_bilinear(const RasterImage& src, int out_width, int out_height);

/// A template prepared for masked NCC: gray plane, binary mask from the
/// alpha channel (alpha >= 128), and the template-side statistics.
struct MaskedTemplate {
    int width = 0;
    int height = 0;
    std::vector<double> gray;  // 0 where the mask is off
    std::vector<std::uint8_t> mask;
    int on_count = 0;
    double mean = 0.0; // masked mean
    double ss = 0.0;   // masked sum of squared deviations

    bool usable() const { return on_count >= 4 && ss > 1e-9; }
};

MaskedTemplate make_masked_template(const RasterImage& rgba);

} // namespace privscan::detect
