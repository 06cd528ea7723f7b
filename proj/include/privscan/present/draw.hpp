#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "privscan/geometry.hpp"
#include "privscan/raster.hpp"

namespace privscan::present {

/// All drawing clips to the image bounds and writes opaque pixels.

void fill_rect(RasterImage& img, const BoundingBox& box, Rgba color);

void fill_rounded_rect(RasterImage& img, const BoundingBox& box, int radius, Rgba color);

/// Ring between `box` and `box` inset by `thickness`, corners rounded with
/// `radius` (clamped to half the shorter side).
void draw_rounded_outline(RasterImage& img, const BoundingBox& box, int radius, int thickness,
                          Rgba color);

void draw_line(RasterImage& img, int x0, int y0, int x1, int y1, int thickness, Rgba color);

/// Fixed-metrics 5x7 text, integer `scale`. (x, y) is the glyph top-left.
void draw_text(RasterImage& img, int x, int y, std::string_view utf8, int scale, Rgba color);

int text_width(std::string_view utf8, int scale);
int line_height(int scale);

/// Greedy word wrap against a pixel budget; words wider than a line are
/// hard-broken. Never returns an empty list for non-empty input.
std::vector<std::string> wrap_text(std::string_view utf8, int scale, int max_width_px);

} // namespace privscan::present
