#pragma once

#include <optional>
#include <vector>

#include "privscan/geometry.hpp"

namespace privscan::present {

/// A horizontal band of the screen free of detection boxes.
struct VerticalGap {
    int top = 0;
    int bottom = 0;

    int height() const { return bottom - top; }
    friend bool operator==(const VerticalGap&, const VerticalGap&) = default;
};

/// Splits [0, screen_height) at every box top/bottom plus the screen edges
/// and keeps the bands whose interior no box's vertical extent touches.
/// Boundaries outside the screen are clamped. Output is sorted by top.
std::vector<VerticalGap> compute_gaps(int screen_height, const std::vector<BoundingBox>& boxes);

/// The tallest gap; ties resolve to the topmost. Empty input yields nullopt.
std::optional<VerticalGap> select_gap(const std::vector<VerticalGap>& gaps);

struct CardPlacement {
    BoundingBox box;
    bool overflow = false; // true when the card could not fit any gap

    friend bool operator==(const CardPlacement&, const CardPlacement&) = default;
};

/// Card occupies 90% of the screen width, horizontally centered. A gap tall
/// enough hosts the card vertically centered; otherwise the card anchors to
/// the screen bottom with a 2% margin and the overflow flag is set.
CardPlacement layout_card(const std::optional<VerticalGap>& gap, int screen_width,
                          int screen_height, int required_height);

} // namespace privscan::present
