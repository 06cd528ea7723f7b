#pragma once

#include <algorithm>
#include <cstdint>

namespace privscan {

/// Axis-aligned pixel rectangle. Origin is the image top-left corner,
/// right/bottom are exclusive, so width = right - left.
struct BoundingBox {
    int left = 0;
    int top = 0;
    int right = 0;
    int bottom = 0;

    int width() const { return right - left; }
    int height() const { return bottom - top; }
    std::int64_t area() const {
        return static_cast<std::int64_t>(width()) * height();
    }
    bool valid() const {
        return left >= 0 && top >= 0 && left < right && top < bottom;
    }
    bool contains(int x, int y) const {
        return x >= left && x < right && y >= top && y < bottom;
    }

    friend bool operator==(const BoundingBox&, const BoundingBox&) = default;
};

inline BoundingBox intersection(const BoundingBox& a, const BoundingBox& b) {
    return BoundingBox{std::max(a.left, b.left), std::max(a.top, b.top),
                       std::min(a.right, b.right), std::min(a.bottom, b.bottom)};
}

inline bool intersects(const BoundingBox& a, const BoundingBox& b) {
    const BoundingBox i = intersection(a, b);
    return i.left < i.right && i.top < i.bottom;
}

/// Intersection over union of two valid boxes, 0 when disjoint.
inline double iou(const BoundingBox& a, const BoundingBox& b) {
    const BoundingBox i = intersection(a, b);
    if (i.left >= i.right || i.top >= i.bottom) return 0.0;
    const std::int64_t inter = i.area();
    const std::int64_t uni = a.area() + b.area() - inter;
    return static_cast<double>(inter) / static_cast<double>(uni);
}

/// Clips a box to the [0,width) x [0,height) raster.
inline BoundingBox clip(const BoundingBox& box, int width, int height) {
    return BoundingBox{std::clamp(box.left, 0, width), std::clamp(box.top, 0, height),
                       std::clamp(box.right, 0, width), std::clamp(box.bottom, 0, height)};
}

} // namespace privscan
