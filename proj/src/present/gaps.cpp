#include "privscan/present/gaps.hpp"

#include <algorithm>
#include <cmath>

namespace privscan::present {

std::vector<VerticalGap> compute_gaps(int screen_height, const std::vector<BoundingBox>& boxes) {
    std::vector<int> bounds{0, screen_height};
    for (const BoundingBox& b : boxes) {
        if (!b.valid()) continue;
        bounds.push_back(std::clamp(b.top, 0, screen_height));
        bounds.push_back(std::clamp(b.bottom, 0, screen_height));
    }
    std::sort(bounds.begin(), bounds.end());
    bounds.erase(std::unique(bounds.begin(), bounds.end()), bounds.end());

    std::vector<VerticalGap> gaps;
    for (std::size_t i = 0; i + 1 < bounds.size(); ++i) {
        const int y1 = bounds[i], y2 = bounds[i + 1];
        bool free = true;
        for (const BoundingBox& b : boxes) {
            if (!b.valid()) continue;
            // open band (y1,y2) vs box extent [top,bottom)
            if (std::max(y1, b.top) < std::min(y2, b.bottom)) {
                free = false;
                break;
            }
        }
        if (free) gaps.push_back(VerticalGap{y1, y2});
    }
    return gaps;
}

std::optional<VerticalGap> select_gap(const std::vector<VerticalGap>& gaps) {
    std::optional<VerticalGap> best;
    for (const VerticalGap& g : gaps) {
        if (!best || g.height() > best->height() ||
            (g.height() == best->height() && g.top < best->top)) {
            best = g;
        }
    }
    return best;
}

CardPlacement layout_card(const std::optional<VerticalGap>& gap, int screen_width,
                          int screen_height, int required_height) {
    CardPlacement out;
    const int card_w = static_cast<int>(std::lround(screen_width * 0.9));
    const int left = (screen_width - card_w) / 2;

    if (gap && gap->height() >= required_height) {
        const int top = gap->top + (gap->height() - required_height) / 2;
        out.box = BoundingBox{left, top, left + card_w, top + required_height};
        out.overflow = false;
        return out;
    }

    const int margin = static_cast<int>(std::lround(screen_height * 0.02));
    const int bottom = screen_height - margin;
    const int top = std::max(0, bottom - required_height);
    out.box = BoundingBox{left, top, left + card_w, bottom};
    out.overflow = true;
    return out;
}

} // namespace privscan::present
