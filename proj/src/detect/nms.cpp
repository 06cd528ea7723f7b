#include "privscan/detect/nms.hpp"

#include <algorithm>

#include "privscan/geometry.hpp"

namespace privscan::detect {

std::vector<Detection> dedup_nms(std::vector<Detection> candidates, double iou_threshold) {
    std::stable_sort(candidates.begin(), candidates.end(),
                     [](const Detection& a, const Detection& b) {
                         if (a.score != b.score) return a.score > b.score;
                         if (a.box.top != b.box.top) return a.box.top < b.box.top;
                         return a.box.left < b.box.left;
                     });

    std::vector<Detection> kept;
    kept.reserve(candidates.size());
    for (const Detection& cand : candidates) {
        bool suppressed = false;
        for (const Detection& k : kept) {
            if (k.data_type != cand.data_type) continue;
            if (iou(k.box, cand.box) > iou_threshold) {
                suppressed = true;
                break;
            }
        }
        if (!suppressed) kept.push_back(cand);
    }
    return kept;
}

} // namespace privscan::detect
