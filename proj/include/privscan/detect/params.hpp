#pragma once

#include <vector>

#include "privscan/errors.hpp"

namespace privscan::detect {

/// Tuning knobs for icon matching. Defaults hold for every bundled fixture;
/// services may override per request.
struct DetectionParams {
    double ncc_threshold = 0.85;
    std::vector<double> scales = {0.5, 0.625, 0.78, 1.0, 1.25, 1.56, 2.0};
    double nms_iou = 0.5;

    void validate() const {
        if (!(ncc_threshold > 0.0 && ncc_threshold <= 1.0)) {
            throw Error("detection params: ncc_threshold must be in (0,1]");
        }
        if (!(nms_iou > 0.0 && nms_iou < 1.0)) {
            throw Error("detection params: nms_iou must be in (0,1)");
        }
        if (scales.empty()) throw Error("detection params: scales must be non-empty");
        for (std::size_t i = 0; i < scales.size(); ++i) {
            if (scales[i] <= 0.0) throw Error("detection params: scales must be positive");
            if (i > 0 && scales[i] <= scales[i - 1]) {
                throw Error("detection params: scales must be strictly increasing");
            }
        }
    }
};

} // namespace privscan::detect
