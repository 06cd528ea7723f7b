#pragma once

#include <vector>

#include "privscan/types.hpp"

namespace privscan::detect {

/// Greedy per-type non-maximum suppression. Candidates are visited in
/// descending score order (ties: smaller top, then smaller left) and kept
/// unless they overlap an already kept detection of the same data type
/// with IoU strictly greater than `iou_threshold`. Detections of different
/// types never suppress each other. Output preserves visit order.
std::vector<Detection> dedup_nms(std::vector<Detection> candidates, double iou_threshold);

} // namespace privscan::detect
