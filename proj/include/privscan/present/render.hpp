#pragma once

#include <string>
#include <vector>

#include "privscan/errors.hpp"
#include "privscan/present/gaps.hpp"
#include "privscan/present/summarize.hpp"
#include "privscan/raster.hpp"
#include "privscan/taxonomy.hpp"
#include "privscan/types.hpp"

namespace privscan::present {

/// present() requires detections; the caller routes the zero-detection case
/// to the empty-result path instead.
struct EmptyDetectionsError : Error {
    EmptyDetectionsError() : Error("present requires at least one detection") {}
};

constexpr int kMinCardHeight = 120;

struct CppCard {
    std::string data_type;
    std::string summary; // non-empty, <= 280 code points
    int segment_count = 0;
    bool undisclosed = false; // true iff segment_count == 0
    BoundingBox box;
    bool overflow = false; // card did not fit any gap and was bottom-anchored
};

struct AnnotatedImage {
    std::string data_type;
    RasterImage image; // same dimensions as the input screenshot
    CppCard card;
    std::vector<BoundingBox> detection_boxes;
};

/// Builds the card for one data type: summary via the backend, height from
/// the wrapped body text, placement in the tallest gap between this type's
/// boxes.
CppCard make_card(const std::vector<segments::PolicySegment>& segs, const DataType& type,
                  const std::vector<BoundingBox>& boxes, int screen_width, int screen_height,
                  const Summarizer& backend, std::vector<std::string>* warnings = nullptr);

/// Copy of the screen with detection outlines, a leader line from the card
/// to the nearest detection box, and the opaque card itself.
AnnotatedImage render_annotated(const RasterImage& screen,
                                const std::vector<Detection>& detections, const CppCard& card,
                                const std::string& display_name);

/// One annotated image per distinct data type among the detections, ordered
/// by data_type id. Per-type images may render in parallel; output order and
/// content are independent of scheduling.
std::vector<AnnotatedImage> present(const RasterImage& screen,
                                    const std::vector<Detection>& detections,
                                    const segments::SegmentMap& segment_map,
                                    const Taxonomy& taxonomy, const Summarizer& summarizer,
                                    std::vector<std::string>* warnings = nullptr);

} // namespace privscan::present
