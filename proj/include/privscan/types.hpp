#pragma once

#include <cstdint>
#include <string>

#include "privscan/geometry.hpp"

namespace privscan {

/// One personal-data category, e.g. {id: "location", display_name: "Location"}.
struct DataType {
    std::string id;
    std::string display_name;

    friend bool operator==(const DataType&, const DataType&) = default;
};

enum class DetectionSource { kIcon, kText };

inline const char* to_string(DetectionSource s) {
    return s == DetectionSource::kIcon ? "icon" : "text";
}

/// A GUI region tagged with a personal-data type.
struct Detection {
    BoundingBox box;
    std::string data_type;
    double score = 0.0;
    DetectionSource source = DetectionSource::kIcon;
};

/// Sidecar entry: one UI element with its on-screen text. Stands in for the
/// host platform's accessibility tree.
struct UiElement {
    BoundingBox box;
    std::string text;
};

/// Wall-clock milliseconds per pipeline stage. Glue between stages is not
/// measured, so overall_ms >= the component sum.
struct ScanTimings {
    std::int64_t context_detection_ms = 0;
    std::int64_t segment_extraction_ms = 0;
    std::int64_t cpp_presentation_ms = 0;
    std::int64_t overall_ms = 0;

    std::int64_t component_sum() const {
        return context_detection_ms + segment_extraction_ms + cpp_presentation_ms;
    }
};

} // namespace privscan
