#pragma once

#include <optional>
#include <string>
#include <vector>

#include "privscan/detect/params.hpp"
#include "privscan/detect/templates.hpp"
#include "privscan/raster.hpp"
#include "privscan/taxonomy.hpp"
#include "privscan/types.hpp"

namespace privscan::detect {

enum class ExecMode {
    kSerial,
    kParallel,
};

/// Template-matches every (template, scale) pair against the screenshot and
/// returns one detection per accepted correlation peak. A scale whose scaled
/// template exceeds the screen is skipped with a note in `warnings`; if every
/// pair skips while the library is non-empty, a summary warning is appended
/// instead of failing. Results are identical for both exec modes; parallel
/// tasks only write disjoint output slots.
std::vector<Detection> match_icons(const RasterImage& screen, const TemplateLibrary& lib,
                                   const DetectionParams& params,
                                   ExecMode mode = ExecMode::kParallel,
                                   std::vector<std::string>* warnings = nullptr);

/// Maps sidecar UI elements to data types via the taxonomy lexicon. An
/// element yields at most one detection per data type, at score 1.0.
std::vector<Detection> match_text(const std::vector<UiElement>& elements,
                                  const Taxonomy& taxonomy);

/// Full context detection: icon matches plus text matches when a sidecar is
/// present, deduplicated with per-type NMS, clipped to the screen, sorted by
/// (data type, top, left). With no sidecar this equals match_icons + NMS.
std::vector<Detection> detect_context(const RasterImage& screen,
                                      const std::optional<std::vector<UiElement>>& sidecar,
                                      const Taxonomy& taxonomy, const TemplateLibrary& lib,
                                      const DetectionParams& params,
                                      ExecMode mode = ExecMode::kParallel,
                                      std::vector<std::string>* warnings = nullptr);

} // namespace privscan::detect
