#pragma once

#include <memory>
#include <vector>

#include "privscan/detect/gray.hpp"

namespace privscan::detect {

/// NCC score for every template placement; entry (x,y) is the score of the
/// window whose top-left corner is (x,y). Dimensions are
/// (W - w + 1) x (H - h + 1).
struct ScoreMap {
    int width = 0;
    int height = 0;
    std::vector<double> v;

    double at(int x, int y) const { return v[static_cast<std::size_t>(y) * width + x]; }
    bool empty() const { return v.empty(); }
};

/// Windows whose masked intensity variance falls below this (per masked
/// pixel) cannot carry a meaningful correlation and score 0.
inline constexpr double kMinVariancePerPixel = 0.25;

/// Direct O(placements * mask) masked NCC. Single-threaded; the reference
/// the FFT path is validated against, and the baseline in the kernel bench.
ScoreMap ncc_score_map_reference(const GrayImage& screen, const MaskedTemplate& tpl);

/// Precomputed spectra of one screen, shared by all template/scale tasks of
/// a scan. Thread-safe for concurrent reads.
class ScreenSpectra {
public:
    ScreenSpectra(const GrayImage& screen);
    ~ScreenSpectra();
    ScreenSpectra(const ScreenSpectra&) = delete;
    ScreenSpectra& operator=(const ScreenSpectra&) = delete;

    int width() const;
    int height() const;

    struct Impl;
    const Impl& impl() const { return *impl_; }

private:
    std::unique_ptr<Impl> impl_;
};

/// FFT-accelerated masked NCC, numerically equivalent to the reference
/// within ~1e-6 on 8-bit inputs. Returns an empty map when the template
/// exceeds the screen. Safe to call concurrently on one ScreenSpectra.
ScoreMap ncc_score_map(const ScreenSpectra& screen, const MaskedTemplate& tpl);

struct Peak {
    int x = 0;
    int y = 0;
    double score = 0.0;
};

/// Strict 3x3 local maxima with score >= threshold; map borders allowed.
std::vector<Peak> find_peaks(const ScoreMap& map, double threshold);

} // namespace privscan::detect
