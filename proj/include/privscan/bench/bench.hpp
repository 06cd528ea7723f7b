#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "privscan/errors.hpp"
#include "privscan/types.hpp"

namespace privscan::bench {

/// Serves one HTML document at /policy on a loopback port, so a full scan
/// pipeline can run with no outside network. Counts GETs for cache tests.
class FixturePolicyServer {
public:
    /// Defaults to the bundled fixture policy document.
    explicit FixturePolicyServer(std::optional<std::string> html = std::nullopt);
    ~FixturePolicyServer();

    FixturePolicyServer(const FixturePolicyServer&) = delete;
    FixturePolicyServer& operator=(const FixturePolicyServer&) = delete;

    std::string url() const; // http://127.0.0.1:<port>/policy
    int request_count() const;

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

/// Any scan failure aborts the whole bench; partial reports are never kept.
struct BenchAbortedError : Error {
    explicit BenchAbortedError(const std::string& m) : Error(m) {}
};

/// One fixture condition: a screenshot, its optional sidecar, the policy URL.
struct Condition {
    std::string name;
    std::string screenshot_path;
    std::optional<std::string> sidecar_path;
    std::string policy_url;
};

struct MeanTimings {
    double context_detection_ms = 0;
    double segment_extraction_ms = 0;
    double cpp_presentation_ms = 0;
    double overall_ms = 0;
};

/// Table-shaped report: component rows, condition columns plus their mean.
struct BenchReport {
    int n = 0;
    MeanTimings icon_only;
    MeanTimings text_only;
    MeanTimings mixed;
    MeanTimings average; // per row, mean of the three condition means
};

/// The three bundled fixture conditions (posting = icon only, settings =
/// text only, home = mixed), pointing at `policy_url`.
std::vector<Condition> default_conditions(const std::string& policy_url);

/// One untimed pre-warm scan per condition, then n timed sequential scans.
/// Timings come from the service's own per-stage clocks.
/// Conditions must be named icon_only, text_only, mixed.
BenchReport run_bench(const std::vector<Condition>& conditions, const std::string& endpoint,
                      int n = 3);

/// Aligned 4x4 text table, one row per pipeline component plus Overall.
std::string render_table(const BenchReport& report);

/// Machine-readable report document.
std::string report_to_json(const BenchReport& report);

} // namespace privscan::bench
