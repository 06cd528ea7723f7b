#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "privscan/detect/match.hpp"
#include "privscan/errors.hpp"
#include "privscan/policy/cache.hpp"
#include "privscan/policy/fetch.hpp"
#include "privscan/present/render.hpp"
#include "privscan/taxonomy.hpp"
#include "privscan/types.hpp"

namespace privscan::service {

constexpr std::size_t kMaxScreenshotBytes = 5 * 1024 * 1024;

/// Request-level failure with the HTTP status and stable error code the
/// endpoint reports.
struct ScanError : Error {
    int status;
    std::string code;
    ScanError(int status_, std::string code_, const std::string& message)
        : Error(message), status(status_), code(std::move(code_)) {}
};

struct BadImageError : ScanError {
    explicit BadImageError(const std::string& m) : ScanError(400, "BadImage", m) {}
};
struct BadUrlError : ScanError {
    explicit BadUrlError(const std::string& m) : ScanError(400, "BadUrl", m) {}
};
struct BadSidecarError : ScanError {
    explicit BadSidecarError(const std::string& m) : ScanError(422, "BadSidecar", m) {}
};
struct PolicyFetchFailedError : ScanError {
    explicit PolicyFetchFailedError(const std::string& m)
        : ScanError(502, "PolicyFetchFailed", m) {}
};
struct InternalError : ScanError {
    explicit InternalError(const std::string& m) : ScanError(500, "Internal", m) {}
};

/// Per-request overrides carried in the optional `options` part.
struct ScanOptions {
    std::optional<double> ncc_threshold;
    std::optional<double> nms_iou;
    std::optional<std::string> summarizer; // "deterministic" | "external"
};

struct ScanRequest {
    std::string screenshot_png;
    std::string policy_url;
    std::optional<std::string> sidecar_json;
    std::optional<std::string> options_json;
};

struct ScanResult {
    std::vector<Detection> detections;
    std::map<std::string, std::string> images; // data type id -> PNG bytes
    std::map<std::string, present::CppCard> cards;
    ScanTimings timings;
    std::vector<std::string> warnings;
    bool policy_from_cache = false;
};

/// Parses the sidecar wire object {"elements":[{"box":[l,t,r,b],"text":str}]}.
/// Throws BadSidecarError on any schema violation.
std::vector<UiElement> parse_sidecar(const std::string& json_text);

/// Parses the options part; unknown fields are ignored, wrong types throw
/// BadSidecarError (the request-schema error path).
ScanOptions parse_options(const std::string& json_text);

class ScanService {
public:
    struct Config {
        Taxonomy taxonomy;
        detect::TemplateLibrary templates;
        detect::DetectionParams params;
        std::shared_ptr<policy::CacheStore> cache;
        policy::HttpGet fetcher;
        std::shared_ptr<present::Summarizer> summarizer;
    };

    explicit ScanService(Config config);

    /// Bundled taxonomy and templates, cache dir and summarizer from the
    /// environment, real HTTP fetcher.
    static ScanService from_default_assets();

    /// Full pipeline: detect, extract, present. Stage timings are floored to
    /// whole milliseconds, so overall_ms >= the component sum by
    /// construction. Errors surface only as ScanError subclasses.
    ScanResult scan(const ScanRequest& request) const;

    const Taxonomy& taxonomy() const { return config_.taxonomy; }

private:
    Config config_;
};

} // namespace privscan::service
