#include "privscan/service/scan_service.hpp"

#include <algorithm>
#include <chrono>

#include "json.hpp"

#include "privscan/policy/url.hpp"
#include "privscan/segments/extract.hpp"
#include "privscan/util/assets.hpp"
#include "privscan/util/png_io.hpp"

namespace privscan::service {

namespace {

using Clock = std::chrono::steady_clock;

std::int64_t ms_since(Clock::time_point start) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
}

} // namespace

std::vector<UiElement> parse_sidecar(const std::string& json_text) {
    const auto doc = nlohmann::json::parse(json_text, nullptr, false);
    if (doc.is_discarded() || !doc.is_object()) {
        throw BadSidecarError("sidecar is not a JSON object");
    }
    if (!doc.contains("elements") || !doc["elements"].is_array()) {
        throw BadSidecarError("sidecar requires an 'elements' array");
    }
    std::vector<UiElement> out;
    for (const auto& el : doc["elements"]) {
        if (!el.is_object() || !el.contains("box") || !el.contains("text")) {
            throw BadSidecarError("sidecar element requires 'box' and 'text'");
        }
        const auto& box = el["box"];
        if (!box.is_array() || box.size() != 4 ||
            !std::all_of(box.begin(), box.end(),
                         [](const nlohmann::json& v) { return v.is_number_integer(); })) {
            throw BadSidecarError("sidecar box must be [left,top,right,bottom] integers");
        }
        if (!el["text"].is_string()) throw BadSidecarError("sidecar text must be a string");
        UiElement element;
        element.box = BoundingBox{box[0].get<int>(), box[1].get<int>(), box[2].get<int>(),
                                  box[3].get<int>()};
        element.text = el["text"].get<std::string>();
        if (!element.box.valid()) throw BadSidecarError("sidecar box is degenerate");
        out.push_back(std::move(element));
    }
    return out;
}

ScanOptions parse_options(const std::string& json_text) {
    const auto doc = nlohmann::json::parse(json_text, nullptr, false);
    if (doc.is_discarded() || !doc.is_object()) {
        throw BadSidecarError("options is not a JSON object");
    }
    ScanOptions out;
    if (doc.contains("ncc_threshold")) {
        if (!doc["ncc_threshold"].is_number()) {
            throw BadSidecarError("options.ncc_threshold must be a number");
        }
        out.ncc_threshold = doc["ncc_threshold"].get<double>();
    }
    if (doc.contains("nms_iou")) {
        if (!doc["nms_iou"].is_number()) {
            throw BadSidecarError("options.nms_iou must be a number");
        }
        out.nms_iou = doc["nms_iou"].get<double>();
    }
    if (doc.contains("summarizer")) {
        if (!doc["summarizer"].is_string()) {
            throw BadSidecarError("options.summarizer must be a string");
        }
        const std::string choice = doc["summarizer"].get<std::string>();
        if (choice != "deterministic" && choice != "external") {
            throw BadSidecarError("options.summarizer must be deterministic or external");
        }
        out.summarizer = choice;
    }
    return out;
}

ScanService::ScanService(Config config) : config_(std::move(config)) {
    config_.params.validate();
    if (!config_.cache) throw Error("scan service requires a cache store");
    if (!config_.fetcher) throw Error("scan service requires a fetcher");
    if (!config_.summarizer) throw Error("scan service requires a summarizer");
}

ScanService ScanService::from_default_assets() {
    const std::string dir = util::assets_dir();
    Config config;
    config.taxonomy = load_taxonomy_file(util::default_taxonomy_path());
    config.templates = detect::TemplateLibrary::load(config.taxonomy, dir);
    config.cache = std::make_shared<policy::CacheStore>(policy::CacheStore::from_env());
    config.fetcher = policy::make_http_fetcher();
    config.summarizer = present::summarizer_from_env();
    return ScanService(std::move(config));
}

ScanResult ScanService::scan(const ScanRequest& request) const {
    const auto overall_start = Clock::now();
    ScanResult result;
    try {
        // request validation (unmeasured glue, like URL and sidecar parsing)
        if (request.screenshot_png.size() > kMaxScreenshotBytes) {
            throw BadImageError("screenshot exceeds the 5 MB limit");
        }
        std::string normalized_url;
        try {
            normalized_url = policy::normalize_url(request.policy_url);
        } catch (const policy::InvalidUrlError& e) {
            throw BadUrlError(e.what());
        }
        std::optional<std::vector<UiElement>> sidecar;
        if (request.sidecar_json) sidecar = parse_sidecar(*request.sidecar_json);
        ScanOptions options;
        if (request.options_json) options = parse_options(*request.options_json);

        detect::DetectionParams params = config_.params;
        if (options.ncc_threshold) params.ncc_threshold = *options.ncc_threshold;
        if (options.nms_iou) params.nms_iou = *options.nms_iou;
        try {
            params.validate();
        } catch (const Error& e) {
            throw BadSidecarError(std::string("options out of range: ") + e.what());
        }

        std::shared_ptr<present::Summarizer> summarizer = config_.summarizer;
        if (options.summarizer) {
            try {
                summarizer = present::make_summarizer(*options.summarizer);
            } catch (const Error& e) {
                throw BadSidecarError(std::string("options.summarizer: ") + e.what());
            }
        }

        // stage 1: context detection (PNG decode + matching)
        const auto stage1 = Clock::now();
        RasterImage screen;
        try {
            screen = util::decode_png(request.screenshot_png);
        } catch (const Error& e) {
            throw BadImageError(e.what());
        }
        result.detections = detect::detect_context(screen, sidecar, config_.taxonomy,
                                                   config_.templates, params,
                                                   detect::ExecMode::kParallel, &result.warnings);
        result.timings.context_detection_ms = ms_since(stage1);

        if (result.detections.empty()) {
            // stages 2 and 3 short-circuit; their budgets stay zero
            result.timings.overall_ms = ms_since(overall_start);
            return result;
        }

        // stage 2: policy fetch + segment extraction
        const auto stage2 = Clock::now();
        segments::SegmentMap segment_map;
        try {
            const policy::PolicyDocument doc =
                policy::fetch_policy(normalized_url, *config_.cache, config_.fetcher);
            result.policy_from_cache = doc.from_cache;
            if (doc.truncated) {
                result.warnings.push_back("policy text truncated at the 2 MB limit");
            }
            segment_map = segments::extract_segments(doc, config_.taxonomy);
        } catch (const policy::FetchError& e) {
            throw PolicyFetchFailedError(e.what());
        }
        result.timings.segment_extraction_ms = ms_since(stage2);

        // stage 3: presentation + PNG encode
        const auto stage3 = Clock::now();
        const std::vector<present::AnnotatedImage> annotated = present::present(
            screen, result.detections, segment_map, config_.taxonomy, *summarizer,
            &result.warnings);
        for (const present::AnnotatedImage& img : annotated) {
            result.images[img.data_type] = util::encode_png(img.image);
            result.cards[img.data_type] = img.card;
        }
        result.timings.cpp_presentation_ms = ms_since(stage3);

        result.timings.overall_ms = ms_since(overall_start);
        if (result.timings.overall_ms < result.timings.component_sum()) {
            throw InternalError("timing invariant violated");
        }
        return result;
    } catch (const ScanError&) {
        throw;
    } catch (const std::exception& e) {
        throw InternalError(e.what());
    }
}

} // namespace privscan::service
