#include "privscan/service/wire.hpp"

#include <algorithm>

#include "json.hpp"

#include "privscan/util/base64.hpp"

namespace privscan::service {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json box_to_json(const BoundingBox& b) {
    return ordered_json::array({b.left, b.top, b.right, b.bottom});
}

BoundingBox box_from_json(const nlohmann::json& j, const char* what) {
    if (!j.is_array() || j.size() != 4 ||
        !std::all_of(j.begin(), j.end(),
                     [](const nlohmann::json& v) { return v.is_number_integer(); })) {
        throw SchemaError(std::string(what) + " box must be [left,top,right,bottom]");
    }
    return BoundingBox{j[0].get<int>(), j[1].get<int>(), j[2].get<int>(), j[3].get<int>()};
}

void require(bool ok, const char* message) {
    if (!ok) throw SchemaError(message);
}

} // namespace

std::string encode_result(const ScanResult& result) {
    ordered_json body;

    auto& detections = body["detections"] = ordered_json::array();
    for (const Detection& d : result.detections) {
        ordered_json entry;
        entry["box"] = box_to_json(d.box);
        entry["data_type"] = d.data_type;
        entry["score"] = d.score;
        entry["source"] = to_string(d.source);
        detections.push_back(std::move(entry));
    }

    auto& images = body["images"] = ordered_json::object();
    for (const auto& [id, png] : result.images) images[id] = util::base64_encode(png);

    auto& cards = body["cards"] = ordered_json::object();
    for (const auto& [id, card] : result.cards) {
        ordered_json entry;
        entry["summary"] = card.summary;
        entry["undisclosed"] = card.undisclosed;
        entry["segment_count"] = card.segment_count;
        entry["box"] = box_to_json(card.box);
        cards[id] = std::move(entry);
    }

    auto& timings = body["timings"] = ordered_json::object();
    timings["context_detection_ms"] = result.timings.context_detection_ms;
    timings["segment_extraction_ms"] = result.timings.segment_extraction_ms;
    timings["cpp_presentation_ms"] = result.timings.cpp_presentation_ms;
    timings["overall_ms"] = result.timings.overall_ms;

    body["warnings"] = result.warnings;
    body["policy_from_cache"] = result.policy_from_cache;
    return body.dump();
}

ScanResult decode_result(const std::string& body) {
    const auto doc = nlohmann::json::parse(body, nullptr, false);
    require(!doc.is_discarded() && doc.is_object(), "response is not a JSON object");
    for (const char* key : {"detections", "images", "cards", "timings", "warnings",
                            "policy_from_cache"}) {
        require(doc.contains(key), "response is missing a required field");
    }

    ScanResult out;
    require(doc["detections"].is_array(), "detections must be an array");
    for (const auto& entry : doc["detections"]) {
        require(entry.is_object(), "detection must be an object");
        Detection d;
        d.box = box_from_json(entry.value("box", nlohmann::json()), "detection");
        require(entry.contains("data_type") && entry["data_type"].is_string(),
                "detection data_type must be a string");
        d.data_type = entry["data_type"].get<std::string>();
        require(entry.contains("score") && entry["score"].is_number(),
                "detection score must be a number");
        d.score = entry["score"].get<double>();
        require(entry.contains("source") && entry["source"].is_string(),
                "detection source must be a string");
        const std::string source = entry["source"].get<std::string>();
        require(source == "icon" || source == "text", "detection source must be icon or text");
        d.source = source == "icon" ? DetectionSource::kIcon : DetectionSource::kText;
        out.detections.push_back(std::move(d));
    }

    require(doc["images"].is_object(), "images must be an object");
    for (const auto& [id, value] : doc["images"].items()) {
        require(value.is_string(), "image entry must be a base64 string");
        out.images[id] = util::base64_decode(value.get<std::string>());
    }

    require(doc["cards"].is_object(), "cards must be an object");
    for (const auto& [id, entry] : doc["cards"].items()) {
        require(entry.is_object(), "card must be an object");
        require(entry.contains("summary") && entry["summary"].is_string(),
                "card summary must be a string");
        require(entry.contains("undisclosed") && entry["undisclosed"].is_boolean(),
                "card undisclosed must be a boolean");
        require(entry.contains("segment_count") && entry["segment_count"].is_number_integer(),
                "card segment_count must be an integer");
        present::CppCard card;
        card.data_type = id;
        card.summary = entry["summary"].get<std::string>();
        card.undisclosed = entry["undisclosed"].get<bool>();
        card.segment_count = entry["segment_count"].get<int>();
        card.box = box_from_json(entry.value("box", nlohmann::json()), "card");
        out.cards[id] = std::move(card);
    }

    const auto& timings = doc["timings"];
    require(timings.is_object(), "timings must be an object");
    for (const char* key : {"context_detection_ms", "segment_extraction_ms",
                            "cpp_presentation_ms", "overall_ms"}) {
        require(timings.contains(key) && timings[key].is_number_integer(),
                "timings fields must be integers");
    }
    out.timings.context_detection_ms = timings["context_detection_ms"].get<std::int64_t>();
    out.timings.segment_extraction_ms = timings["segment_extraction_ms"].get<std::int64_t>();
    out.timings.cpp_presentation_ms = timings["cpp_presentation_ms"].get<std::int64_t>();
    out.timings.overall_ms = timings["overall_ms"].get<std::int64_t>();

    require(doc["warnings"].is_array(), "warnings must be an array");
    for (const auto& w : doc["warnings"]) {
        require(w.is_string(), "warning must be a string");
        out.warnings.push_back(w.get<std::string>());
    }

    require(doc["policy_from_cache"].is_boolean(), "policy_from_cache must be a boolean");
    out.policy_from_cache = doc["policy_from_cache"].get<bool>();
    return out;
}

std::string encode_error(const std::string& code, const std::string& message) {
    ordered_json body;
    body["error"] = code;
    body["message"] = message;
    return body.dump();
}

} // namespace privscan::service
