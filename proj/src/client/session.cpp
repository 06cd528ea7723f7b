#include "privscan/client/session.hpp"

#include <cstdlib>
#include <utility>

#include "httplib.h"
#include "json.hpp"

#include "privscan/client/decode.hpp"
#include "privscan/service/wire.hpp"
#include "privscan/util/assets.hpp"
#include "privscan/util/png_io.hpp"

namespace privscan::client {

namespace {

constexpr const char* kDefaultEndpoint = "http://127.0.0.1:8080";

std::string failure_message(int status, const std::string& body) {
    const auto doc = nlohmann::json::parse(body, nullptr, false);
    if (!doc.is_discarded() && doc.is_object() && doc.contains("error") &&
        doc["error"].is_string()) {
        std::string msg = doc["error"].get<std::string>();
        if (doc.contains("message") && doc["message"].is_string()) {
            msg += ": " + doc["message"].get<std::string>();
        }
        return "HTTP " + std::to_string(status) + " " + msg;
    }
    return "HTTP " + std::to_string(status);
}

} // namespace

const char* to_string(SessionState state) {
    switch (state) {
        case SessionState::kIdle: return "Idle";
        case SessionState::kCapturing: return "Capturing";
        case SessionState::kUploading: return "Uploading";
        case SessionState::kPresenting: return "Presenting";
        case SessionState::kEmpty: return "Empty";
        case SessionState::kFailed: return "Failed";
    }
    return "?";
}

std::string resolve_endpoint(const std::string& explicit_endpoint) {
    if (!explicit_endpoint.empty()) return explicit_endpoint;
    const char* env = std::getenv("PRIVSCAN_ENDPOINT");
    if (env && *env) return env;
    return kDefaultEndpoint;
}

ScanClient::ScanClient(std::string endpoint) : endpoint_(resolve_endpoint(endpoint)) {}

ScanClient::~ScanClient() {
    if (worker_.joinable()) worker_.join();
}

ScanSession ScanClient::session() const {
    std::lock_guard<std::mutex> lock(mutex_);
    return session_;
}

void ScanClient::reset() {
    {
        std::lock_guard<std::mutex> lock(mutex_);
        if (session_.state == SessionState::kCapturing ||
            session_.state == SessionState::kUploading) {
            throw BusyError();
        }
        session_ = ScanSession{};
    }
    if (worker_.joinable()) worker_.join();
}

void ScanClient::settle(ScanSession session) {
    std::lock_guard<std::mutex> lock(mutex_);
    session_ = std::move(session);
}

std::future<ScanSession> ScanClient::submit_scan(RasterImage capture, CaptureInsets insets,
                                                 std::string policy_url,
                                                 std::optional<std::string> sidecar_json,
                                                 std::function<void(SessionState)> on_state) {
    {
        std::lock_guard<std::mutex> lock(mutex_);
        if (session_.state != SessionState::kIdle) throw BusyError();
        session_.state = SessionState::kCapturing;
        session_.result.reset();
        session_.error.reset();
    }
    if (worker_.joinable()) worker_.join(); // prior session already settled

    auto promise = std::make_shared<std::promise<ScanSession>>();
    std::future<ScanSession> future = promise->get_future();

    worker_ = std::thread([this, promise, capture = std::move(capture),
                           insets = std::move(insets), policy_url = std::move(policy_url),
                           sidecar_json = std::move(sidecar_json),
                           on_state = std::move(on_state)]() mutable {
        auto notify = [&](SessionState s) {
            if (on_state) on_state(s);
        };
        notify(SessionState::kCapturing);

        ScanSession done;
        try {
            const RasterImage clean = sanitize_capture(capture, insets);
            const std::string png = compress_capture(clean);

            {
                std::lock_guard<std::mutex> lock(mutex_);
                session_.state = SessionState::kUploading;
            }
            notify(SessionState::kUploading);

            httplib::Client http(endpoint_);
            http.set_connection_timeout(5, 0);
            http.set_read_timeout(120, 0);
            httplib::MultipartFormDataItems parts = {
                {"screenshot", png, "screenshot.png", "image/png"},
                {"policy_url", policy_url, "", ""},
            };
            if (sidecar_json) {
                parts.push_back({"ui_sidecar", *sidecar_json, "", "application/json"});
            }
            auto res = http.Post("/v1/scan", parts);

            if (!res) {
                done.state = SessionState::kFailed;
                done.error = "transport error: " + httplib::to_string(res.error());
            } else if (res->status != 200) {
                done.state = SessionState::kFailed;
                done.error = failure_message(res->status, res->body);
            } else {
                DecodedScan scan;
                scan.raw = service::decode_result(res->body);
                for (const auto& [id, png_bytes] : scan.raw.images) {
                    scan.images[id] = decode_two_stage(png_bytes);
                }
                done.state = scan.raw.detections.empty() ? SessionState::kEmpty
                                                         : SessionState::kPresenting;
                done.result = std::move(scan);
            }
        } catch (const std::exception& e) {
            done.state = SessionState::kFailed;
            done.error = e.what();
        }

        settle(done);
        notify(done.state);
        promise->set_value(std::move(done));
    });
    return future;
}

std::string save_image(const RasterImage& image, const std::string& directory,
                       const std::string& stem, const std::string& data_type) {
    const std::string path = directory + "/" + stem + "-" + data_type + ".png";
    util::write_file(path, util::encode_png(image));
    return path;
}

} // namespace privscan::client
