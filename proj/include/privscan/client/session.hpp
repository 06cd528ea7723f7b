#pragma once

#include <functional>
#include <future>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <thread>

#include "privscan/client/capture.hpp"
#include "privscan/errors.hpp"
#include "privscan/raster.hpp"
#include "privscan/service/scan_service.hpp"

namespace privscan::client {

enum class SessionState {
    kIdle,
    kCapturing,
    kUploading,
    kPresenting,
    kEmpty,
    kFailed,
};

const char* to_string(SessionState state);

/// Scan response with every image decoded through the two-stage path.
struct DecodedScan {
    service::ScanResult raw;
    std::map<std::string, RasterImage> images;
};

struct ScanSession {
    SessionState state = SessionState::kIdle;
    std::optional<DecodedScan> result; // set in Presenting and Empty
    std::optional<std::string> error;  // set in Failed
};

/// A second trigger while a session is active. Never mutates that session.
struct BusyError : Error {
    BusyError() : Error("a scan session is already active") {}
};

/// Resolution order: explicit value, PRIVSCAN_ENDPOINT, local default.
std::string resolve_endpoint(const std::string& explicit_endpoint = "");

/// Single-session asynchronous scan client. submit_scan drives
/// Idle -> Capturing -> Uploading -> (Presenting | Empty | Failed) on a
/// worker thread; the caller polls session(), waits on the future, or
/// observes transitions via the callback (invoked on the worker thread).
class ScanClient {
public:
    explicit ScanClient(std::string endpoint);
    ~ScanClient();

    ScanClient(const ScanClient&) = delete;
    ScanClient& operator=(const ScanClient&) = delete;

    /// Throws BusyError unless the session is Idle.
    std::future<ScanSession> submit_scan(RasterImage capture, CaptureInsets insets,
                                         std::string policy_url,
                                         std::optional<std::string> sidecar_json = {},
                                         std::function<void(SessionState)> on_state = {});

    /// Snapshot of the current session.
    ScanSession session() const;

    /// Returns the session to Idle. Throws BusyError while a scan is in
    /// flight (Capturing/Uploading).
    void reset();

    const std::string& endpoint() const { return endpoint_; }

private:
    void settle(ScanSession session);

    std::string endpoint_;
    mutable std::mutex mutex_;
    ScanSession session_;
    std::thread worker_;
};

/// Writes `<stem>-<data_type>.png` into the directory; returns the path.
std::string save_image(const RasterImage& image, const std::string& directory,
                       const std::string& stem, const std::string& data_type);

} // namespace privscan::client
