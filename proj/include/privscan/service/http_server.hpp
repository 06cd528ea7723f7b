#pragma once

#include <memory>
#include <string>

#include "privscan/service/scan_service.hpp"

namespace privscan::service {

struct ServerConfig {
    std::string host = "0.0.0.0";
    int port = 8080;       // overridden by PRIVSCAN_PORT
    int max_active = 8;    // concurrently executing scans
    int max_waiting = 32;  // queued beyond that -> 429
};

ServerConfig server_config_from_env();

/// HTTP front end over ScanService: POST /v1/scan (multipart), GET /healthz.
/// healthz never waits on the scan gate.
class ScanHttpServer {
public:
    ScanHttpServer(ScanService service, ServerConfig config);
    ~ScanHttpServer();

    ScanHttpServer(const ScanHttpServer&) = delete;
    ScanHttpServer& operator=(const ScanHttpServer&) = delete;

    /// Blocks until stop(). Returns false if the port could not be bound.
    bool listen();

    /// Binds to an OS-assigned free port and returns it; serving continues on
    /// a background thread inside httplib. Test hook.
    int listen_on_free_port();

    void wait_until_ready();
    void stop();

    const ServerConfig& config() const;

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

} // namespace privscan::service
