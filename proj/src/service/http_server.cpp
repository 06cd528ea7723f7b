#include "privscan/service/http_server.hpp"

#include <chrono>
#include <condition_variable>
#include <cstdlib>
#include <mutex>
#include <thread>

#include "httplib.h"
#include "json.hpp"

#include "privscan/service/wire.hpp"

namespace privscan::service {

namespace {

constexpr int kPoolThreads = 16; // must exceed max_active so healthz stays live

int port_from_env(int fallback) {
    const char* raw = std::getenv("PRIVSCAN_PORT");
    if (!raw || !*raw) return fallback;
    char* end = nullptr;
    const long port = std::strtol(raw, &end, 10);
    if (*end != '\0' || port < 1 || port > 65535) {
        throw Error(std::string("invalid PRIVSCAN_PORT value '") + raw + "'");
    }
    return static_cast<int>(port);
}

} // namespace

ServerConfig server_config_from_env() {
    ServerConfig config;
    config.port = port_from_env(config.port);
    return config;
}

struct ScanHttpServer::Impl {
    ScanService service;
    ServerConfig config;
    httplib::Server server;
    std::thread worker;

    std::mutex gate_mutex;
    std::condition_variable gate_cv;
    int active = 0;
    int waiting = 0;

    Impl(ScanService s, ServerConfig c) : service(std::move(s)), config(c) {}

    /// Admission gate for /v1/scan. Returns false (caller answers 429) when
    /// the waiting line is full; otherwise blocks until a slot frees up.
    bool acquire() {
        std::unique_lock<std::mutex> lock(gate_mutex);
        if (waiting >= config.max_waiting) return false;
        ++waiting;
        gate_cv.wait(lock, [this] { return active < config.max_active; });
        --waiting;
        ++active;
        return true;
    }

    void release() {
        {
            std::lock_guard<std::mutex> lock(gate_mutex);
            --active;
        }
        gate_cv.notify_one();
    }
};

ScanHttpServer::ScanHttpServer(ScanService service, ServerConfig config)
    : impl_(std::make_unique<Impl>(std::move(service), config)) {
    Impl& impl = *impl_;

    impl.server.new_task_queue = [] { return new httplib::ThreadPool(kPoolThreads); };

    impl.server.Get("/healthz", [](const httplib::Request&, httplib::Response& res) {
        nlohmann::ordered_json body;
        body["status"] = "ok";
        body["version"] = PRIVSCAN_VERSION;
        res.set_content(body.dump(), "application/json");
    });

    impl.server.Post("/v1/scan", [&impl](const httplib::Request& req, httplib::Response& res) {
        if (!impl.acquire()) {
            res.status = 429;
            res.set_content(encode_error("TooBusy", "scan queue is full"), "application/json");
            return;
        }
        struct Release {
            Impl& impl;
            ~Release() { impl.release(); }
        } release{impl};

        try {
            if (!req.is_multipart_form_data()) {
                throw BadImageError("request must be multipart/form-data");
            }
            if (!req.has_file("screenshot")) {
                throw BadImageError("missing 'screenshot' part");
            }
            if (!req.has_file("policy_url")) {
                throw BadUrlError("missing 'policy_url' part");
            }
            ScanRequest request;
            request.screenshot_png = req.get_file_value("screenshot").content;
            request.policy_url = req.get_file_value("policy_url").content;
            if (req.has_file("ui_sidecar")) {
                request.sidecar_json = req.get_file_value("ui_sidecar").content;
            }
            if (req.has_file("options")) {
                request.options_json = req.get_file_value("options").content;
            }
            const ScanResult result = impl.service.scan(request);
            res.set_content(encode_result(result), "application/json");
        } catch (const ScanError& e) {
            res.status = e.status;
            res.set_content(encode_error(e.code, e.what()), "application/json");
        } catch (const std::exception& e) {
            res.status = 500;
            res.set_content(encode_error("Internal", e.what()), "application/json");
        }
    });
}

ScanHttpServer::~ScanHttpServer() { stop(); }

bool ScanHttpServer::listen() {
    return impl_->server.listen(impl_->config.host, impl_->config.port);
}

int ScanHttpServer::listen_on_free_port() {
    const int port = impl_->server.bind_to_any_port("127.0.0.1");
    if (port < 0) throw Error("could not bind a loopback port");
    impl_->worker = std::thread([this] { impl_->server.listen_after_bind(); });
    wait_until_ready();
    return port;
}

void ScanHttpServer::wait_until_ready() {
    for (int i = 0; i < 2000 && !impl_->server.is_running(); ++i) {
        std::this_thread::sleep_for(std::chrono::milliseconds(1));
    }
}

void ScanHttpServer::stop() {
    impl_->server.stop();
    if (impl_->worker.joinable()) impl_->worker.join();
}

const ServerConfig& ScanHttpServer::config() const { return impl_->config; }

} // namespace privscan::service
