#include "privscan/bench/bench.hpp"

#include <array>
#include <atomic>
#include <cstdio>
#include <thread>

#include "httplib.h"
#include "json.hpp"

#include "privscan/service/wire.hpp"
#include "privscan/util/assets.hpp"

namespace privscan::bench {

struct FixturePolicyServer::Impl {
    httplib::Server server;
    std::thread worker;
    std::atomic<int> hits{0};
    std::string html;
    int port = 0;
};

FixturePolicyServer::FixturePolicyServer(std::optional<std::string> html)
    : impl_(std::make_unique<Impl>()) {
    impl_->html =
        html ? std::move(*html) : util::read_file(util::assets_dir() / "fixtures/policy.html");
    impl_->server.Get("/policy", [this](const httplib::Request&, httplib::Response& res) {
        impl_->hits.fetch_add(1);
        res.set_content(impl_->html, "text/html");
    });
    impl_->port = impl_->server.bind_to_any_port("127.0.0.1");
    if (impl_->port < 0) throw Error("could not bind a loopback port for the policy host");
    impl_->worker = std::thread([this] { impl_->server.listen_after_bind(); });
    while (!impl_->server.is_running()) std::this_thread::yield();
}

FixturePolicyServer::~FixturePolicyServer() {
    impl_->server.stop();
    if (impl_->worker.joinable()) impl_->worker.join();
}

std::string FixturePolicyServer::url() const {
    return "http://127.0.0.1:" + std::to_string(impl_->port) + "/policy";
}

int FixturePolicyServer::request_count() const { return impl_->hits.load(); }

namespace {

ScanTimings scan_once(httplib::Client& http, const Condition& condition,
                      const std::string& screenshot, const std::optional<std::string>& sidecar) {
    httplib::MultipartFormDataItems parts = {
        {"screenshot", screenshot, "screenshot.png", "image/png"},
        {"policy_url", condition.policy_url, "", ""},
    };
    if (sidecar) parts.push_back({"ui_sidecar", *sidecar, "", "application/json"});

    auto res = http.Post("/v1/scan", parts);
    if (!res) {
        throw BenchAbortedError("condition '" + condition.name +
                                "': transport error: " + httplib::to_string(res.error()));
    }
    if (res->status != 200) {
        throw BenchAbortedError("condition '" + condition.name + "': HTTP " +
                                std::to_string(res->status) + " " + res->body);
    }
    return service::decode_result(res->body).timings;
}

MeanTimings mean_of(const std::vector<ScanTimings>& runs) {
    MeanTimings m;
    for (const ScanTimings& t : runs) {
        m.context_detection_ms += static_cast<double>(t.context_detection_ms);
        m.segment_extraction_ms += static_cast<double>(t.segment_extraction_ms);
        m.cpp_presentation_ms += static_cast<double>(t.cpp_presentation_ms);
        m.overall_ms += static_cast<double>(t.overall_ms);
    }
    const double n = static_cast<double>(runs.size());
    m.context_detection_ms /= n;
    m.segment_extraction_ms /= n;
    m.cpp_presentation_ms /= n;
    m.overall_ms /= n;
    return m;
}

nlohmann::ordered_json timings_json(const MeanTimings& m) {
    nlohmann::ordered_json out;
    out["context_detection_ms"] = m.context_detection_ms;
    out["segment_extraction_ms"] = m.segment_extraction_ms;
    out["cpp_presentation_ms"] = m.cpp_presentation_ms;
    out["overall_ms"] = m.overall_ms;
    return out;
}

} // namespace

std::vector<Condition> default_conditions(const std::string& policy_url) {
    const std::string fixtures = (util::assets_dir() / "fixtures").string();
    return {
        Condition{"icon_only", fixtures + "/posting.png", std::nullopt, policy_url},
        Condition{"text_only", fixtures + "/settings.png", fixtures + "/settings.sidecar.json",
                  policy_url},
        Condition{"mixed", fixtures + "/home.png", fixtures + "/home.sidecar.json", policy_url},
    };
}

BenchReport run_bench(const std::vector<Condition>& conditions, const std::string& endpoint,
                      int n) {
    if (n < 1) throw BenchAbortedError("repetitions must be at least 1");
    if (conditions.size() != 3 || conditions[0].name != "icon_only" ||
        conditions[1].name != "text_only" || conditions[2].name != "mixed") {
        throw BenchAbortedError("bench requires the icon_only, text_only, mixed conditions");
    }

    httplib::Client http(endpoint);
    http.set_connection_timeout(5, 0);
    http.set_read_timeout(120, 0);

    BenchReport report;
    report.n = n;
    std::array<MeanTimings*, 3> slots{&report.icon_only, &report.text_only, &report.mixed};

    for (std::size_t c = 0; c < conditions.size(); ++c) {
        const Condition& condition = conditions[c];
        std::string screenshot;
        std::optional<std::string> sidecar;
        try {
            screenshot = util::read_file(condition.screenshot_path);
            if (condition.sidecar_path) sidecar = util::read_file(*condition.sidecar_path);
        } catch (const Error& e) {
            throw BenchAbortedError(std::string("fixture missing: ") + e.what());
        }

        scan_once(http, condition, screenshot, sidecar); // untimed cache pre-warm
        std::vector<ScanTimings> runs;
        for (int i = 0; i < n; ++i) runs.push_back(scan_once(http, condition, screenshot, sidecar));
        *slots[c] = mean_of(runs);
    }

    report.average.context_detection_ms =
        (report.icon_only.context_detection_ms + report.text_only.context_detection_ms +
         report.mixed.context_detection_ms) /
        3.0;
    report.average.segment_extraction_ms =
        (report.icon_only.segment_extraction_ms + report.text_only.segment_extraction_ms +
         report.mixed.segment_extraction_ms) /
        3.0;
    report.average.cpp_presentation_ms =
        (report.icon_only.cpp_presentation_ms + report.text_only.cpp_presentation_ms +
         report.mixed.cpp_presentation_ms) /
        3.0;
    report.average.overall_ms =
        (report.icon_only.overall_ms + report.text_only.overall_ms + report.mixed.overall_ms) /
        3.0;
    return report;
}

std::string render_table(const BenchReport& report) {
    const std::array<const char*, 4> rows{"Context Detection", "Segment Extraction",
                                          "CPP Presentation", "Overall"};
    auto row_values = [&](const MeanTimings& m) {
        return std::array<double, 4>{m.context_detection_ms, m.segment_extraction_ms,
                                     m.cpp_presentation_ms, m.overall_ms};
    };
    const auto icon = row_values(report.icon_only);
    const auto text = row_values(report.text_only);
    const auto mixed = row_values(report.mixed);
    const auto avg = row_values(report.average);

    std::string out;
    char line[160];
    std::snprintf(line, sizeof(line), "%-20s %12s %12s %12s %12s\n", "Component (ms)",
                  "Icon Only", "Text Only", "Mixed", "Average");
    out += line;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        std::snprintf(line, sizeof(line), "%-20s %12.1f %12.1f %12.1f %12.1f\n", rows[i],
                      icon[i], text[i], mixed[i], avg[i]);
        out += line;
    }
    std::snprintf(line, sizeof(line), "(mean of %d runs per condition, cache pre-warmed)\n",
                  report.n);
    out += line;
    return out;
}

std::string report_to_json(const BenchReport& report) {
    nlohmann::ordered_json doc;
    doc["n"] = report.n;
    auto& conditions = doc["conditions"] = nlohmann::ordered_json::object();
    conditions["icon_only"] = timings_json(report.icon_only);
    conditions["text_only"] = timings_json(report.text_only);
    conditions["mixed"] = timings_json(report.mixed);
    conditions["average"] = timings_json(report.average);
    return doc.dump(2);
}

} // namespace privscan::bench
