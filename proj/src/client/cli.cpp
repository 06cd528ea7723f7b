#include "privscan/client/cli.hpp"

#include <cstdio>
#include <filesystem>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "privscan/bench/bench.hpp"
#include "privscan/client/session.hpp"
#include "privscan/service/http_server.hpp"
#include "privscan/util/assets.hpp"
#include "privscan/util/png_io.hpp"

namespace privscan::client {

namespace {

CaptureInsets parse_insets(const std::string& arg) {
    CaptureInsets insets;
    if (arg.empty()) return insets;
    const std::size_t comma = arg.find(',');
    try {
        if (comma == std::string::npos) throw std::invalid_argument("missing comma");
        insets.top_px = std::stoi(arg.substr(0, comma));
        insets.bottom_px = std::stoi(arg.substr(comma + 1));
    } catch (const std::exception&) {
        throw CLI::ValidationError("--insets", "expected top,bottom integers");
    }
    return insets;
}

int run_scan(const std::string& screenshot_path, const std::string& policy_url,
             const std::string& sidecar_path, const std::string& insets_arg,
             const std::string& out_dir, const std::string& endpoint) {
    RasterImage capture;
    CaptureInsets insets;
    std::optional<std::string> sidecar;
    try {
        capture = util::decode_png(util::read_file(screenshot_path));
        insets = parse_insets(insets_arg);
        if (!sidecar_path.empty()) sidecar = util::read_file(sidecar_path);
        std::filesystem::create_directories(out_dir);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }

    ScanClient client(endpoint);
    auto future = client.submit_scan(std::move(capture), std::move(insets), policy_url, sidecar,
                                     [](SessionState s) {
                                         std::fprintf(stderr, "state: %s\n", to_string(s));
                                     });
    const ScanSession session = future.get();

    switch (session.state) {
        case SessionState::kFailed:
            std::fprintf(stderr, "scan failed: %s\n",
                         session.error ? session.error->c_str() : "unknown error");
            return 2;
        case SessionState::kEmpty:
            std::printf("NO_CPP_ELEMENTS\n");
            std::printf("full policy: %s\n", policy_url.c_str());
            return 0;
        case SessionState::kPresenting:
            break;
        default:
            std::fprintf(stderr, "unexpected session state %s\n", to_string(session.state));
            return 2;
    }

    const DecodedScan& scan = *session.result;
    const std::string stem = std::filesystem::path(screenshot_path).stem().string();
    for (const auto& [id, image] : scan.images) {
        const std::string path = save_image(image, out_dir, stem, id);
        const auto card = scan.raw.cards.find(id);
        std::printf("%s: %s\n", id.c_str(),
                    card != scan.raw.cards.end() ? card->second.summary.c_str() : "");
        std::printf("  image: %s\n", path.c_str());
    }
    for (const std::string& warning : scan.raw.warnings) {
        std::fprintf(stderr, "warning: %s\n", warning.c_str());
    }
    const ScanTimings& t = scan.raw.timings;
    std::fprintf(stderr, "timings: detection=%lldms extraction=%lldms presentation=%lldms overall=%lldms\n",
                 static_cast<long long>(t.context_detection_ms),
                 static_cast<long long>(t.segment_extraction_ms),
                 static_cast<long long>(t.cpp_presentation_ms),
                 static_cast<long long>(t.overall_ms));
    std::printf("full policy: %s\n", policy_url.c_str());
    return 0;
}

int run_serve() {
    try {
        service::ServerConfig config = service::server_config_from_env();
        service::ScanHttpServer server(service::ScanService::from_default_assets(), config);
        std::printf("privscan service listening on %s:%d\n", config.host.c_str(), config.port);
        std::fflush(stdout);
        if (!server.listen()) {
            std::fprintf(stderr, "error: could not bind %s:%d\n", config.host.c_str(),
                         config.port);
            return 1;
        }
        return 0;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
}

int run_bench(const std::string& endpoint, int n, const std::string& out_path) {
    try {
        bench::FixturePolicyServer policy_host;
        const bench::BenchReport report =
            bench::run_bench(bench::default_conditions(policy_host.url()), endpoint, n);
        std::printf("%s", bench::render_table(report).c_str());
        if (!out_path.empty()) {
            util::write_file(out_path, bench::report_to_json(report));
            std::fprintf(stderr, "report written to %s\n", out_path.c_str());
        }
        return 0;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "bench failed: %s\n", e.what());
        return 2;
    }
}

} // namespace

int cli_main(int argc, char** argv) {
    CLI::App app{"privscan: contextual privacy policies for app screens"};
    app.require_subcommand(1);

    auto* scan = app.add_subcommand("scan", "Scan a screenshot against a privacy policy");
    std::string screenshot, policy_url, sidecar, insets_arg, out_dir, endpoint;
    scan->add_option("--screenshot", screenshot, "screenshot PNG")
        ->required()
        ->check(CLI::ExistingFile);
    scan->add_option("--policy-url", policy_url, "privacy policy URL")->required();
    scan->add_option("--sidecar", sidecar, "UI sidecar JSON")->check(CLI::ExistingFile);
    scan->add_option("--insets", insets_arg, "top,bottom rows to crop before upload");
    scan->add_option("--out", out_dir, "output directory for annotated images")->required();
    scan->add_option("--endpoint", endpoint,
                     "service endpoint (default: PRIVSCAN_ENDPOINT or http://127.0.0.1:8080)");

    auto* serve = app.add_subcommand("serve", "Run the scan service");

    auto* bench_cmd = app.add_subcommand("bench", "Per-component latency benchmark");
    std::string bench_endpoint, bench_out;
    int bench_n = 3;
    bench_cmd->add_option("--endpoint", bench_endpoint,
                          "service endpoint (default: PRIVSCAN_ENDPOINT or local)");
    bench_cmd->add_option("--n", bench_n, "timed repetitions per condition (default 3)")
        ->check(CLI::PositiveNumber);
    bench_cmd->add_option("--out", bench_out, "write the JSON report here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 1;
    }

    if (scan->parsed()) {
        return run_scan(screenshot, policy_url, sidecar, insets_arg, out_dir,
                        resolve_endpoint(endpoint));
    }
    if (serve->parsed()) return run_serve();
    if (bench_cmd->parsed()) return run_bench(resolve_endpoint(bench_endpoint), bench_n, bench_out);
    return 1;
}

} // namespace privscan::client
