// Micro-benchmark for the icon matcher: direct (reference) kernel vs the
// FFT kernel on a single template, then the full library scan serial vs
// OpenMP. Also reports the max absolute score difference between the two
// kernels, which should sit at floating-point noise level.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <string>

#include "CLI11.hpp"

#include "privscan/detect/gray.hpp"
#include "privscan/detect/match.hpp"
#include "privscan/detect/ncc.hpp"
#include "privscan/detect/params.hpp"
#include "privscan/detect/templates.hpp"
#include "privscan/raster.hpp"
#include "privscan/util/assets.hpp"

using namespace privscan;
using Clock = std::chrono::steady_clock;

namespace {

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

RasterImage synthetic_screen(int w, int h, std::uint32_t seed) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> chan(0, 255);
    RasterImage img(w, h, Rgba{255, 255, 255, 255});
    for (int y = 0; y < h; ++y)
        for (int x = 0; x < w; ++x)
            img.set(x, y, Rgba{static_cast<std::uint8_t>(chan(rng)),
                               static_cast<std::uint8_t>(chan(rng)),
                               static_cast<std::uint8_t>(chan(rng)), 255});
    return img;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"icon matcher benchmark: reference vs FFT vs OpenMP"};
    int width = 540, height = 960, runs = 3;
    std::string assets_dir = util::assets_dir().string();
    app.add_option("--width", width, "screen width")->check(CLI::PositiveNumber);
    app.add_option("--height", height, "screen height")->check(CLI::PositiveNumber);
    app.add_option("--runs", runs, "timed repetitions")->check(CLI::PositiveNumber);
    app.add_option("--assets", assets_dir, "assets directory");
    CLI11_PARSE(app, argc, argv);

    const Taxonomy taxonomy = load_taxonomy_file(assets_dir + "/taxonomy.json");
    const detect::TemplateLibrary library =
        detect::TemplateLibrary::load(taxonomy, assets_dir);
    if (library.empty()) {
        std::fprintf(stderr, "no icon templates under %s\n", assets_dir.c_str());
        return 1;
    }

    const RasterImage screen = synthetic_screen(width, height, 7u);
    const detect::GrayImage gray = detect::to_gray(screen);
    const detect::MaskedTemplate tpl =
        detect::make_masked_template(library.entries().front().image);

    std::printf("screen %dx%d, template %dx%d, %zu templates, %d runs\n\n", width,
                height, tpl.width, tpl.height, library.entries().size(), runs);

    // kernel comparison on one template at native scale
    auto t0 = Clock::now();
    const detect::ScoreMap ref = detect::ncc_score_map_reference(gray, tpl);
    const double ref_ms = ms_since(t0);

    const detect::ScreenSpectra spectra(gray);
    t0 = Clock::now();
    detect::ScoreMap fft;
    for (int i = 0; i < runs; ++i) fft = detect::ncc_score_map(spectra, tpl);
    const double fft_ms = ms_since(t0) / runs;

    double max_diff = 0.0;
    for (std::size_t i = 0; i < ref.v.size(); ++i)
        max_diff = std::max(max_diff, std::abs(ref.v[i] - fft.v[i]));

    std::printf("%-28s %10.1f ms\n", "direct kernel (reference)", ref_ms);
    std::printf("%-28s %10.1f ms\n", "fft kernel", fft_ms);
    std::printf("%-28s %10.2e\n\n", "max |direct - fft|", max_diff);

    // full library scan, serial task loop vs OpenMP task loop
    detect::DetectionParams params;
    for (auto mode : {detect::ExecMode::kSerial, detect::ExecMode::kParallel}) {
        t0 = Clock::now();
        std::size_t found = 0;
        for (int i = 0; i < runs; ++i)
            found = detect::match_icons(screen, library, params, mode).size();
        std::printf("%-28s %10.1f ms  (%zu detections)\n",
                    mode == detect::ExecMode::kSerial ? "library scan, serial"
                                                      : "library scan, openmp",
                    ms_since(t0) / runs, found);
    }
    return max_diff < 1e-6 ? 0 : 2;
}
