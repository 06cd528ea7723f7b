#include "privscan/detect/ncc.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <future>
#include <map>
#include <mutex>

namespace privscan::detect {

namespace {

// FFTW planning is not thread-safe; every plan in the process is created and
// destroyed under this mutex. Execution on distinct buffers is safe.
std::mutex& fftw_mutex() {
    static std::mutex m;
    return m;
}

struct SizePlans {
    int fw = 0, fh = 0;
    fftw_plan fwd = nullptr; // r2c, in-place-incompatible buffers
    fftw_plan inv = nullptr; // c2r

    ~SizePlans() {
        std::lock_guard<std::mutex> lock(fftw_mutex());
        if (fwd) fftw_destroy_plan(fwd);
        if (inv) fftw_destroy_plan(inv);
    }
};

/// Smallest 5-smooth size >= n; keeps FFTs fast for arbitrary screens.
int next_fast_size(int n) {
    for (int m = n;; ++m) {
        int r = m;
        for (int f : {2, 3, 5}) {
            while (r % f == 0) r /= f;
        }
        if (r == 1) return m;
    }
}

std::shared_ptr<SizePlans> plans_for(int fw, int fh) {
    static std::map<std::pair<int, int>, std::weak_ptr<SizePlans>> cache;
    static std::mutex cache_mutex;

    std::lock_guard<std::mutex> cache_lock(cache_mutex);
    auto& slot = cache[{fw, fh}];
    if (auto p = slot.lock()) return p;

    auto plans = std::make_shared<SizePlans>();
    plans->fw = fw;
    plans->fh = fh;
    {
        std::lock_guard<std::mutex> lock(fftw_mutex());
        double* real = fftw_alloc_real(static_cast<std::size_t>(fw) * fh);
        fftw_complex* cplx = fftw_alloc_complex(static_cast<std::size_t>(fh) * (fw / 2 + 1));
        plans->fwd = fftw_plan_dft_r2c_2d(fh, fw, real, cplx, FFTW_ESTIMATE);
        plans->inv = fftw_plan_dft_c2r_2d(fh, fw, cplx, real, FFTW_ESTIMATE);
        fftw_free(real);
        fftw_free(cplx);
    }
    slot = plans;
    return plans;
}

struct RealBuf {
    double* p = nullptr;
    explicit RealBuf(std::size_t n) : p(fftw_alloc_real(n)) { std::fill(p, p + n, 0.0); }
    ~RealBuf() { fftw_free(p); }
    RealBuf(const RealBuf&) = delete;
    RealBuf& operator=(const RealBuf&) = delete;
};

struct ComplexBuf {
    fftw_complex* p = nullptr;
    explicit ComplexBuf(std::size_t n) : p(fftw_alloc_complex(n)) {}
    ~ComplexBuf() { fftw_free(p); }
    ComplexBuf(const ComplexBuf&) = delete;
    ComplexBuf& operator=(const ComplexBuf&) = delete;
};

void copy_padded(const double* src, int w, int h, double* dst, int fw) {
    for (int y = 0; y < h; ++y) {
        std::copy(src + static_cast<std::size_t>(y) * w,
                  src + static_cast<std::size_t>(y) * w + w,
                  dst + static_cast<std::size_t>(y) * fw);
    }
}

double score_from_sums(double cross_it, double sum_i, double sum_ii, const MaskedTemplate& tpl) {
    const double n = tpl.on_count;
    const double den_i = sum_ii - sum_i * sum_i / n;
    if (den_i <= kMinVariancePerPixel * n || tpl.ss <= 1e-9) return 0.0;
    const double num = cross_it - sum_i * tpl.mean;
    return std::clamp(num / std::sqrt(den_i * tpl.ss), -1.0, 1.0);
}

} // namespace

ScoreMap ncc_score_map_reference(const GrayImage& screen, const MaskedTemplate& tpl) {
    ScoreMap out;
    if (tpl.width > screen.width || tpl.height > screen.height || !tpl.usable()) return out;
    out.width = screen.width - tpl.width + 1;
    out.height = screen.height - tpl.height + 1;
    out.v.resize(static_cast<std::size_t>(out.width) * out.height);

    // flat list of masked template pixels for a tight inner loop
    struct MaskPixel {
        int dx, dy;
        double g;
    };
    std::vector<MaskPixel> pixels;
    pixels.reserve(tpl.on_count);
    for (int dy = 0; dy < tpl.height; ++dy) {
        for (int dx = 0; dx < tpl.width; ++dx) {
            const std::size_t i = static_cast<std::size_t>(dy) * tpl.width + dx;
            if (tpl.mask[i]) pixels.push_back({dx, dy, tpl.gray[i]});
        }
    }

    for (int y = 0; y < out.height; ++y) {
        for (int x = 0; x < out.width; ++x) {
            double sum_i = 0.0, sum_ii = 0.0, cross_it = 0.0;
            for (const MaskPixel& mp : pixels) {
                const double v = screen.at(x + mp.dx, y + mp.dy);
                sum_i += v;
                sum_ii += v * v;
                cross_it += v * mp.g;
            }
            out.v[static_cast<std::size_t>(y) * out.width + x] =
                score_from_sums(cross_it, sum_i, sum_ii, tpl);
        }
    }
    return out;
}

// Masked window sums for one mask shape; templates with identical masks
// (common for tile-style icon sets) share these per screen.
struct DenomMaps {
    std::vector<double> sum_i, sum_ii;
};

struct ScreenSpectra::Impl {
    int w = 0, h = 0;   // screen size
    int fw = 0, fh = 0; // padded FFT size
    std::shared_ptr<SizePlans> plans;
    std::unique_ptr<ComplexBuf> f_i;  // spectrum of I
    std::unique_ptr<ComplexBuf> f_ii; // spectrum of I^2

    // memo keyed by exact mask bytes; shared_future so concurrent lookups
    // of the same mask compute it once
    mutable std::mutex memo_mu;
    mutable std::map<std::string, std::shared_future<std::shared_ptr<const DenomMaps>>>
        denom_memo;
};

ScreenSpectra::ScreenSpectra(const GrayImage& screen) : impl_(std::make_unique<Impl>()) {
    impl_->w = screen.width;
    impl_->h = screen.height;
    impl_->fw = next_fast_size(screen.width);
    impl_->fh = next_fast_size(screen.height);
    impl_->plans = plans_for(impl_->fw, impl_->fh);

    const std::size_t real_n = static_cast<std::size_t>(impl_->fw) * impl_->fh;
    const std::size_t cplx_n = static_cast<std::size_t>(impl_->fh) * (impl_->fw / 2 + 1);

    RealBuf padded(real_n);
    impl_->f_i = std::make_unique<ComplexBuf>(cplx_n);
    impl_->f_ii = std::make_unique<ComplexBuf>(cplx_n);

    copy_padded(screen.v.data(), screen.width, screen.height, padded.p, impl_->fw);
    fftw_execute_dft_r2c(impl_->plans->fwd, padded.p, impl_->f_i->p);

    std::fill(padded.p, padded.p + real_n, 0.0);
    std::vector<double> squared(screen.v.size());
    for (std::size_t i = 0; i < squared.size(); ++i) squared[i] = screen.v[i] * screen.v[i];
    copy_padded(squared.data(), screen.width, screen.height, padded.p, impl_->fw);
    fftw_execute_dft_r2c(impl_->plans->fwd, padded.p, impl_->f_ii->p);
}

ScreenSpectra::~ScreenSpectra() = default;

int ScreenSpectra::width() const { return impl_->w; }
int ScreenSpectra::height() const { return impl_->h; }

ScoreMap ncc_score_map(const ScreenSpectra& screen, const MaskedTemplate& tpl) {
    const auto& s = screen.impl();
    ScoreMap out;
    if (tpl.width > s.w || tpl.height > s.h || !tpl.usable()) return out;
    out.width = s.w - tpl.width + 1;
    out.height = s.h - tpl.height + 1;
    out.v.resize(static_cast<std::size_t>(out.width) * out.height);

    const std::size_t real_n = static_cast<std::size_t>(s.fw) * s.fh;
    const std::size_t cplx_n = static_cast<std::size_t>(s.fh) * (s.fw / 2 + 1);
    const double inv_n = 1.0 / static_cast<double>(real_n);

    RealBuf real(real_n);
    ComplexBuf spec(cplx_n);
    ComplexBuf prod(cplx_n);

    // template gray (masked) and the mask itself, zero-padded
    std::vector<double> plane(static_cast<std::size_t>(tpl.width) * tpl.height);

    auto correlate = [&](const double* kernel_plane, const fftw_complex* f_img, double* dst,
                         std::size_t dst_stride) {
        std::fill(real.p, real.p + real_n, 0.0);
        copy_padded(kernel_plane, tpl.width, tpl.height, real.p, s.fw);
        fftw_execute_dft_r2c(s.plans->fwd, real.p, spec.p);
        // corr(I,K) = IFFT(F(I) * conj(F(K)))
        for (std::size_t i = 0; i < cplx_n; ++i) {
            const double ar = f_img[i][0], ai = f_img[i][1];
            const double br = spec.p[i][0], bi = -spec.p[i][1];
            prod.p[i][0] = (ar * br - ai * bi) * inv_n;
            prod.p[i][1] = (ar * bi + ai * br) * inv_n;
        }
        fftw_execute_dft_c2r(s.plans->inv, prod.p, real.p);
        for (int y = 0; y < out.height; ++y) {
            std::copy(real.p + static_cast<std::size_t>(y) * s.fw,
                      real.p + static_cast<std::size_t>(y) * s.fw + out.width,
                      dst + static_cast<std::size_t>(y) * dst_stride);
        }
    };

    std::vector<double> cross_it(out.v.size());
    correlate(tpl.gray.data(), s.f_i->p, cross_it.data(), out.width);

    std::string key(std::to_string(tpl.width) + 'x' + std::to_string(tpl.height) + ':');
    key.reserve(key.size() + tpl.mask.size());
    for (std::uint8_t m : tpl.mask) key.push_back(m ? '1' : '0');

    std::promise<std::shared_ptr<const DenomMaps>> prom;
    std::shared_future<std::shared_ptr<const DenomMaps>> fut;
    bool owner = false;
    {
        std::lock_guard<std::mutex> lock(s.memo_mu);
        auto it = s.denom_memo.find(key);
        if (it == s.denom_memo.end()) {
            fut = prom.get_future().share();
            s.denom_memo.emplace(std::move(key), fut);
            owner = true;
        } else {
            fut = it->second;
        }
    }
    if (owner) {
        try {
            auto maps = std::make_shared<DenomMaps>();
            maps->sum_i.resize(out.v.size());
            maps->sum_ii.resize(out.v.size());
            for (std::size_t i = 0; i < plane.size(); ++i) plane[i] = tpl.mask[i] ? 1.0 : 0.0;
            correlate(plane.data(), s.f_i->p, maps->sum_i.data(), out.width);
            correlate(plane.data(), s.f_ii->p, maps->sum_ii.data(), out.width);
            prom.set_value(std::move(maps));
        } catch (...) {
            prom.set_exception(std::current_exception());
            throw;
        }
    }
    const std::shared_ptr<const DenomMaps> denoms = fut.get();

    for (std::size_t i = 0; i < out.v.size(); ++i) {
        out.v[i] = score_from_sums(cross_it[i], denoms->sum_i[i], denoms->sum_ii[i], tpl);
    }
    return out;
}

std::vector<Peak> find_peaks(const ScoreMap& map, double threshold) {
    std::vector<Peak> peaks;
    for (int y = 0; y < map.height; ++y) {
        for (int x = 0; x < map.width; ++x) {
            const double v = map.at(x, y);
            if (v < threshold) continue;
            bool is_max = true;
            for (int dy = -1; dy <= 1 && is_max; ++dy) {
                for (int dx = -1; dx <= 1 && is_max; ++dx) {
                    if (dx == 0 && dy == 0) continue;
                    const int nx = x + dx, ny = y + dy;
                    if (nx < 0 || ny < 0 || nx >= map.width || ny >= map.height) continue;
                    const double nv = map.at(nx, ny);
                    // ties resolve in scan order so a flat plateau yields one peak
                    if (nv > v || (nv == v && (dy < 0 || (dy == 0 && dx < 0)))) is_max = false;
                }
            }
            if (is_max) peaks.push_back(Peak{x, y, v});
        }
    }
    return peaks;
}

} // namespace privscan::detect
