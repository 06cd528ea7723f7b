#include "privscan/client/decode.hpp"

#include <algorithm>

#include "privscan/util/png_io.hpp"

namespace privscan::client {

int subsample_factor(int width, int height, int max_dim) {
    const int longest = std::max(width, height);
    int f = 1;
    while (longest / f > max_dim) f *= 2;
    return f;
}

RasterImage decode_two_stage(const std::string& png, int max_dim) {
    const util::PngDims dims = util::read_png_dims(png); // header only
    const int f = subsample_factor(dims.width, dims.height, max_dim);

    RasterImage full = util::decode_png(png);
    if (f == 1) return full;

    const int out_w = std::max(1, full.width / f);
    const int out_h = std::max(1, full.height / f);
    RasterImage out(out_w, out_h, Rgba{0, 0, 0, 255});
    for (int y = 0; y < out_h; ++y) {
        for (int x = 0; x < out_w; ++x) out.set(x, y, full.at(x * f, y * f));
    }
    return out;
}

} // namespace privscan::client
