#pragma once

#include <string>

#include "privscan/raster.hpp"

namespace privscan::client {

constexpr int kMaxDecodedDim = 2000;

/// Smallest power of two f with floor(max(w,h)/f) <= max_dim.
int subsample_factor(int width, int height, int max_dim = kMaxDecodedDim);

/// Stage 1 reads only the PNG header for the dimensions; stage 2 decodes and
/// subsamples by the factor above, flooring each dimension (minimum 1 px).
/// Throws NotAPngError (bad header) or CorruptImageError (stage-2 failure).
RasterImage decode_two_stage(const std::string& png, int max_dim = kMaxDecodedDim);

} // namespace privscan::client
