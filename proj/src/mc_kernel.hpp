#pragma once

#include <cstdint>

#include "uavcx/rng.hpp"

namespace uavcx::detail {

/// Shot-noise accumulation over n interferers of one class:
/// sum of h * t^{-alpha_i/2} with t = r^2 uniform on [t_lo, t_lo + t_span]
/// (area-uniform radius on the annulus) and h = -ln(1 - U).
/// Per point: two stream draws, fixed order (t first). Compiled separately
/// with vector-math flags; this loop is ~95% of simulation runtime.
double field_sum(RngStream& rng, std::int64_t n, double t_lo, double t_span, double alpha_i);

} // namespace uavcx::detail
