#pragma once

#include <cmath>
#include <numbers>

namespace asp {

inline constexpr double kInvSqrt2 = 0.5 * std::numbers::sqrt2;

/// Standard normal distribution function.
inline double normal_cdf(double z) noexcept { return 0.5 * std::erfc(-z * kInvSqrt2); }

/// Upper tail 1 - normal_cdf(z), without cancellation for large z.
inline double normal_sf(double z) noexcept { return 0.5 * std::erfc(z * kInvSqrt2); }

}  // namespace asp
