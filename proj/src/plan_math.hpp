#pragma once

#include <cmath>

#include "asp/normal.hpp"
#include "asp/plan.hpp"

namespace asp::detail {

// Unchecked core of plan_probabilities. When both tails underflow (p_c == 1)
// the long-run probabilities are left as NaN.
inline PlanProbabilities band_probabilities(double t1, double t2, double mean, double sd) noexcept {
    PlanProbabilities p;
    const double z1 = (t1 - mean) / sd;
    const double z2 = (t2 - mean) / sd;
    p.p_a = normal_sf(z2);
    p.p_r = normal_cdf(z1);
    // Difference of two CDFs taken on the side where both are small.
    p.p_c = z1 >= 0.0 ? normal_sf(z1) - normal_sf(z2) : normal_cdf(z2) - normal_cdf(z1);
    const double decided = p.p_a + p.p_r;
    p.P_a = p.p_a / decided;
    p.P_r = p.p_r / decided;
    return p;
}

}  // namespace asp::detail
