#pragma once

#include "asp/censoring.hpp"

namespace asp {

/// Significand bits used for the alternating binomial sums unless overridden.
inline constexpr int kDefaultPrecisionBits = 256;

struct MleMoments {
    double mean = 0.0;
    double second_moment = 0.0;
    double variance = 0.0;
};

// Exact law of the conditional MLE (given at least one failure) under Type I
// hybrid censoring: a signed mixture of shifted gamma densities
//
//   f(x) = (1 - v^n)^-1 [ sum_{d=1}^{g-1} sum_{k=0}^{d} A_{k,d} q(x - T_{k,d}; d/theta, d)
//                         + q(x; g/theta, g)
//                         + g C(n,g) sum_{k=1}^{g} (-1)^k v^{n-g+k} / (n-g+k) C(g-1,k-1)
//                                      q(x - T_{k,g}; g/theta, g) ]
//
// with v = exp(-T/theta), T_{k,d} = (n-d+k) T / d, A_{k,d} = (-1)^k C(n,d) C(d,k) v^{n-d+k}
// and q(.; p, t) the gamma density of rate p and shape t. The weights alternate
// and grow like C(n, n/2), so every sum runs in `precision_bits` binary digits
// and is rounded to double once at the end.

/// Density of the conditional MLE; 0 outside (0, nT).
double mle_pdf(double x, const CensoringScheme& scheme, double theta,
               int precision_bits = kDefaultPrecisionBits);

/// Distribution function of the conditional MLE.
double mle_cdf(double x, const CensoringScheme& scheme, double theta,
               int precision_bits = kDefaultPrecisionBits);

double mle_mean(const CensoringScheme& scheme, double theta,
                int precision_bits = kDefaultPrecisionBits);

double mle_second_moment(const CensoringScheme& scheme, double theta,
                         int precision_bits = kDefaultPrecisionBits);

/// Second moment minus squared mean. A negative difference no larger than
/// 1e-9 mean^2 is clamped to zero; anything worse throws NumericFailure.
double mle_variance(const CensoringScheme& scheme, double theta,
                    int precision_bits = kDefaultPrecisionBits);

/// All three moments from a single pass over the mixture.
MleMoments mle_moments(const CensoringScheme& scheme, double theta,
                       int precision_bits = kDefaultPrecisionBits);

}  // namespace asp
