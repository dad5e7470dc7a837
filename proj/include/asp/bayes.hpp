#pragma once

#include <optional>
#include <string>

#include "asp/censoring.hpp"
#include "asp/mle_distribution.hpp"

namespace asp {

/// Inverted-gamma prior on the mean life, density a^b / Gamma(b) t^-(b+1) e^(-a/t).
/// a = b = 0 is the non-informative limit.
struct Prior {
    double a = 0.0;
    double b = 0.0;
};

void validate(const Prior& prior);

enum class LossKind { Sel, Linex };

/// Squared-error loss, or Linex loss e^{c d} - c d - 1 with asymmetry c != 0.
struct LossSpec {
    LossKind kind = LossKind::Sel;
    double c = 0.0;

    static LossSpec sel() { return {LossKind::Sel, 0.0}; }
    static LossSpec linex(double c) { return {LossKind::Linex, c}; }
};

void validate(const LossSpec& loss);

/// "sel" or "linex(c=...)".
std::string to_string(const LossSpec& loss);

/// Normal approximation (mean, variance) of a Bayesian estimator.
struct EstimatorMoments {
    double mean = 0.0;
    double variance = 0.0;
};

/// Posterior mean (D theta_mle + a) / (D + b - 1). Requires D + b > 1.
double sel_estimate(double theta_mle, int failures, const Prior& prior);

/// Lindley-approximated Linex estimate
///   theta_mle - ln[1 + c/(2D) (c theta_mle^2 - 2a + 2 theta_mle (b - 1))] / c.
/// Throws NumericFailure when the logarithm's argument is not positive.
double linex_estimate(double theta_mle, int failures, const Prior& prior, double c);

/// Non-throwing form of linex_estimate; empty when the logarithm is undefined.
std::optional<double> try_linex_estimate(double theta_mle, int failures, const Prior& prior, double c) noexcept;

/// Dispatches on `loss`.
double bayes_estimate(double theta_mle, int failures, const Prior& prior, const LossSpec& loss);

/// Posterior density of the mean life: inverted gamma with shape D + b and
/// scale D theta_mle + a.
double posterior_pdf(double theta, double theta_mle, int failures, const Prior& prior);

/// Delta-method moments of the estimator, treating the failure count inside
/// the estimator as the constant `d_convention`, from precomputed MLE moments.
EstimatorMoments estimator_moments(const MleMoments& mle, const Prior& prior, const LossSpec& loss,
                                   int d_convention);

/// Same, computing the MLE moments of `scheme` at `theta` first.
EstimatorMoments estimator_moments(const CensoringScheme& scheme, double theta, const Prior& prior,
                                   const LossSpec& loss, int d_convention,
                                   int precision_bits = kDefaultPrecisionBits);

}  // namespace asp
