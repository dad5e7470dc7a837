#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "asp/rng.hpp"

namespace asp {

/// Type I hybrid censoring design: put `n` units on test and stop at the
/// earlier of the `gamma`-th failure and the fixed time `T`.
struct CensoringScheme {
    int n = 0;
    int gamma = 0;
    double T = 0.0;
};

/// Throws InvalidArgument unless n >= 1, 1 <= gamma < n and T > 0.
void validate(const CensoringScheme& scheme);

/// One realized hybrid-censored test.
struct CensoredSample {
    std::vector<double> failures;  ///< ordered lifetimes observed before t_star
    double t_star = 0.0;           ///< termination time min(T, x_gamma)

    [[nodiscard]] int failure_count() const { return static_cast<int>(failures.size()); }
};

/// Throws InvalidArgument if `sample` could not have come from `scheme`.
void validate(const CensoredSample& sample, const CensoringScheme& scheme);

/// Builds the censored record from complete (unordered) lifetimes of the n units.
CensoredSample censor(std::span<const double> lifetimes, const CensoringScheme& scheme);

/// Draws n exponential lifetimes with mean `theta` and censors them.
/// Deterministic in `seed`.
CensoredSample simulate_sample(const CensoringScheme& scheme, double theta, std::uint64_t seed);

/// Conditional maximum likelihood estimate of the mean life:
///   D = 0          -> n T
///   1 <= D < gamma -> (sum x + (n - D) T) / D
///   D = gamma      -> (sum x + (n - gamma) x_gamma) / gamma
double mle(const CensoredSample& sample, const CensoringScheme& scheme);

struct MleDraw {
    double estimate = 0.0;
    int failures = 0;
    double t_star = 0.0;
};

/// Allocation-free draw used by the Monte Carlo drivers: simulates one test
/// from `rng` and returns its MLE summary. `scratch` is reused across calls.
/// The scheme is not re-validated.
MleDraw simulate_mle(const CensoringScheme& scheme, double theta, CounterRng& rng,
                     std::vector<double>& scratch);

}  // namespace asp
