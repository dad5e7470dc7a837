#pragma once

#include <cstdint>
#include <optional>
#include <span>

#include "asp/bayes.hpp"
#include "asp/plan.hpp"
#include "asp/solver.hpp"

namespace asp {

/// What a single round of testing contributes to the empirical cost.
enum class RoundDuration {
    Estimate,  ///< the round's estimate, mirroring the analytic ETC
    TStar,     ///< the round's actual termination time
};

struct SimulationOptions {
    RoundDuration duration = RoundDuration::Estimate;
    int iteration_cap = 10000;
};

/// Monte Carlo run of the sequential accept / continue / reject plan.
struct SimulationReport {
    std::int64_t trials = 0;
    double empirical_P_a = 0.0;
    double empirical_P_r = 0.0;
    double mean_iterations = 0.0;
    double empirical_etc = 0.0;
    double se_P = 0.0;  ///< standard error of empirical_P_a (and of empirical_P_r)
    double se_iterations = 0.0;
    double se_etc = 0.0;

    // Per-round view over every simulated round. Rounds without failures are
    // counted apart; accept + continue + reject covers the rest.
    std::int64_t rounds = 0;
    std::int64_t rounds_accept = 0;
    std::int64_t rounds_continue = 0;
    std::int64_t rounds_reject = 0;
    std::int64_t rounds_without_failure = 0;
    double round_estimate_mean = 0.0;      ///< over rounds with at least one failure
    double round_estimate_variance = 0.0;  ///< idem
};

/// Plays the plan `trials` times at true mean life `theta`. Each round draws a
/// fresh censored sample, computes the loss-appropriate Bayesian estimate from
/// the observed failure count, and accepts (>= t2), rejects (< t1) or repeats.
/// A round without failures always repeats; its estimate uses MLE n T with one
/// failure. Throws NumericFailure when a trial exceeds the iteration cap.
SimulationReport run_plan(const PlanSolution& solution, const PlanSpec& spec, double theta, std::int64_t trials,
                          std::uint64_t seed, const SimulationOptions& options = {});

struct SampleSummary {
    double mean = 0.0;
    double variance = 0.0;
    double se_mean = 0.0;
    double se_variance = 0.0;
};

/// Monte Carlo check of the analytic moments against simulated conditional MLEs.
struct MomentComparison {
    std::int64_t accepted_draws = 0;   ///< draws with D >= 1
    std::int64_t discarded_draws = 0;  ///< draws with D = 0
    MleMoments analytic_mle;
    SampleSummary sample_mle;
    EstimatorMoments analytic_estimator;
    SampleSummary sample_estimator;
    std::int64_t estimator_undefined = 0;  ///< draws where the Linex logarithm was undefined
};

/// Draws conditional MLEs until `trials` draws with at least one failure are
/// collected, and summarizes the MLE and the Bayesian estimator. The estimator
/// uses the observed failure count unless `fixed_failures` is given.
MomentComparison validate_moments(const CensoringScheme& scheme, double theta, const Prior& prior,
                                  const LossSpec& loss, std::int64_t trials, std::uint64_t seed,
                                  std::optional<int> d_convention = std::nullopt,
                                  std::optional<int> fixed_failures = std::nullopt,
                                  int precision_bits = kDefaultPrecisionBits);

/// Pairwise sum; the result is independent of how the input was produced.
double pairwise_sum(std::span<const double> values);

}  // namespace asp
