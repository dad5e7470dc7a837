#pragma once

#include <cstdint>
#include <optional>

#include "asp/plan.hpp"

namespace asp {

struct SearchBounds {
    int n_max = 150;
    double t_max = 0.0;  ///< upper limit for t2; 0 selects 5 theta_A
};

/// Differential-evolution settings for the threshold search of each (gamma, n).
struct SolverSettings {
    int population = 40;
    int generations = 300;
    int restarts = 4;
    /// A restart ends early once its best point has not improved for this many generations.
    int stall_generations = 50;
    double differential_weight = 0.7;
    double crossover_rate = 0.9;
    /// Smallest band width t2 - t1, as a fraction of theta_A.
    double min_band_fraction = 1e-6;
    /// Failure count used inside the estimator moments; empty means gamma.
    std::optional<int> d_convention;
    int precision_bits = kDefaultPrecisionBits;
};

/// Solver output. When `feasible` is false the fields describe the candidate
/// with the smallest total constraint violation that was found (gamma and n
/// are 0 if no candidate could even be evaluated).
struct PlanSolution {
    int gamma = 0;
    int n = 0;
    double t1 = 0.0;
    double t2 = 0.0;
    double etc = 0.0;
    bool feasible = false;
    double slack_alpha = 0.0;  ///< alpha - P_r(theta_A)
    double slack_beta = 0.0;   ///< beta - P_a(theta_U)
    std::uint64_t evaluations = 0;

    [[nodiscard]] CensoringScheme scheme(double T) const { return {n, gamma, T}; }
};

/// Two-step design: find the least gamma for which some (n, t1, t2) with
/// n <= n_max meets both risk constraints, then minimize the expected testing
/// cost over n in (gamma, n_max] and continuous t2 > t1 > 0 at that gamma.
/// Bit-reproducible for a fixed (spec, bounds, seed, settings).
PlanSolution solve_plan(const PlanSpec& spec, const SearchBounds& bounds, std::uint64_t seed,
                        const SolverSettings& settings = {});

/// Step 2 alone: minimum-cost thresholds and sample size for a fixed gamma.
PlanSolution solve_for_gamma(const PlanSpec& spec, int gamma, const SearchBounds& bounds, std::uint64_t seed,
                             const SolverSettings& settings = {});

/// Restricts the thresholds of a solved plan to integers by local search
/// around floor(t1) and ceil(t2), keeping gamma and n. Returns the cheapest
/// feasible integer pair, or the input marked infeasible when none is found.
PlanSolution integer_thresholds(const PlanSpec& spec, const PlanSolution& solution,
                                const SolverSettings& settings = {});

/// Same search on the grid of multiples of 10^-decimals (decimals = 0 is integer_thresholds).
/// Used to publish thresholds at a fixed printed precision without losing feasibility.
PlanSolution grid_thresholds(const PlanSpec& spec, const PlanSolution& solution, int decimals,
                             const SolverSettings& settings = {});

}  // namespace asp
