#include "asp/simulate.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "asp/error.hpp"
#include "asp/rng.hpp"

namespace asp {
namespace {

SampleSummary summarize(const std::vector<double>& xs) {
    SampleSummary s;
    const auto count = static_cast<double>(xs.size());
    if (xs.size() < 2) return s;
    s.mean = pairwise_sum(xs) / count;
    std::vector<double> dev2(xs.size());
    std::vector<double> dev4(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double d = xs[i] - s.mean;
        dev2[i] = d * d;
        dev4[i] = dev2[i] * dev2[i];
    }
    const double m2 = pairwise_sum(dev2) / count;
    const double m4 = pairwise_sum(dev4) / count;
    s.variance = m2 * count / (count - 1.0);
    s.se_mean = std::sqrt(s.variance / count);
    s.se_variance = std::sqrt(std::max(0.0, m4 - m2 * m2) / count);
    return s;
}

}  // namespace

double pairwise_sum(std::span<const double> values) {
    if (values.size() <= 16) {
        double s = 0.0;
        for (double v : values) s += v;
        return s;
    }
    const std::size_t half = values.size() / 2;
    return pairwise_sum(values.first(half)) + pairwise_sum(values.subspan(half));
}

SimulationReport run_plan(const PlanSolution& solution, const PlanSpec& spec, double theta, std::int64_t trials,
                          std::uint64_t seed, const SimulationOptions& options) {
    validate(spec);
    const CensoringScheme scheme = solution.scheme(spec.T);
    validate(scheme);
    if (!solution.feasible) throw InvalidArgument("run_plan: solution is not feasible");
    if (!(solution.t2 > solution.t1)) throw InvalidArgument("run_plan: requires t2 > t1");
    if (!(theta > 0.0)) throw InvalidArgument("run_plan: theta must be positive");
    if (trials < 1) throw InvalidArgument("run_plan: trials must be >= 1");
    if (options.iteration_cap < 1) throw InvalidArgument("run_plan: iteration cap must be >= 1");

    const auto count = static_cast<std::size_t>(trials);
    std::vector<double> accepted(count), iterations(count), cost(count);
    std::vector<double> estimates;
    std::vector<double> scratch;

    SimulationReport rep;
    rep.trials = trials;
    const double no_failure_mle = scheme.n * scheme.T;

    for (std::size_t trial = 0; trial < count; ++trial) {
        CounterRng rng(derive_seed(seed, trial));
        double elapsed = 0.0;
        int rounds = 0;
        for (;;) {
            if (rounds == options.iteration_cap)
                throw NumericFailure("run_plan: trial exceeded " + std::to_string(options.iteration_cap) +
                                     " rounds; the continuation band almost never resolves");
            ++rounds;
            const MleDraw draw = simulate_mle(scheme, theta, rng, scratch);
            const bool no_failure = draw.failures == 0;
            const double estimate = no_failure ? bayes_estimate(no_failure_mle, 1, spec.prior, spec.loss)
                                               : bayes_estimate(draw.estimate, draw.failures, spec.prior, spec.loss);
            elapsed += options.duration == RoundDuration::Estimate ? estimate : draw.t_star;
            ++rep.rounds;
            if (no_failure) {
                ++rep.rounds_without_failure;
                continue;
            }
            estimates.push_back(estimate);
            if (estimate >= solution.t2) {
                ++rep.rounds_accept;
                accepted[trial] = 1.0;
                break;
            }
            if (estimate < solution.t1) {
                ++rep.rounds_reject;
                break;
            }
            ++rep.rounds_continue;
        }
        iterations[trial] = rounds;
        cost[trial] = spec.C * elapsed;
    }

    const auto acc = summarize(accepted);
    const auto it = summarize(iterations);
    const auto etc = summarize(cost);
    rep.empirical_P_a = pairwise_sum(accepted) / static_cast<double>(count);
    rep.empirical_P_r = 1.0 - rep.empirical_P_a;
    rep.se_P = count > 1 ? acc.se_mean : 0.0;
    rep.mean_iterations = pairwise_sum(iterations) / static_cast<double>(count);
    rep.se_iterations = it.se_mean;
    rep.empirical_etc = pairwise_sum(cost) / static_cast<double>(count);
    rep.se_etc = etc.se_mean;
    const auto est = summarize(estimates);
    rep.round_estimate_mean = est.mean;
    rep.round_estimate_variance = est.variance;
    return rep;
}

MomentComparison validate_moments(const CensoringScheme& scheme, double theta, const Prior& prior,
                                  const LossSpec& loss, std::int64_t trials, std::uint64_t seed,
                                  std::optional<int> d_convention, std::optional<int> fixed_failures,
                                  int precision_bits) {
    validate(scheme);
    validate(prior);
    validate(loss);
    if (!(theta > 0.0)) throw InvalidArgument("validate_moments: theta must be positive");
    if (trials < 2) throw InvalidArgument("validate_moments: need at least 2 trials");
    if (fixed_failures && *fixed_failures < 1) throw InvalidArgument("validate_moments: fixed failures must be >= 1");

    MomentComparison out;
    out.analytic_mle = mle_moments(scheme, theta, precision_bits);
    out.analytic_estimator = estimator_moments(out.analytic_mle, prior, loss, d_convention.value_or(scheme.gamma));

    std::vector<double> mles;
    std::vector<double> estimates;
    mles.reserve(static_cast<std::size_t>(trials));
    estimates.reserve(static_cast<std::size_t>(trials));
    std::vector<double> scratch;
    for (std::uint64_t i = 0; static_cast<std::int64_t>(mles.size()) < trials; ++i) {
        CounterRng rng(derive_seed(seed, i));
        const MleDraw draw = simulate_mle(scheme, theta, rng, scratch);
        if (draw.failures == 0) {
            ++out.discarded_draws;
            continue;
        }
        mles.push_back(draw.estimate);
        const int d = fixed_failures.value_or(draw.failures);
        if (loss.kind == LossKind::Sel) {
            estimates.push_back(sel_estimate(draw.estimate, d, prior));
        } else if (auto e = try_linex_estimate(draw.estimate, d, prior, loss.c)) {
            estimates.push_back(*e);
        } else {
            ++out.estimator_undefined;
        }
    }
    out.accepted_draws = static_cast<std::int64_t>(mles.size());
    out.sample_mle = summarize(mles);
    out.sample_estimator = summarize(estimates);
    return out;
}

}  // namespace asp
