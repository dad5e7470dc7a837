#include "asp/plan.hpp"

#include <cmath>

#include "asp/error.hpp"
#include "plan_math.hpp"

namespace asp {

void validate(const PlanSpec& spec) {
    auto positive = [](double x) { return x > 0.0 && std::isfinite(x); };
    if (!positive(spec.theta_A) || !positive(spec.theta_U))
        throw InvalidArgument("plan spec: theta_A and theta_U must be positive");
    if (spec.theta_A < spec.theta_U) throw InvalidArgument("plan spec: theta_A must not be below theta_U");
    if (!positive(spec.T)) throw InvalidArgument("plan spec: T must be positive");
    if (!(spec.alpha > 0.0 && spec.alpha < 1.0)) throw InvalidArgument("plan spec: alpha must lie in (0, 1)");
    if (!(spec.beta > 0.0 && spec.beta < 1.0)) throw InvalidArgument("plan spec: beta must lie in (0, 1)");
    if (!positive(spec.C)) throw InvalidArgument("plan spec: C must be positive");
    validate(spec.prior);
    validate(spec.loss);
}

PlanProbabilities plan_probabilities(double t1, double t2, const EstimatorMoments& moments) {
    if (!(t1 > 0.0) || !(t2 > t1)) throw InvalidArgument("plan_probabilities: requires t2 > t1 > 0");
    if (!(moments.variance > 0.0) || !std::isfinite(moments.variance))
        throw InvalidArgument("plan_probabilities: estimator variance must be positive");
    const auto p = detail::band_probabilities(t1, t2, moments.mean, std::sqrt(moments.variance));
    if (!(p.p_a + p.p_r > 0.0))
        throw NumericFailure("plan_probabilities: continuation probability is 1; the lot is never decided");
    return p;
}

PlanEvaluation evaluate_plan(const PlanSpec& spec, const CensoringScheme& scheme, double t1, double t2,
                             std::optional<int> d_convention, int precision_bits) {
    validate(spec);
    validate(scheme);
    if (scheme.T != spec.T) throw InvalidArgument("evaluate_plan: scheme and spec disagree on T");
    const int d = d_convention.value_or(scheme.gamma);

    PlanEvaluation e;
    e.at_A = estimator_moments(scheme, spec.theta_A, spec.prior, spec.loss, d, precision_bits);
    e.at_U = estimator_moments(scheme, spec.theta_U, spec.prior, spec.loss, d, precision_bits);
    e.prob_A = plan_probabilities(t1, t2, e.at_A);
    e.prob_U = plan_probabilities(t1, t2, e.at_U);
    e.etc = spec.C * e.at_A.mean / (e.prob_A.p_a + e.prob_A.p_r);
    e.slack_alpha = spec.alpha - e.prob_A.P_r;
    e.slack_beta = spec.beta - e.prob_U.P_a;
    return e;
}

double expected_testing_cost(const PlanSpec& spec, const CensoringScheme& scheme, double t1, double t2,
                             std::optional<int> d_convention, int precision_bits) {
    return evaluate_plan(spec, scheme, t1, t2, d_convention, precision_bits).etc;
}

}  // namespace asp
