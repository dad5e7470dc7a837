#pragma once

#include <optional>

#include "asp/bayes.hpp"
#include "asp/censoring.hpp"

namespace asp {

/// Quality targets and costs of a life-test acceptance plan.
struct PlanSpec {
    double theta_A = 0.0;  ///< acceptable mean life (AQL)
    double theta_U = 0.0;  ///< unacceptable mean life (UQL)
    double T = 0.0;        ///< censoring time
    double alpha = 0.05;   ///< producer's risk
    double beta = 0.05;    ///< consumer's risk
    double C = 1.0;        ///< testing cost per unit time
    Prior prior{1.25, 2.5};
    LossSpec loss = LossSpec::sel();
};

/// theta_A >= theta_U > 0, T > 0, risks in (0, 1), C > 0.
/// theta_A == theta_U is accepted so that degenerate specs can be reported as infeasible.
void validate(const PlanSpec& spec);

/// Single-round decision probabilities and their long-run counterparts.
struct PlanProbabilities {
    double p_a = 0.0;  ///< accept: estimate >= t2
    double p_r = 0.0;  ///< reject: estimate < t1
    double p_c = 0.0;  ///< continue: t1 <= estimate < t2
    double P_a = 0.0;  ///< p_a / (1 - p_c)
    double P_r = 0.0;  ///< p_r / (1 - p_c)
};

/// Probabilities of the three-way rule when the estimator is normal with the
/// given moments. Requires t2 > t1 > 0 and a positive variance.
PlanProbabilities plan_probabilities(double t1, double t2, const EstimatorMoments& moments);

/// Everything needed to judge one candidate design (gamma, n, t1, t2).
struct PlanEvaluation {
    EstimatorMoments at_A;
    EstimatorMoments at_U;
    PlanProbabilities prob_A;
    PlanProbabilities prob_U;
    double etc = 0.0;          ///< C E(estimator | theta_A) / (1 - p_c(theta_A))
    double slack_alpha = 0.0;  ///< alpha - P_r(theta_A)
    double slack_beta = 0.0;   ///< beta - P_a(theta_U)

    [[nodiscard]] bool feasible(double tolerance = 0.0) const {
        return slack_alpha >= -tolerance && slack_beta >= -tolerance;
    }
};

/// Evaluates a design. `d_convention` is the failure count substituted into the
/// estimator's delta-method moments; it defaults to gamma.
PlanEvaluation evaluate_plan(const PlanSpec& spec, const CensoringScheme& scheme, double t1, double t2,
                             std::optional<int> d_convention = std::nullopt,
                             int precision_bits = kDefaultPrecisionBits);

/// Expected testing cost at theta_A. Throws NumericFailure if p_c(theta_A) == 1.
double expected_testing_cost(const PlanSpec& spec, const CensoringScheme& scheme, double t1, double t2,
                             std::optional<int> d_convention = std::nullopt,
                             int precision_bits = kDefaultPrecisionBits);

}  // namespace asp
