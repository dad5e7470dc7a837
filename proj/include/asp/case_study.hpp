#pragma once

#include <span>
#include <string>

#include "asp/bayes.hpp"
#include "asp/censoring.hpp"
#include "asp/plan.hpp"

namespace asp {

enum class Decision { Accept, Continue, Reject };

std::string to_string(Decision d);

/// Three-way rule: accept if estimate >= t2, reject if estimate < t1.
Decision decide(double estimate, double t1, double t2);

/// One round of a plan applied to recorded lifetimes.
struct DecisionPath {
    CensoringScheme scheme;
    double t1 = 0.0;
    double t2 = 0.0;
    CensoredSample sample;
    double theta_mle = 0.0;
    double estimate = 0.0;
    Decision decision = Decision::Continue;
};

/// Tests the first `scheme.n` of `lifetimes` under hybrid censoring and applies
/// the plan's decision rule to the loss-appropriate Bayesian estimate.
DecisionPath apply_plan(std::span<const double> lifetimes, const CensoringScheme& scheme, double t1, double t2,
                        const Prior& prior, const LossSpec& loss);

}  // namespace asp
