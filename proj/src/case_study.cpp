#include "asp/case_study.hpp"

#include "asp/error.hpp"

namespace asp {

std::string to_string(Decision d) {
    switch (d) {
        case Decision::Accept: return "accept";
        case Decision::Continue: return "continue";
        case Decision::Reject: return "reject";
    }
    return "unknown";
}

Decision decide(double estimate, double t1, double t2) {
    if (estimate >= t2) return Decision::Accept;
    if (estimate < t1) return Decision::Reject;
    return Decision::Continue;
}

DecisionPath apply_plan(std::span<const double> lifetimes, const CensoringScheme& scheme, double t1, double t2,
                        const Prior& prior, const LossSpec& loss) {
    validate(scheme);
    if (static_cast<int>(lifetimes.size()) < scheme.n)
        throw InvalidArgument("apply_plan: fewer recorded lifetimes than the sample size");
    if (!(t1 > 0.0) || !(t2 > t1)) throw InvalidArgument("apply_plan: requires t2 > t1 > 0");

    DecisionPath path;
    path.scheme = scheme;
    path.t1 = t1;
    path.t2 = t2;
    path.sample = censor(lifetimes.first(static_cast<std::size_t>(scheme.n)), scheme);
    path.theta_mle = mle(path.sample, scheme);
    const int d = path.sample.failure_count();
    if (d == 0) {
        path.estimate = path.theta_mle;
        path.decision = Decision::Continue;
        return path;
    }
    path.estimate = bayes_estimate(path.theta_mle, d, prior, loss);
    path.decision = decide(path.estimate, t1, t2);
    return path;
}

}  // namespace asp
