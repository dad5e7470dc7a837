#include "asp/bayes.hpp"

#include <cmath>
#include <sstream>

#include "asp/error.hpp"

namespace asp {
namespace {

// 1 + c/(2D) (c m^2 - 2a + 2m(b - 1)), the argument of the Linex logarithm.
double linex_log_argument(double m, int failures, const Prior& prior, double c) {
    return 1.0 + c / (2.0 * failures) * (c * m * m - 2.0 * prior.a + 2.0 * m * (prior.b - 1.0));
}

void require_sel_defined(int failures, const Prior& prior) {
    if (!(failures + prior.b > 1.0))
        throw InvalidArgument("SEL estimate undefined: requires D + b > 1 (D=" + std::to_string(failures) +
                              ", b=" + std::to_string(prior.b) + ")");
}

}  // namespace

void validate(const Prior& prior) {
    if (!(prior.a >= 0.0) || !(prior.b >= 0.0) || !std::isfinite(prior.a) || !std::isfinite(prior.b))
        throw InvalidArgument("prior: hyperparameters a and b must be finite and non-negative");
}

void validate(const LossSpec& loss) {
    if (loss.kind == LossKind::Linex && (loss.c == 0.0 || !std::isfinite(loss.c)))
        throw InvalidArgument("Linex loss needs a finite, nonzero asymmetry c");
}

std::string to_string(const LossSpec& loss) {
    if (loss.kind == LossKind::Sel) return "sel";
    std::ostringstream os;
    os << "linex(c=" << loss.c << ")";
    return os.str();
}

double sel_estimate(double theta_mle, int failures, const Prior& prior) {
    validate(prior);
    require_sel_defined(failures, prior);
    return (failures * theta_mle + prior.a) / (failures + prior.b - 1.0);
}

std::optional<double> try_linex_estimate(double theta_mle, int failures, const Prior& prior, double c) noexcept {
    if (failures < 1 || c == 0.0) return std::nullopt;
    const double arg = linex_log_argument(theta_mle, failures, prior, c);
    if (!(arg > 0.0) || !std::isfinite(arg)) return std::nullopt;
    return theta_mle - std::log(arg) / c;
}

double linex_estimate(double theta_mle, int failures, const Prior& prior, double c) {
    validate(prior);
    validate(LossSpec::linex(c));
    if (failures < 1) throw InvalidArgument("Linex estimate needs at least one failure");
    if (auto est = try_linex_estimate(theta_mle, failures, prior, c)) return *est;
    std::ostringstream os;
    os << "Linex estimate undefined: Lindley log argument "
       << linex_log_argument(theta_mle, failures, prior, c) << " <= 0 for c=" << c << ", D=" << failures
       << ", theta_mle=" << theta_mle;
    throw NumericFailure(os.str());
}

double bayes_estimate(double theta_mle, int failures, const Prior& prior, const LossSpec& loss) {
    return loss.kind == LossKind::Sel ? sel_estimate(theta_mle, failures, prior)
                                      : linex_estimate(theta_mle, failures, prior, loss.c);
}

double posterior_pdf(double theta, double theta_mle, int failures, const Prior& prior) {
    validate(prior);
    const double shape = failures + prior.b;
    const double scale = failures * theta_mle + prior.a;
    if (!(theta > 0.0)) throw InvalidArgument("posterior_pdf: theta must be positive");
    if (!(shape > 0.0) || !(scale > 0.0))
        throw InvalidArgument("posterior_pdf: needs D + b > 0 and D theta_mle + a > 0");
    return std::exp(shape * std::log(scale) - std::lgamma(shape) - (shape + 1.0) * std::log(theta) - scale / theta);
}

EstimatorMoments estimator_moments(const MleMoments& mle, const Prior& prior, const LossSpec& loss,
                                   int d_convention) {
    validate(prior);
    validate(loss);
    if (d_convention < 1) throw InvalidArgument("d_convention must be a positive failure count");
    const double m = mle.mean;
    const double d = d_convention;

    if (loss.kind == LossKind::Sel) {
        require_sel_defined(d_convention, prior);
        const double slope = d / (d + prior.b - 1.0);
        return {(d * m + prior.a) / (d + prior.b - 1.0), slope * slope * mle.variance};
    }

    const double c = loss.c;
    const double arg = linex_log_argument(m, d_convention, prior, c);
    if (!(arg > 0.0) || !std::isfinite(arg)) {
        std::ostringstream os;
        os << "Linex moments undefined: Lindley log argument " << arg << " <= 0 at E(theta_mle)=" << m;
        throw NumericFailure(os.str());
    }
    const double g = c * m * m - 2.0 * prior.a + 2.0 * m * (prior.b - 1.0);
    const double slope = 1.0 - (2.0 * c * m + 2.0 * prior.b - 2.0) / (2.0 * d + c * g);
    return {m - std::log(arg) / c, slope * slope * mle.variance};
}

EstimatorMoments estimator_moments(const CensoringScheme& scheme, double theta, const Prior& prior,
                                   const LossSpec& loss, int d_convention, int precision_bits) {
    return estimator_moments(mle_moments(scheme, theta, precision_bits), prior, loss, d_convention);
}

}  // namespace asp
