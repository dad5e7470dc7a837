#include "asp/mle_distribution.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "asp/error.hpp"
#include "real.hpp"

namespace asp {
namespace {

using detail::Real;

void check_arguments(const CensoringScheme& scheme, double theta, int bits) {
    validate(scheme);
    if (!(theta > 0.0) || !std::isfinite(theta)) throw InvalidArgument("theta must be a positive finite value");
    if (bits < 64) throw InvalidArgument("precision must be at least 64 bits");
}

// Invokes fn(weight, shift, shape) for every gamma kernel of the mixture, and
// returns the normalizer 1 - v^n.
template <class Fn>
Real for_each_component(const CensoringScheme& scheme, double theta, mpfr_prec_t bits, Fn&& fn) {
    const int n = scheme.n;
    const int g = scheme.gamma;
    const Real T(scheme.T, bits);
    const Real v = exp(-(T / Real(theta, bits)));

    std::vector<Real> v_pow;
    v_pow.reserve(static_cast<std::size_t>(n) + 1);
    v_pow.emplace_back(1L, bits);
    for (int j = 1; j <= n; ++j) v_pow.push_back(v_pow.back() * v);

    for (int d = 1; d < g; ++d) {
        const Real n_choose_d = Real::binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(d), bits);
        for (int k = 0; k <= d; ++k) {
            Real w = n_choose_d * Real::binomial(static_cast<unsigned long>(d), static_cast<unsigned long>(k), bits);
            w *= v_pow[static_cast<std::size_t>(n - d + k)];
            if (k % 2 == 1) w = -w;
            fn(w, T * static_cast<long>(n - d + k) / static_cast<long>(d), d);
        }
    }

    fn(Real(1L, bits), Real(bits), g);

    const Real lead = Real::binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(g), bits) *
                      static_cast<long>(g);
    for (int k = 1; k <= g; ++k) {
        Real w = lead * Real::binomial(static_cast<unsigned long>(g - 1), static_cast<unsigned long>(k - 1), bits);
        w *= v_pow[static_cast<std::size_t>(n - g + k)];
        w /= static_cast<long>(n - g + k);
        if (k % 2 == 1) w = -w;
        fn(w, T * static_cast<long>(n - g + k) / static_cast<long>(g), g);
    }

    return Real(1L, bits) - v_pow.back();
}

struct RawMoments {
    Real first;
    Real second;
};

RawMoments raw_moments(const CensoringScheme& scheme, double theta, int bits) {
    check_arguments(scheme, theta, bits);
    const auto prec = static_cast<mpfr_prec_t>(bits);
    const Real th(theta, prec);
    const Real th2 = th * th;
    Real s1(prec);
    Real s2(prec);
    const Real norm = for_each_component(scheme, theta, prec, [&](const Real& w, const Real& shift, int shape) {
        // A gamma(shape, rate shape/theta) kernel shifted by `shift` has
        // mean theta + shift and second moment theta^2 (1 + shape)/shape + 2 shift theta + shift^2.
        s1 += w * (th + shift);
        Real m2 = th2 * static_cast<long>(shape + 1) / static_cast<long>(shape);
        m2 += shift * th * 2L;
        m2 += shift * shift;
        s2 += w * m2;
    });
    if (norm.sign() <= 0) throw NumericFailure("mle moments: P(D >= 1) underflowed to zero");
    return {s1 / norm, s2 / norm};
}

double finish_variance(const Real& first, const Real& second) {
    const Real var = second - first * first;
    const double mean = first.to_double();
    const double v = var.to_double();
    if (v >= 0.0) return v;
    if (v >= -1e-9 * mean * mean) return 0.0;
    throw NumericFailure("mle variance: second moment minus squared mean is " + std::to_string(v) +
                         "; increase the summation precision");
}

// shape log(rate) - log Gamma(shape) for rate = shape / theta, per shape 1..g.
std::vector<Real> kernel_constants(int g, const Real& theta) {
    const auto prec = theta.precision();
    std::vector<Real> out;
    out.reserve(static_cast<std::size_t>(g) + 1);
    out.emplace_back(prec);
    for (int d = 1; d <= g; ++d) {
        const Real shape(static_cast<long>(d), prec);
        out.push_back(log(shape / theta) * static_cast<long>(d) - lgamma(shape));
    }
    return out;
}

// Regularized lower incomplete gamma P(shape, z) for integer shape.
Real gamma_cdf(const Real& z, int shape) {
    const auto prec = z.precision();
    Real term(1L, prec);
    Real sum(1L, prec);
    for (int j = 1; j < shape; ++j) {
        term *= z;
        term /= static_cast<long>(j);
        sum += term;
    }
    return Real(1L, prec) - exp(-z) * sum;
}

}  // namespace

double mle_pdf(double x, const CensoringScheme& scheme, double theta, int precision_bits) {
    check_arguments(scheme, theta, precision_bits);
    if (!(x > 0.0) || !(x < scheme.n * scheme.T)) return 0.0;
    const auto prec = static_cast<mpfr_prec_t>(precision_bits);
    const Real xr(x, prec);
    const Real th(theta, prec);
    const auto constants = kernel_constants(scheme.gamma, th);
    Real total(prec);
    const Real norm = for_each_component(scheme, theta, prec, [&](const Real& w, const Real& shift, int shape) {
        const Real y = xr - shift;
        if (y.sign() <= 0) return;
        const Real log_q = constants[static_cast<std::size_t>(shape)] + log(y) * static_cast<long>(shape - 1) -
                           y * static_cast<long>(shape) / th;
        total += w * exp(log_q);
    });
    const double f = (total / norm).to_double();
    return f > 0.0 ? f : 0.0;
}

double mle_cdf(double x, const CensoringScheme& scheme, double theta, int precision_bits) {
    check_arguments(scheme, theta, precision_bits);
    if (!(x > 0.0)) return 0.0;
    if (x >= scheme.n * scheme.T) return 1.0;
    const auto prec = static_cast<mpfr_prec_t>(precision_bits);
    const Real xr(x, prec);
    const Real th(theta, prec);
    Real total(prec);
    const Real norm = for_each_component(scheme, theta, prec, [&](const Real& w, const Real& shift, int shape) {
        const Real y = xr - shift;
        if (y.sign() <= 0) return;
        total += w * gamma_cdf(y * static_cast<long>(shape) / th, shape);
    });
    const double p = (total / norm).to_double();
    return p < 0.0 ? 0.0 : (p > 1.0 ? 1.0 : p);
}

double mle_mean(const CensoringScheme& scheme, double theta, int precision_bits) {
    return raw_moments(scheme, theta, precision_bits).first.to_double();
}

double mle_second_moment(const CensoringScheme& scheme, double theta, int precision_bits) {
    return raw_moments(scheme, theta, precision_bits).second.to_double();
}

double mle_variance(const CensoringScheme& scheme, double theta, int precision_bits) {
    const auto m = raw_moments(scheme, theta, precision_bits);
    return finish_variance(m.first, m.second);
}

MleMoments mle_moments(const CensoringScheme& scheme, double theta, int precision_bits) {
    const auto m = raw_moments(scheme, theta, precision_bits);
    return {m.first.to_double(), m.second.to_double(), finish_variance(m.first, m.second)};
}

}  // namespace asp
