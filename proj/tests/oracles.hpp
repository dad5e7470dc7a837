#pragma once

// Reference computations that share no code path with the library: a
// power-series normal CDF in MPFR, and the conditional MLE moments obtained by
// conditioning on the failure count and integrating the gamma-th order
// statistic numerically.

#include <mpfr.h>

#include <algorithm>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <functional>
#include <vector>

namespace oracle {

/// Phi(z) = 1/2 + (2 pi)^-1/2 sum_k (-1)^k z^(2k+1) / (2^k k! (2k+1)), summed in `bits` bits.
inline double normal_cdf_series(double z, mpfr_prec_t bits = 320) {
    mpfr_t x, x2, term, sum, tmp, pi;
    mpfr_inits2(bits, x, x2, term, sum, tmp, pi, static_cast<mpfr_ptr>(nullptr));
    mpfr_set_d(x, z, MPFR_RNDN);
    mpfr_sqr(x2, x, MPFR_RNDN);
    mpfr_set(term, x, MPFR_RNDN);  // (-1)^k z^(2k+1) / (2^k k!)
    mpfr_set(sum, x, MPFR_RNDN);
    for (long k = 1; k < 2000; ++k) {
        mpfr_mul(term, term, x2, MPFR_RNDN);
        mpfr_div_si(term, term, -2 * k, MPFR_RNDN);
        mpfr_div_si(tmp, term, 2 * k + 1, MPFR_RNDN);
        mpfr_add(sum, sum, tmp, MPFR_RNDN);
        if (mpfr_zero_p(tmp) || mpfr_get_exp(tmp) < mpfr_get_exp(sum) - static_cast<mpfr_exp_t>(bits)) break;
    }
    mpfr_const_pi(pi, MPFR_RNDN);
    mpfr_mul_ui(pi, pi, 2, MPFR_RNDN);
    mpfr_sqrt(pi, pi, MPFR_RNDN);
    mpfr_div(sum, sum, pi, MPFR_RNDN);
    mpfr_add_d(sum, sum, 0.5, MPFR_RNDN);
    const double out = mpfr_get_d(sum, MPFR_RNDN);
    mpfr_clears(x, x2, term, sum, tmp, pi, static_cast<mpfr_ptr>(nullptr));
    return out;
}

/// Adaptive Gauss-Kronrod over [a, b] split at the given interior points.
inline double integrate(const std::function<double(double)>& f, double a, double b,
                        std::vector<double> breaks = {}, double tol = 1e-13) {
    breaks.push_back(a);
    breaks.push_back(b);
    std::sort(breaks.begin(), breaks.end());
    breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());
    using GK = boost::math::quadrature::gauss_kronrod<double, 61>;
    double total = 0.0;
    for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
        if (breaks[i] < a || breaks[i + 1] > b || breaks[i + 1] <= breaks[i]) continue;
        // Pieces with negligible mass (e.g. where the density is rounding residue) are not refined.
        double l1 = 0.0;
        const double coarse = GK::integrate(f, breaks[i], breaks[i + 1], 0, tol, nullptr, &l1);
        total += l1 < 1e-15 ? coarse : GK::integrate(f, breaks[i], breaks[i + 1], 15, tol);
    }
    return total;
}

struct Moments {
    double mean;
    double second;
    double variance() const { return second - mean * mean; }
};

/// E[theta_mle | D >= 1] and E[theta_mle^2 | D >= 1] for exponential lifetimes.
///  - D = d < gamma: the d failures are iid exponential truncated to [0, T].
///  - D = gamma: condition on X_(gamma) = y <= T; the gamma - 1 earlier failures
///    are iid truncated to [0, y]. Integrate over the density of X_(gamma).
inline Moments conditional_mle_moments(int n, int gamma, double T, double theta) {
    // Moments of an exponential(theta) truncated to [0, y].
    auto truncated = [theta](double y) {
        const double r = y / theta;
        const double mass = -std::expm1(-r);
        const double e = std::exp(-r);
        const double m1 = (theta - e * (y + theta)) / mass;
        const double m2 = (2 * theta * theta - e * (y * y + 2 * theta * y + 2 * theta * theta)) / mass;
        return std::pair{m1, m2};
    };
    auto log_choose = [](int a, int b) { return std::lgamma(a + 1.0) - std::lgamma(b + 1.0) - std::lgamma(a - b + 1.0); };

    const double v = std::exp(-T / theta);
    const double p = -std::expm1(-T / theta);
    double s1 = 0.0;
    double s2 = 0.0;

    const auto [mu_T, sq_T] = truncated(T);
    for (int d = 1; d < gamma; ++d) {
        const double prob = std::exp(log_choose(n, d) + d * std::log(p) + (n - d) * std::log(v));
        const double es = d * mu_T;
        const double es2 = d * sq_T + d * (d - 1.0) * mu_T * mu_T;
        const double c = (n - d) * T;
        s1 += prob * (es + c) / d;
        s2 += prob * (es2 + 2 * c * es + c * c) / (double(d) * d);
    }

    // Density of the gamma-th order statistic of n exponentials.
    const double log_lead = std::lgamma(n + 1.0) - std::lgamma(double(gamma)) - std::lgamma(double(n - gamma + 1));
    auto order_pdf = [&](double y) {
        if (y <= 0) return 0.0;
        const double F = -std::expm1(-y / theta);
        return std::exp(log_lead + (gamma - 1) * std::log(F) - (n - gamma + 1) * y / theta) / theta;
    };
    auto given_y = [&](double y, int power) {
        double m1 = 0.0, m2 = 0.0;
        if (gamma > 1) std::tie(m1, m2) = truncated(y);
        const int k = gamma - 1;
        const double es = k * m1;
        const double es2 = k * m2 + k * (k - 1.0) * m1 * m1;
        const double c = (n - gamma + 1) * y;
        return power == 1 ? (es + c) / gamma : (es2 + 2 * c * es + c * c) / (double(gamma) * gamma);
    };
    s1 += integrate([&](double y) { return order_pdf(y) * given_y(y, 1); }, 0.0, T);
    s2 += integrate([&](double y) { return order_pdf(y) * given_y(y, 2); }, 0.0, T);

    const double norm = -std::expm1(n * std::log(v));
    return {s1 / norm, s2 / norm};
}

/// Shift points T_{k,d} = (n - d + k) T / d of the mixture, for piecewise quadrature.
inline std::vector<double> mixture_breaks(int n, int gamma, double T) {
    std::vector<double> out;
    for (int d = 1; d <= gamma; ++d)
        for (int k = 0; k <= d; ++k) out.push_back((n - d + k) * T / d);
    return out;
}

}  // namespace oracle
