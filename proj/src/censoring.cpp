#include "asp/censoring.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "asp/error.hpp"

namespace asp {

void validate(const CensoringScheme& scheme) {
    if (scheme.n < 1) throw InvalidArgument("censoring scheme: n must be >= 1");
    if (scheme.gamma < 1) throw InvalidArgument("censoring scheme: gamma must be >= 1");
    if (scheme.gamma >= scheme.n)
        throw InvalidArgument("censoring scheme: gamma must be < n (got gamma=" +
                              std::to_string(scheme.gamma) + ", n=" + std::to_string(scheme.n) + ")");
    if (!(scheme.T > 0.0) || !std::isfinite(scheme.T))
        throw InvalidArgument("censoring scheme: T must be a positive finite time");
}

void validate(const CensoredSample& sample, const CensoringScheme& scheme) {
    validate(scheme);
    const int d = sample.failure_count();
    if (d > scheme.gamma) throw InvalidArgument("censored sample: more failures than gamma");
    if (!std::is_sorted(sample.failures.begin(), sample.failures.end()))
        throw InvalidArgument("censored sample: failures must be ordered");
    if (std::any_of(sample.failures.begin(), sample.failures.end(),
                    [&](double x) { return !(x > 0.0) || x > sample.t_star; }))
        throw InvalidArgument("censored sample: failures must lie in (0, t_star]");
    if (d == scheme.gamma) {
        if (sample.t_star != sample.failures.back())
            throw InvalidArgument("censored sample: t_star must equal the gamma-th failure");
        if (sample.t_star > scheme.T)
            throw InvalidArgument("censored sample: gamma-th failure after T");
    } else if (sample.t_star != scheme.T) {
        throw InvalidArgument("censored sample: t_star must equal T when fewer than gamma failed");
    }
}

CensoredSample censor(std::span<const double> lifetimes, const CensoringScheme& scheme) {
    validate(scheme);
    if (static_cast<int>(lifetimes.size()) != scheme.n)
        throw InvalidArgument("censor: expected n lifetimes");

    std::vector<double> ordered(lifetimes.begin(), lifetimes.end());
    std::stable_sort(ordered.begin(), ordered.end());

    const auto g = static_cast<std::size_t>(scheme.gamma);
    CensoredSample out;
    if (ordered[g - 1] <= scheme.T) {
        out.failures.assign(ordered.begin(), ordered.begin() + static_cast<std::ptrdiff_t>(g));
        out.t_star = ordered[g - 1];
    } else {
        const auto last = std::upper_bound(ordered.begin(), ordered.begin() + static_cast<std::ptrdiff_t>(g),
                                           scheme.T);
        out.failures.assign(ordered.begin(), last);
        out.t_star = scheme.T;
    }
    return out;
}

CensoredSample simulate_sample(const CensoringScheme& scheme, double theta, std::uint64_t seed) {
    validate(scheme);
    if (!(theta > 0.0)) throw InvalidArgument("simulate_sample: theta must be positive");
    CounterRng rng(seed);
    std::vector<double> lifetimes(static_cast<std::size_t>(scheme.n));
    for (auto& x : lifetimes) x = rng.exponential(theta);
    return censor(lifetimes, scheme);
}

double mle(const CensoredSample& sample, const CensoringScheme& scheme) {
    validate(sample, scheme);
    const int d = sample.failure_count();
    if (d == 0) return scheme.n * scheme.T;
    const double total = std::accumulate(sample.failures.begin(), sample.failures.end(), 0.0);
    const double end = d == scheme.gamma ? sample.t_star : scheme.T;
    return (total + (scheme.n - d) * end) / d;
}

MleDraw simulate_mle(const CensoringScheme& scheme, double theta, CounterRng& rng,
                     std::vector<double>& scratch) {
    scratch.resize(static_cast<std::size_t>(scheme.n));
    for (auto& x : scratch) x = rng.exponential(theta);

    const auto g = static_cast<std::ptrdiff_t>(scheme.gamma);
    std::partial_sort(scratch.begin(), scratch.begin() + g, scratch.end());

    MleDraw draw;
    if (scratch[static_cast<std::size_t>(g - 1)] <= scheme.T) {
        draw.failures = scheme.gamma;
        draw.t_star = scratch[static_cast<std::size_t>(g - 1)];
    } else {
        draw.failures = static_cast<int>(std::upper_bound(scratch.begin(), scratch.begin() + g, scheme.T) -
                                         scratch.begin());
        draw.t_star = scheme.T;
    }
    if (draw.failures == 0) {
        draw.estimate = scheme.n * scheme.T;
        return draw;
    }
    const double total = std::accumulate(scratch.begin(), scratch.begin() + draw.failures, 0.0);
    draw.estimate = (total + (scheme.n - draw.failures) * draw.t_star) / draw.failures;
    return draw;
}

}  // namespace asp
