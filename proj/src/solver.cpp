#include "asp/solver.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <map>
#include <utility>
#include <vector>

#include "asp/error.hpp"
#include "asp/rng.hpp"
#include "plan_math.hpp"

namespace asp {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Estimator moments at both quality levels for one (gamma, n).
struct Candidate {
    int gamma = 0;
    int n = 0;
    bool usable = false;
    double mean_A = 0.0, sd_A = 0.0;
    double mean_U = 0.0, sd_U = 0.0;
};

struct Score {
    double violation = kInf;
    double etc = kInf;
    double t1 = 0.0, t2 = 0.0;
    double slack_alpha = -kInf, slack_beta = -kInf;

    [[nodiscard]] bool feasible() const { return violation == 0.0; }
};

// Feasibility-first ordering: feasible beats infeasible, feasible points
// compare by cost, infeasible points by total violation.
bool better(const Score& a, const Score& b) {
    if (a.feasible() != b.feasible()) return a.feasible();
    if (a.feasible()) return a.etc < b.etc || (a.etc == b.etc && a.t1 < b.t1);
    return a.violation < b.violation;
}

Score score_point(const Candidate& c, const PlanSpec& spec, double t1, double t2) {
    Score s;
    s.t1 = t1;
    s.t2 = t2;
    const auto pa = detail::band_probabilities(t1, t2, c.mean_A, c.sd_A);
    const auto pu = detail::band_probabilities(t1, t2, c.mean_U, c.sd_U);
    const double decided_A = pa.p_a + pa.p_r;
    s.slack_alpha = std::isfinite(pa.P_r) ? spec.alpha - pa.P_r : -1.0;
    s.slack_beta = std::isfinite(pu.P_a) ? spec.beta - pu.P_a : -1.0;
    s.violation = std::max(0.0, -s.slack_alpha) + std::max(0.0, -s.slack_beta);
    s.etc = decided_A > 0.0 ? spec.C * c.mean_A / decided_A : kInf;
    return s;
}

class CandidateCache {
public:
    CandidateCache(const PlanSpec& spec, const SolverSettings& settings) : spec_(spec), settings_(settings) {}

    const Candidate& get(int gamma, int n) {
        const auto key = std::make_pair(gamma, n);
        if (auto it = cache_.find(key); it != cache_.end()) return it->second;
        Candidate c;
        c.gamma = gamma;
        c.n = n;
        const CensoringScheme scheme{n, gamma, spec_.T};
        const int d = settings_.d_convention.value_or(gamma);
        try {
            const auto a = estimator_moments(scheme, spec_.theta_A, spec_.prior, spec_.loss, d,
                                             settings_.precision_bits);
            const auto u = estimator_moments(scheme, spec_.theta_U, spec_.prior, spec_.loss, d,
                                             settings_.precision_bits);
            c.mean_A = a.mean;
            c.sd_A = std::sqrt(a.variance);
            c.mean_U = u.mean;
            c.sd_U = std::sqrt(u.variance);
            c.usable = std::isfinite(c.mean_A) && std::isfinite(c.mean_U) && c.mean_A > 0.0;
        } catch (const NumericFailure&) {
            // Lindley breakdown or precision loss: the whole candidate is infeasible.
        } catch (const InvalidArgument&) {
            // Estimator undefined for this failure count (D + b <= 1).
        }
        return cache_.emplace(key, c).first->second;
    }

private:
    const PlanSpec& spec_;
    const SolverSettings& settings_;
    std::map<std::pair<int, int>, Candidate> cache_;
};

struct SearchResult {
    Score best;
    std::uint64_t evaluations = 0;
};

// DE/rand/1/bin over the unit square (u1, u2) mapped to
//   t1 = lo + u1 (t_max - band_min - lo),  t2 = t1 + band_min + u2 (t_max - t1 - band_min).
SearchResult search_thresholds(const Candidate& cand, const PlanSpec& spec, double t_max,
                               const SolverSettings& st, std::uint64_t seed, bool stop_when_feasible) {
    SearchResult out;
    if (!cand.usable) return out;

    const double band_min = st.min_band_fraction * spec.theta_A;
    const double lo = 1e-9 * spec.theta_A;
    auto decode = [&](const std::array<double, 2>& u) {
        const double t1 = lo + u[0] * (t_max - band_min - lo);
        const double t2 = t1 + band_min + u[1] * (t_max - t1 - band_min);
        return std::make_pair(t1, t2);
    };
    auto evaluate = [&](const std::array<double, 2>& u) {
        ++out.evaluations;
        const auto [t1, t2] = decode(u);
        return score_point(cand, spec, t1, t2);
    };

    const auto np = static_cast<std::size_t>(std::max(st.population, 4));
    std::vector<std::array<double, 2>> pop(np);
    std::vector<Score> scores(np);

    for (int restart = 0; restart < st.restarts; ++restart) {
        CounterRng rng(derive_seed(seed, static_cast<std::uint64_t>(restart)));
        for (std::size_t i = 0; i < np; ++i) {
            pop[i] = {rng.uniform(), rng.uniform()};
            scores[i] = evaluate(pop[i]);
        }
        auto best_index = [&] {
            std::size_t b = 0;
            for (std::size_t i = 1; i < np; ++i)
                if (better(scores[i], scores[b])) b = i;
            return b;
        };
        Score best = scores[best_index()];
        int stall = 0;

        for (int gen = 0; gen < st.generations; ++gen) {
            if (stop_when_feasible && best.feasible()) break;
            for (std::size_t i = 0; i < np; ++i) {
                std::size_t r[3];
                for (int k = 0; k < 3; ++k) {
                    do {
                        r[k] = static_cast<std::size_t>(rng.next_u64() % np);
                    } while (r[k] == i || (k > 0 && r[k] == r[0]) || (k > 1 && r[k] == r[1]));
                }
                const auto forced = static_cast<std::size_t>(rng.next_u64() % 2);
                std::array<double, 2> trial = pop[i];
                for (std::size_t j = 0; j < 2; ++j) {
                    if (j == forced || rng.uniform() < st.crossover_rate) {
                        const double x = pop[r[0]][j] + st.differential_weight * (pop[r[1]][j] - pop[r[2]][j]);
                        trial[j] = std::clamp(x, 0.0, 1.0);
                    }
                }
                const Score s = evaluate(trial);
                if (!better(scores[i], s)) {
                    pop[i] = trial;
                    scores[i] = s;
                }
            }
            const Score gen_best = scores[best_index()];
            const bool improved =
                better(gen_best, best) &&
                (gen_best.feasible() != best.feasible() ||
                 (gen_best.feasible() ? gen_best.etc < best.etc * (1.0 - 1e-12)
                                      : gen_best.violation < best.violation - 1e-15));
            if (better(gen_best, best)) best = gen_best;
            stall = improved ? 0 : stall + 1;
            if (stall >= st.stall_generations) break;
        }
        if (better(best, out.best)) out.best = best;
        if (stop_when_feasible && out.best.feasible()) break;
    }
    return out;
}

void check_inputs(const PlanSpec& spec, const SearchBounds& bounds, const SolverSettings& st) {
    validate(spec);
    if (bounds.n_max < 2) throw InvalidArgument("solve_plan: n_max must be at least 2");
    if (bounds.t_max < 0.0) throw InvalidArgument("solve_plan: t_max must be non-negative");
    if (st.population < 4 || st.generations < 1 || st.restarts < 1)
        throw InvalidArgument("solve_plan: population >= 4, generations >= 1 and restarts >= 1 required");
    if (!(st.min_band_fraction > 0.0)) throw InvalidArgument("solve_plan: min_band_fraction must be positive");
    if (st.d_convention && *st.d_convention < 1) throw InvalidArgument("solve_plan: d_convention must be >= 1");
}

double effective_t_max(const PlanSpec& spec, const SearchBounds& bounds) {
    return bounds.t_max > 0.0 ? bounds.t_max : 5.0 * spec.theta_A;
}

std::uint64_t candidate_seed(std::uint64_t seed, int gamma, int n, std::uint64_t phase) {
    return derive_seed(derive_seed(derive_seed(seed, phase), static_cast<std::uint64_t>(gamma)),
                       static_cast<std::uint64_t>(n));
}

PlanSolution to_solution(const Candidate& c, const Score& s, std::uint64_t evaluations) {
    PlanSolution sol;
    sol.gamma = c.gamma;
    sol.n = c.n;
    sol.t1 = s.t1;
    sol.t2 = s.t2;
    sol.etc = s.etc;
    sol.feasible = s.feasible();
    sol.slack_alpha = s.slack_alpha;
    sol.slack_beta = s.slack_beta;
    sol.evaluations = evaluations;
    return sol;
}

// Costs within a relative 1e-9 count as equal so that rounding noise in the
// moments cannot pick a larger n.
bool cheaper(const Score& a, const Score& b) {
    if (a.feasible() && b.feasible()) return a.etc < b.etc * (1.0 - 1e-9);
    return better(a, b);
}

// Step 2 with a shared cache. Ties in cost keep the smaller n, then smaller t1.
PlanSolution minimize_cost(const PlanSpec& spec, int gamma, const SearchBounds& bounds, std::uint64_t seed,
                           const SolverSettings& st, CandidateCache& cache, std::uint64_t evaluations) {
    const double t_max = effective_t_max(spec, bounds);
    Score best;
    Candidate best_cand;
    for (int n = gamma + 1; n <= bounds.n_max; ++n) {
        const Candidate& cand = cache.get(gamma, n);
        const auto r = search_thresholds(cand, spec, t_max, st, candidate_seed(seed, gamma, n, 2), false);
        evaluations += r.evaluations;
        if (cand.usable && cheaper(r.best, best)) {
            best = r.best;
            best_cand = cand;
        }
    }
    return to_solution(best_cand, best, evaluations);
}

}  // namespace

PlanSolution solve_for_gamma(const PlanSpec& spec, int gamma, const SearchBounds& bounds, std::uint64_t seed,
                             const SolverSettings& settings) {
    check_inputs(spec, bounds, settings);
    if (gamma < 1 || gamma >= bounds.n_max) throw InvalidArgument("solve_for_gamma: need 1 <= gamma < n_max");
    CandidateCache cache(spec, settings);
    return minimize_cost(spec, gamma, bounds, seed, settings, cache, 0);
}

PlanSolution solve_plan(const PlanSpec& spec, const SearchBounds& bounds, std::uint64_t seed,
                        const SolverSettings& settings) {
    check_inputs(spec, bounds, settings);
    const double t_max = effective_t_max(spec, bounds);
    CandidateCache cache(spec, settings);
    std::uint64_t evaluations = 0;

    Score least_violation;
    Candidate least_violation_cand;

    for (int gamma = 1; gamma < bounds.n_max; ++gamma) {
        for (int n = gamma + 1; n <= bounds.n_max; ++n) {
            const Candidate& cand = cache.get(gamma, n);
            const auto r = search_thresholds(cand, spec, t_max, settings, candidate_seed(seed, gamma, n, 1), true);
            evaluations += r.evaluations;
            if (!cand.usable) continue;
            if (r.best.feasible()) return minimize_cost(spec, gamma, bounds, seed, settings, cache, evaluations);
            if (better(r.best, least_violation)) {
                least_violation = r.best;
                least_violation_cand = cand;
            }
        }
    }
    return to_solution(least_violation_cand, least_violation, evaluations);
}

PlanSolution grid_thresholds(const PlanSpec& spec, const PlanSolution& solution, int decimals,
                             const SolverSettings& settings) {
    validate(spec);
    if (solution.gamma < 1 || solution.n <= solution.gamma)
        throw InvalidArgument("grid_thresholds: solution has no valid (gamma, n)");
    if (decimals < 0 || decimals > 12) throw InvalidArgument("grid_thresholds: decimals must lie in [0, 12]");
    CandidateCache cache(spec, settings);
    const Candidate& cand = cache.get(solution.gamma, solution.n);
    PlanSolution out = solution;
    out.feasible = false;
    if (!cand.usable) return out;

    // Grid values are k / scale, the double nearest to the printed decimal.
    const double scale = std::pow(10.0, decimals);
    auto value = [scale](long k) { return static_cast<double>(k) / scale; };
    const long base1 = std::max(1L, static_cast<long>(std::floor(solution.t1 * scale)));
    const long base2 = std::max(base1 + 1, static_cast<long>(std::ceil(solution.t2 * scale)));
    Score best;
    for (long radius = 1; radius <= 4096 && !best.feasible(); radius *= 2) {
        for (long k1 = std::max(1L, base1 - radius); k1 <= base1 + radius; ++k1) {
            for (long k2 = std::max(k1 + 1, base2 - radius); k2 <= base2 + radius; ++k2) {
                const Score s = score_point(cand, spec, value(k1), value(k2));
                ++out.evaluations;
                if (better(s, best)) best = s;
            }
        }
    }
    if (!best.feasible()) return out;
    return to_solution(cand, best, out.evaluations);
}

PlanSolution integer_thresholds(const PlanSpec& spec, const PlanSolution& solution,
                                const SolverSettings& settings) {
    return grid_thresholds(spec, solution, 0, settings);
}

}  // namespace asp
