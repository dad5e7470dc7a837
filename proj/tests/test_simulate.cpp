#include <cmath>
#include <vector>

#include "asp/error.hpp"
#include "asp/simulate.hpp"
#include "asp/solver.hpp"
#include "doctest.h"

using namespace asp;

namespace {
PlanSpec spec_200() {
    PlanSpec s;
    s.theta_A = 200;
    s.theta_U = 100;
    s.T = 100;
    return s;
}

PlanSolution plan(int n, int gamma, double t1, double t2) {
    PlanSolution p;
    p.n = n;
    p.gamma = gamma;
    p.t1 = t1;
    p.t2 = t2;
    p.feasible = true;
    return p;
}

void check_accounting(const SimulationReport& r) {
    CHECK(r.rounds == r.rounds_accept + r.rounds_continue + r.rounds_reject + r.rounds_without_failure);
    CHECK(r.rounds_accept + r.rounds_reject == r.trials);
    CHECK(r.mean_iterations * r.trials == doctest::Approx(double(r.rounds)));
    CHECK(r.empirical_P_a + r.empirical_P_r == doctest::Approx(1.0));
    CHECK(r.empirical_P_a * r.trials == doctest::Approx(double(r.rounds_accept)));
}
}  // namespace

TEST_CASE("a vanishing lower threshold always accepts") {
    const auto r = run_plan(plan(10, 5, 1e-9, 2e-9), spec_200(), 100.0, 20000, 1);
    CHECK(r.empirical_P_a == 1.0);
    CHECK(r.rounds_reject == 0);
    check_accounting(r);
}

TEST_CASE("an unreachable upper threshold always rejects") {
    const auto r = run_plan(plan(10, 5, 1e6, 2e6), spec_200(), 200.0, 20000, 1);
    CHECK(r.empirical_P_r == 1.0);
    check_accounting(r);
}

TEST_CASE("a degenerate band decides in one round with failures") {
    const auto r = run_plan(plan(10, 5, 180.0, 180.0 + 1e-9), spec_200(), 200.0, 50000, 9);
    // Only zero-failure rounds repeat: P(D = 0) = exp(-10 * 100 / 200).
    const double p0 = std::exp(-5.0);
    CHECK(r.rounds_continue == 0);
    CHECK(r.mean_iterations == doctest::Approx(1.0 / (1.0 - p0)).epsilon(3 * r.se_iterations));
    check_accounting(r);
}

TEST_CASE("runs are reproducible and cost options differ") {
    const auto p = plan(12, 6, 150.0, 230.0);
    const auto a = run_plan(p, spec_200(), 200.0, 5000, 77);
    const auto b = run_plan(p, spec_200(), 200.0, 5000, 77);
    CHECK(a.empirical_P_a == b.empirical_P_a);
    CHECK(a.empirical_etc == b.empirical_etc);
    CHECK(a.rounds == b.rounds);
    check_accounting(a);

    SimulationOptions tstar;
    tstar.duration = RoundDuration::TStar;
    const auto c = run_plan(p, spec_200(), 200.0, 5000, 77, tstar);
    CHECK(c.rounds == a.rounds);  // same stream, same decisions
    CHECK(c.empirical_etc < a.empirical_etc);
    CHECK(c.empirical_etc <= c.mean_iterations * 100.0 + 1e-9);
}

TEST_CASE("a band holding every estimate hits the iteration cap") {
    SimulationOptions opt;
    opt.iteration_cap = 50;
    CHECK_THROWS_AS(run_plan(plan(10, 5, 1e-9, 1e9), spec_200(), 200.0, 10, 1, opt), NumericFailure);
}

TEST_CASE("simulated MLE moments match the analytic ones") {
    for (auto sch : {CensoringScheme{8, 3, 1.0}, CensoringScheme{5, 4, 0.3}, CensoringScheme{20, 12, 2.0}}) {
        const auto r = validate_moments(sch, 1.0, {1.25, 2.5}, LossSpec::sel(), 200000, 11);
        INFO("n=" << sch.n << " gamma=" << sch.gamma << " T=" << sch.T);
        CHECK(r.accepted_draws == 200000);
        CHECK(std::abs(r.sample_mle.mean - r.analytic_mle.mean) <= 3 * r.sample_mle.se_mean);
        CHECK(std::abs(r.sample_mle.variance - r.analytic_mle.variance) <= 3 * r.sample_mle.se_variance);
    }
}

TEST_CASE("estimator moments with the failure count held at gamma") {
    // Long T: nearly every test ends at the gamma-th failure, so the linear SEL
    // estimator's moments are exact and the Linex delta method is close.
    const CensoringScheme sch{10, 6, 50.0};
    const auto s = validate_moments(sch, 1.0, {1.25, 2.5}, LossSpec::sel(), 200000, 5, std::nullopt, 6);
    CHECK(std::abs(s.sample_estimator.mean - s.analytic_estimator.mean) <= 3 * s.sample_estimator.se_mean);
    CHECK(std::abs(s.sample_estimator.variance - s.analytic_estimator.variance) <=
          3 * s.sample_estimator.se_variance);

    const auto l = validate_moments(sch, 1.0, {1.25, 2.5}, LossSpec::linex(0.5), 200000, 5, std::nullopt, 6);
    CHECK(l.estimator_undefined == 0);
    CHECK(l.sample_estimator.mean == doctest::Approx(l.analytic_estimator.mean).epsilon(0.02));
    CHECK(l.sample_estimator.variance == doctest::Approx(l.analytic_estimator.variance).epsilon(0.1));
}

TEST_CASE("pairwise summation") {
    std::vector<double> xs(1 << 20, 0.1);
    CHECK(pairwise_sum(xs) == doctest::Approx(0.1 * xs.size()).epsilon(1e-14));
    CHECK(pairwise_sum(std::vector<double>{}) == 0.0);
    CHECK(pairwise_sum(std::vector<double>{1.0, 2.0, 3.0}) == 6.0);
}

TEST_CASE("invalid simulation input") {
    auto p = plan(10, 5, 100.0, 200.0);
    CHECK_THROWS_AS(run_plan(p, spec_200(), 0.0, 10, 1), InvalidArgument);
    CHECK_THROWS_AS(run_plan(p, spec_200(), 100.0, 0, 1), InvalidArgument);
    p.feasible = false;
    CHECK_THROWS_AS(run_plan(p, spec_200(), 100.0, 10, 1), InvalidArgument);
    CHECK_THROWS_AS(validate_moments({10, 5, 1.0}, 1.0, {}, LossSpec::sel(), 1, 1), InvalidArgument);
    CHECK_THROWS_AS(validate_moments({10, 5, 1.0}, 1.0, {}, LossSpec::sel(), 10, 1, std::nullopt, 0),
                    InvalidArgument);
}
