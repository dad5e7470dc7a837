#include <array>
#include <cmath>

#include "asp/case_study.hpp"
#include "asp/error.hpp"
#include "asp/reference_data.hpp"
#include "doctest.h"

using namespace asp;
namespace ref = asp::reference;

TEST_CASE("decision rule boundaries") {
    CHECK(decide(10.0, 5.0, 10.0) == Decision::Accept);
    CHECK(decide(9.999, 5.0, 10.0) == Decision::Continue);
    CHECK(decide(5.0, 5.0, 10.0) == Decision::Continue);
    CHECK(decide(4.999, 5.0, 10.0) == Decision::Reject);
    CHECK(to_string(Decision::Accept) == "accept");
    CHECK(to_string(Decision::Continue) == "continue");
    CHECK(to_string(Decision::Reject) == "reject");
}

TEST_CASE("squared-error plan on the appliance data") {
    const auto& p = ref::kCaseStudySel;
    const auto path = apply_plan(ref::kApplianceLifetimes, {p.n, p.gamma, ref::kCaseStudy.T}, p.t1, p.t2,
                                 {1.25, 2.5}, LossSpec::sel());
    CHECK(path.sample.failure_count() == 9);
    CHECK(path.theta_mle == doctest::Approx(27067.0 / 9).epsilon(1e-14));
    CHECK(std::abs(path.estimate - p.estimate) < 1e-3);
    CHECK(path.decision == Decision::Accept);
}

TEST_CASE("Linex plan on the appliance data") {
    const auto& p = ref::kCaseStudyLinex;
    const auto path = apply_plan(ref::kApplianceLifetimes, {p.n, p.gamma, ref::kCaseStudy.T}, p.t1, p.t2,
                                 {1.25, 2.5}, LossSpec::linex(ref::kCaseStudyLinexC));
    CHECK(path.sample.failure_count() == 11);
    CHECK(path.theta_mle == doctest::Approx(31968.0 / 11).epsilon(1e-14));
    CHECK(std::abs(path.estimate - p.estimate) < 1e-3);
    CHECK(path.decision == Decision::Accept);
}

TEST_CASE("plan with no failures before T continues") {
    const std::array<double, 4> x{50.0, 60.0, 70.0, 80.0};
    const auto path = apply_plan(x, {4, 2, 10.0}, 5.0, 8.0, {1.25, 2.5}, LossSpec::sel());
    CHECK(path.sample.failure_count() == 0);
    CHECK(path.decision == Decision::Continue);
}

TEST_CASE("apply_plan rejects bad input") {
    const std::array<double, 3> x{1.0, 2.0, 3.0};
    CHECK_THROWS_AS(apply_plan(x, {4, 2, 10.0}, 1.0, 2.0, {}, LossSpec::sel()), InvalidArgument);
    CHECK_THROWS_AS(apply_plan(x, {3, 2, 10.0}, 2.0, 2.0, {}, LossSpec::sel()), InvalidArgument);
}
