import math

import pytest

import asp_plans as ap

APPLIANCES = [11, 35, 49, 170, 329, 381, 708, 958, 1062, 1167, 1594, 1925, 1990, 2223, 2327, 2400, 2451,
              2471, 2551, 2565, 2568, 2694, 2702, 2761, 2831, 3034, 3059, 3112, 3214, 3478, 3504, 4329,
              6367, 6976, 7846, 13403]


def test_censor_and_estimate():
    scheme = ap.CensoringScheme(31, 9, 2000.0)
    sample = ap.censor(APPLIANCES[:31], scheme)
    assert sample.failure_count == 9
    assert ap.mle(sample, scheme) == pytest.approx(27067 / 9)
    assert ap.sel_estimate(27067 / 9, 9, ap.Prior(1.25, 2.5)) == pytest.approx(2577.9286, abs=1e-3)
    assert ap.linex_estimate(31968 / 11, 11, ap.Prior(1.25, 2.5), 0.5) == pytest.approx(2883.2339, abs=1e-3)


def test_moments_long_censoring_limit():
    m = ap.mle_moments(ap.CensoringScheme(10, 4, 100.0), 2.0)
    assert m.mean == pytest.approx(2.0, rel=1e-6)
    assert m.variance == pytest.approx(1.0, rel=1e-6)


def test_pdf_and_cdf_agree():
    scheme = ap.CensoringScheme(5, 3, 1.0)
    h = 1e-5
    x = 0.8
    slope = (ap.mle_cdf(x + h, scheme, 1.0) - ap.mle_cdf(x - h, scheme, 1.0)) / (2 * h)
    assert slope == pytest.approx(ap.mle_pdf(x, scheme, 1.0), rel=1e-5)


def test_plan_probabilities_partition():
    p = ap.plan_probabilities(8.04, 11.96, ap.EstimatorMoments(10.0, 1.0))
    assert p.p_a + p.p_r + p.p_c == pytest.approx(1.0, abs=1e-15)
    assert p.p_c == pytest.approx(0.9500042, abs=1e-7)


def test_solve_evaluate_simulate():
    spec = ap.PlanSpec(2.0, 1.0, 1.0, alpha=0.2, beta=0.2)
    sol = ap.solve_plan(spec, n_max=8, seed=42)
    assert sol.feasible
    again = ap.solve_plan(spec, n_max=8, seed=42)
    assert (again.t1, again.t2, again.etc) == (sol.t1, sol.t2, sol.etc)
    ev = ap.evaluate_plan(spec, ap.CensoringScheme(sol.n, sol.gamma, 1.0), sol.t1, sol.t2)
    assert ev.feasible
    assert ev.etc == pytest.approx(sol.etc)
    rep = ap.run_plan(sol, spec, 2.0, 2000, seed=3)
    assert rep.trials == 2000
    assert rep.rounds_accept + rep.rounds_reject == 2000


def test_errors_map_to_python_exceptions():
    with pytest.raises(ValueError):
        ap.mle_moments(ap.CensoringScheme(5, 5, 1.0), 1.0)
    with pytest.raises(ArithmeticError):
        ap.linex_estimate(0.01, 1, ap.Prior(1.25, 2.5), 2.0)


def test_case_study_path():
    path = ap.apply_plan(APPLIANCES, ap.CensoringScheme(31, 9, 2000.0), 2064, 2065, ap.Prior(1.25, 2.5),
                         ap.LossSpec.sel())
    assert path.decision == ap.Decision.ACCEPT
    assert math.isclose(path.estimate, 2577.9286, abs_tol=1e-3)
