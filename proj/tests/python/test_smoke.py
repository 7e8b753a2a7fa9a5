"""Smoke tests for the python bindings (run against the cmake build tree or
an installed wheel)."""

import math

import pytest

import luroth


def test_expansion_round_trip():
    assert luroth.digits("2/3", 4) == [2, 4, 2, 2]
    assert luroth.digits("1/2", 3) == [3, 2, 2]
    assert luroth.first_digit("1/2") == 3
    assert luroth.luroth_map("2/3") == "1/3"
    assert luroth.evaluate([2, 4]) == "5/8"
    assert luroth.cylinder([3]) == ("1/3", "1/2")
    assert luroth.cylinder_length([3, 4]) == "1/72"
    assert luroth.digit_mass(3) == "1/6"


def test_domain_errors_map_to_value_error():
    with pytest.raises(ValueError):
        luroth.digits("3/2", 4)
    with pytest.raises(ValueError):
        luroth.evaluate([1, 2])


def test_runlength():
    assert luroth.max_run([2, 2, 3, 2, 2, 2]) == 3
    assert luroth.run_trajectory([2, 3, 3, 2]) == [1, 1, 2, 2]
    lo, hi = luroth.inf_sup_estimate([1.0, 0.5, 1 / 3, 0.25], 0.5)
    assert lo == pytest.approx(0.25)
    assert hi == pytest.approx(1 / 3)


def test_solvers():
    root = luroth.solve_s(0.0, tol=1e-10)
    assert abs(root.value - 1.0) <= 1e-10
    s3 = luroth.solve_sM(0.0, 3, tol=1e-12)
    assert s3.value == pytest.approx(0.600966851613675, abs=1e-9)
    assert luroth.zeta("1/5", "1/2") == "2"
    assert luroth.dim_case("0", "0") == "one"
    assert luroth.dim_E("0.4", "0.5").value == 0.0
    mid = luroth.dim_E("1/5", "1/2", tol=1e-10)
    s2 = luroth.solve_s(2.0, tol=1e-10)
    assert mid.value == pytest.approx(s2.value, abs=1e-9)
    enum_root = luroth.finite_depth_pressure_root(3, 3, tol=1e-12)
    assert enum_root.value == pytest.approx(s3.value, abs=1e-10)


def test_construction():
    sched = luroth.build_schedule("1/5", "1/2", M=3, k_max=4)
    assert sched.n[:2] == [8, 24]
    assert sched.m[:2] == [6, 18]
    assert sched.n_prime[:2] == [9, 28]
    assert sched.u[0] == "3/4"

    pt = luroth.generate_point(sched, 60, fill="seeded", seed=11)
    assert pt[8] == 6  # separator at n'_1
    assert pt[9:15] == [2] * 6
    rep = luroth.run_profile_check(sched, pt)
    assert rep["ok"]

    img = luroth.project_f(sched, pt)
    assert luroth.is_admissible(sched, img)
    assert len(img) == 60 - len(luroth.deletion_positions(sched, 60))

    words = luroth.enumerate_D_n(sched, 8)
    assert len(words) == 256
    J = luroth.fundamental_interval(sched, [2])
    assert J["left"] == "2/3"
    assert J["right"] == "1"
    assert luroth.gap(sched, [2]) == "1/6"


def test_measure():
    sched = luroth.build_schedule("1/5", "1/2", M=3, k_max=3)
    params = luroth.measure_params(sched, tol=1e-12)
    rep = luroth.check_mu_consistency(sched, params, 14)
    assert rep["words"] == 256
    assert rep["max_node_gap"] < 1e-10
    assert abs(rep["total_mass"] - 1.0) < 1e-9
    mu = luroth.measure_mu(sched, params, [2] * 14)
    assert mu.value == pytest.approx(2.0 ** (-14 * params.s[0].value), abs=1e-12)


def test_experiments():
    assert luroth.sample_digit(0.25) == 2
    assert luroth.sample_digit(0.5) == 3
    summary = luroth.lln_experiment(seed=5, trials=10, n=2000)
    assert 0.5 < summary["mean"] < 1.6
    again = luroth.lln_experiment(seed=5, trials=10, n=2000)
    assert summary == again  # bit-identical reproducibility
    rows = luroth.dim_surface(3, tol=1e-8)
    assert len(rows) == 9
    corner = rows[0]
    assert corner["alpha"] == "0" and corner["beta"] == "0"
    assert corner["dim"] == 1.0
    assert not math.isnan(sum(r["dim"] for r in rows if r["valid"]))
