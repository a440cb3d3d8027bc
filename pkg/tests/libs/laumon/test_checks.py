from unittest.mock import patch

import mpmath
import pytest

from edaha.core.config.model import LaumonConfig
from edaha.core.exceptions import TruncationUnstable
from edaha.libs.laumon import conjecture_check
from edaha.libs.laumon.checks import cross_residual
from edaha.libs.qpoch import NumericPolicy

CHECKS = "edaha.libs.laumon.checks"


@pytest.fixture
def policy():
    return NumericPolicy(samples=1)


@pytest.fixture
def config():
    return LaumonConfig(max_boxes=2, b_max=4, p_order=1, s_order=1)


def fake_psi(i, j, Q, pr, sr, policy):
    return 1 + pr**2 * sr + pr**4


def proportional_f(params, config):
    return fake_psi(1, 2, None, params.p, params.s, None) / 3


def drifting_f(params, config):
    return proportional_f(params, config) * (1 + params.p**2)


def unstable_f(params, config):
    raise TruncationUnstable("Laumon partition sum", 1.0, config.tol)


def test_cross_residual():
    assert cross_residual([2, 4], [1, 2]) == 0
    assert cross_residual([2, 4], [1, 1]) == pytest.approx(0.5)
    assert cross_residual([0, 0], [1, 1]) == float("inf")


def test_vanishing_entry_still_evaluates_the_sum(config, policy):
    with patch(f"{CHECKS}.laumon_f_stable", side_effect=unstable_f) as laumon:
        report = conjecture_check(2, 2, "numeric", config, policy)
    assert laumon.called
    assert not report.passed
    assert all(record.residual == float("inf") for record in report.checks)


def test_vanishing_entry_needs_a_vanishing_sum(config, policy):
    with patch(f"{CHECKS}.laumon_f_stable", return_value=mpmath.mpc(0.5)):
        assert not conjecture_check(2, 2, "numeric", config, policy).passed
    with patch(f"{CHECKS}.laumon_f_stable", return_value=mpmath.mpc(0)):
        report = conjecture_check(2, 2, "numeric", config, policy)
    assert report.passed
    assert report.checks[0].detail.startswith("|f| at")


def test_constant_ratio_passes_and_is_reported(config, policy):
    with patch(f"{CHECKS}._psi_value", side_effect=fake_psi), patch(
        f"{CHECKS}.laumon_f_stable", side_effect=proportional_f
    ):
        report = conjecture_check(1, 2, "numeric", config, policy)
    assert [record.id for record in report.checks] == ["psi12 sample 0", "psi12 sample 1"]
    assert report.passed
    # values are complex, so the constant prints as (3.0 + 0.0j)
    assert report.checks[0].detail.startswith("psi/f = (3.0")


def test_ratio_depending_on_p_fails(config, policy):
    with patch(f"{CHECKS}._psi_value", side_effect=fake_psi), patch(
        f"{CHECKS}.laumon_f_stable", side_effect=drifting_f
    ):
        report = conjecture_check(1, 2, "numeric", config, policy)
    assert not report.passed
    assert all(record.residual > config.tol for record in report.checks)


def test_series_mode_compares_the_cross_product(config, policy):
    def series_f(params, max_boxes, b_max, precision):
        return proportional_f(params, None)

    with patch(f"{CHECKS}._psi_value", side_effect=fake_psi), patch(
        f"{CHECKS}.laumon_f", side_effect=series_f
    ):
        report = conjecture_check(1, 2, "series", config, policy)
    assert [record.id for record in report.checks] == ["psi12 series", "psi12 integer p powers"]
    assert report.passed

    def series_drift(params, max_boxes, b_max, precision):
        return drifting_f(params, None)

    with patch(f"{CHECKS}._psi_value", side_effect=fake_psi), patch(
        f"{CHECKS}.laumon_f", side_effect=series_drift
    ):
        report = conjecture_check(1, 2, "series", config, policy)
    assert not report.checks[0].passed
    assert "first divergent coefficient" in report.checks[0].detail


def test_series_mode_of_vanishing_entry_expands_the_sum(config, policy):
    with patch(f"{CHECKS}.laumon_f", return_value=mpmath.mpc(0.25)):
        report = conjecture_check(2, 2, "series", config, policy)
    assert not report.checks[0].passed
    assert report.checks[0].residual == pytest.approx(0.25)


def test_numeric_comparison_runs_on_the_real_sum(config, policy):
    report = conjecture_check(1, 2, "numeric", config, policy)
    assert len(report.checks) == 2
    for record in report.checks:
        assert record.tier == "numeric"
        assert record.residual >= 0
        assert record.detail
