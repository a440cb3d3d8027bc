import pytest

from edaha.libs.corering.field import K
from edaha.libs.laumon import (
    ALL_PAIRS,
    eigen_relation_check,
    eigen_residuals,
    psi_closed,
    psi_prefactor,
    psi_structure_checks,
)
from edaha.libs.plethystic import ring_at_p_zero
from edaha.libs.qpoch import NumericPolicy


@pytest.fixture
def policy():
    return NumericPolicy(samples=2)


def test_psi22_vanishes():
    assert psi_closed(2, 2).is_zero_symbolic()
    assert psi_prefactor(2, 2) == K.zero


@pytest.mark.parametrize("i, j", [pair for pair in ALL_PAIRS if pair != (2, 2)])
def test_every_closed_form_builds(i, j):
    psi = psi_closed(i, j)
    assert not psi.is_zero_symbolic()
    assert ring_at_p_zero(psi) == psi_prefactor(i, j)


def test_rows_one_and_three_share_the_first_column():
    assert (psi_closed(3, 1) - psi_closed(1, 1)).is_zero_symbolic()


def test_value_at_p_zero_is_the_prefactor():
    assert ring_at_p_zero(psi_closed(1, 1)) == K.one


def test_indices_are_checked():
    with pytest.raises(ValueError):
        psi_closed(0, 1)
    with pytest.raises(ValueError):
        psi_prefactor(1, 4)
    with pytest.raises(ValueError):
        eigen_residuals(4)


def test_all_pairs():
    assert len(ALL_PAIRS) == 9
    assert ALL_PAIRS[0] == (1, 1)


def test_structure_checks_pass():
    report = psi_structure_checks()
    assert report.passed
    assert len(report.checks) == 3 + 9


def test_eigen_relation_middle_row(policy):
    # X_2 + X_2^-1 = 0 and psi23 = c^2/2 psi21, so every row cancels exactly
    report = eigen_relation_check(2, policy)
    assert [record.id for record in report.checks] == ["row 1", "row 2", "row 3"]
    assert report.passed
    assert all(record.tier == "symbolic" for record in report.checks)
