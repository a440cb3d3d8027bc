import mpmath
import pytest

from edaha.core.exceptions import OnUnitCircle
from edaha.libs.qpoch import (
    NumericPolicy,
    SamplePoint,
    Sampler,
    poch_eval,
    poch_product,
    qpoch_identity_checks,
)
from edaha.libs.qpoch.sampling import near_root_of_unity


@pytest.fixture
def policy():
    return NumericPolicy(samples=1)


def close(a, b, tol=1e-25):
    return abs(a - b) <= tol * max(1, abs(a), abs(b))


def test_empty_symbol(policy):
    z = mpmath.mpf("0.7")
    assert close(poch_eval(z, [], policy), 1 - z)


def test_matches_truncated_product(policy):
    z, p = mpmath.mpc("0.7", "0.2"), mpmath.mpf("0.3")
    assert close(poch_eval(z, [p], policy), poch_product(z, [p], cutoff=200, precision=60))


def test_two_parameters(policy):
    z, p1, p2 = mpmath.mpf("0.9"), mpmath.mpf("0.2"), mpmath.mpc("0", "0.3")
    assert close(poch_eval(z, [p1, p2], policy), poch_product(z, [p1, p2], cutoff=100, precision=60))


def test_inversion(policy):
    with mpmath.workdps(policy.precision):
        z, p = mpmath.mpf("0.7"), mpmath.mpf("0.25")
        assert close(poch_eval(z, [1 / p], policy), 1 / poch_eval(p * z, [p], policy))


def test_unit_circle_is_rejected(policy):
    with pytest.raises(OnUnitCircle):
        poch_eval(0.5, [1], policy)
    with pytest.raises(OnUnitCircle):
        poch_eval(0.5, [0], policy)


def test_identity_suite_passes(policy):
    records = qpoch_identity_checks(policy)
    assert records
    assert all(record.passed for record in records)


def test_policy_rejects_tolerance_below_precision():
    with pytest.raises(ValueError):
        NumericPolicy(precision=20, tol=1e-30)


def test_sampler_is_seeded(policy):
    first = Sampler(policy, "salt").draw([(1, 0)])
    second = Sampler(policy, "salt").draw([(1, 0)])
    assert first == second
    assert first.admissible([(1, 0)], policy.epsilon)


def test_sample_point_monomials():
    point = SamplePoint.from_values(4, 0.25, 0.09)
    assert close(point.monomial(1, -1), mpmath.mpf("0.25") / mpmath.mpf("0.09"), tol=1e-12)
    assert close(point.Q, 4)


def test_sampled_moduli_stay_in_their_annuli(policy):
    points = Sampler(policy, "moduli").draw_many([(1, 0), (0, 1)], count=200)
    slack = 1e-12
    for point in points:
        assert 0.5 - slack <= abs(point.Q) <= 2 + slack
        assert 0.05 - slack <= abs(point.p) <= 0.35 + slack
        assert 0.05 - slack <= abs(point.s) <= 0.35 + slack
        assert not near_root_of_unity(point.Q)
    assert min(abs(point.Q) for point in points) < 0.8
    assert max(abs(point.Q) for point in points) > 1.25


def test_roots_of_unity_are_avoided():
    assert near_root_of_unity(mpmath.expjpi(mpmath.mpf(1) / 4))
    assert near_root_of_unity(mpmath.mpc(0, 1))
    assert not near_root_of_unity(mpmath.mpf("1.5"))
