import mpmath
import pytest

from edaha.core.exceptions import OnUnitCircle
from edaha.libs.laumon import (
    EMPTY,
    LaumonParams,
    NekArgs,
    Partition,
    X_value,
    delta,
    laumon_f,
    nek_factor,
    specialization,
    specialization_from_roots,
    weight,
)


def close(a, b, tol=1e-20):
    return abs(mpmath.mpc(a) - mpmath.mpc(b)) < tol


def test_delta():
    assert delta(4, 2) == 1
    assert delta(-3, 2) == 0
    assert delta(0, 3) == 1


def test_nek_args_validation():
    with pytest.raises(ValueError):
        NekArgs(0, 0.3, 4, 0.1, N=0)
    with pytest.raises(OnUnitCircle):
        NekArgs(0, 0.3, 4, 1.0)


def test_nek_factor_of_empty_pair_is_one():
    args = NekArgs(1, mpmath.mpc(0.3), mpmath.mpc(4), mpmath.mpc(0.1))
    assert nek_factor(EMPTY, EMPTY, args) == 1


def test_weight_of_single_box():
    # 0.1 is not exact in binary
    with mpmath.workdps(40):
        params = LaumonParams(
            x=(mpmath.mpf(2), mpmath.mpf(3)),
            y=(mpmath.mpf(1), mpmath.mpf(1)),
            p=mpmath.mpf("0.1"),
            s=mpmath.mpf("0.1"),
            q=mpmath.mpf(4),
            t=mpmath.mpf("-0.5"),
        )
        assert close(weight((Partition((1,)), EMPTY), params), mpmath.mpf("-0.01875"))
    assert weight((EMPTY, EMPTY), params) == 1


def test_params_need_matching_lengths():
    with pytest.raises(ValueError):
        LaumonParams(x=(1, 2), y=(1,), p=0.1, s=0.1, q=4, t=-0.25)


def test_x_is_periodic():
    params = LaumonParams(x=(2, 3), y=(1, 1), p=0.1, s=0.1, q=4, t=-0.25)
    assert params.N == 2
    assert params.x_at(3) == 2
    assert params.x_at(0) == 3


def test_X_value():
    assert close(X_value(2, 1.5), mpmath.mpc(0, 1))
    assert close(X_value(3, 2), mpmath.mpc(0, 4))
    assert close(X_value(1, 2), mpmath.mpc(0, 0.25))


def test_specialization():
    Q = mpmath.mpf("1.5")
    params = specialization(1, 2, Q, mpmath.mpf("0.25"), mpmath.mpf("0.09"))
    assert close(params.q, Q**4)
    assert close(params.t, -(Q**-4))
    assert close(params.p, mpmath.mpf("0.5"))
    assert close(params.s, mpmath.mpf("0.3"))
    assert close(params.x[1] * X_value(1, Q), 1)
    assert close(params.y[0], X_value(2, Q) / mpmath.mpf("0.3"))


def test_specialization_rejects_indices():
    with pytest.raises(ValueError):
        specialization_from_roots(0, 1, 1.5, 0.5, 0.5)
    with pytest.raises(ValueError):
        specialization_from_roots(1, 4, 1.5, 0.5, 0.5)


def test_empty_tuple_contributes_one():
    params = specialization(1, 1, 1.5, 0.04, 0.04)
    assert close(laumon_f(params, 0, 10), 1)
