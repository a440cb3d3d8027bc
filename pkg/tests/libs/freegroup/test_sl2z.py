import pytest

from edaha.libs.freegroup.sl2z import (
    IDENTITY,
    PHI_A,
    PHI_B,
    SHIFT_A,
    SHIFT_A_INV,
    SHIFT_FLIP,
    SHIFT_S,
    SL2ZMatrix,
)


def test_determinant_is_enforced():
    with pytest.raises(ValueError):
        SL2ZMatrix(1, 1, 1, 1)


def test_inverse_and_identity():
    for m in (PHI_A, PHI_B, SHIFT_S, SHIFT_FLIP):
        assert (m @ m.inverse()).is_identity()
    assert SHIFT_A.inverse() == SHIFT_A_INV


def test_apply_is_column_action():
    # p -> p s, s -> s
    assert SHIFT_A.apply(1, 0) == (1, 1)
    assert SHIFT_A.apply(0, 1) == (0, 1)
    assert SHIFT_S.apply(1, 0) == (0, 1)


def test_braid_relation_in_sl2z():
    assert PHI_A @ PHI_B @ PHI_A == PHI_B @ PHI_A @ PHI_B == SHIFT_S


def test_s_has_order_four():
    square = SHIFT_S @ SHIFT_S
    assert square == SL2ZMatrix(-1, 0, 0, -1)
    assert (square @ square) == IDENTITY


def test_describe():
    assert IDENTITY.describe() == "(p,s)->(p,s)"
    assert SHIFT_A.describe() == "(p,s)->(p*s,s)"
