import pytest

from edaha.libs.corering import K
from edaha.libs.freegroup.sl2z import IDENTITY, SHIFT_A, SHIFT_B, SHIFT_S, SL2ZMatrix
from edaha.libs.operators import (
    CONJUGATION_IDENTITIES,
    DA_inverse_matrix,
    Mat3R,
    TwistedOperator,
    build_DA,
    build_DB,
    build_OA1,
    build_S,
    conjugation_identity_check,
    describe_entry,
    mat_equal,
    scalar_matrix,
    sl2z_report,
    x_times,
)
from edaha.libs.corering import LaurentPoly
from edaha.libs.qpoch import NumericPolicy


@pytest.fixture
def policy():
    return NumericPolicy(samples=2)


def test_shifts_compose():
    assert build_DA().shift == SHIFT_A
    assert build_DB().shift == SHIFT_B
    assert build_S().shift == SHIFT_S
    assert (build_S() @ build_S()).shift == SL2ZMatrix(-1, 0, 0, -1)


def test_twisted_product_shifts_the_right_factor():
    left = TwistedOperator(Mat3R.identity(), SHIFT_S)
    right = TwistedOperator.plain(build_OA1())
    product = left @ right
    assert product.shift == SHIFT_S
    assert product.matrix.is_zero_symbolic() is False
    assert (TwistedOperator.identity() ** 3).shift == IDENTITY


def test_da_inverse(policy):
    test = mat_equal(DA_inverse_matrix() @ build_DA().matrix, Mat3R.identity(), policy)
    assert test.is_zero
    assert test.tier == "symbolic"


def test_x_times():
    x = x_times([(1, 0, 2)])
    assert x == LaurentPoly.monomial(16, 2, 0, coeff=2) - LaurentPoly.monomial(-16, 2, 0, coeff=2)


def test_scalar_matrix():
    m = scalar_matrix(3)
    assert m[0, 0].scalar_value() == K(3)
    assert m[0, 1].is_zero_symbolic()


def test_describe_entry():
    assert describe_entry(0) == "entry (1,1)"
    assert describe_entry(5) == "entry (2,3)"


def test_unknown_identity(policy):
    assert "identity" in CONJUGATION_IDENTITIES
    assert conjugation_identity_check("identity", policy).is_zero
    with pytest.raises(ValueError):
        conjugation_identity_check("nonsense", policy)


@pytest.mark.slow
def test_sl2z_report_passes(policy):
    report = sl2z_report(policy)
    assert [check.id for check in report.checks][:3] == ["braid", "s-squared", "s-fourth"]
    assert report.passed, [c.detail for c in report.failures]
