import mpmath
import pytest

from edaha.libs.corering import (
    LaurentPoly,
    format_laurent,
    laurent_divide_exact,
    laurent_subst_monomial,
    q_power,
)
from edaha.libs.freegroup.sl2z import SHIFT_A, SHIFT_S


def p_pow(n):
    return LaurentPoly.monomial(0, 2 * n, 0)


def test_one_minus():
    assert LaurentPoly.one_minus(1, 0) == LaurentPoly.one() - p_pow(1)


def test_negative_powers_only_for_monomials():
    q = LaurentPoly.monomial(2)
    assert q**-2 == LaurentPoly.monomial(-4)
    with pytest.raises(ValueError):
        LaurentPoly.one_minus(1, 0) ** -1


def test_divide_exact():
    quotient = laurent_divide_exact(LaurentPoly.one_minus(2, 0), LaurentPoly.one_minus(1, 0))
    assert quotient == LaurentPoly.one() + p_pow(1)
    assert laurent_divide_exact(LaurentPoly.one_minus(1, 0), LaurentPoly.one_minus(0, 1)) is None


def test_divide_exact_with_negative_exponents():
    f = p_pow(-1) - p_pow(1)
    quotient = laurent_divide_exact(f, LaurentPoly.one_minus(1, 0))
    assert quotient == p_pow(-1) + LaurentPoly.one()


def test_divide_by_zero():
    with pytest.raises(ZeroDivisionError):
        laurent_divide_exact(LaurentPoly.one(), LaurentPoly.zero())


def test_subst_monomial_column_action():
    assert laurent_subst_monomial(p_pow(1), SHIFT_A) == LaurentPoly.monomial(0, 2, 2)
    assert laurent_subst_monomial(p_pow(1), SHIFT_S) == LaurentPoly.monomial(0, 0, 2)
    # Q is untouched
    assert laurent_subst_monomial(LaurentPoly.monomial(4), SHIFT_S) == LaurentPoly.monomial(4)


def test_format_laurent():
    assert format_laurent(LaurentPoly.monomial(2, 2, 0) - 1) == "Q*p - 1"
    assert format_laurent(LaurentPoly.monomial(0, 1, 0)) == "p^(1/2)"
    assert format_laurent(LaurentPoly.zero()) == "0"


def test_q_free_part():
    assert LaurentPoly.one_minus(1, 0).has_q_free_part()
    assert not LaurentPoly.monomial(4, 2, 0).has_q_free_part()


def test_to_field_and_evaluate():
    assert LaurentPoly.monomial(-4).to_field() == q_power(-4)
    value = LaurentPoly.monomial(2, 2, 0).evaluate((mpmath.mpf(2), mpmath.mpf(3), mpmath.mpf(1)))
    assert mpmath.almosteq(value, 36)
