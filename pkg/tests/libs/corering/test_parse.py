import pytest

from edaha.core.exceptions import ExpressionSyntaxError
from edaha.libs.corering import C_Q, LaurentPoly, as_laurent, is_laurent, ratfunc_subst_monomial
from edaha.libs.corering.parse import parse_expression, parse_laurent, parse_ratfunc
from edaha.libs.freegroup.sl2z import SHIFT_S


def test_parse_ratfunc_matches_constants():
    assert parse_ratfunc("Q^2 - Q^-2") == C_Q
    assert parse_ratfunc("Q**2 - 1/Q**2") == C_Q


def test_half_powers():
    assert parse_laurent("p^(1/2)") == LaurentPoly.monomial(0, 1, 0)


def test_rational_functions_are_not_laurent():
    value = parse_ratfunc("1/(1-p)")
    assert not is_laurent(value)
    assert as_laurent(value) is None
    with pytest.raises(ExpressionSyntaxError):
        parse_laurent("1/(1-p)")


def test_as_laurent_divides_single_term_denominators():
    assert as_laurent(parse_ratfunc("(1 - p)/Q")) == LaurentPoly.monomial(-2) - LaurentPoly.monomial(-2, 2, 0)


def test_subst_monomial_on_fractions():
    assert ratfunc_subst_monomial(parse_ratfunc("1/(1-p)"), SHIFT_S) == parse_ratfunc("1/(1-s)")


def test_unknown_symbols_are_rejected():
    with pytest.raises(ExpressionSyntaxError):
        parse_expression("x + 1")
    with pytest.raises(ExpressionSyntaxError):
        parse_expression("p +* 1")


def test_negative_powers_are_cancelled():
    value = parse_ratfunc("1/(1-s)")
    built = 1 / (1 - parse_ratfunc("s"))
    assert value == built
    assert (value.numer, value.denom) == (built.numer, built.denom)
    assert hash(value) == hash(built)
