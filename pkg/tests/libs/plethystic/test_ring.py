import pytest

from edaha.core.exceptions import ExpressionSyntaxError, NotAUnit
from edaha.core.report import CheckRecord
from edaha.libs.corering import K
from edaha.libs.corering.parse import parse_ratfunc
from edaha.libs.freegroup.sl2z import SHIFT_S
from edaha.libs.plethystic import (
    RingElement,
    ZeroTest,
    ring_at_p_zero,
    ring_from_expression,
    ring_inverse_unit,
    ring_zero_test,
    timed_zero_check,
)
from edaha.libs.qpoch import NumericPolicy


@pytest.fixture
def policy():
    return NumericPolicy(samples=2)


def test_pexp_times_its_negative_is_one():
    x = ring_from_expression("pexp(Q*p/(1-p)) * pexp(-Q*p/(1-p))")
    assert x == RingElement.one()


def test_laurent_arguments_fold_into_the_prefactor():
    x = ring_from_expression("pexp(Q*p)")
    assert x.is_scalar()
    assert x.scalar_value() == parse_ratfunc("1 - Q*p")


def test_empty_denominator_folds_to_one_minus_m():
    x = ring_from_expression("pexp(Q^8 - Q^-8)")
    assert x.scalar_value() == parse_ratfunc("-Q^8")
    assert ring_from_expression("pexp(2*(Q^8 - Q^-8))").scalar_value() == parse_ratfunc("Q^16")
    assert ring_from_expression("pexp(-2*(Q^8 - Q^-8))").scalar_value() == parse_ratfunc("Q^-16")


def test_product_rule_is_decided_symbolically():
    x = ring_from_expression("pexp(Q*p/(1-p)) - (1 - Q*p)*pexp(Q*p^2/(1-p))")
    assert x.is_zero_symbolic()


def test_atoms_differing_by_a_laurent_polynomial_share_a_term():
    x = ring_from_expression("pexp(Q*p/(1-p)) + pexp(Q*p^2/(1-p))")
    assert len(x) == 1


def test_negative_powers_need_units():
    unit = ring_from_expression("2*pexp(Q*p/(1-p))")
    assert unit * unit**-1 == RingElement.one()
    with pytest.raises(NotAUnit):
        ring_inverse_unit(unit + 1)


def test_value_at_p_zero_specializes_prefactors():
    x = ring_from_expression("(2+s)/(1+p) * pexp(Q*p/(1-p)) + p*pexp(Q*p*s/(1-s))")
    assert ring_at_p_zero(x) == parse_ratfunc("2+s")
    assert ring_at_p_zero(ring_from_expression("3*pexp(Q*p/(1-p)) - 1")) == K(2)


def test_value_at_p_zero_needs_a_limit():
    with pytest.raises(ValueError):
        ring_at_p_zero(ring_from_expression("pexp(Q*s/(1-s))"))
    with pytest.raises(ValueError):
        ring_at_p_zero(ring_from_expression("p^-1 * pexp(Q*p/(1-p))"))


def test_shift_acts_on_atoms_and_prefactors():
    x = ring_from_expression("p*pexp(Q*p/(1-p))")
    assert x.shift(SHIFT_S) == ring_from_expression("s*pexp(Q*s/(1-s))")


def test_expression_errors():
    with pytest.raises(ExpressionSyntaxError):
        ring_from_expression("pexp(pexp(Q*p))")
    with pytest.raises(ExpressionSyntaxError):
        ring_from_expression("log(pexp(Q*p/(1-p)))")


def test_zero_test_symbolic_tier(policy):
    test = ring_zero_test(RingElement.zero(), policy)
    assert test.is_zero
    assert test.tier == "symbolic"


def test_zero_test_detects_nonzero_numerically(policy):
    test = ring_zero_test(ring_from_expression("pexp(Q*p/(1-p)) - 1"), policy, salt="t")
    assert not test.is_zero
    assert test.tier == "numeric"
    assert test.failing == 0


def test_timed_zero_check_builds_records():
    record = timed_zero_check("x", lambda: ZeroTest(False, "numeric", 0.5, 0))
    assert isinstance(record, CheckRecord)
    assert not record.passed
    assert record.detail == "element 0"
    assert record.residual == 0.5
