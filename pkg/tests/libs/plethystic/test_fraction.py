import pytest

from edaha.core.exceptions import InvalidFraction
from edaha.libs.corering import LaurentPoly
from edaha.libs.corering.parse import parse_laurent, parse_ratfunc
from edaha.libs.freegroup.sl2z import SHIFT_S
from edaha.libs.plethystic import (
    fraction_add,
    fraction_canonicalize,
    fraction_equal,
    fraction_from_ratfunc,
    fraction_shift,
    is_oriented,
    laurent_fold,
    make_fraction,
    with_plus_factors,
)

Q = LaurentPoly.monomial(2)


def test_orientation():
    assert is_oriented((1, -3))
    assert is_oriented((0, 1))
    assert not is_oriented((0, -1))
    assert not is_oriented((-1, 2))


def test_make_fraction_validates():
    with pytest.raises(InvalidFraction):
        make_fraction(Q, [(0, 0)])
    with pytest.raises(InvalidFraction):
        make_fraction(LaurentPoly.one(), [(1, 0)])
    assert make_fraction(LaurentPoly.one(), [(1, 0)], allow_q_free=True).denominator == ((1, 0),)


def test_canonicalize_flips_vectors():
    flipped = fraction_canonicalize(make_fraction(Q, [(-1, 0)]))
    assert flipped.denominator == ((1, 0),)
    assert flipped.numerator == parse_laurent("-Q*p")
    assert flipped.value == parse_ratfunc("Q/(1-p^-1)")


def test_canonicalize_cancels_factors():
    f = make_fraction(parse_laurent("Q - Q*p^2"), [(1, 0)])
    canonical = fraction_canonicalize(f)
    assert canonical.denominator == ()
    assert canonical.numerator == parse_laurent("Q - Q*p^2").divide_exact(LaurentPoly.one_minus(1, 0))


def test_add_uses_common_multiset_denominator():
    f = make_fraction(Q, [(1, 0)])
    g = make_fraction(Q, [(0, 1)])
    total = fraction_add(f, g)
    assert total.denominator == ((0, 1), (1, 0))
    assert total.value == f.value + g.value
    assert fraction_equal(total - g, f)


def test_plus_factors():
    f = with_plus_factors(Q, plus=[(1, 0)])
    assert f.denominator == ((2, 0),)
    assert f.value == parse_ratfunc("Q/(1+p)")


def test_shift_moves_vectors():
    f = make_fraction(parse_laurent("Q*p"), [(1, 0)])
    moved = fraction_shift(f, SHIFT_S)
    assert moved.denominator == ((0, 1),)
    assert moved.value == parse_ratfunc("Q*s/(1-s)")


def test_laurent_fold():
    assert laurent_fold(parse_laurent("2*Q*p")) == parse_ratfunc("(1 - Q*p)^2")
    assert laurent_fold(parse_laurent("Q*p/2")) is None
    assert laurent_fold(parse_laurent("Q*p + 1")) is None


def test_fraction_from_ratfunc_folds_plus_denominators():
    r = parse_ratfunc("Q/(p+p^-1)")
    f = fraction_from_ratfunc(r)
    assert f.denominator == ((4, 0),)
    assert f.value == r


def test_fraction_from_ratfunc_rejects_q_denominators():
    with pytest.raises(InvalidFraction):
        fraction_from_ratfunc(parse_ratfunc("Q/(1-Q*p)"))
    with pytest.raises(InvalidFraction):
        fraction_from_ratfunc(parse_ratfunc("Q/(1-2*p)"))


def test_fraction_from_ratfunc_moves_q_monomials_to_the_numerator():
    r = parse_ratfunc("p/(Q^2*(1-p))")
    f = fraction_from_ratfunc(r)
    assert f.denominator == ((1, 0),)
    assert f.value == r
