"""
Conversion of rational functions into formal fractions.

A rational function is accepted as the argument of ``pexp`` when its
denominator, after removing a monomial, divides a product of factors
``1 - p^a s^b``. Every irreducible factor found is matched against
``1 - t^n`` for a primitive monomial ``t`` and the quotient moves into the
numerator; ``1 + p^2`` for instance becomes ``(1 - p^2) / (1 - p^4)``.
"""

import logging
from math import gcd
from typing import Iterator, List

import sympy

from ...core.exceptions import ExpressionSyntaxError, InvalidFraction
from ..corering.laurent import LaurentPoly
from ..corering.parse import PEXP, parse_expression, sympy_to_field
from ..corering.ratfunc import RatFunc
from .fraction import FormalFraction, Vector, fraction_canonicalize, make_fraction
from .ring import RingElement

logger = logging.getLogger(__name__)

MAX_FACTOR_POWER = 64


def _directions(spread_a: int, spread_b: int) -> Iterator[Vector]:
    """Oriented primitive vectors inside the box, shortest first."""
    found = []
    for a in range(0, spread_a + 1):
        for b in range(-spread_b, spread_b + 1):
            if (a, b) == (0, 0) or (a == 0 and b < 0):
                continue
            if gcd(a, abs(b)) != 1:
                continue
            found.append((a, b))
    yield from sorted(found, key=lambda v: (abs(v[0]) + abs(v[1]), v))


def _spread(poly: LaurentPoly, index: int) -> int:
    values = [e[index] for e in poly.exponents()]
    if any(v % 2 for v in values):
        raise InvalidFraction(f"Denominator {poly} has half-integer exponents")
    return (max(values) - min(values)) // 2


def fraction_from_ratfunc(r: RatFunc, allow_q_free: bool = False) -> FormalFraction:
    """
    Writes ``r`` as ``mu / prod (1 - p^a s^b)``.

    Raises:
        InvalidFraction: If the denominator involves Q, is not a product of
            cyclotomic factors in monomials of p and s, or the numerator is
            not in the allowed module.
    """
    if not r:
        return FormalFraction(LaurentPoly.zero(), ())
    mu = LaurentPoly(r.numer)
    den = LaurentPoly(r.denom)
    # a monomial factor of the denominator, Q included, moves to the numerator
    mins = den.min_exponents()
    den = den.shift(tuple(-e for e in mins))  # type: ignore[arg-type]
    mu = mu.shift(tuple(-e for e in mins))  # type: ignore[arg-type]
    if any(e[0] for e in den.exponents()):
        raise InvalidFraction(f"Denominator {den} depends on Q")

    vectors: List[Vector] = []
    while not den.is_constant():
        spread_a, spread_b = _spread(den, 1), _spread(den, 2)
        factor = _split_factor(den, spread_a, spread_b)
        if factor is None:
            raise InvalidFraction(
                f"Denominator {den} is not a product of (1 - p^a s^b) factors"
            )
        (a, b), common = factor
        den = den.divide_exact(common)  # type: ignore[assignment]
        mu = mu * LaurentPoly.one_minus(a, b).divide_exact(common)  # type: ignore[operator]
        vectors.append((a, b))

    ((_, lead),) = list(den.terms())
    mu = mu.map_coefficients(lambda c: c / lead)
    return fraction_canonicalize(make_fraction(mu, vectors, allow_q_free=allow_q_free))


def _split_factor(den: LaurentPoly, spread_a: int, spread_b: int):
    shift_den = den.poly
    for a, b in _directions(spread_a, spread_b):
        for n in range(1, MAX_FACTOR_POWER + 1):
            cyclotomic = LaurentPoly.one_minus(n * a, n * b)
            shifted = cyclotomic.shift(
                tuple(-e for e in cyclotomic.min_exponents())  # type: ignore[arg-type]
            )
            common = shift_den.gcd(shifted.poly)
            if not common.is_ground:
                logger.debug(f"Denominator factor {common} divides 1 - p^{n * a} s^{n * b}")
                return (n * a, n * b), LaurentPoly(common)
    return None


def pexp_rational(r: RatFunc, allow_q_free: bool = False) -> RingElement:
    """``pexp`` of a fraction given as a rational function."""
    return RingElement.pexp(fraction_from_ratfunc(r, allow_q_free=allow_q_free))


def ring_from_expression(text: str, allow_q_free: bool = False) -> RingElement:
    """
    Parses an ``eval`` expression such as ``2*pexp(Q/(p+p^-1))^-1 + 1`` into the ring.

    Sums, products and integer powers of ``pexp(...)`` calls and rational
    scalars are accepted.

    Raises:
        ExpressionSyntaxError: If the text does not parse or uses pexp elsewhere.
        InvalidFraction: If a pexp argument is not an admissible fraction.
        NotAUnit: If a negative power is taken of a non-unit.
    """
    return _ring_from_sympy(parse_expression(text), text, allow_q_free)


def _ring_from_sympy(expr: sympy.Expr, text: str, allow_q_free: bool) -> RingElement:
    if not expr.atoms(PEXP):
        return RingElement.scalar(sympy_to_field(expr))
    if isinstance(expr, PEXP):
        (argument,) = expr.args
        if argument.atoms(PEXP):
            raise ExpressionSyntaxError(text, "nested pexp")
        return pexp_rational(sympy_to_field(argument), allow_q_free=allow_q_free)
    if isinstance(expr, sympy.Add):
        total = RingElement.zero()
        for arg in expr.args:
            total = total + _ring_from_sympy(arg, text, allow_q_free)
        return total
    if isinstance(expr, sympy.Mul):
        product = RingElement.one()
        for arg in expr.args:
            product = product * _ring_from_sympy(arg, text, allow_q_free)
        return product
    if isinstance(expr, sympy.Pow) and expr.exp.is_Integer:
        return _ring_from_sympy(expr.base, text, allow_q_free) ** int(expr.exp)
    raise ExpressionSyntaxError(text, f"cannot evaluate {expr} in the ring")
