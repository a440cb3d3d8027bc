"""
Formal fractions ``(mu : 1 - p^a1 s^b1 : ... : 1 - p^an s^bn)``.

A formal fraction is the argument of a plethystic exponential. Denominator
factors are stored as integer vectors ``(a, b)``; the numerator is a Laurent
polynomial in which every monomial carries a nonzero power of Q, unless the
fraction was built with ``allow_q_free``.
"""

import logging
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, List, Optional, Tuple

from sympy.polys.fields import FracElement

from ...core.exceptions import InvalidFraction
from ..corering.field import K
from ..corering.laurent import LaurentPoly
from ..freegroup.sl2z import SL2ZMatrix

logger = logging.getLogger(__name__)

Vector = Tuple[int, int]


def is_oriented(v: Vector) -> bool:
    """Orientation convention for denominator vectors: ``a > 0``, or ``a = 0`` and ``b > 0``."""
    a, b = v
    return a > 0 or (a == 0 and b > 0)


def denominator_product(vectors: Iterable[Vector]) -> LaurentPoly:
    result = LaurentPoly.one()
    for a, b in vectors:
        result = result * LaurentPoly.one_minus(a, b)
    return result


@dataclass(frozen=True)
class FormalFraction:
    """
    A numerator over a multiset of ``(1 - p^a s^b)`` factors.

    Attributes:
        numerator: The Laurent polynomial ``mu``.
        denominator: Sorted tuple of the vectors ``(a, b)``.
    """

    numerator: LaurentPoly
    denominator: Tuple[Vector, ...] = ()

    @property
    def value(self) -> FracElement:
        """The rational function ``mu / prod(1 - p^a s^b)``."""
        if self.numerator.is_zero():
            return K.zero
        return self.numerator.to_field() / denominator_product(self.denominator).to_field()

    def is_zero(self) -> bool:
        return self.numerator.is_zero()

    def __add__(self, other: "FormalFraction") -> "FormalFraction":
        return fraction_add(self, other)

    def __neg__(self) -> "FormalFraction":
        return FormalFraction(-self.numerator, self.denominator)

    def __sub__(self, other: "FormalFraction") -> "FormalFraction":
        return fraction_add(self, -other)

    def scale(self, factor: LaurentPoly) -> "FormalFraction":
        return FormalFraction(self.numerator * factor, self.denominator)

    def __str__(self) -> str:
        parts = [f"({self.numerator})"] if len(self.numerator) > 1 else [str(self.numerator)]
        parts += [str(LaurentPoly.one_minus(a, b)) for a, b in self.denominator]
        return "(" + " : ".join(parts) + ")"


def make_fraction(
    numerator: LaurentPoly,
    denominator: Iterable[Vector] = (),
    allow_q_free: bool = False,
) -> FormalFraction:
    """
    Validates and builds a formal fraction.

    Raises:
        InvalidFraction: If a vector is zero, an exponent is not integral, or
            the numerator has a Q-free monomial while ``allow_q_free`` is off.
    """
    vectors = tuple(denominator)
    for v in vectors:
        if v == (0, 0):
            raise InvalidFraction("Denominator vector (0, 0) is not allowed")
    if not allow_q_free and numerator.has_q_free_part():
        raise InvalidFraction(
            f"Numerator {numerator} has a monomial without a power of Q"
        )
    return FormalFraction(numerator, tuple(sorted(vectors)))


def fraction_add(f: FormalFraction, g: FormalFraction) -> FormalFraction:
    """Brings both fractions to the smallest common multiset denominator and adds."""
    if f.is_zero():
        return g
    if g.is_zero():
        return f
    cf, cg = Counter(f.denominator), Counter(g.denominator)
    union = cf | cg
    f_extra = denominator_product((cg - cf).elements())
    g_extra = denominator_product((cf - cg).elements())
    numerator = f.numerator * f_extra + g.numerator * g_extra
    return FormalFraction(numerator, tuple(sorted(union.elements())))


def fraction_canonicalize(f: FormalFraction) -> FormalFraction:
    """
    Enforces the orientation convention and cancels every divisible factor.

    A flipped factor uses ``1/(1 - x) = -x^-1 / (1 - x^-1)``.
    """
    if f.numerator.is_zero():
        return FormalFraction(LaurentPoly.zero(), ())
    mu = f.numerator
    vectors: List[Vector] = []
    for a, b in f.denominator:
        if is_oriented((a, b)):
            vectors.append((a, b))
        else:
            mu = mu * LaurentPoly.monomial(0, -2 * a, -2 * b, coeff=-1)
            vectors.append((-a, -b))

    changed = True
    while changed:
        changed = False
        for v in sorted(set(vectors)):
            quotient = mu.divide_exact(LaurentPoly.one_minus(*v))
            if quotient is not None:
                mu = quotient
                vectors.remove(v)
                changed = True
                break
    return FormalFraction(mu, tuple(sorted(vectors)))


def fraction_equal(f: FormalFraction, g: FormalFraction) -> bool:
    """Cross-multiplied comparison of the two numerators."""
    f_num = f.numerator * denominator_product(g.denominator)
    g_num = g.numerator * denominator_product(f.denominator)
    return f_num == g_num


def fraction_shift(f: FormalFraction, m: SL2ZMatrix) -> FormalFraction:
    """Applies a parameter substitution to numerator and denominator vectors."""
    if m.is_identity():
        return f
    return FormalFraction(
        f.numerator.subst_monomial(m),
        tuple(sorted(m.apply(a, b) for a, b in f.denominator)),
    )


def with_plus_factors(
    numerator: LaurentPoly,
    denominator: Iterable[Vector] = (),
    plus: Iterable[Vector] = (),
    allow_q_free: bool = False,
) -> FormalFraction:
    """
    Builds ``mu / (prod (1 - p^a s^b) * prod (1 + p^c s^d))``.

    Each ``1 + x`` factor is rewritten with ``1/(1 + x) = (1 - x)/(1 - x^2)``.
    """
    mu = numerator
    vectors = list(denominator)
    for c, d in plus:
        mu = mu * LaurentPoly.one_minus(c, d)
        vectors.append((2 * c, 2 * d))
    return make_fraction(mu, vectors, allow_q_free=allow_q_free)


def laurent_fold(ell: LaurentPoly) -> Optional[FracElement]:
    """
    ``pexp(ell : ∅)`` as a rational function, i.e. ``prod (1 - m)^c``.

    Returns ``None`` when some coefficient is not an integer or the constant
    monomial occurs, since then the value is not rational.
    """
    result = K.one
    for exps, coeff in ell.terms():
        if not any(exps):
            return None
        if coeff.y or coeff.x.denominator != 1:
            return None
        power = int(coeff.x.numerator)
        factor = (LaurentPoly.one() - LaurentPoly.monomial(*exps)).to_field()
        result = result * factor**power
    return result
