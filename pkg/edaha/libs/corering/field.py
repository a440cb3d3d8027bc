"""
Defines the exact coefficient field shared by every algebraic layer.

Everything is expressed over the rational function field Q(i)(Q^(1/2), p^(1/2),
s^(1/2)). The generators are the square roots ``Qr``, ``pr`` and ``sr``, so an
exponent vector stored in the underlying sympy ring is the doubled exponent of
``(Q, p, s)``. Exponents of ``Q`` are always even in practice; the half-roots of
``p`` and ``s`` only appear in Laumon specializations.
"""

from fractions import Fraction
from typing import Tuple, Union

from sympy.polys.domains import QQ, QQ_I
from sympy.polys.fields import FracElement, field
from sympy.polys.rings import PolyElement

Number = Union[int, Fraction]
Exponents = Tuple[int, int, int]

K, QR, PR, SR = field("Qr,pr,sr", QQ_I)
R = K.ring

# Gaussian-rational scalars
GaussRat = type(QQ_I.one)


def rational(value: Number):
    if isinstance(value, Fraction):
        return QQ(value.numerator, value.denominator)
    return QQ.convert(value)


def gauss(re: Number = 0, im: Number = 0) -> GaussRat:
    """Builds the Gaussian rational ``re + i im``."""
    return QQ_I(rational(re), rational(im))


ZERO_EXPONENTS: Exponents = (0, 0, 0)
I_UNIT = gauss(0, 1)


def poly_monomial(exponents: Exponents, coeff=None) -> PolyElement:
    """Builds ``coeff * Qr^e0 pr^e1 sr^e2``; exponents may be negative."""
    if coeff is None:
        coeff = QQ_I.one
    return R.from_dict({tuple(exponents): coeff})


def frac_monomial(exponents: Exponents, coeff=None) -> FracElement:
    """The same monomial as an element of the field."""
    pos = tuple(max(e, 0) for e in exponents)
    neg = tuple(max(-e, 0) for e in exponents)
    numer = poly_monomial(pos, coeff)
    denom = poly_monomial(neg)
    return K.new(numer, denom)


def frac_const(re: Number = 0, im: Number = 0) -> FracElement:
    return K.ground_new(gauss(re, im))


def q_power(half_units: int) -> FracElement:
    """``Q^(n/2)``; pass twice the integer power for whole powers of Q."""
    return frac_monomial((half_units, 0, 0))


ONE = K.one
ZERO = K.zero
I = frac_const(0, 1)
Q = q_power(2)
P = frac_monomial((0, 2, 0))
S = frac_monomial((0, 0, 2))

# c = Q^2 - Q^-2 and X = Q^8 - Q^-8 appear in almost every formula
C_Q = q_power(4) - q_power(-4)
X_Q = q_power(16) - q_power(-16)
