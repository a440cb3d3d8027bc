"""
The twisted operators of the K = 2 representation.

``D_A`` and ``D_B`` generate the braid group action, ``S = D_A D_B D_A`` realises
the modular S transformation and ``O_A^(1)``, ``O_B^(1)`` are the difference
operators attached to the two basic cycles. Every entry is built from
``X = Q^8 - Q^-8`` and ``c = Q^2 - Q^-2``.
"""

import logging
from functools import lru_cache
from typing import Iterable, Tuple

from ..corering.field import C_Q, I, Q
from ..corering.laurent import LaurentPoly
from ..freegroup.sl2z import SHIFT_A, SHIFT_B, SHIFT_FLIP, SHIFT_S, SHIFT_S2, SL2ZMatrix
from ..plethystic.fraction import Vector, make_fraction
from ..plethystic.ring import RingElement
from .matrix import Mat3R
from .twisted import TwistedOperator

logger = logging.getLogger(__name__)

# Q-power exponent of X, in half units
_X_HALF_UNITS = 16


def x_times(terms: Iterable[Tuple[int, int, int]]) -> LaurentPoly:
    """``X * sum coeff p^a s^b`` from ``(a, b, coeff)`` triples with integer exponents."""
    doubled = {}
    for a, b, coeff in terms:
        for q2, sign in ((_X_HALF_UNITS, 1), (-_X_HALF_UNITS, -1)):
            key = (q2, 2 * a, 2 * b)
            doubled[key] = doubled.get(key, 0) + sign * coeff
    return LaurentPoly.from_terms(doubled)


def x_pexp(
    terms: Iterable[Tuple[int, int, int]], vectors: Iterable[Vector], prefactor=1
) -> RingElement:
    """``prefactor * pexp(X * sum coeff p^a s^b / prod (1 - p^c s^d))``."""
    return RingElement.pexp(make_fraction(x_times(terms), vectors), prefactor)


# D_B denominators (1 - s^2)(1 - p^2 s^-2)
_DB_VECTORS: Tuple[Vector, ...] = ((0, 2), (2, -2))

ALPHA = 2 * Q / (1 - Q**4)
BETA = 2 * Q**4 / (1 - Q**4) ** 2
GAMMA = -(1 - Q**4) / Q**3


@lru_cache(maxsize=None)
def build_DA() -> TwistedOperator:
    """``diag(1, -iQ, -1)`` composed with ``(p, s) -> (ps, s)``."""
    return TwistedOperator(Mat3R.diagonal([1, -I * Q, -1]), SHIFT_A)


def DA_inverse_matrix() -> Mat3R:
    return Mat3R.diagonal([1, 1 / (-I * Q), -1])


@lru_cache(maxsize=None)
def build_DB() -> TwistedOperator:
    """The second braid generator, composed with ``(p, s) -> (p, s/p)``."""
    e_a = x_pexp([(1, 1, -1), (2, 0, -2), (2, -1, -1)], _DB_VECTORS)
    e_b = x_pexp([(1, 0, -1), (2, 0, -2), (2, -1, -1)], _DB_VECTORS)
    e_c = x_pexp([(1, 1, -1), (2, 0, -2), (1, 0, -1)], _DB_VECTORS)
    matrix = Mat3R.build(
        [
            [e_a, e_b.scale(ALPHA), e_a.scale(BETA)],
            [e_c.scale(GAMMA), 0, e_c.scale(ALPHA)],
            [e_a.scale(1 / BETA), e_b.scale(GAMMA), e_a],
        ]
    )
    return TwistedOperator(matrix, SHIFT_B)


@lru_cache(maxsize=None)
def build_S() -> TwistedOperator:
    """``D_A D_B D_A``; its shift is ``(p, s) -> (s, 1/p)``."""
    S = build_DA() @ build_DB() @ build_DA()
    assert S.shift == SHIFT_S
    logger.debug("Built S operator")
    return S


def S_matrix(shift: SL2ZMatrix = SHIFT_FLIP) -> Mat3R:
    """The matrix part of ``S`` with ``(p, s)`` substituted; by default ``S(1/s, p)``."""
    return build_S().matrix.shift(shift)


@lru_cache(maxsize=None)
def build_OA1() -> Mat3R:
    """``diag(-ic, 0, ic)``."""
    return Mat3R.diagonal([-I * C_Q, 0, I * C_Q])


@lru_cache(maxsize=None)
def build_OB1() -> Mat3R:
    half_c2 = -(C_Q**2) / 2
    # X (ps - p^2 s) / ((1 - s^2)(1 - p^2))
    plus = x_pexp([(1, 1, 1), (2, 1, -1)], [(0, 2), (2, 0)])
    minus = x_pexp([(1, 1, -1), (2, 1, 1)], [(0, 2), (2, 0)])
    return Mat3R.build(
        [
            [0, plus, 0],
            [minus.scale(half_c2), 0, minus],
            [0, plus.scale(half_c2), 0],
        ]
    )


def s_squared_expected() -> TwistedOperator:
    """``S^2 = diag(4 E1, 4 E2, 4 E1)`` composed with ``(p, s) -> (1/p, 1/s)``."""
    e1 = x_pexp([(0, 1, 1), (0, 2, 2)], [(0, 2)], 4)
    e2 = x_pexp([(0, 2, 2)], [(0, 2)], 4)
    return TwistedOperator(Mat3R.diagonal([e1, e2, e1]), SHIFT_S2)
