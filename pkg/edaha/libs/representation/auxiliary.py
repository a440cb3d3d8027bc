"""
The auxiliary constants entering the recursions for ``O_A^(g)`` and ``O_B^(g)``.

``c_+^(h,g)`` and ``c_-^(h,g)`` are single pexp atoms whose denominators are
triple products of ``(1 + p^x s^y)`` factors read off ``phi(g)`` and
``phi(hg)``. The dual constants are obtained by swapping the words and
substituting ``(p, s) -> (1/s, p)``.
"""

from dataclasses import dataclass
from typing import List

from ...core.exceptions import FormalSymbolPresent
from ..freegroup.sl2z import SHIFT_FLIP
from ..freegroup.word import FreeWord, format_word, phi, sigma, word_mul
from ..operators.catalog import x_times
from ..plethystic.fraction import Vector, with_plus_factors
from ..plethystic.ring import RingElement


@dataclass(frozen=True)
class AuxConstant:
    """
    One auxiliary constant together with the data it was built from.

    Attributes:
        sign: ``+1`` for ``c_+``, ``-1`` for ``c_-``.
        h: The prefix word.
        g: The word the prefix acts on.
        plus: Vectors ``(x, y)`` of the three ``(1 + p^x s^y)`` factors.
        value: The pexp atom.
    """

    sign: int
    h: FreeWord
    g: FreeWord
    plus: tuple
    value: RingElement

    def __str__(self) -> str:
        name = "c+" if self.sign > 0 else "c-"
        return f"{name}({format_word(self.h)}, {format_word(self.g)}) = {self.value}"


def plus_vectors(sign: int, h: FreeWord, g: FreeWord) -> List[Vector]:
    if h.has_formal() or g.has_formal():
        raise FormalSymbolPresent(f"{format_word(h)} | {format_word(g)}")
    mg = phi(g)
    mhg = phi(word_mul(h, g))
    if sign > 0:
        middle = (mhg.a, -mhg.b)
    else:
        middle = (-mhg.a, mhg.b)
    return [(mg.c, -mg.d), middle, (-mhg.c, mhg.d)]


def aux_constant(sign: int, h: FreeWord, g: FreeWord) -> AuxConstant:
    """
    Builds ``c_sign^(h,g)``.

    Raises:
        FormalSymbolPresent: If either word has a formal letter.
    """
    if sign not in (1, -1):
        raise ValueError(f"Sign must be +1 or -1, got {sign}")
    plus = plus_vectors(sign, h, g)
    numerator = x_times([(0, 0, sign)])
    value = RingElement.pexp(with_plus_factors(numerator, (), plus))
    return AuxConstant(sign, h, g, tuple(plus), value)


def aux_c(sign: int, h: FreeWord, g: FreeWord) -> RingElement:
    return aux_constant(sign, h, g).value


def aux_c_tilde(sign: int, h: FreeWord, g: FreeWord) -> RingElement:
    """``c~^(h,g) = c^(σh, σg)`` with ``(p, s) -> (1/s, p)``."""
    return aux_c(sign, sigma(h), sigma(g)).shift(SHIFT_FLIP)
