"""
The relator families R0 through R11 of the free algebra.

Each family is a polynomial template in one, two or three free-group labels;
``relator`` instantiates it. Labels are plain ``FreeWord`` values and may carry
formal letters.
"""

from dataclasses import dataclass
from typing import Callable, Dict, Tuple, Union

from ...core.exceptions import ArityMismatch, EdahaError
from ..corering.field import C_Q
from ..freegroup.word import (
    A,
    A_INV,
    B,
    B_INV,
    ONE_WORD,
    FreeWord,
    format_word,
    parse_word,
    sigma,
    word_mul,
)
from .ncpoly import NCPoly, gen_A, gen_B

WordLike = Union[str, FreeWord]


def _X(family: str, label: FreeWord) -> NCPoly:
    return gen_A(label) if family == "A" else gen_B(label)


def _r0(family: str, g: FreeWord) -> NCPoly:
    lead = A if family == "A" else B
    return _X(family, word_mul(lead, g)) - _X(family, g)


def _r1(family: str, g: FreeWord) -> NCPoly:
    x, one = _X(family, g), _X(family, ONE_WORD)
    return x * x - one * one


def _r4(family: str, g: FreeWord) -> NCPoly:
    one = _X(family, ONE_WORD)
    return one * one * _X(family, g) + _X(family, g).scale(C_Q**2)


def _r5(family: str, g: FreeWord) -> NCPoly:
    one = _X(family, ONE_WORD)
    return _X(family, g) * one * one + _X(family, g).scale(C_Q**2)


def _r2(g1: FreeWord, g2: FreeWord, g3: FreeWord) -> NCPoly:
    return gen_B(g1) * gen_A(g2) * gen_B(g3)


def _r3(g1: FreeWord, g2: FreeWord, g3: FreeWord) -> NCPoly:
    return gen_A(g1) * gen_B(g2) * gen_A(g3)


def _r6(g: FreeWord) -> NCPoly:
    a1 = gen_A()
    return a1 * a1 * gen_B(g) + gen_B(g).scale(C_Q**2) + gen_B(g) * a1 * a1


def _r7(g: FreeWord) -> NCPoly:
    b1 = gen_B()
    return b1 * b1 * gen_A(g) + gen_A(g).scale(C_Q**2) + gen_A(g) * b1 * b1


def _braid_a(g1: FreeWord, g2: FreeWord, middle: FreeWord, outer: FreeWord) -> NCPoly:
    # A^{g2} A^{g1 m g2} B^{o g2} + B^{o g2} A^{g1 m g2} A^{g2} - B^{g2} B^{σ(g1) g2} B^{g2}
    inner = gen_A(word_mul(g1, middle, g2))
    side = gen_B(word_mul(outer, g2))
    return (
        gen_A(g2) * inner * side
        + side * inner * gen_A(g2)
        - gen_B(g2) * gen_B(word_mul(sigma(g1), g2)) * gen_B(g2)
    )


def _braid_b(g1: FreeWord, g2: FreeWord, middle: FreeWord, outer: FreeWord) -> NCPoly:
    inner = gen_B(word_mul(g1, middle, g2))
    side = gen_A(word_mul(outer, g2))
    return (
        gen_B(g2) * inner * side
        + side * inner * gen_B(g2)
        - gen_A(g2) * gen_A(word_mul(sigma(g1), g2)) * gen_A(g2)
    )


ABA = word_mul(A, B, A)
BAB = word_mul(B, A, B)
ABA_INV = word_mul(A_INV, B_INV, A_INV)
BAB_INV = word_mul(B_INV, A_INV, B_INV)


RELATORS: Dict[str, Tuple[int, Callable[..., NCPoly]]] = {
    "R0A": (1, lambda g: _r0("A", g)),
    "R0B": (1, lambda g: _r0("B", g)),
    "R1A": (1, lambda g: _r1("A", g)),
    "R1B": (1, lambda g: _r1("B", g)),
    "R2": (3, _r2),
    "R3": (3, _r3),
    "R4A": (1, lambda g: _r4("A", g)),
    "R4B": (1, lambda g: _r4("B", g)),
    "R5A": (1, lambda g: _r5("A", g)),
    "R5B": (1, lambda g: _r5("B", g)),
    "R6": (1, _r6),
    "R7": (1, _r7),
    "R8": (2, lambda g1, g2: _braid_a(g1, g2, ABA, A)),
    "R9": (2, lambda g1, g2: _braid_b(g1, g2, BAB, B)),
    "R10": (2, lambda g1, g2: _braid_a(g1, g2, ABA_INV, A_INV)),
    "R11": (2, lambda g1, g2: _braid_b(g1, g2, BAB_INV, B_INV)),
}


class UnknownRelator(EdahaError):
    def __init__(self, name: str):
        super().__init__(
            f"Unknown relator '{name}'. Known relators: {', '.join(RELATORS)}."
        )


@dataclass(frozen=True)
class RelatorInstance:
    """A relator family together with the labels it was instantiated at."""

    family: str
    words: Tuple[FreeWord, ...]

    @property
    def poly(self) -> NCPoly:
        return relator(self.family, *self.words)

    def has_formal(self) -> bool:
        return any(w.has_formal() for w in self.words)

    def __str__(self) -> str:
        return f"{self.family}({', '.join(format_word(w) for w in self.words)})"


def relator_arity(family: str) -> int:
    if family not in RELATORS:
        raise UnknownRelator(family)
    return RELATORS[family][0]


def relator_instance(family: str, *words: WordLike) -> RelatorInstance:
    """
    Raises:
        UnknownRelator: If ``family`` is not one of ``R0A`` ... ``R11``.
        ArityMismatch: If the number of labels is wrong for the family.
    """
    arity = relator_arity(family)
    if len(words) != arity:
        raise ArityMismatch(family, arity, len(words))
    parsed = tuple(parse_word(w) if isinstance(w, str) else w for w in words)
    return RelatorInstance(family, parsed)


def relator(family: str, *words: WordLike) -> NCPoly:
    instance_words = relator_instance(family, *words).words
    return RELATORS[family][1](*instance_words)


