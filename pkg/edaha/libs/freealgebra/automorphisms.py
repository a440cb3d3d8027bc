"""
The automorphisms ``a``, ``a^-1``, ``s``, ``b`` and ``b^-1`` of the free algebra,
and the idempotents and Casimir element built from the length-one generators.

``b`` is ``s a s`` and ``b^-1`` is ``s a^-1 s``; both are applied as conjugation
by ``s`` rather than through separate substitution tables.
"""

import logging
from functools import lru_cache
from typing import Callable, Dict, List

from ...core.exceptions import EdahaError
from ..corering.field import C_Q, Q
from ..freegroup.word import A, A_INV, word_mul
from .ncpoly import GeneratorSymbol, NCPoly, gen_A, gen_B

logger = logging.getLogger(__name__)

AUTOMORPHISMS = ("a", "a_inv", "b", "b_inv", "s")
_ALIASES = {"a^-1": "a_inv", "ã": "a_inv", "b^-1": "b_inv"}


class UnknownAutomorphism(EdahaError):
    def __init__(self, name: str):
        super().__init__(
            f"Unknown automorphism '{name}'. Use one of: {', '.join(AUTOMORPHISMS)}."
        )


def _a_image(symbol: GeneratorSymbol) -> NCPoly:
    a1 = gen_A()
    shifted = word_mul(symbol.label, A_INV)
    if symbol.family == "A":
        return -(a1 * gen_A(shifted) * a1) / C_Q**2
    b = gen_B(shifted)
    return (a1 * b).scale(Q) / C_Q - (b * a1) / (Q * C_Q)


def _a_inv_image(symbol: GeneratorSymbol) -> NCPoly:
    a1 = gen_A()
    shifted = word_mul(symbol.label, A)
    if symbol.family == "A":
        return -(a1 * gen_A(shifted) * a1) / C_Q**2
    b = gen_B(shifted)
    return (b * a1).scale(Q) / C_Q - (a1 * b) / (Q * C_Q)


def _s_image(symbol: GeneratorSymbol) -> NCPoly:
    return NCPoly.monomial([symbol.swapped()])


_SUBSTITUTIONS: Dict[str, Callable[[GeneratorSymbol], NCPoly]] = {
    "a": _a_image,
    "a_inv": _a_inv_image,
    "s": _s_image,
}


def _apply_one(name: str, x: NCPoly) -> NCPoly:
    if name in _SUBSTITUTIONS:
        return x.map_generators(_SUBSTITUTIONS[name])
    inner = "a" if name == "b" else "a_inv"
    return _apply_one("s", _apply_one(inner, _apply_one("s", x)))


def parse_composition(text: str) -> List[str]:
    """
    Splits ``"a s a_inv"`` into automorphism names, leftmost first.

    Raises:
        UnknownAutomorphism: On a token that names no automorphism.
    """
    names = []
    for token in text.replace("∘", " ").split():
        name = _ALIASES.get(token, token)
        if name not in AUTOMORPHISMS:
            raise UnknownAutomorphism(token)
        names.append(name)
    return names


def apply_auto(name: str, x: NCPoly) -> NCPoly:
    """
    Applies an automorphism or a composition of them.

    A composition such as ``"a s a s"`` acts as a map composition: the rightmost
    name is applied first.
    """
    for step in reversed(parse_composition(name)):
        x = _apply_one(step, x)
    return x


@lru_cache(maxsize=None)
def idempotent_A() -> NCPoly:
    """``e_A = -O_A^(1) O_A^(1) / (Q^2 - Q^-2)^2``."""
    a1 = gen_A()
    return -(a1 * a1) / C_Q**2


@lru_cache(maxsize=None)
def idempotent_B() -> NCPoly:
    b1 = gen_B()
    return -(b1 * b1) / C_Q**2


@lru_cache(maxsize=None)
def casimir() -> NCPoly:
    """``C = e_B e_A - e_A - e_B + 1``."""
    e_a, e_b = idempotent_A(), idempotent_B()
    return e_b * e_a - e_a - e_b + 1


NAMED_ELEMENTS: Dict[str, Callable[[], NCPoly]] = {
    "C": casimir,
    "e_A": idempotent_A,
    "e_B": idempotent_B,
}


def named_element(name: str) -> NCPoly:
    if name not in NAMED_ELEMENTS:
        raise EdahaError(
            f"Unknown element '{name}'. Use one of: {', '.join(NAMED_ELEMENTS)}."
        )
    return NAMED_ELEMENTS[name]()


