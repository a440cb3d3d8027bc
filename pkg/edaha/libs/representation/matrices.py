"""
The matrices ``O_A^(g)``, ``O_B^(g)`` and the homomorphism ``Psi``.

``O_A^(g)`` is generated from ``O_A^(1)`` by peeling ``b^±1 a^k`` blocks off the
left of the canonical label. ``O_B^(g)`` uses the dual recursion in ``a^±1 b^k``
blocks with the tilde constants, which is the conjugation of the first one by
``S`` written without inverting ``S``.
"""

import logging
import threading
from typing import Dict, Optional, Tuple

from ...core.exceptions import FormalSymbolPresent
from ..corering.field import C_Q
from ..freealgebra.ncpoly import NCPoly
from ..freegroup.word import (
    Family,
    FreeWord,
    ONE_WORD,
    canonical_label,
    format_word,
    parse_word,
)
from ..operators.catalog import build_OA1, build_OB1
from ..operators.matrix import Mat3R
from ..plethystic.ring import RingElement, ring_inverse_unit
from .auxiliary import aux_c, aux_c_tilde

logger = logging.getLogger(__name__)

Key = Tuple[Family, FreeWord]


def peel_block(family: Family, label: FreeWord) -> Tuple[int, FreeWord, FreeWord]:
    """
    Splits a canonical label as ``h f`` with ``h = x^eps y^k``.

    For family A the blocks are ``b^eps a^k``; a syllable ``b^m`` with
    ``|m| > 1`` gives ``h = b^eps`` and leaves ``b^(m - eps)`` in ``f``.
    """
    lead, tail = ("b", "a") if family == "A" else ("a", "b")
    (symbol, m), rest = label.letters[0], label.letters[1:]
    assert symbol == lead, f"label {format_word(label)} is not canonical for {family}"
    eps = 1 if m > 0 else -1
    if abs(m) > 1:
        return eps, FreeWord.letter(lead, eps), FreeWord(((lead, m - eps),) + rest)
    if rest and rest[0][0] == tail:
        return eps, FreeWord(((lead, eps), rest[0])), FreeWord(rest[1:])
    return eps, FreeWord.letter(lead, eps), FreeWord(rest)


def recursion_step(family: Family, constant: RingElement, inner: Mat3R) -> Mat3R:
    """``c M + (c - 1/c) / (Q^2 - Q^-2)^2 * Y Y M`` with ``Y`` the opposite base matrix."""
    other = build_OB1() if family == "A" else build_OA1()
    weight = (constant - ring_inverse_unit(constant)).scale(1 / C_Q**2)
    return inner.scale(constant) + (other @ other @ inner).scale(weight)


class GeneratorMatrixCache:
    """
    Memoized ``O_A^(g)`` and ``O_B^(g)`` keyed by canonical label.

    The cache only grows. Two threads racing on one key compute equal matrices,
    and the first one stored wins.
    """

    def __init__(self):
        self._lock = threading.Lock()
        self._memo: Dict[Key, Mat3R] = {
            ("A", ONE_WORD): build_OA1(),
            ("B", ONE_WORD): build_OB1(),
        }

    def __len__(self) -> int:
        return len(self._memo)

    def __contains__(self, key: Key) -> bool:
        family, word = key
        return (family, canonical_label(family, word)) in self._memo

    def matrix(self, family: Family, word: FreeWord) -> Mat3R:
        """
        Raises:
            FormalSymbolPresent: If ``word`` has a formal letter.
        """
        if word.has_formal():
            raise FormalSymbolPresent(format_word(word))
        key = (family, canonical_label(family, word))
        with self._lock:
            hit = self._memo.get(key)
        if hit is not None:
            return hit
        computed = self._compute(*key)
        with self._lock:
            return self._memo.setdefault(key, computed)

    def _compute(self, family: Family, label: FreeWord) -> Mat3R:
        eps, h, f = peel_block(family, label)
        constant = aux_c(eps, h, f) if family == "A" else aux_c_tilde(eps, h, f)
        logger.debug(f"O_{family}({format_word(label)}) from O_{family}({format_word(f)})")
        return recursion_step(family, constant, self.matrix(family, f))


_DEFAULT_CACHE: Optional[GeneratorMatrixCache] = None
_DEFAULT_LOCK = threading.Lock()


def default_cache() -> GeneratorMatrixCache:
    global _DEFAULT_CACHE
    with _DEFAULT_LOCK:
        if _DEFAULT_CACHE is None:
            _DEFAULT_CACHE = GeneratorMatrixCache()
        return _DEFAULT_CACHE


def O_matrix(
    family: Family, g, cache: Optional[GeneratorMatrixCache] = None
) -> Mat3R:
    """``O_A^(g)`` or ``O_B^(g)``; ``g`` may be a word or its text form."""
    word = parse_word(g) if isinstance(g, str) else g
    return (cache or default_cache()).matrix(family, word)


def psi(poly: NCPoly, cache: Optional[GeneratorMatrixCache] = None) -> Mat3R:
    """
    The image of a free algebra element under ``Psi``.

    Raises:
        FormalSymbolPresent: If some generator label has a formal letter.
    """
    for symbol in poly.symbols():
        if symbol.label.has_formal():
            raise FormalSymbolPresent(format_word(symbol.label))
    cache = cache or default_cache()
    total = Mat3R.zero()
    for mono, coeff in poly.terms():
        if not mono:
            total = total + Mat3R.identity().scale(coeff)
            continue
        product = cache.matrix(mono[0].family, mono[0].label)
        for symbol in mono[1:]:
            product = product @ cache.matrix(symbol.family, symbol.label)
        total = total + product.scale(coeff)
    return total
