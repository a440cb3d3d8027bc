"""
A one-directional rewriting of monomials modulo the relator ideal.

Two rewrites are applied, both sound consequences of the relators:

* any alternation ``X Y X`` of families kills the monomial (R2, R3);
* a pair ``X^(1) X^(1)`` followed by ``n`` generators of the other family and
  then some ``X^(g)`` is deleted with factor ``-(Q^2 - Q^-2)^2`` when ``n`` is
  even and kills the monomial when ``n`` is odd (R4 with R6/R7). The mirror
  image (R5 with R6/R7) is applied when nothing follows on the right.

This is not a decision procedure: a nonzero result does not prove that an
element lies outside the ideal.
"""

import logging
from typing import Dict, Optional, Tuple

from sympy.polys.fields import FracElement

from ..corering.field import C_Q, K
from ..freegroup.word import ONE_WORD
from .ncpoly import Monomial, NCPoly

logger = logging.getLogger(__name__)

Rewrite = Optional[Tuple[FracElement, Monomial]]


def _alternates(mono: Monomial) -> bool:
    return any(
        mono[i].family == mono[i + 2].family != mono[i + 1].family
        for i in range(len(mono) - 2)
    )


def _is_unit_pair(mono: Monomial, i: int) -> bool:
    x, y = mono[i], mono[i + 1]
    return x.family == y.family and x.label == ONE_WORD and y.label == ONE_WORD


def _cancel(mono: Monomial, i: int, run: int) -> Rewrite:
    if run % 2:
        return K.zero, ()
    return -(C_Q**2), mono[:i] + mono[i + 2 :]


def _rewrite_once(mono: Monomial) -> Rewrite:
    if _alternates(mono):
        return K.zero, ()
    for i in range(len(mono) - 1):
        if not _is_unit_pair(mono, i):
            continue
        family = mono[i].family
        j = i + 2
        while j < len(mono) and mono[j].family != family:
            j += 1
        if j < len(mono):
            return _cancel(mono, i, j - i - 2)
        j = i - 1
        while j >= 0 and mono[j].family != family:
            j -= 1
        if j >= 0:
            return _cancel(mono, i, i - 1 - j)
    return None


def reduce_monomial(mono: Monomial) -> Tuple[FracElement, Monomial]:
    """Rewrites until no rule applies; a zero factor means the monomial is in the ideal."""
    factor = K.one
    while True:
        step = _rewrite_once(mono)
        if step is None:
            return factor, mono
        coeff, mono = step
        factor *= coeff
        if not factor:
            return K.zero, ()


def reduce_modulo_ideal(x: NCPoly) -> NCPoly:
    terms: Dict[Monomial, FracElement] = {}
    for mono, coeff in x.terms():
        factor, reduced = reduce_monomial(mono)
        if factor:
            terms[reduced] = terms.get(reduced, K.zero) + coeff * factor
    result = NCPoly(terms)
    logger.debug(f"Reduced {len(x)} monomials to {len(result)}")
    return result
