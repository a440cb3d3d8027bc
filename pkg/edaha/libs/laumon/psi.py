"""Closed forms of the eigenfunctions ``psi_ij`` of ``O_B^(1)``."""

from functools import lru_cache
from typing import Dict, Tuple

from ..corering.field import C_Q, I, K
from ..corering.parse import parse_ratfunc
from ..plethystic.convert import pexp_rational
from ..plethystic.ring import RingElement

# arguments of the pexp factors, shared between rows
_ARGUMENTS: Dict[str, str] = {
    "outer": "-(Q^4-Q^-4)*(Q^4+s^2*Q^-4)*p/((1-p^2)*(1-s^2))",
    "outer_half": "-(Q^4-Q^-4)*(Q^4+s*Q^-4)*p/((1-p^2)*(1-s))",
    "middle": "-(Q^8-Q^-8)*s*p/((1-p^2)*(1-s^2))",
    "second": "(-(s+2)*Q^4+(2*s^2+s)*Q^-4)*p^2/(1-s^2)",
    "second_half": "-2*(Q^4-s*Q^-4)*(s*Q^4+Q^-4)*p^2/(1-s^2)",
}

# (prefactor, first argument, second argument) per entry
_ENTRIES: Dict[Tuple[int, int], Tuple[object, str, str]] = {
    (1, 1): (K.one, "outer", "second"),
    (1, 2): (-I * C_Q, "outer_half", "second_half"),
    (1, 3): (-(C_Q**2) / 2, "outer", "second"),
    (2, 1): (K.one, "middle", "second"),
    (2, 3): (C_Q**2 / 2, "middle", "second"),
    (3, 1): (K.one, "outer", "second"),
    (3, 2): (I * C_Q, "outer_half", "second_half"),
    (3, 3): (-(C_Q**2) / 2, "outer", "second"),
}


@lru_cache(maxsize=None)
def _pexp(name: str) -> RingElement:
    return pexp_rational(parse_ratfunc(_ARGUMENTS[name]), allow_q_free=True)


def psi_prefactor(i: int, j: int):
    """The value of ``psi_ij`` at ``p = 0``."""
    _check_indices(i, j)
    entry = _ENTRIES.get((i, j))
    return K.zero if entry is None else entry[0]


def psi_closed(i: int, j: int) -> RingElement:
    """
    ``psi_ij`` as an exact ring element; ``psi_22`` is zero.

    Raises:
        ValueError: If an index is outside 1, 2, 3.
    """
    _check_indices(i, j)
    entry = _ENTRIES.get((i, j))
    if entry is None:
        return RingElement.zero()
    prefactor, first, second = entry
    return (_pexp(first) * _pexp(second)).scale(prefactor)


def _check_indices(i: int, j: int) -> None:
    for index in (i, j):
        if index not in (1, 2, 3):
            raise ValueError(f"psi indices run over 1, 2, 3, got {index}")
