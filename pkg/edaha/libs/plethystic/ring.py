"""
The ring of plethystic-exponential expressions.

An element is a finite sum ``sum_k r_k * pexp(F_k)`` with rational prefactors
``r_k``. Terms are keyed by the rational-function value of their canonical
fraction; two arguments whose values differ by a Laurent polynomial with
integer coefficients and no constant term describe proportional
exponentials, and the quotient ``prod (1 - m)^c`` is moved into the prefactor.
Terms whose argument is itself such a Laurent polynomial live on the trivial
atom, keyed by ``0``.
"""

import logging
from typing import Dict, Iterable, Iterator, List, Optional, Set, Tuple, Union

from sympy.polys.fields import FracElement
from sympy.polys.rings import PolyElement

from ...core.exceptions import NotAUnit
from ..corering.field import K
from ..corering.laurent import LaurentPoly
from ..corering.ratfunc import as_laurent, format_ratfunc, ratfunc_specialize, ratfunc_subst_monomial
from ..freegroup.sl2z import SL2ZMatrix
from .fraction import (
    FormalFraction,
    Vector,
    fraction_canonicalize,
    fraction_shift,
    laurent_fold,
)

logger = logging.getLogger(__name__)

Scalar = Union[int, FracElement]
Term = Tuple[FormalFraction, FracElement]

ZERO_FRACTION = FormalFraction(LaurentPoly.zero(), ())


def _as_field(value: Scalar) -> FracElement:
    if isinstance(value, FracElement):
        return value
    return K(value)


def _denominator_core(value: FracElement) -> PolyElement:
    """The denominator with its monomial content removed, made monic."""
    denom = value.denom
    mins = [min(m[i] for m in denom.keys()) for i in range(3)]
    if any(mins):
        denom = LaurentPoly(denom).shift(tuple(-e for e in mins)).poly  # type: ignore[arg-type]
    return denom.monic()


class RingElement:
    """
    A finite combination of pexp atoms with rational prefactors.

    Instances are treated as immutable; all operations return new objects.
    Elements are not hashable because equal elements may carry different
    atom representatives.
    """

    __slots__ = ("_terms", "_buckets")

    def __init__(self):
        self._terms: Dict[FracElement, Term] = {}
        self._buckets: Dict[PolyElement, List[FracElement]] = {}

    # ------------------------------------------------------------------
    # construction
    # ------------------------------------------------------------------

    @classmethod
    def zero(cls) -> "RingElement":
        return cls()

    @classmethod
    def scalar(cls, value: Scalar) -> "RingElement":
        result = cls()
        result._add_term(ZERO_FRACTION, K.zero, _as_field(value))
        return result

    @classmethod
    def one(cls) -> "RingElement":
        return cls.scalar(1)

    @classmethod
    def pexp(cls, fraction: FormalFraction, prefactor: Scalar = 1) -> "RingElement":
        """``prefactor * pexp(fraction)`` with the fraction canonicalized."""
        result = cls()
        canonical = fraction_canonicalize(fraction)
        result._add_term(canonical, canonical.value, _as_field(prefactor))
        return result

    def copy(self) -> "RingElement":
        result = RingElement()
        result._terms = dict(self._terms)
        result._buckets = {k: list(v) for k, v in self._buckets.items()}
        return result

    # ------------------------------------------------------------------
    # term bookkeeping
    # ------------------------------------------------------------------

    def _add_term(
        self, fraction: FormalFraction, value: FracElement, prefactor: FracElement
    ) -> None:
        if not prefactor:
            return
        if value:
            ell = as_laurent(value)
            if ell is not None:
                fold = laurent_fold(ell)
                if fold is not None:
                    fraction, value, prefactor = ZERO_FRACTION, K.zero, prefactor * fold

        if value in self._terms:
            self._accumulate(value, prefactor)
            return

        core = _denominator_core(value) if value else K.ring.one
        bucket = self._buckets.setdefault(core, [])
        for key in bucket:
            ell = as_laurent(value - key)
            if ell is None:
                continue
            fold = laurent_fold(ell)
            if fold is not None:
                self._accumulate(key, prefactor * fold)
                return
        bucket.append(value)
        self._terms[value] = (fraction, prefactor)

    def _accumulate(self, key: FracElement, prefactor: FracElement) -> None:
        fraction, current = self._terms[key]
        total = current + prefactor
        if total:
            self._terms[key] = (fraction, total)
            return
        del self._terms[key]
        for core, bucket in self._buckets.items():
            if key in bucket:
                bucket.remove(key)
                if not bucket:
                    del self._buckets[core]
                break

    # ------------------------------------------------------------------
    # inspection
    # ------------------------------------------------------------------

    def terms(self) -> Iterator[Term]:
        """Yields ``(fraction, prefactor)`` pairs; the trivial atom has a zero fraction."""
        yield from self._terms.values()

    def __len__(self) -> int:
        return len(self._terms)

    def is_zero_symbolic(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_scalar(self) -> bool:
        return not self._terms or (len(self._terms) == 1 and K.zero in self._terms)

    def scalar_value(self) -> Optional[FracElement]:
        """The rational value if the element has no nontrivial atom."""
        if not self._terms:
            return K.zero
        if self.is_scalar():
            return self._terms[K.zero][1]
        return None

    def is_unit(self) -> bool:
        return len(self._terms) == 1

    def vectors(self) -> Set[Vector]:
        """All denominator vectors occurring in the atoms."""
        found: Set[Vector] = set()
        for fraction, _ in self._terms.values():
            found.update(fraction.denominator)
        return found

    # ------------------------------------------------------------------
    # arithmetic
    # ------------------------------------------------------------------

    @staticmethod
    def _coerce(other) -> "RingElement":
        if isinstance(other, RingElement):
            return other
        return RingElement.scalar(other)

    def __add__(self, other) -> "RingElement":
        result = self.copy()
        for key, (fraction, prefactor) in self._coerce(other)._terms.items():
            result._add_term(fraction, key, prefactor)
        return result

    __radd__ = __add__

    def __neg__(self) -> "RingElement":
        result = RingElement()
        for key, (fraction, prefactor) in self._terms.items():
            result._terms[key] = (fraction, -prefactor)
        result._buckets = {k: list(v) for k, v in self._buckets.items()}
        return result

    def __sub__(self, other) -> "RingElement":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "RingElement":
        return self._coerce(other) + (-self)

    def scale(self, factor: Scalar) -> "RingElement":
        factor = _as_field(factor)
        if not factor:
            return RingElement()
        result = RingElement()
        for key, (fraction, prefactor) in self._terms.items():
            result._terms[key] = (fraction, prefactor * factor)
        result._buckets = {k: list(v) for k, v in self._buckets.items()}
        return result

    def __mul__(self, other) -> "RingElement":
        if not isinstance(other, RingElement):
            return self.scale(other)
        result = RingElement()
        for key_x, (frac_x, pre_x) in self._terms.items():
            for key_y, (frac_y, pre_y) in other._terms.items():
                if not key_x:
                    fraction, value = frac_y, key_y
                elif not key_y:
                    fraction, value = frac_x, key_x
                else:
                    fraction = fraction_canonicalize(frac_x + frac_y)
                    value = key_x + key_y
                result._add_term(fraction, value, pre_x * pre_y)
        return result

    def __rmul__(self, other) -> "RingElement":
        return self.scale(other)

    def __pow__(self, n: int) -> "RingElement":
        if n < 0:
            return ring_inverse_unit(self) ** (-n)
        result = RingElement.one()
        for _ in range(n):
            result = result * self
        return result

    def __eq__(self, other) -> bool:
        if not isinstance(other, (RingElement, int, FracElement)):
            return NotImplemented
        return (self - other).is_zero_symbolic()

    __hash__ = None  # type: ignore[assignment]

    def shift(self, m: SL2ZMatrix) -> "RingElement":
        return ring_shift(self, m)

    def __repr__(self) -> str:
        return f"RingElement({format_ring_element(self)})"

    def __str__(self) -> str:
        return format_ring_element(self)


def ring_from_terms(terms: Iterable[Term]) -> RingElement:
    result = RingElement()
    for fraction, prefactor in terms:
        canonical = fraction_canonicalize(fraction)
        result._add_term(canonical, canonical.value, prefactor)
    return result


def pexp(fraction: FormalFraction) -> RingElement:
    return RingElement.pexp(fraction)


def ring_mul(x: RingElement, y: RingElement) -> RingElement:
    return x * y


def ring_shift(x: RingElement, m: SL2ZMatrix) -> RingElement:
    """
    Substitutes ``(p, s) -> (p^a s^c, p^b s^d)`` in atoms and prefactors.

    The substitution is a ring automorphism, so re-keying term by term is enough.
    """
    if m.is_identity():
        return x
    result = RingElement()
    for fraction, prefactor in x.terms():
        moved = fraction_canonicalize(fraction_shift(fraction, m))
        result._add_term(moved, moved.value, ratfunc_subst_monomial(prefactor, m))
    return result


def ring_inverse_unit(x: RingElement) -> RingElement:
    """
    Inverts a single-term element.

    Raises:
        NotAUnit: If ``x`` has zero or several terms.
    """
    if len(x) != 1:
        raise NotAUnit(len(x))
    ((key, (fraction, prefactor)),) = list(x._terms.items())
    inverse = RingElement()
    inverse._add_term(-fraction, -key, K.one / prefactor)
    return inverse


def ring_at_p_zero(x: RingElement) -> FracElement:
    """
    The value at ``p = 0`` for fixed ``Q`` and ``s``.

    Every atom must tend to 1, i.e. each numerator monomial carries a positive
    power of ``p``; the prefactors are then specialized at ``p = 0``.

    Raises:
        ValueError: If an atom or a prefactor has no finite limit at ``p = 0``.
    """
    total = K.zero
    for fraction, prefactor in x.terms():
        if any(exps[1] <= 0 for exps in fraction.numerator.exponents()):
            raise ValueError(f"pexp({fraction.numerator} / ...) does not tend to 1 at p = 0")
        try:
            total += ratfunc_specialize(prefactor, pr=K.zero)
        except ZeroDivisionError as e:
            raise ValueError(f"Prefactor {format_ratfunc(prefactor)} has a pole at p = 0") from e
    return total


def format_ring_element(x: RingElement) -> str:
    if x.is_zero_symbolic():
        return "0"
    chunks = []
    for fraction, prefactor in x.terms():
        pre = format_ratfunc(prefactor)
        if fraction.is_zero():
            chunks.append(pre)
        elif pre == "1":
            chunks.append(f"pexp{fraction}")
        else:
            chunks.append(f"({pre})*pexp{fraction}")
    return " + ".join(chunks)
