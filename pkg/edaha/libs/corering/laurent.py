"""
Sparse Laurent polynomials in (Q, p, s) on the half-integer exponent lattice.

The data lives in a sympy ``PolyElement`` whose exponent tuples are allowed to
go negative; sympy's addition and multiplication only ever add exponent tuples,
so they are valid for Laurent data as they stand. Operations that need honest
polynomials (exact division, conversion to the field) shift by the minimal
exponents first.
"""

import logging
from typing import Dict, Iterator, Optional, Sequence, Tuple

import mpmath
from sympy.polys.domains import QQ_I
from sympy.polys.fields import FracElement
from sympy.polys.polyerrors import ExactQuotientFailed
from sympy.polys.rings import PolyElement

from ..freegroup.sl2z import SL2ZMatrix
from .field import K, R, Exponents, GaussRat, gauss, poly_monomial

logger = logging.getLogger(__name__)

Roots = Tuple[complex, complex, complex]


def gauss_to_mpc(c: GaussRat) -> mpmath.mpc:
    re = mpmath.mpf(int(c.x.numerator)) / int(c.x.denominator)
    im = mpmath.mpf(int(c.y.numerator)) / int(c.y.denominator)
    return mpmath.mpc(re, im)


def eval_poly_terms(poly: PolyElement, roots: Roots) -> mpmath.mpc:
    """Evaluates a (possibly Laurent) ``PolyElement`` at half-root coordinates."""
    total = mpmath.mpc(0)
    for monom, coeff in poly.terms():
        value = gauss_to_mpc(coeff)
        for root, e in zip(roots, monom):
            if e:
                value *= mpmath.power(root, e)
        total += value
    return total


class LaurentPoly:
    """
    An immutable Laurent polynomial with Gaussian-rational coefficients.

    Exponents are doubled integers: the key ``(4, -2, 1)`` means
    ``Q^2 p^-1 s^(1/2)``.
    """

    __slots__ = ("_poly", "_hash")

    def __init__(self, poly: Optional[PolyElement] = None):
        self._poly: PolyElement = R.zero if poly is None else poly
        self._hash: Optional[int] = None

    # ------------------------------------------------------------------
    # construction
    # ------------------------------------------------------------------

    @classmethod
    def from_terms(cls, terms: Dict[Exponents, object]) -> "LaurentPoly":
        poly = R.zero
        for exps, coeff in terms.items():
            c = coeff if isinstance(coeff, GaussRat) else gauss(coeff)  # type: ignore[arg-type]
            if c:
                poly = poly + poly_monomial(exps, c)
        return cls(poly)

    @classmethod
    def monomial(
        cls, q2: int = 0, p2: int = 0, s2: int = 0, coeff: object = 1
    ) -> "LaurentPoly":
        """``coeff * Q^(q2/2) p^(p2/2) s^(s2/2)``."""
        return cls.from_terms({(q2, p2, s2): coeff})

    @classmethod
    def constant(cls, value: object) -> "LaurentPoly":
        return cls.monomial(coeff=value)

    @classmethod
    def one_minus(cls, a: int, b: int) -> "LaurentPoly":
        """The denominator factor ``1 - p^a s^b`` for integer ``a, b``."""
        return cls.constant(1) - cls.monomial(0, 2 * a, 2 * b)

    @classmethod
    def zero(cls) -> "LaurentPoly":
        return cls()

    @classmethod
    def one(cls) -> "LaurentPoly":
        return cls.constant(1)

    # ------------------------------------------------------------------
    # inspection
    # ------------------------------------------------------------------

    @property
    def poly(self) -> PolyElement:
        return self._poly

    def terms(self) -> Iterator[Tuple[Exponents, GaussRat]]:
        for monom, coeff in self._poly.items():
            yield tuple(monom), coeff  # type: ignore[misc]

    def exponents(self) -> Sequence[Exponents]:
        return [tuple(m) for m in self._poly.keys()]  # type: ignore[misc]

    def __len__(self) -> int:
        return len(self._poly)

    def __bool__(self) -> bool:
        return bool(self._poly)

    def is_zero(self) -> bool:
        return not self._poly

    def is_term(self) -> bool:
        return len(self._poly) == 1

    def is_constant(self) -> bool:
        return not self._poly or (
            len(self._poly) == 1 and (0, 0, 0) in self._poly
        )

    def coefficient(self, exponents: Exponents) -> GaussRat:
        return self._poly.get(tuple(exponents), QQ_I.zero)

    def min_exponents(self) -> Exponents:
        if not self._poly:
            return (0, 0, 0)
        keys = list(self._poly.keys())
        return tuple(min(k[i] for k in keys) for i in range(3))  # type: ignore[return-value]

    def q_exponents(self) -> set:
        return {m[0] for m in self._poly.keys()}

    def has_q_free_part(self) -> bool:
        """True if some monomial has Q-exponent zero."""
        return any(m[0] == 0 for m in self._poly.keys())

    # ------------------------------------------------------------------
    # arithmetic
    # ------------------------------------------------------------------

    def _coerce(self, other) -> "LaurentPoly":
        if isinstance(other, LaurentPoly):
            return other
        return LaurentPoly.constant(other)

    def __add__(self, other) -> "LaurentPoly":
        return LaurentPoly(self._poly + self._coerce(other)._poly)

    __radd__ = __add__

    def __sub__(self, other) -> "LaurentPoly":
        return LaurentPoly(self._poly - self._coerce(other)._poly)

    def __rsub__(self, other) -> "LaurentPoly":
        return LaurentPoly(self._coerce(other)._poly - self._poly)

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly(-self._poly)

    def __mul__(self, other) -> "LaurentPoly":
        return LaurentPoly(self._poly * self._coerce(other)._poly)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "LaurentPoly":
        if n >= 0:
            return LaurentPoly(self._poly**n)
        if not self.is_term():
            raise ValueError("Only monomials have negative powers in the Laurent ring")
        ((monom, coeff),) = self._poly.items()
        inv_coeff = QQ_I.one / coeff
        exps = tuple(-e for e in monom)
        return LaurentPoly(poly_monomial(exps, inv_coeff)) ** (-n)  # type: ignore[arg-type]

    def __eq__(self, other) -> bool:
        if isinstance(other, LaurentPoly):
            return self._poly == other._poly
        if isinstance(other, int):
            return self == LaurentPoly.constant(other)
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self._poly)
        return self._hash

    def shift(self, exponents: Exponents) -> "LaurentPoly":
        """Multiplies by the monomial with the given doubled exponents."""
        if not any(exponents):
            return self
        poly = R.from_dict(
            {
                tuple(m[i] + exponents[i] for i in range(3)): c
                for m, c in self._poly.items()
            }
        )
        return LaurentPoly(poly)

    def subst_monomial(self, m: SL2ZMatrix) -> "LaurentPoly":
        """
        Applies ``(p, s) -> (p^a s^c, p^b s^d)`` to every monomial; Q is untouched.

        Args:
            m: The substitution in column-action form.

        Returns:
            The transformed polynomial.
        """
        if m.is_identity():
            return self
        terms: Dict[Tuple[int, int, int], GaussRat] = {}
        for monom, coeff in self._poly.items():
            x, y = m.apply(monom[1], monom[2])
            key = (monom[0], x, y)
            terms[key] = terms.get(key, QQ_I.zero) + coeff
        return LaurentPoly(R.from_dict({k: v for k, v in terms.items() if v}))

    def map_coefficients(self, func) -> "LaurentPoly":
        mapped = {m: func(c) for m, c in self._poly.items()}
        return LaurentPoly(R.from_dict({m: c for m, c in mapped.items() if c}))

    def divide_exact(self, g: "LaurentPoly") -> Optional["LaurentPoly"]:
        """
        Exact division in the Laurent ring.

        Returns ``h`` with ``self = g * h``, or ``None`` when ``g`` does not divide
        ``self``. Both operands are shifted to honest polynomials not divisible
        by any generator; for those, Laurent divisibility and polynomial
        divisibility coincide.
        """
        if g.is_zero():
            raise ZeroDivisionError("Laurent division by zero")
        if self.is_zero():
            return LaurentPoly.zero()
        f_min = self.min_exponents()
        g_min = g.min_exponents()
        big_f = self.shift(tuple(-e for e in f_min))._poly  # type: ignore[arg-type]
        big_g = g.shift(tuple(-e for e in g_min))._poly  # type: ignore[arg-type]
        try:
            quotient = big_f.exquo(big_g)
        except ExactQuotientFailed:
            return None
        return LaurentPoly(quotient).shift(
            tuple(f_min[i] - g_min[i] for i in range(3))  # type: ignore[arg-type]
        )

    # ------------------------------------------------------------------
    # conversion
    # ------------------------------------------------------------------

    def to_field(self) -> FracElement:
        """The same value as a canonical element of the rational function field."""
        if self.is_zero():
            return K.zero
        shift = self.min_exponents()
        numer = self.shift(tuple(-e for e in shift))._poly  # type: ignore[arg-type]
        denom = poly_monomial(tuple(-min(e, 0) for e in shift))  # type: ignore[arg-type]
        numer = numer * poly_monomial(tuple(max(e, 0) for e in shift))  # type: ignore[arg-type]
        return K.new(numer, denom)

    def evaluate(self, roots: Roots) -> mpmath.mpc:
        """Numeric value at ``(Q^(1/2), p^(1/2), s^(1/2))``."""
        return eval_poly_terms(self._poly, roots)

    def __repr__(self) -> str:
        return f"LaurentPoly({format_laurent(self)})"

    def __str__(self) -> str:
        return format_laurent(self)


# ----------------------------------------------------------------------
# formatting
# ----------------------------------------------------------------------


def _format_exponent(doubled: int) -> str:
    if doubled % 2 == 0:
        return str(doubled // 2)
    return f"({doubled}/2)"


def format_gauss(c: GaussRat) -> str:
    re, im = c.x, c.y
    if not im:
        return str(re)
    if not re:
        return f"{im}*I" if im != 1 else "I"
    return f"({re}{'+' if im > 0 else '-'}{abs(im)}*I)"


def format_monomial(exps: Exponents) -> str:
    parts = []
    for name, e in zip(("Q", "p", "s"), exps):
        if e == 2:
            parts.append(name)
        elif e:
            parts.append(f"{name}^{_format_exponent(e)}")
    return "*".join(parts)


def format_laurent(f: LaurentPoly) -> str:
    if f.is_zero():
        return "0"
    chunks = []
    for exps, coeff in sorted(f.terms(), key=lambda t: tuple(-e for e in t[0])):
        mono = format_monomial(exps)
        c = format_gauss(coeff)
        if not mono:
            chunks.append(c)
        elif c == "1":
            chunks.append(mono)
        elif c == "-1":
            chunks.append(f"-{mono}")
        else:
            chunks.append(f"{c}*{mono}")
    return " + ".join(chunks).replace("+ -", "- ")


def laurent_mul(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    return a * b


def laurent_subst_monomial(f: LaurentPoly, m: SL2ZMatrix) -> LaurentPoly:
    return f.subst_monomial(m)


def laurent_divide_exact(f: LaurentPoly, g: LaurentPoly) -> Optional[LaurentPoly]:
    return f.divide_exact(g)
