"""
Helpers around sympy ``FracElement`` values used as rational prefactors.

Field arithmetic keeps every element as a cancelled numerator/denominator pair
with a canonical leading coefficient in the denominator, so structural equality
and hashing decide equality of rational functions. Negative powers skip the
cancellation; values built with them go through ``K.new`` first.
"""

from typing import Optional

import mpmath
from sympy.polys.fields import FracElement

from ..freegroup.sl2z import SL2ZMatrix
from .field import K
from .laurent import LaurentPoly, Roots, eval_poly_terms

RatFunc = FracElement


def numerator(r: RatFunc) -> LaurentPoly:
    return LaurentPoly(r.numer)


def denominator(r: RatFunc) -> LaurentPoly:
    return LaurentPoly(r.denom)


def is_laurent(r: RatFunc) -> bool:
    """True if the denominator is a single term, i.e. ``r`` is a Laurent polynomial."""
    return len(r.denom) == 1


def as_laurent(r: RatFunc) -> Optional[LaurentPoly]:
    """Returns ``r`` as a Laurent polynomial, or ``None`` if it is not one."""
    if not is_laurent(r):
        return None
    ((monom, coeff),) = r.denom.items()
    scaled = LaurentPoly(r.numer).shift((-monom[0], -monom[1], -monom[2]))
    return scaled.map_coefficients(lambda c: c / coeff)


def from_laurent(f: LaurentPoly) -> RatFunc:
    return f.to_field()


def ratfunc_subst_monomial(r: RatFunc, m: SL2ZMatrix) -> RatFunc:
    """Applies the parameter substitution to numerator and denominator."""
    if m.is_identity() or (r.numer.is_ground and r.denom.is_ground):
        return r
    numer = LaurentPoly(r.numer).subst_monomial(m).to_field()
    denom = LaurentPoly(r.denom).subst_monomial(m).to_field()
    return numer / denom


def ratfunc_is_q_only(r: RatFunc) -> bool:
    """True if ``r`` depends on Q alone."""
    return all(m[1] == 0 and m[2] == 0 for m in r.numer.keys()) and all(
        m[1] == 0 and m[2] == 0 for m in r.denom.keys()
    )


def ratfunc_specialize(r: RatFunc, qr=None, pr=None, sr=None) -> RatFunc:
    """Substitutes field elements for the half-root generators that are given."""
    values = [g if v is None else v for g, v in zip(K.gens, (qr, pr, sr))]
    return _compose(r, values)


def _compose(r: RatFunc, values) -> RatFunc:
    def poly_at(poly) -> RatFunc:
        total = K.zero
        for monom, coeff in poly.items():
            term = K.ground_new(coeff)
            for v, e in zip(values, monom):
                if e:
                    term *= v**e
            total += term
        return total

    return poly_at(r.numer) / poly_at(r.denom)


def ratfunc_eval(r: RatFunc, roots: Roots) -> mpmath.mpc:
    """Numeric value at ``(Q^(1/2), p^(1/2), s^(1/2))``."""
    return eval_poly_terms(r.numer, roots) / eval_poly_terms(r.denom, roots)


def laurent_eval(f: LaurentPoly, roots: Roots) -> mpmath.mpc:
    return f.evaluate(roots)


def format_ratfunc(r: RatFunc) -> str:
    """Renders ``r`` with the Laurent formatter, e.g. ``(2*Q)/(1 - Q^4)``."""
    value = as_laurent(r)
    if value is not None:
        return str(value)
    numer = LaurentPoly(r.numer)
    text = str(numer)
    if len(numer) > 1:
        text = f"({text})"
    return f"{text}/({LaurentPoly(r.denom)})"


__all__ = [
    "RatFunc",
    "numerator",
    "denominator",
    "is_laurent",
    "as_laurent",
    "from_laurent",
    "ratfunc_subst_monomial",
    "ratfunc_is_q_only",
    "ratfunc_specialize",
    "ratfunc_eval",
    "laurent_eval",
    "format_ratfunc",
]
