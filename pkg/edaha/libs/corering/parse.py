"""
Parsing of scalar expressions in Q, p, s for the ``eval`` mini-language.

Expressions use ``^`` or ``**`` for powers, ``I`` (or ``i``) for the imaginary
unit and may contain calls ``pexp(...)``. Half-integer powers must be
parenthesized, e.g. ``p^(1/2)``.
"""

import logging

import sympy
from sympy.parsing.sympy_parser import (
    convert_xor,
    parse_expr,
    standard_transformations,
)
from sympy.polys.fields import FracElement

from ...core.exceptions import ExpressionSyntaxError
from .field import K
from .laurent import LaurentPoly
from .ratfunc import as_laurent

logger = logging.getLogger(__name__)

Q_SYM, P_SYM, S_SYM = sympy.symbols("Q p s", positive=True)
_ROOTS = sympy.symbols("Qr pr sr", positive=True)
PEXP = sympy.Function("pexp")

_LOCALS = {
    "Q": Q_SYM,
    "p": P_SYM,
    "s": S_SYM,
    "I": sympy.I,
    "i": sympy.I,
    "pexp": PEXP,
}

_TRANSFORMATIONS = standard_transformations + (convert_xor,)


def parse_expression(text: str) -> sympy.Expr:
    """Parses ``text`` into a sympy expression over the symbols Q, p, s."""
    try:
        expr = parse_expr(
            text, local_dict=dict(_LOCALS), transformations=_TRANSFORMATIONS
        )
    except (SyntaxError, TypeError, ValueError, sympy.SympifyError) as e:
        raise ExpressionSyntaxError(text, str(e)) from e
    unknown = expr.free_symbols - {Q_SYM, P_SYM, S_SYM}
    if unknown:
        names = ", ".join(sorted(str(u) for u in unknown))
        raise ExpressionSyntaxError(text, f"unknown symbols: {names}")
    return expr


def sympy_to_field(expr: sympy.Expr) -> FracElement:
    """Converts a pexp-free sympy expression into the exact rational function field."""
    if expr.atoms(PEXP):
        raise ExpressionSyntaxError(str(expr), "pexp is not a rational function")
    rooted = expr.subs(
        {Q_SYM: _ROOTS[0] ** 2, P_SYM: _ROOTS[1] ** 2, S_SYM: _ROOTS[2] ** 2}
    )
    rooted = rooted.xreplace(dict(zip(_ROOTS, K.symbols)))
    try:
        value = K.from_expr(rooted)
    except (ValueError, TypeError) as e:
        raise ExpressionSyntaxError(str(expr), str(e)) from e
    # negative powers come back uncancelled
    return K.new(value.numer, value.denom)


def parse_ratfunc(text: str) -> FracElement:
    return sympy_to_field(parse_expression(text))


def parse_laurent(text: str) -> LaurentPoly:
    value = as_laurent(parse_ratfunc(text))
    if value is None:
        raise ExpressionSyntaxError(text, "expected a Laurent polynomial")
    return value
