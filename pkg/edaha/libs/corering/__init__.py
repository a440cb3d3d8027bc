from .field import C_Q, ONE, X_Q, ZERO, K, R, frac_const, frac_monomial, gauss, q_power
from .laurent import (
    LaurentPoly,
    format_laurent,
    laurent_divide_exact,
    laurent_mul,
    laurent_subst_monomial,
)
from .ratfunc import (
    RatFunc,
    as_laurent,
    denominator,
    from_laurent,
    is_laurent,
    laurent_eval,
    numerator,
    ratfunc_eval,
    ratfunc_subst_monomial,
)

__all__ = [
    "C_Q",
    "ONE",
    "X_Q",
    "ZERO",
    "K",
    "R",
    "frac_const",
    "frac_monomial",
    "gauss",
    "q_power",
    "LaurentPoly",
    "format_laurent",
    "laurent_divide_exact",
    "laurent_mul",
    "laurent_subst_monomial",
    "RatFunc",
    "as_laurent",
    "denominator",
    "from_laurent",
    "is_laurent",
    "laurent_eval",
    "numerator",
    "ratfunc_eval",
    "ratfunc_subst_monomial",
]
