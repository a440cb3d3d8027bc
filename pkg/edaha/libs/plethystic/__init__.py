from .convert import fraction_from_ratfunc, pexp_rational, ring_from_expression
from .fraction import (
    FormalFraction,
    denominator_product,
    fraction_add,
    fraction_canonicalize,
    fraction_equal,
    fraction_shift,
    is_oriented,
    laurent_fold,
    make_fraction,
    with_plus_factors,
)
from .ring import (
    RingElement,
    format_ring_element,
    pexp,
    ring_from_terms,
    ring_inverse_unit,
    ring_mul,
    ring_shift,
    ring_at_p_zero,
)
from .zero import (
    ZeroTest,
    ring_is_zero,
    ring_zero_test,
    sample_points,
    timed_zero_check,
    zero_test_many,
)

__all__ = [
    "FormalFraction",
    "RingElement",
    "ZeroTest",
    "denominator_product",
    "format_ring_element",
    "fraction_add",
    "fraction_canonicalize",
    "fraction_equal",
    "fraction_from_ratfunc",
    "fraction_shift",
    "is_oriented",
    "laurent_fold",
    "make_fraction",
    "pexp",
    "pexp_rational",
    "ring_from_expression",
    "ring_from_terms",
    "ring_inverse_unit",
    "ring_is_zero",
    "ring_mul",
    "ring_shift",
    "ring_at_p_zero",
    "ring_zero_test",
    "sample_points",
    "with_plus_factors",
    "timed_zero_check",
    "zero_test_many",
]
