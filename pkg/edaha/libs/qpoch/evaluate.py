from __future__ import annotations

import logging
from typing import TYPE_CHECKING, List, Tuple

import mpmath

from ..corering.laurent import gauss_to_mpc
from ..corering.ratfunc import ratfunc_eval
from .policy import NumericPolicy
from .poch import poch_log
from .sampling import SamplePoint

if TYPE_CHECKING:
    from ..plethystic.fraction import FormalFraction
    from ..plethystic.ring import RingElement

logger = logging.getLogger(__name__)


def fraction_log(
    fraction: FormalFraction, pt: SamplePoint, policy: NumericPolicy
) -> mpmath.mpc:
    """``log pexp(fraction)``: one Pochhammer logarithm per numerator monomial."""
    params = [pt.monomial(a, b) for a, b in fraction.denominator]
    total = mpmath.mpc(0)
    for exps, coeff in fraction.numerator.terms():
        z = mpmath.mpc(1)
        for root, e in zip(pt.roots, exps):
            if e:
                z *= mpmath.power(root, e)
        total += gauss_to_mpc(coeff) * poch_log(z, params, policy)
    return total


def pexp_eval(fraction: FormalFraction, pt: SamplePoint, policy: NumericPolicy) -> mpmath.mpc:
    with mpmath.workdps(policy.precision):
        return mpmath.exp(fraction_log(fraction, pt, policy))


def ring_eval(x: RingElement, pt: SamplePoint, policy: NumericPolicy) -> mpmath.mpc:
    """
    Numeric value of a ring element at a sample point.

    Args:
        x: The element.
        pt: A point admissible for every denominator vector of ``x``.
        policy: Precision and truncation settings.

    Returns:
        ``sum prefactor(pt) * pexp(F)(pt)`` as an mpmath complex.
    """
    return ring_eval_with_scale(x, pt, policy)[0]


def ring_eval_with_scale(
    x: RingElement, pt: SamplePoint, policy: NumericPolicy
) -> Tuple[mpmath.mpc, mpmath.mpf]:
    """The value and the largest modulus among its terms."""
    with mpmath.workdps(policy.precision):
        total = mpmath.mpc(0)
        scale = mpmath.mpf(0)
        for fraction, prefactor in x.terms():
            value = ratfunc_eval(prefactor, pt.roots)
            if not fraction.is_zero():
                value *= mpmath.exp(fraction_log(fraction, pt, policy))
            scale = max(scale, abs(value))
            total += value
        return total, scale


def ring_eval_many(
    x: RingElement, points: List[SamplePoint], policy: NumericPolicy
) -> List[mpmath.mpc]:
    return [ring_eval(x, pt, policy) for pt in points]
