"""
Arbitrary precision iterated q-Pochhammer symbols.

``(z; p_1, ..., p_n) = prod_{i_1..i_n >= 0} (1 - z p_1^i_1 ... p_n^i_n)`` for
``|p_j| < 1``. Parameters outside the unit disk are brought inside with

    (z; P, rest) = 1 / (z / P; 1 / P, rest),

and the empty symbol is ``(z; ) = 1 - z``. The logarithm is summed as

    log (z; P) = -sum_k z^k / (k prod_j (1 - p_j^k))      for |z| < 1,

after peeling ``(z; P) = (z; P without p_j) (z p_j; P)`` until ``|z|`` is
small. Working with logarithms lets non-integer exponents of atoms reuse the
same branch.
"""

import logging
from typing import List, Sequence

import mpmath

from ...core.exceptions import DidNotConverge, OnUnitCircle
from .policy import NumericPolicy

logger = logging.getLogger(__name__)

# series is summed directly once |z| is at most this
SERIES_RADIUS = mpmath.mpf("0.5")
# |p| this close to 1 is rejected
UNIT_CIRCLE_GUARD = 1e-6


def _validated(params: Sequence, policy: NumericPolicy) -> List[mpmath.mpc]:
    checked = []
    for p in params:
        p = mpmath.mpc(p)
        modulus = abs(p)
        if modulus == 0 or abs(modulus - 1) < UNIT_CIRCLE_GUARD:
            raise OnUnitCircle(float(modulus))
        checked.append(p)
    return checked


def _series_log(z: mpmath.mpc, params: List[mpmath.mpc], policy: NumericPolicy):
    threshold = mpmath.mpf(policy.tol) * mpmath.mpf(10) ** -10
    total = mpmath.mpc(0)
    z_power = mpmath.mpc(1)
    powers = [mpmath.mpc(1)] * len(params)
    for k in range(1, policy.max_product_index + 1):
        z_power *= z
        denom = mpmath.mpc(k)
        for j, p in enumerate(params):
            powers[j] *= p
            denom *= 1 - powers[j]
        term = z_power / denom
        total -= term
        if abs(term) < threshold:
            return total
    raise DidNotConverge("q-Pochhammer series", float(abs(term)), policy.tol)


def _log_inside(z: mpmath.mpc, params: List[mpmath.mpc], policy: NumericPolicy):
    if z == 0:
        return mpmath.mpc(0)
    if not params:
        return mpmath.log(1 - z)
    if abs(z) <= SERIES_RADIUS:
        return _series_log(z, params, policy)
    j = min(range(len(params)), key=lambda i: abs(params[i]))
    rest = params[:j] + params[j + 1 :]
    return _log_inside(z, rest, policy) + _log_inside(z * params[j], params, policy)


def poch_log(z, params: Sequence, policy: NumericPolicy) -> mpmath.mpc:
    """Logarithm of ``(z; p_1, ..., p_n)`` on the extended parameter range."""
    z = mpmath.mpc(z)
    inside = _validated(params, policy)
    sign = 1
    for j, p in enumerate(inside):
        if abs(p) > 1:
            z = z / p
            inside[j] = 1 / p
            sign = -sign
    return sign * _log_inside(z, inside, policy)


def poch_eval(z, params: Sequence, policy: NumericPolicy) -> mpmath.mpc:
    """
    Evaluates ``(z; p_1, ..., p_n)`` at the policy's working precision.

    Raises:
        OnUnitCircle: If some ``|p_j|`` is 0 or numerically 1.
        DidNotConverge: If the series needs more than ``max_product_index`` terms.
    """
    with mpmath.workdps(policy.precision):
        return mpmath.exp(poch_log(z, params, policy))


def poch_product(z, params: Sequence, cutoff: int, precision: int = 50) -> mpmath.mpc:
    """
    The rectangular truncated product with every index below ``cutoff``.

    Only meaningful for ``|p_j| < 1``; kept as an independent oracle for tests.
    """
    with mpmath.workdps(precision):
        z = mpmath.mpc(z)
        params = [mpmath.mpc(p) for p in params]
        values = [z]
        for p in params:
            values = [v * p**i for v in values for i in range(cutoff)]
        result = mpmath.mpc(1)
        for v in values:
            result *= 1 - v
        return result
