"""
Nekrasov factors of the affine Laumon character.

For partitions ``lambda``, ``mu`` and an integer ``k`` the factor is

    N^(k)_{lambda,mu}(u | q, s) = prod_{b >= a >= 1}
        (1 - u q^(-mu_a + lambda_(b+1)) s^(b-a))    if a - b - k = 0 mod N
        (1 - u q^(lambda_a - mu_b) s^(a-b-1))       if a - b + k + 1 = 0 mod N

The product over ``b`` is infinite and the second family of factors carries
growing negative powers of ``s``. Every factor is therefore evaluated relative
to the empty pair, which leaves only ``a <= max(len(lambda), len(mu))``, and
the tails are handled as follows:

* first factors decay geometrically and are truncated at ``b_max``;
* second factors past ``len(mu)`` form a progression ``(w; s^-N)_oo`` which
  is read through the inversion ``(w; s^-N)_oo = 1 / (w s^N; s^N)_oo``, the
  same continuation used by the q-Pochhammer evaluator;
* a factor equal to ``1 - 1`` is dropped on whichever side it appears.
"""

import logging
from dataclasses import dataclass, replace
from typing import Optional

import mpmath

from ...core.exceptions import OnUnitCircle, TruncationUnstable
from .partitions import Partition

logger = logging.getLogger(__name__)

# |1 - z| below this counts as a vanishing factor
VANISHING_GUARD = mpmath.mpf(10) ** -12


def delta(n: int, N: int) -> int:
    """1 when ``N`` divides ``n``, else 0."""
    return 1 if n % N == 0 else 0


@dataclass(frozen=True)
class NekArgs:
    """
    Arguments of one Nekrasov factor.

    Attributes:
        k: The shift ``j - i`` between the two partition slots.
        u: The spectral argument.
        q: The ``q`` parameter.
        s: The ``s`` slot, ``|s| < 1``.
        N: The rank of the affine Laumon space.
        b_max: Truncation of the ``b`` product.
    """

    k: int
    u: mpmath.mpc
    q: mpmath.mpc
    s: mpmath.mpc
    N: int = 2
    b_max: int = 40

    def __post_init__(self):
        if self.N < 1:
            raise ValueError(f"N must be positive, got {self.N}")
        if abs(self.s) >= 1:
            raise OnUnitCircle(float(abs(self.s)))

    def effective_b_max(self, lam: Partition, mu: Partition) -> int:
        return max(self.b_max, len(lam) + len(mu) + 2 * self.N)


def _factor(z) -> Optional[mpmath.mpc]:
    """``1 - z``, or None when it vanishes."""
    value = 1 - z
    return None if abs(value) < VANISHING_GUARD else value


def _ratio(numerator_z, denominator_z) -> mpmath.mpc:
    top, bottom = _factor(numerator_z), _factor(denominator_z)
    return (1 if top is None else top) / (1 if bottom is None else bottom)


def _inverted_tail(w, w_empty, s_step, terms: int) -> mpmath.mpc:
    """Ratio of the continued tails ``1 / (w s^N; s^N)`` for ``w`` and ``w_empty``."""
    result = mpmath.mpc(1)
    step = mpmath.mpc(1)
    for _ in range(terms):
        step *= s_step
        result *= _ratio(w_empty * step, w * step)
    return result


def nek_factor(lam: Partition, mu: Partition, args: NekArgs) -> mpmath.mpc:
    """
    ``N^(k)_{lambda,mu}(u) / N^(k)_{0,0}(u)`` truncated at ``args.b_max``.

    Returns 1 for two empty partitions.
    """
    N, k, u, q, s = args.N, args.k, args.u, args.q, args.s
    b_max = args.effective_b_max(lam, mu)
    top_a = max(len(lam), len(mu))
    result = mpmath.mpc(1)
    for a in range(1, top_a + 1):
        mu_a, lam_a = mu.part(a), lam.part(a)
        for b in range(a, b_max + 1):
            if delta(a - b - k, N):
                power = s ** (b - a)
                exponent = -mu_a + lam.part(b + 1)
                if exponent:
                    result *= _ratio(u * q**exponent * power, u * power)
        # second family: explicit while mu_b varies, continued tail afterwards
        tail_start = max(a, len(mu) + 1)
        for b in range(a, tail_start):
            if delta(a - b + k + 1, N):
                exponent = lam_a - mu.part(b)
                if exponent:
                    power = s ** (a - b - 1)
                    result *= _ratio(u * q**exponent * power, u * power)
        if lam_a == 0:
            continue
        first = next(b for b in range(tail_start, tail_start + N) if delta(a - b + k + 1, N))
        terms = max(0, (b_max - first) // N + 1)
        w_empty = u * s ** (a - first - 1)
        result *= _inverted_tail(w_empty * q**lam_a, w_empty, s**N, terms)
    return result


def nek_factor_stable(
    lam: Partition, mu: Partition, args: NekArgs, tol: float
) -> mpmath.mpc:
    """
    ``nek_factor`` together with the ``b_max -> b_max + N`` monitor.

    Raises:
        TruncationUnstable: If the extra ``N`` steps move the value by more
            than ``tol`` relative to its size.
    """
    value = nek_factor(lam, mu, args)
    longer = nek_factor(lam, mu, replace(args, b_max=args.effective_b_max(lam, mu) + args.N))
    change = abs(longer - value) / max(1, abs(value))
    if change > tol:
        logger.warning(f"Nekrasov factor {lam},{mu} moved by {change:.2e} under b_max + N")
        raise TruncationUnstable("Nekrasov b-range", float(change), tol)
    return value
