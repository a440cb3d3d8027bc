"""
The K-theory character of affine Laumon space as a truncated partition sum.

``f`` sums over ``N``-tuples of partitions the product of Nekrasov ratios
``N^(j-i)(q/t y_j/y_i) / N^(j-i)(y_j/y_i)`` times the weight
``prod_beta prod_alpha (p t x_(alpha+beta) / (q x_(alpha+beta-1)))^lambda^(beta)_alpha``
with ``x`` read periodically. Each Nekrasov factor is normalized by the empty
pair (see ``nekrasov``), so the all-empty tuple contributes exactly 1 and the
overall constant of ``f`` is left to the caller.
"""

import itertools
import logging
from dataclasses import dataclass
from typing import Callable, Dict, Iterator, Tuple

import mpmath

from ...core.config.model import LaumonConfig
from ...core.exceptions import TruncationUnstable
from .nekrasov import NekArgs, nek_factor, nek_factor_stable
from .partitions import PartitionTuple, partition_tuples, tuple_size

logger = logging.getLogger(__name__)

# maxBoxes is doubled at most this many times before giving up
MAX_BOX_DOUBLINGS = 1


@dataclass(frozen=True)
class LaumonParams:
    """
    Arguments of ``f^(gl_N)``.

    Attributes:
        x: ``x_1 .. x_N``; ``x_(n+N) = x_n``.
        y: ``y_1 .. y_N``.
        p: The ``p`` slot.
        s: The ``s`` slot.
        q: The ``q`` parameter.
        t: The ``t`` parameter.
    """

    x: Tuple[mpmath.mpc, ...]
    y: Tuple[mpmath.mpc, ...]
    p: mpmath.mpc
    s: mpmath.mpc
    q: mpmath.mpc
    t: mpmath.mpc

    def __post_init__(self):
        if not self.x or len(self.x) != len(self.y):
            raise ValueError(f"x and y need the same positive length, got {len(self.x)} and {len(self.y)}")

    @property
    def N(self) -> int:
        return len(self.x)

    def x_at(self, n: int) -> mpmath.mpc:
        """``x_n`` for any integer ``n``, 1-based and periodic."""
        return self.x[(n - 1) % self.N]


def specialization(i: int, j: int, Q, p, s) -> LaumonParams:
    """
    The ``gl_2`` arguments attached to ``psi_ij``::

        x = (X_i p^-1/2, X_i^-1), p-slot p^1/2,
        y = (X_j s^-1/2, X_j^-1), s-slot s^1/2,
        q = Q^4, t = -Q^-4, X_k = i Q^(2(k-2)).

    ``p`` and ``s`` are given through their square roots by the caller when a
    branch matters; here the principal roots are taken.
    """
    return specialization_from_roots(i, j, Q, mpmath.sqrt(mpmath.mpc(p)), mpmath.sqrt(mpmath.mpc(s)))


def specialization_from_roots(i: int, j: int, Q, pr, sr) -> LaumonParams:
    for index in (i, j):
        if index not in (1, 2, 3):
            raise ValueError(f"psi indices run over 1, 2, 3, got {index}")
    Q = mpmath.mpc(Q)
    Xi, Xj = X_value(i, Q), X_value(j, Q)
    return LaumonParams(
        x=(Xi / pr, 1 / Xi),
        y=(Xj / sr, 1 / Xj),
        p=mpmath.mpc(pr),
        s=mpmath.mpc(sr),
        q=Q**4,
        t=-(Q**-4),
    )


def X_value(k: int, Q) -> mpmath.mpc:
    """``X_k = i Q^(2(k-2))``."""
    return mpmath.mpc(0, 1) * mpmath.mpc(Q) ** (2 * (k - 2))


def weight(tup: PartitionTuple, params: LaumonParams) -> mpmath.mpc:
    result = mpmath.mpc(1)
    for beta, partition in enumerate(tup, start=1):
        for alpha, part in enumerate(partition.parts, start=1):
            box = params.p * params.t * params.x_at(alpha + beta) / (params.q * params.x_at(alpha + beta - 1))
            result *= box**part
    return result


def nekrasov_ratio(
    tup: PartitionTuple, params: LaumonParams, b_max: int, tol: float = 0.0
) -> mpmath.mpc:
    """
    ``prod_(i,j) N^(j-i)(q/t y_j/y_i) / N^(j-i)(y_j/y_i)``; a positive ``tol``
    runs the ``b_max`` monitor on every factor.
    """
    N = params.N
    result = mpmath.mpc(1)
    for i in range(N):
        for j in range(N):
            lam, mu = tup[i], tup[j]
            if not lam.parts and not mu.parts:
                continue
            u = params.y[j] / params.y[i]
            top = NekArgs(j - i, params.q / params.t * u, params.q, params.s, N, b_max)
            bottom = NekArgs(j - i, u, params.q, params.s, N, b_max)
            if tol > 0:
                result *= nek_factor_stable(lam, mu, top, tol) / nek_factor_stable(lam, mu, bottom, tol)
            else:
                result *= nek_factor(lam, mu, top) / nek_factor(lam, mu, bottom)
    return result


def term(tup: PartitionTuple, params: LaumonParams, b_max: int, tol: float = 0.0) -> mpmath.mpc:
    return nekrasov_ratio(tup, params, b_max, tol) * weight(tup, params)


def level_sums(
    params: LaumonParams, max_boxes: int, b_max: int, tol: float = 0.0
) -> Iterator[Tuple[int, mpmath.mpc]]:
    """Contributions of all tuples with exactly ``n`` boxes, for ``n = 0 .. max_boxes``."""
    grouped = itertools.groupby(partition_tuples(params.N, max_boxes), key=tuple_size)
    for size, tuples in grouped:
        yield size, mpmath.fsum(term(tup, params, b_max, tol) for tup in tuples)


def laumon_f(
    params: LaumonParams, max_boxes: int, b_max: int, precision: int = 30, tol: float = 0.0
) -> mpmath.mpc:
    """The partition sum truncated at ``max_boxes`` boxes."""
    with mpmath.workdps(precision):
        return mpmath.fsum(value for _, value in level_sums(params, max_boxes, b_max, tol))


def laumon_f_stable(params: LaumonParams, config: LaumonConfig) -> mpmath.mpc:
    """
    ``laumon_f`` with both monitors: every Nekrasov factor against
    ``b_max + N``, and the sum against one more box. On an unstable box count
    the count is doubled once.

    Raises:
        TruncationUnstable: If either monitor still fails.
    """
    max_boxes = config.max_boxes
    for _ in range(MAX_BOX_DOUBLINGS + 1):
        with mpmath.workdps(config.precision):
            levels = dict(level_sums(params, max_boxes + 1, config.b_max, config.tol))
            total = mpmath.fsum(levels[n] for n in range(max_boxes + 1))
            change = abs(levels[max_boxes + 1]) / max(1, abs(total))
        if change <= config.tol:
            logger.debug(f"Laumon sum stable at {max_boxes} boxes ({change:.2e})")
            return total + levels[max_boxes + 1]
        logger.warning(f"Laumon sum moved by {change:.2e} at {max_boxes + 1} boxes")
        max_boxes *= 2
    raise TruncationUnstable("Laumon partition sum", float(change), config.tol)


def laurent_coefficients(
    func: Callable[[mpmath.mpc, mpmath.mpc], mpmath.mpc],
    radius_p: float,
    radius_s: float,
    p_half_orders: int,
    s_half_orders: int,
    precision: int = 30,
) -> Dict[Tuple[int, int], mpmath.mpc]:
    """
    Coefficients of ``func(pr, sr)`` in its expansion in ``pr = p^1/2`` and
    ``sr = s^1/2`` by discrete Cauchy integrals on circles.

    Returns:
        ``(m, n) -> coefficient of pr^m sr^n`` for ``0 <= m <= p_half_orders``
        and ``|n| <= s_half_orders``; aliasing is below ``radius^grid``.
    """
    grid_p = p_half_orders + 12
    grid_s = 2 * s_half_orders + 12
    with mpmath.workdps(precision):
        values = {}
        for a in range(grid_p):
            pr = radius_p * mpmath.expjpi(mpmath.mpf(2 * a) / grid_p)
            for b in range(grid_s):
                sr = radius_s * mpmath.expjpi(mpmath.mpf(2 * b) / grid_s)
                values[a, b] = func(pr, sr)
        coefficients = {}
        for m in range(p_half_orders + 1):
            for n in range(-s_half_orders, s_half_orders + 1):
                total = mpmath.fsum(
                    values[a, b] * mpmath.expjpi(-mpmath.mpf(2 * a * m) / grid_p - mpmath.mpf(2 * b * n) / grid_s)
                    for a in range(grid_p)
                    for b in range(grid_s)
                )
                coefficients[m, n] = total / (grid_p * grid_s * radius_p**m * radius_s**n)
        return coefficients
