"""
Numeric checks of the basic q-Pochhammer identities.

    (z; p) = (1 - z) (z p; p)
    (z; 1/p) = 1 / (p z; p)
    (z; p1, p2) = (z; p2, p1)

plus agreement with the truncated product and stability under a larger
series cutoff.
"""

import logging
import random
from typing import Callable, List, Tuple

import mpmath

from ...core.report import CheckRecord, stopwatch
from .poch import poch_eval, poch_product
from .policy import NumericPolicy

logger = logging.getLogger(__name__)

ORACLE_CUTOFF = 80


def _random_point(rng: random.Random, low: float, high: float) -> mpmath.mpc:
    return mpmath.mpc(rng.uniform(low, high)) * mpmath.expj(rng.uniform(0, 6.283185307179586))


def _record(
    name: str, policy: NumericPolicy, compute: Callable[[], Tuple[mpmath.mpc, mpmath.mpc]]
) -> CheckRecord:
    with stopwatch() as timing:
        with mpmath.workdps(policy.precision):
            left, right = compute()
            scale = max(abs(left), abs(right), mpmath.mpf(1))
            residual = float(abs(left - right) / scale)
    passed = residual < policy.tol
    logger.debug(f"{name}: residual {residual:.3e}")
    return CheckRecord(
        id=name, tier="numeric", residual=residual, passed=passed, ms=timing["ms"]
    )


def qpoch_identity_checks(policy: NumericPolicy) -> List[CheckRecord]:
    """Runs every identity at ``policy.samples`` seeded points."""
    rng = random.Random(f"{policy.seed}:qpoch")
    records: List[CheckRecord] = []
    for k in range(policy.samples):
        z = _random_point(rng, 0.2, 2.0)
        p = mpmath.mpf("0.3") * mpmath.expj(rng.uniform(0, 6.283185307179586))
        p1 = _random_point(rng, 0.05, 0.4)
        p2 = _random_point(rng, 0.05, 0.4)
        big = _random_point(rng, 2.5, 8.0)

        records.append(
            _record(
                f"product-rule[{k}]",
                policy,
                lambda: (
                    poch_eval(z, [p], policy),
                    (1 - z) * poch_eval(z * p, [p], policy),
                ),
            )
        )
        records.append(
            _record(
                f"inversion[{k}]",
                policy,
                lambda: (
                    poch_eval(z, [1 / p], policy),
                    1 / poch_eval(p * z, [p], policy),
                ),
            )
        )
        records.append(
            _record(
                f"permutation[{k}]",
                policy,
                lambda: (
                    poch_eval(z, [p1, p2, big], policy),
                    poch_eval(z, [big, p2, p1], policy),
                ),
            )
        )
        records.append(
            _record(
                f"truncated-product[{k}]",
                policy,
                lambda: (
                    poch_eval(z, [p1, p2], policy),
                    poch_product(z, [p1, p2], ORACLE_CUTOFF, policy.precision),
                ),
            )
        )
        doubled = policy.model_copy(
            update={"max_product_index": 2 * policy.max_product_index}
        )
        records.append(
            _record(
                f"cutoff-stability[{k}]",
                policy,
                lambda: (
                    poch_eval(z, [p1, big], policy),
                    poch_eval(z, [p1, big], doubled),
                ),
            )
        )
    return records
