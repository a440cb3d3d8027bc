"""
Two-tier zero testing for ring elements.

Canonical forms decide most identities outright: an element whose term map is
empty is zero. Distinct atoms are not known to be multiplicatively independent,
so a nonempty element is then sampled numerically; such a result is reported as
numerically zero but symbolically unreduced.
"""

import logging
from dataclasses import dataclass
from typing import Callable, Iterable, List, Optional, Sequence, Set

import mpmath

from ...core.report import CheckRecord, Tier, stopwatch
from ..qpoch.evaluate import ring_eval_with_scale
from ..qpoch.policy import NumericPolicy
from ..qpoch.sampling import SamplePoint, Sampler
from .fraction import Vector
from .ring import RingElement

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ZeroTest:
    """
    Outcome of a zero test.

    Attributes:
        is_zero: Whether the element (or every element) vanished.
        tier: ``symbolic`` if canonical forms decided, ``numeric`` otherwise.
        residual: Largest sampled modulus, relative to the largest term when
            that exceeds 1; 0 on the symbolic tier.
        failing: Index of the first element that did not vanish, or -1.
    """

    is_zero: bool
    tier: Tier = "symbolic"
    residual: float = 0.0
    failing: int = -1

    def __bool__(self) -> bool:
        return self.is_zero


def sample_points(
    elements: Iterable[RingElement], policy: NumericPolicy, salt: str = ""
) -> List[SamplePoint]:
    """Draws ``policy.samples`` points admissible for every atom of ``elements``."""
    vectors: Set[Vector] = set()
    for x in elements:
        vectors |= x.vectors()
    return Sampler(policy, salt).draw_many(sorted(vectors))


def zero_test_many(
    elements: Sequence[RingElement], policy: NumericPolicy, salt: str = ""
) -> ZeroTest:
    """
    Tests a batch of elements against shared sample points.

    Raises:
        NearUnitCircle: If no admissible sample point can be drawn.
    """
    pending = [(i, x) for i, x in enumerate(elements) if not x.is_zero_symbolic()]
    if not pending:
        return ZeroTest(True)

    points = sample_points((x for _, x in pending), policy, salt)
    worst = 0.0
    for index, x in pending:
        for pt in points:
            value, scale = ring_eval_with_scale(x, pt, policy)
            # cancellation error grows with the largest term
            modulus = float(abs(value) / max(1, scale))
            worst = max(worst, modulus)
            if modulus >= policy.tol:
                logger.debug(
                    f"Element {index} is nonzero at {pt.describe()}: |value| = {mpmath.nstr(modulus, 5)}"
                )
                return ZeroTest(False, "numeric", worst, index)
    logger.debug(f"{len(pending)} unreduced element(s) vanished numerically, residual {worst:.3e}")
    return ZeroTest(True, "numeric", worst)


def ring_zero_test(x: RingElement, policy: NumericPolicy, salt: str = "") -> ZeroTest:
    return zero_test_many([x], policy, salt)


def ring_is_zero(x: RingElement, policy: NumericPolicy) -> bool:
    """Symbolic fast path, then numeric certification at seeded sample points."""
    return ring_zero_test(x, policy).is_zero


def timed_zero_check(
    check_id: str,
    compute: Callable[[], ZeroTest],
    describe_failure: Optional[Callable[[int], str]] = None,
) -> CheckRecord:
    """Runs ``compute`` under a stopwatch and turns its zero test into a record."""
    with stopwatch() as timing:
        test = compute()
    detail = ""
    if not test.is_zero and test.failing >= 0:
        detail = describe_failure(test.failing) if describe_failure else f"element {test.failing}"
    logger.debug(f"{check_id}: {'ok' if test.is_zero else 'FAILED'} ({test.tier})")
    return CheckRecord(
        id=check_id,
        tier=test.tier,
        residual=test.residual,
        passed=test.is_zero,
        ms=timing["ms"],
        detail=detail,
    )
