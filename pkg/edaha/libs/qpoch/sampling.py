"""
Seeded random sample points for numeric certification.

A point is stored through the square roots of ``Q``, ``p`` and ``s`` so that
half-integer exponents evaluate consistently.
"""

import logging
import math
import random
from dataclasses import dataclass
from typing import Iterable, List, Optional, Tuple

import mpmath

from ...core.exceptions import NearUnitCircle
from .policy import NumericPolicy

logger = logging.getLogger(__name__)

Vector = Tuple[int, int]

P_MODULUS = (0.05, 0.35)
Q_MODULUS = (0.5, 2.0)
# Q within this distance of a root of unity of order <= Q_ROOT_ORDER is redrawn
Q_ROOT_GUARD = 0.1
Q_ROOT_ORDER = 8
MAX_ATTEMPTS = 1000


@dataclass(frozen=True)
class SamplePoint:
    """
    A point ``(Q, p, s)`` given by its half-roots.

    Attributes:
        qr: ``Q^(1/2)``.
        pr: ``p^(1/2)``.
        sr: ``s^(1/2)``.
    """

    qr: mpmath.mpc
    pr: mpmath.mpc
    sr: mpmath.mpc

    @classmethod
    def from_values(cls, Q, p, s) -> "SamplePoint":
        return cls(mpmath.sqrt(mpmath.mpc(Q)), mpmath.sqrt(mpmath.mpc(p)), mpmath.sqrt(mpmath.mpc(s)))

    @property
    def roots(self) -> Tuple[mpmath.mpc, mpmath.mpc, mpmath.mpc]:
        return self.qr, self.pr, self.sr

    @property
    def Q(self) -> mpmath.mpc:
        return self.qr**2

    @property
    def p(self) -> mpmath.mpc:
        return self.pr**2

    @property
    def s(self) -> mpmath.mpc:
        return self.sr**2

    def monomial(self, a: int, b: int) -> mpmath.mpc:
        """``p^a s^b`` at this point."""
        return mpmath.power(self.pr, 2 * a) * mpmath.power(self.sr, 2 * b)

    def admissible(self, vectors: Iterable[Vector], epsilon: float) -> bool:
        low, high = 1 - epsilon, 1 / (1 - epsilon)
        for a, b in vectors:
            modulus = abs(self.monomial(a, b))
            if low < modulus < high:
                return False
        return True

    def describe(self) -> str:
        def fmt(z):
            return mpmath.nstr(z, 8)

        return f"Q={fmt(self.Q)}, p={fmt(self.p)}, s={fmt(self.s)}"


def near_root_of_unity(Q: mpmath.mpc) -> bool:
    """True if ``Q^n`` is within ``Q_ROOT_GUARD`` of 1 for some ``n <= Q_ROOT_ORDER``."""
    return any(abs(Q**n - 1) < Q_ROOT_GUARD for n in range(1, Q_ROOT_ORDER + 1))


class Sampler:
    """Draws admissible sample points from a seeded generator."""

    def __init__(self, policy: NumericPolicy, salt: str = ""):
        self.policy = policy
        self._rng = random.Random(f"{policy.seed}:{salt}")

    def _polar(self, bounds: Tuple[float, float], log_scale: bool = False) -> mpmath.mpc:
        if log_scale:
            r = math.exp(self._rng.uniform(math.log(bounds[0]), math.log(bounds[1])))
        else:
            r = self._rng.uniform(*bounds)
        theta = self._rng.uniform(0, 2 * float(mpmath.pi))
        return mpmath.mpc(r) * mpmath.expj(theta)

    def draw(self, vectors: Iterable[Vector] = ()) -> SamplePoint:
        """
        Draws one point avoiding ``|p^a s^b| = 1`` for every given vector.

        Raises:
            NearUnitCircle: If no admissible point is found.
        """
        vectors = list(vectors)
        with mpmath.workdps(self.policy.precision):
            for _ in range(MAX_ATTEMPTS):
                Q = self._polar(Q_MODULUS, log_scale=True)
                if near_root_of_unity(Q):
                    continue
                point = SamplePoint.from_values(
                    Q, self._polar(P_MODULUS), self._polar(P_MODULUS)
                )
                if point.admissible(vectors, self.policy.epsilon):
                    return point
        raise NearUnitCircle(MAX_ATTEMPTS)

    def draw_many(
        self, vectors: Iterable[Vector] = (), count: Optional[int] = None
    ) -> List[SamplePoint]:
        vectors = list(vectors)
        return [self.draw(vectors) for _ in range(count or self.policy.samples)]
