"""
The finite-dimensional quotient where all labels are identified and C = 0.

``Psi_0`` sends every ``O_A^(g)`` to ``O_A^(1)`` and every ``O_B^(g)`` to the
``p -> 0`` limit of ``O_B^(1)``.
"""

import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import List, Tuple

import mpmath

from ...core.report import CheckRecord, Report, stopwatch
from ..corering.field import C_Q, I
from ..corering.ratfunc import ratfunc_eval
from ..freealgebra.ncpoly import NCPoly, gen_A, gen_B
from ..operators.catalog import build_OA1, build_OB1
from ..operators.checks import describe_entry
from ..operators.matrix import DIM, Mat3R
from ..plethystic.zero import ZeroTest, timed_zero_check
from ..qpoch.policy import NumericPolicy

logger = logging.getLogger(__name__)

# a point with no special relation between Q and roots of unity
GENERIC_Q = mpmath.mpc("1.1373", "0.2411")
SPAN_RANK = 9


@dataclass(frozen=True)
class Psi0Data:
    """
    Attributes:
        A: ``Psi_0(O_A)``.
        B: ``Psi_0(O_B)``.
    """

    A: Mat3R
    B: Mat3R

    def image(self, x: NCPoly) -> Mat3R:
        """``Psi_0`` of a free algebra element; labels are ignored."""
        total = Mat3R.zero()
        for mono, coeff in x.terms():
            product = Mat3R.identity()
            for symbol in mono:
                product = product @ (self.A if symbol.family == "A" else self.B)
            total = total + product.scale(coeff)
        return total


@lru_cache(maxsize=None)
def psi0_data() -> Psi0Data:
    half_c2 = -(C_Q**2) / 2
    B = Mat3R.build([[0, 1, 0], [half_c2, 0, 1], [0, half_c2, 0]])
    return Psi0Data(Mat3R.diagonal([-I * C_Q, 0, I * C_Q]), B)


def defining_relations() -> List[Tuple[str, NCPoly]]:
    A, B = gen_A(), gen_B()
    c2 = C_Q**2
    return [
        ("ABA", A * B * A),
        ("BAB", B * A * B),
        ("A^3 + c^2 A", A**3 + A.scale(c2)),
        ("B^3 + c^2 B", B**3 + B.scale(c2)),
        ("A^2 B + B A^2 + c^2 B", A * A * B + B * A * A + B.scale(c2)),
        ("B^2 A + A B^2 + c^2 A", B * B * A + A * B * B + A.scale(c2)),
        ("B^2 A^2 + c^2 (A^2 + B^2) + c^4", B * B * A * A + (A * A + B * B).scale(c2) + c2**2),
    ]


def spanning_set() -> List[Tuple[str, NCPoly]]:
    A, B = gen_A(), gen_B()
    return [
        ("1", NCPoly.one()),
        ("A", A),
        ("B", B),
        ("A^2", A * A),
        ("AB", A * B),
        ("BA", B * A),
        ("B^2", B * B),
        ("A^2 B", A * A * B),
        ("A B^2", A * B * B),
    ]


def _exact(matrix: Mat3R) -> ZeroTest:
    for index, entry in enumerate(matrix.entries()):
        if not entry.is_zero_symbolic():
            return ZeroTest(False, failing=index)
    return ZeroTest(True)


def span_rank(data: Psi0Data, Q=GENERIC_Q, precision: int = 30) -> int:
    """Numerical rank of the nine spanning images, flattened to vectors in C^9."""
    with mpmath.workdps(precision):
        roots = (mpmath.sqrt(Q), mpmath.mpf(1), mpmath.mpf(1))
        rows = []
        for _, element in spanning_set():
            image = data.image(element)
            row = []
            for entry in image.entries():
                value = entry.scalar_value()
                assert value is not None, "Psi_0 images are scalar matrices"
                row.append(ratfunc_eval(value, roots))
            rows.append(row)
        singular = mpmath.svd(mpmath.matrix(rows), compute_uv=False)
        threshold = mpmath.mpf(10) ** (-(precision // 2))
        return sum(1 for k in range(singular.rows) if abs(singular[k]) > threshold)


def _rank_record(data: Psi0Data, policy: NumericPolicy) -> CheckRecord:
    with stopwatch() as timing:
        rank = span_rank(data, precision=policy.precision)
    logger.info(f"Psi_0 spanning set has rank {rank}")
    return CheckRecord(
        id="spanning-rank",
        tier="numeric",
        passed=rank == SPAN_RANK,
        ms=timing["ms"],
        detail=f"rank {rank} at Q = {mpmath.nstr(GENERIC_Q, 6)}",
    )


def psi0_limit_check() -> ZeroTest:
    """``O_B^(1)`` at ``p = 0`` equals ``Psi_0(O_B)``."""
    limit = build_OB1().at_p_zero()
    B = psi0_data().B
    for i in range(DIM):
        for j in range(DIM):
            if limit[i][j] != B[i, j].scalar_value():
                return ZeroTest(False, failing=i * DIM + j)
    return ZeroTest(True)


def psi0_checks(policy: NumericPolicy) -> Report:
    """Defining relations exactly, the rank of the spanning set, and the ``p -> 0`` limit."""
    data = psi0_data()
    report = Report(suite="psi0", policy=policy.model_dump())
    for name, relation in defining_relations():
        report.add(timed_zero_check(name, lambda r=relation: _exact(data.image(r)), describe_entry))
    report.add(_rank_record(data, policy))
    report.add(timed_zero_check("p->0 limit of O_B(1)", psi0_limit_check, describe_entry))
    report.add(
        timed_zero_check(
            "Psi_0(O_A) = O_A(1)", lambda: _exact(data.A - build_OA1()), describe_entry
        )
    )
    return report
