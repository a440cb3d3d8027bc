"""
SL(2, Z) relations of the twisted operators and the matrix identities between
``S`` and the basic difference operators.

All identities are compared in cross-multiplied form; only the diagonal unit
``D_A`` is ever inverted.
"""

import logging
from dataclasses import dataclass
from typing import Callable, Dict, List, Optional, Tuple

from ...core.exceptions import NotAUnit, NotProportional, ScalarDependsOnPS, ShiftMismatch
from ...core.report import Report
from ..corering.field import q_power
from ..corering.ratfunc import format_ratfunc, ratfunc_is_q_only
from ..freegroup.sl2z import IDENTITY, SHIFT_A_INV
from ..plethystic.ring import RingElement, ring_inverse_unit
from ..plethystic.zero import ZeroTest, timed_zero_check
from ..qpoch.policy import NumericPolicy
from .catalog import (
    DA_inverse_matrix,
    S_matrix,
    build_DA,
    build_DB,
    build_OA1,
    build_OB1,
    build_S,
    s_squared_expected,
)
from .matrix import DIM, Mat3R, mat_equal, scalar_matrix
from .twisted import TwistedOperator

logger = logging.getLogger(__name__)

# entry used first when reading off the braid scalar
KAPPA_ENTRY = (1, 0)


def describe_entry(index: int) -> str:
    return f"entry ({index // DIM + 1},{index % DIM + 1})"


@dataclass(frozen=True)
class BraidCheck:
    """
    Outcome of the braid relation ``D_A D_B D_A = kappa D_B D_A D_B``.

    Attributes:
        kappa: The proportionality scalar.
        left: ``D_A D_B D_A``.
        right: ``D_B D_A D_B``.
        test: Zero test of ``left - kappa * right``.
    """

    kappa: RingElement
    left: TwistedOperator
    right: TwistedOperator
    test: ZeroTest


def _kappa(left: Mat3R, right: Mat3R) -> RingElement:
    candidates = [KAPPA_ENTRY] + [(i, j) for i in range(DIM) for j in range(DIM)]
    for i, j in candidates:
        numerator, denominator = left[i, j], right[i, j]
        if not (numerator.is_unit() and denominator.is_unit()):
            continue
        try:
            return numerator * ring_inverse_unit(denominator)
        except NotAUnit:
            continue
    raise NotProportional("No pair of single-term entries to read the scalar from")


def check_braid(policy: NumericPolicy) -> BraidCheck:
    """
    Verifies the projective braid relation.

    Raises:
        ShiftMismatch: If the two sides carry different shifts.
        NotProportional: If no entry pair determines the scalar.
        ScalarDependsOnPS: If the scalar involves ``p`` or ``s``.
    """
    DA, DB = build_DA(), build_DB()
    left = DA @ DB @ DA
    right = DB @ DA @ DB
    if left.shift != right.shift:
        raise ShiftMismatch(str(left.shift), str(right.shift))

    kappa = _kappa(left.matrix, right.matrix)
    value = kappa.scalar_value()
    if value is None or not ratfunc_is_q_only(value):
        raise ScalarDependsOnPS(f"Braid scalar {kappa} depends on p or s")
    logger.info(f"Braid scalar: {format_ratfunc(value)}")

    test = mat_equal(left.matrix, right.matrix.scale(value), policy, "braid")
    return BraidCheck(kappa, left, right, test)


def check_S_squared(policy: NumericPolicy) -> ZeroTest:
    S = build_S()
    square = S @ S
    expected = s_squared_expected()
    if square.shift != expected.shift:
        raise ShiftMismatch(str(square.shift), str(expected.shift))
    return mat_equal(square.matrix, expected.matrix, policy, "s-squared")


def check_S_fourth(policy: NumericPolicy) -> ZeroTest:
    """``S^4 = 16 Q^-16``, after the rational pexp of ``-2X`` has been folded."""
    S = build_S()
    square = S @ S
    fourth = square @ square
    if fourth.shift != IDENTITY:
        raise ShiftMismatch(str(fourth.shift), str(IDENTITY))
    return mat_equal(fourth.matrix, scalar_matrix(16 * q_power(-32)), policy, "s-fourth")


def _ob1_consistency() -> Tuple[Mat3R, Mat3R]:
    S = S_matrix()
    return build_OA1() @ S, S @ build_OB1()


def _dehn_twist() -> Tuple[Mat3R, Mat3R]:
    OA1 = build_OA1()
    OB1 = build_OB1()
    moved = OB1.shift(SHIFT_A_INV)
    left = DA_inverse_matrix() @ moved @ moved @ build_DA().matrix @ OA1
    return left, OA1 @ OB1 @ OB1


def _identity() -> Tuple[Mat3R, Mat3R]:
    return Mat3R.identity(), Mat3R.identity()


CONJUGATION_IDENTITIES: Dict[str, Callable[[], Tuple[Mat3R, Mat3R]]] = {
    "ob1-consistency": _ob1_consistency,
    "dehn-twist": _dehn_twist,
    "identity": _identity,
}


def conjugation_identity_check(name: str, policy: NumericPolicy) -> ZeroTest:
    try:
        build = CONJUGATION_IDENTITIES[name]
    except KeyError:
        raise ValueError(
            f"Unknown identity '{name}', expected one of {sorted(CONJUGATION_IDENTITIES)}"
        ) from None
    left, right = build()
    return mat_equal(left, right, policy, name)


def sl2z_report(policy: NumericPolicy, identities: Optional[List[str]] = None) -> Report:
    """Braid relation, ``S^2``, ``S^4`` and the named matrix identities."""
    report = Report(suite="sl2z", policy=policy.model_dump())

    braid: Dict[str, BraidCheck] = {}

    def run_braid() -> ZeroTest:
        braid["result"] = check_braid(policy)
        return braid["result"].test

    record = timed_zero_check("braid", run_braid, describe_entry)
    if "result" in braid:
        value = braid["result"].kappa.scalar_value()
        record.detail = record.detail or f"kappa = {format_ratfunc(value)}"  # type: ignore[arg-type]
    report.add(record)
    report.add(timed_zero_check("s-squared", lambda: check_S_squared(policy), describe_entry))
    report.add(timed_zero_check("s-fourth", lambda: check_S_fourth(policy), describe_entry))
    for name in identities or list(CONJUGATION_IDENTITIES):
        report.add(
            timed_zero_check(
                name, lambda name=name: conjugation_identity_check(name, policy), describe_entry
            )
        )
    return report

