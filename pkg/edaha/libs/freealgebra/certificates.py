"""
Ideal-membership certificates: data files that claim an element of the free
algebra equals an explicit combination of relators.

A certificate is checked by expanding both sides and subtracting. In ``exact``
mode the difference must vanish identically. In ``reduce`` mode it is first
passed through the rewriting engine of ``reduction``, which only applies sound
consequences of the relators.
"""

import json
import logging
from functools import lru_cache
from pathlib import Path
from typing import Dict, List, Literal, Optional

from pydantic import BaseModel, Field, ValidationError, model_validator

from ...core.constants import CERTIFICATES_DIR
from ...core.exceptions import CertificateFormatError, EdahaError, VerificationError
from ...core.report import CheckRecord, Report, stopwatch
from ...core.utils.concurrency import CheckPool
from ..corering.parse import parse_ratfunc
from ..corering.ratfunc import ratfunc_is_q_only
from .automorphisms import apply_auto, named_element
from .ncpoly import NCPoly, format_monomial, parse_monomial
from .reduction import reduce_modulo_ideal
from .relators import relator

logger = logging.getLogger(__name__)

CERTIFICATE_FILES = ("inverse", "pslz", "casimir", "appendix")
APPENDIX_FAMILIES = (
    "R1A", "R1B", "R2", "R3", "R4A", "R4B", "R5A", "R5B",
    "R6", "R7", "R8", "R9", "R10", "R11",
)  # fmt: skip


class NonZeroResidual(VerificationError):
    """A certificate left a nonzero difference; names a few offending monomials."""

    def __init__(self, certificate: str, residual: NCPoly, shown: int = 3):
        self.certificate = certificate
        self.residual = residual
        monomials = [format_monomial(m) for m, _ in list(residual.terms())[:shown]]
        more = len(residual) - len(monomials)
        listing = "; ".join(monomials) + (f" (+{more} more)" if more > 0 else "")
        super().__init__(
            f"Certificate '{certificate}' leaves {len(residual)} monomial(s): {listing}"
        )


class CertificateExpr(BaseModel):
    """
    One summand ``coeff * left * auto(operand) * right``.

    Exactly one operand is given: a ``generator`` product such as
    ``"A(1) B(g a^-1)"``, a ``relator`` family with its ``words``, or a product of
    named ``element`` values (``C``, ``e_A``, ``e_B``).
    """

    coeff: str = "1"
    left: str = ""
    right: str = ""
    auto: str = ""
    generator: Optional[str] = None
    relator: Optional[str] = None
    words: List[str] = Field(default_factory=list)
    element: Optional[str] = None

    @model_validator(mode="after")
    def _one_operand(self) -> "CertificateExpr":
        given = [x for x in (self.generator, self.relator, self.element) if x is not None]
        if len(given) != 1:
            raise ValueError("exactly one of generator, relator, element is required")
        if self.words and self.relator is None:
            raise ValueError("words are only meaningful for a relator")
        return self

    def operand(self) -> NCPoly:
        if self.generator is not None:
            return parse_monomial(self.generator)
        if self.relator is not None:
            return relator(self.relator, *self.words)
        product = NCPoly.one()
        for name in (self.element or "").split():
            product = product * named_element(name)
        return product

    def evaluate(self) -> NCPoly:
        coeff = parse_ratfunc(self.coeff)
        if not ratfunc_is_q_only(coeff):
            raise EdahaError(f"Certificate coefficient '{self.coeff}' depends on p or s")
        value = self.operand()
        if self.auto:
            value = apply_auto(self.auto, value)
        return (parse_monomial(self.left) * value * parse_monomial(self.right)).scale(coeff)


class Certificate(BaseModel):
    """
    The claim ``sum(lhs) == sum(terms)`` in the free algebra.

    Attributes:
        id: Stable identifier used in reports.
        family: Grouping key, e.g. ``R6`` for the appendix or ``casimir``.
        mode: ``exact`` or ``reduce``.
    """

    id: str
    family: str
    description: str = ""
    mode: Literal["exact", "reduce"] = "exact"
    lhs: List[CertificateExpr]
    terms: List[CertificateExpr] = Field(default_factory=list)

    def residual(self) -> NCPoly:
        total = NCPoly.zero()
        for expr in self.lhs:
            total = total + expr.evaluate()
        for expr in self.terms:
            total = total - expr.evaluate()
        if self.mode == "reduce":
            total = reduce_modulo_ideal(total)
        return total


class CertificateFile(BaseModel):
    certificates: List[Certificate]


def load_certificate_file(path: Path) -> List[Certificate]:
    """
    Raises:
        CertificateFormatError: If the file is not valid JSON or does not match
            the certificate schema.
    """
    try:
        raw = json.loads(path.read_text(encoding="utf-8"))
        return CertificateFile.model_validate(raw).certificates
    except (OSError, json.JSONDecodeError, ValidationError) as e:
        raise CertificateFormatError(str(path), str(e)) from e


@lru_cache(maxsize=None)
def load_certificates(name: str) -> List[Certificate]:
    """Loads ``assets/certificates/<name>.json``."""
    certificates = load_certificate_file(CERTIFICATES_DIR / f"{name}.json")
    logger.debug(f"Loaded {len(certificates)} certificates from {name}")
    return certificates


def certificate_check(certificate: Certificate) -> bool:
    return certificate.residual().is_zero()


def require_certificate(certificate: Certificate) -> None:
    """
    Raises:
        NonZeroResidual: If the certificate does not close.
    """
    residual = certificate.residual()
    if not residual.is_zero():
        raise NonZeroResidual(certificate.id, residual)


def certificate_record(certificate: Certificate) -> CheckRecord:
    detail = ""
    with stopwatch() as timing:
        try:
            require_certificate(certificate)
            passed = True
        except NonZeroResidual as e:
            passed, detail = False, str(e)
    if not passed:
        logger.warning(detail)
    return CheckRecord(id=certificate.id, passed=passed, ms=timing["ms"], detail=detail)


def certificates_report(
    suite: str, certificates: List[Certificate], workers: int = 1
) -> Report:
    report = Report(suite=suite)
    if workers > 1 and len(certificates) > 1:
        with CheckPool(max_workers=workers, name=suite) as pool:
            report.extend(pool.map_ordered(certificate_record, certificates))
    else:
        report.extend([certificate_record(c) for c in certificates])
    closed = len(report.checks) - len(report.failures)
    logger.info(f"{suite}: {closed}/{len(report.checks)} certificates closed")
    return report


def casimir_certificates(workers: int = 1) -> Report:
    return certificates_report("casimir", load_certificates("casimir"), workers)


def pslz_theorem_certificates(workers: int = 1) -> Report:
    """The mutual-inverse computations for ``a`` and the PSL(2, Z) chains."""
    certificates = load_certificates("inverse") + load_certificates("pslz")
    return certificates_report("pslz", certificates, workers)


def appendix_certificates(family: Optional[str] = None, workers: int = 1) -> Report:
    """
    Checks the invariance of the relator ideal under ``a``, one family or all.

    Raises:
        EdahaError: If ``family`` names no appendix family.
    """
    certificates = load_certificates("appendix")
    if family is not None:
        if family not in APPENDIX_FAMILIES:
            raise EdahaError(
                f"Unknown appendix family '{family}'. "
                f"Choose from: {', '.join(APPENDIX_FAMILIES)}."
            )
        certificates = [c for c in certificates if c.family == family]
    return certificates_report("appendix", certificates, workers)


