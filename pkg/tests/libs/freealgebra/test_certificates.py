import json

import pytest

from edaha.core.exceptions import CertificateFormatError
from edaha.libs.freealgebra import (
    APPENDIX_FAMILIES,
    Certificate,
    CertificateExpr,
    NonZeroResidual,
    certificate_check,
    certificate_record,
    load_certificate_file,
    load_certificates,
    require_certificate,
)


def by_id(name, certificate_id):
    return next(c for c in load_certificates(name) if c.id == certificate_id)


def test_bundled_files_load():
    for name in ("inverse", "pslz", "casimir", "appendix"):
        assert load_certificates(name)
    families = {c.family for c in load_certificates("appendix")}
    assert families <= set(APPENDIX_FAMILIES)


def test_a_fixes_e_A():
    assert certificate_check(by_id("casimir", "a-fixes-e_A"))


def test_s_fixes_casimir():
    assert certificate_check(by_id("casimir", "s-fixes-C"))


def test_expr_needs_exactly_one_operand():
    with pytest.raises(ValueError):
        CertificateExpr()
    with pytest.raises(ValueError):
        CertificateExpr(generator="A(1)", element="C")
    with pytest.raises(ValueError):
        CertificateExpr(generator="A(1)", words=["1"])


def test_exact_certificate_with_wrong_claim_fails():
    certificate = Certificate(
        id="wrong",
        family="test",
        lhs=[CertificateExpr(generator="A(1) B(1)")],
        terms=[CertificateExpr(generator="B(1) A(1)")],
    )
    assert not certificate_check(certificate)
    with pytest.raises(NonZeroResidual):
        require_certificate(certificate)
    record = certificate_record(certificate)
    assert not record.passed
    assert "wrong" in record.detail


def test_reduce_mode_uses_the_ideal():
    certificate = Certificate(
        id="alternation",
        family="test",
        mode="reduce",
        lhs=[CertificateExpr(generator="A(1) B(a) A(b)")],
    )
    assert certificate_check(certificate)


def test_coefficients_must_not_depend_on_p_or_s():
    expr = CertificateExpr(coeff="p", generator="A(1)")
    with pytest.raises(Exception):
        expr.evaluate()


def test_malformed_file(tmp_path):
    path = tmp_path / "broken.json"
    path.write_text(json.dumps({"certificates": [{"id": "x"}]}), encoding="utf-8")
    with pytest.raises(CertificateFormatError):
        load_certificate_file(path)
