from pathlib import Path
from typing import Callable, Dict, List, Optional

import click

from ...core.config import AppConfig
from ...core.report import Report

json_option = click.option(
    "--json",
    "json_path",
    type=click.Path(dir_okay=False, path_type=Path),
    help="Also write the report as JSON to this file.",
)


@click.group(
    help="Run the verification suites and report every identity checked",
    short_help="Verify identities",
    epilog="""
\b
\b\bExamples:
  # braid relation, S^2 and S^4
  edaha verify sl2z
\b
  # relator annihilation with a larger exhaustive sweep
  edaha verify relations --max-total-len 3
\b
  # one appendix family, report as json
  edaha verify appendix --family R4A --json r4a.json
\b
  # everything, at higher precision
  edaha --precision 80 --tol 1e-50 verify all
""",
)
def verify():
    pass


def _run(config: AppConfig, suite: str) -> Report:
    from ..service.feedback import FeedbackService

    with FeedbackService(config).progress(f"Running {suite}"):
        return SUITES[suite](config)


def _sl2z(config: AppConfig):
    from ...libs.operators import sl2z_report
    from ..utils.reporting import numeric_policy

    return sl2z_report(numeric_policy(config))


def _relations(config: AppConfig):
    from ...libs.representation import relations_report
    from ..utils.reporting import verify_policy

    return relations_report(
        verify_policy(config),
        max_total_len=config.verify.max_total_len,
        random_tuples=config.verify.random_tuples,
        random_max_total_len=config.verify.random_max_total_len,
        workers=config.verify.workers,
    )


def _shifts(config: AppConfig):
    from ...libs.representation import shifts_report
    from ..utils.reporting import verify_policy

    length = config.verify.max_word_len
    return shifts_report(
        verify_policy(config),
        max_word_len=length,
        max_b_word_len=max(0, length - 1),
        workers=config.verify.workers,
    )


def _equivariance(config: AppConfig):
    from ...libs.representation import equivariance_report
    from ..utils.reporting import verify_policy

    return equivariance_report(
        verify_policy(config),
        max_word_len=max(0, config.verify.max_word_len - 1),
        workers=config.verify.workers,
    )


def _appendix(config: AppConfig, family: Optional[str] = None):
    from ...core.report import merge_reports
    from ...libs.freealgebra import appendix_certificates, pslz_theorem_certificates

    workers = config.verify.workers
    if family is not None:
        return appendix_certificates(family, workers)
    return merge_reports(
        "appendix",
        [appendix_certificates(None, workers), pslz_theorem_certificates(workers)],
    )


def _casimir(config: AppConfig):
    from ...libs.freealgebra import casimir_certificates

    return casimir_certificates(config.verify.workers)


def _psi0(config: AppConfig):
    from ...libs.representation import psi0_checks
    from ..utils.reporting import numeric_policy

    return psi0_checks(numeric_policy(config))


def _qpoch(config: AppConfig):
    from ...libs.qpoch import qpoch_identity_checks
    from ..utils.reporting import numeric_policy

    policy = numeric_policy(config)
    return Report(suite="qpoch", policy=policy.model_dump(), checks=qpoch_identity_checks(policy))


def _eigen(config: AppConfig):
    from ...core.report import merge_reports
    from ...libs.laumon import eigen_relation_check, psi_structure_checks
    from ...libs.qpoch import NumericPolicy

    policy = NumericPolicy.from_config(config.numeric, tol=config.laumon.tol)
    reports = [psi_structure_checks()] + [eigen_relation_check(k, policy) for k in (1, 2, 3)]
    return merge_reports("eigen", reports)


SUITES: Dict[str, Callable] = {
    "qpoch": _qpoch,
    "sl2z": _sl2z,
    "relations": _relations,
    "shifts": _shifts,
    "equivariance": _equivariance,
    "appendix": _appendix,
    "casimir": _casimir,
    "psi0": _psi0,
    "eigen": _eigen,
}


def _override(config: AppConfig, **verify_values) -> AppConfig:
    values = {k: v for k, v in verify_values.items() if v is not None}
    if not values:
        return config
    return config.model_copy(update={"verify": config.verify.model_copy(update=values)})


def _emit(config: AppConfig, reports: List, json_path: Optional[Path], suite: Optional[str] = None):
    from ..utils.reporting import emit_reports

    emit_reports(config, reports, json_path, suite)


@verify.command(help="Braid relation, S^2, S^4 and the conjugation identities")
@json_option
@click.pass_obj
def sl2z(config: AppConfig, json_path):
    _emit(config, [_run(config, "sl2z")], json_path)


@verify.command(help="Relator annihilation by Psi: base relations, exhaustive and random tuples")
@click.option("--max-total-len", type=click.IntRange(0, 6), help="Exhaustive sweep bound.")
@click.option("--random-tuples", type=click.IntRange(min=0), help="Number of seeded random tuples.")
@json_option
@click.pass_obj
def relations(config: AppConfig, max_total_len, random_tuples, json_path):
    config = _override(config, max_total_len=max_total_len, random_tuples=random_tuples)
    _emit(config, [_run(config, "relations")], json_path)


@verify.command(help="Right multiplication by a as a shift, and the b-identity")
@click.option("--max-word-len", type=click.IntRange(0, 8), help="Longest word checked.")
@json_option
@click.pass_obj
def shifts(config: AppConfig, max_word_len, json_path):
    config = _override(config, max_word_len=max_word_len)
    _emit(config, [_run(config, "shifts")], json_path)


@verify.command(help="Equivariance under a, the S flips, recursion consistency and idempotents")
@click.option("--max-word-len", type=click.IntRange(0, 8), help="One more than the longest word checked.")
@json_option
@click.pass_obj
def equivariance(config: AppConfig, max_word_len, json_path):
    config = _override(config, max_word_len=max_word_len)
    _emit(config, [_run(config, "equivariance")], json_path)


@verify.command(help="Invariance certificates of the relator ideal and the PSL(2, Z) chains")
@click.option("--family", help="Only this relator family, e.g. R4A.")
@json_option
@click.pass_obj
def appendix(config: AppConfig, family, json_path):
    from ..service.feedback import FeedbackService

    with FeedbackService(config).progress("Running appendix"):
        report = _appendix(config, family)
    _emit(config, [report], json_path)


@verify.command(help="Idempotence, invariance and annihilation certificates of the Casimir")
@json_option
@click.pass_obj
def casimir(config: AppConfig, json_path):
    _emit(config, [_run(config, "casimir")], json_path)


@verify.command(help="The finite-dimensional quotient: relations, rank and the p -> 0 limit")
@json_option
@click.pass_obj
def psi0(config: AppConfig, json_path):
    _emit(config, [_run(config, "psi0")], json_path)


@verify.command(help="q-Pochhammer product, inversion and permutation identities")
@json_option
@click.pass_obj
def qpoch(config: AppConfig, json_path):
    _emit(config, [_run(config, "qpoch")], json_path)


@verify.command(help="Eigen relation of O_B(1) on the closed forms psi_ij")
@json_option
@click.pass_obj
def eigen(config: AppConfig, json_path):
    _emit(config, [_run(config, "eigen")], json_path)


@verify.command(name="all", help="Every suite above, one merged report")
@json_option
@click.pass_obj
def run_all(config: AppConfig, json_path):
    reports = [_run(config, suite) for suite in SUITES]
    _emit(config, reports, json_path, suite="all")
