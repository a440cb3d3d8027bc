from pathlib import Path

import click

from ...core.config import AppConfig


@click.group(
    help="Compare the closed forms psi_ij with the affine Laumon character",
    short_help="Affine Laumon checks",
    epilog="""
\b
\b\bExamples:
  # one pair at the default point
  edaha laumon check --i 1 --j 2 --mode numeric --p 0.1 --s 0.15 --tol 1e-6
\b
  # coefficient comparison through p^2, s^4
  edaha laumon check --i 1 --j 1 --mode series --p-order 2 --s-order 4
\b
  # all nine pairs on four threads
  edaha --workers 4 laumon check
""",
)
def laumon():
    pass


@laumon.command(help="Specialized Laumon sum against psi_ij, one pair or all nine")
@click.option("--i", "i", type=click.IntRange(1, 3), help="Row index of psi.")
@click.option("--j", "j", type=click.IntRange(1, 3), help="Column index of psi.")
@click.option(
    "--mode",
    type=click.Choice(["numeric", "series"]),
    default="numeric",
    show_default=True,
    help="Compare values at sample points or expansion coefficients.",
)
@click.option("--p", "p", type=click.FloatRange(0, 1, min_open=True, max_open=True), help="Modulus of p.")
@click.option("--s", "s", type=click.FloatRange(0, 1, min_open=True, max_open=True), help="Modulus of s.")
@click.option("--tol", type=click.FloatRange(min=0, min_open=True), help="Accepted residual.")
@click.option("--p-order", type=click.IntRange(0, 8), help="Order in p of series mode.")
@click.option("--s-order", type=click.IntRange(0, 16), help="Order in s of series mode.")
@click.option("--max-boxes", type=click.IntRange(0, 20), help="Boxes in the partition sum.")
@click.option("--b-max", type=click.IntRange(min=4), help="Truncation of the Nekrasov products.")
@click.option(
    "--json",
    "json_path",
    type=click.Path(dir_okay=False, path_type=Path),
    help="Also write the report as JSON to this file.",
)
@click.pass_obj
def check(config: AppConfig, i, j, mode, p, s, tol, p_order, s_order, max_boxes, b_max, json_path):
    from ...core.exceptions import ConfigError
    from ...libs.laumon import ALL_PAIRS, conjecture_check, laumon_report
    from ...libs.qpoch import NumericPolicy
    from ..service.feedback import FeedbackService
    from ..utils.reporting import emit_reports

    if (i is None) != (j is None):
        raise ConfigError("Pass both --i and --j, or neither to check all pairs.")

    overrides = {
        "p": p,
        "s": s,
        "tol": tol,
        "p_order": p_order,
        "s_order": s_order,
        "max_boxes": max_boxes,
        "b_max": b_max,
    }
    laumon_config = config.laumon.model_copy(
        update={k: v for k, v in overrides.items() if v is not None}
    )
    policy = NumericPolicy.from_config(config.numeric, tol=max(config.numeric.tol, laumon_config.tol))

    with FeedbackService(config).progress(f"Summing the Laumon character ({mode})"):
        if i is not None:
            report = conjecture_check(i, j, mode, laumon_config, policy)
        else:
            report = laumon_report(laumon_config, policy, ALL_PAIRS, mode, config.verify.workers)
    emit_reports(config, [report], json_path)
