import logging
from pathlib import Path
from typing import List, Optional

import click

from ...core.config import AppConfig
from ...core.report import Report, merge_reports
from ...libs.qpoch.policy import NumericPolicy
from ..service.feedback import FeedbackService

logger = logging.getLogger(__name__)

# exit code when the suites ran but some check failed
CHECK_FAILED = 2


def numeric_policy(config: AppConfig) -> NumericPolicy:
    return NumericPolicy.from_config(config.numeric)


def verify_policy(config: AppConfig) -> NumericPolicy:
    """The numeric policy with the looser residual accepted for matrix sweeps."""
    tol = max(config.numeric.tol, config.verify.residual_tol)
    return NumericPolicy.from_config(config.numeric, tol=tol)


def emit_reports(
    config: AppConfig,
    reports: List[Report],
    json_path: Optional[Path] = None,
    suite: Optional[str] = None,
) -> Report:
    """
    Prints every report, writes the merged JSON when asked and exits with
    ``CHECK_FAILED`` if some check failed.
    """
    feedback = FeedbackService(config)
    for report in reports:
        feedback.report(report)
    merged = reports[0] if len(reports) == 1 and suite is None else merge_reports(suite or "all", reports)
    if json_path is not None:
        json_path.write_text(merged.to_json(), encoding="utf-8")
        logger.info(f"Wrote {merged.suite} report to {json_path}")
    if not merged.passed:
        click.get_current_context().exit(CHECK_FAILED)
    return merged
