import re

import click

from ...core.config import AppConfig

MATRIX_NAME = re.compile(r"^\s*(DA|DB|S|OA|OB)\s*(?:\((.*)\))?\s*$")


@click.command(
    name="eval",
    help="Print the canonical form of a pexp expression or a named matrix",
    short_help="Canonical forms",
    epilog="""
\b
\b\bExamples:
  # the doubling identity folds the denominator
  edaha eval "pexp(Q/(p+p^-1))"
\b
  # products and inverses of atoms
  edaha eval "pexp(Q*p/(1-p))*pexp(Q*p^2/(1-p))^-1"
\b
  # named matrices; word letters are space separated
  edaha eval "OB(b a^-1)"
\b
  # value at a point
  edaha eval "pexp(Q*p*s/(1-p*s))" --at 1.1 0.2 0.3
""",
)
@click.argument("expression")
@click.option(
    "--at",
    nargs=3,
    type=float,
    help="Also evaluate numerically at Q, p, s.",
)
@click.pass_obj
def evaluate(config: AppConfig, expression: str, at):
    from rich.console import Console

    console = Console()
    match = MATRIX_NAME.match(expression)
    if match:
        console.print(str(_named_matrix(match.group(1), match.group(2))), markup=False)
        return

    from ...libs.plethystic import ring_from_expression

    value = ring_from_expression(expression)
    console.print(str(value), markup=False)
    if at:
        import mpmath

        from ...libs.qpoch import NumericPolicy, SamplePoint, ring_eval

        policy = NumericPolicy.from_config(config.numeric)
        point = SamplePoint.from_values(*at)
        console.print(mpmath.nstr(ring_eval(value, point, policy), 20), markup=False)


def _named_matrix(name: str, word):
    from ...core.exceptions import ExpressionSyntaxError
    from ...libs.operators import build_DA, build_DB, build_S
    from ...libs.representation import O_matrix

    if name in ("OA", "OB"):
        return O_matrix(name[1], word if word is not None else "1")
    if word is not None:
        raise ExpressionSyntaxError(f"{name}({word})", f"{name} takes no argument")
    operator = {"DA": build_DA, "DB": build_DB, "S": build_S}[name]()
    return f"{operator.matrix}\nshift (p, s) -> {operator.shift}"
