import pytest
from click.testing import CliRunner

from edaha.cli.commands.evaluate import evaluate
from edaha.core.config import AppConfig
from edaha.core.exceptions import ExpressionSyntaxError


@pytest.fixture
def runner():
    return CliRunner()


def test_eval_cancels_inverse_atoms(runner):
    result = runner.invoke(evaluate, ["pexp(Q*p/(1-p)) * pexp(-Q*p/(1-p))"], obj=AppConfig())

    assert result.exit_code == 0, result.output
    assert result.output.strip() == "1"


def test_eval_at_a_point(runner):
    result = runner.invoke(evaluate, ["p*s", "--at", "1.5", "0.5", "0.25"], obj=AppConfig())

    assert result.exit_code == 0, result.output
    assert "0.125" in result.output.splitlines()[-1]


def test_eval_named_matrix(runner):
    result = runner.invoke(evaluate, ["DA"], obj=AppConfig())

    assert result.exit_code == 0, result.output
    assert "shift (p, s) ->" in result.output


def test_eval_rejects_word_on_operator(runner):
    result = runner.invoke(evaluate, ["DA(a)"], obj=AppConfig())

    assert isinstance(result.exception, ExpressionSyntaxError)
