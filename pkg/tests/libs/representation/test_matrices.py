import pytest

from edaha.core.exceptions import FormalSymbolPresent
from edaha.libs.freegroup import parse_word
from edaha.libs.operators import build_OA1, build_OB1
from edaha.libs.qpoch import NumericPolicy
from edaha.libs.representation import (
    GeneratorMatrixCache,
    O_matrix,
    peel_block,
    psi0_checks,
    psi0_data,
    span_rank,
    verify_base_relations,
)
from edaha.libs.freealgebra import gen_A, idempotent_A
from edaha.libs.operators import Mat3R


@pytest.fixture
def policy():
    return NumericPolicy(samples=2)


def test_peel_block():
    eps, h, f = peel_block("A", parse_word("b^2 a"))
    assert (eps, h, f) == (1, parse_word("b"), parse_word("b a"))
    eps, h, f = peel_block("A", parse_word("b^-1 a^2 b"))
    assert (eps, h, f) == (-1, parse_word("b^-1 a^2"), parse_word("b"))
    eps, h, f = peel_block("B", parse_word("a b^-1"))
    assert (eps, h, f) == (1, parse_word("a b^-1"), parse_word("1"))


def test_length_one_matrices_are_the_base_matrices():
    assert O_matrix("A", "1") == build_OA1()
    assert O_matrix("B", "1") == build_OB1()
    # leading powers of the own generator are stripped
    assert O_matrix("A", "a^3") == build_OA1()


def test_cache_memoizes_by_canonical_label():
    cache = GeneratorMatrixCache()
    assert len(cache) == 2
    first = cache.matrix("A", parse_word("b"))
    assert ("A", parse_word("a b")) in cache
    assert cache.matrix("A", parse_word("a^-2 b")) is first
    assert len(cache) == 3


def test_formal_letters_are_rejected():
    with pytest.raises(FormalSymbolPresent):
        GeneratorMatrixCache().matrix("A", parse_word("g"))


def test_base_relations(policy):
    records = verify_base_relations(policy, GeneratorMatrixCache())
    assert len(records) == 6
    assert all(record.passed for record in records), [r.id for r in records if not r.passed]


def test_psi0_idempotent_image():
    image = psi0_data().image(idempotent_A())
    assert image == Mat3R.diagonal([1, 0, 1])
    assert psi0_data().image(gen_A()) == build_OA1()


def test_psi0_spanning_rank():
    assert span_rank(psi0_data()) == 9


def test_psi0_checks(policy):
    report = psi0_checks(policy)
    assert report.passed, [c.id for c in report.failures]
