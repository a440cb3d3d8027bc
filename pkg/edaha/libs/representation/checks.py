"""
Identity checks for the matrix representation.

Every identity is compared entrywise through the two-tier zero test. Matrices
are only ever multiplied, never inverted, except for the diagonal ``D_A``.
"""

import itertools
import logging
import random
from typing import Iterator, List, Optional, Sequence, Tuple

from ...core.report import CheckRecord, Report
from ...core.utils.concurrency import CheckPool
from ..corering.ratfunc import format_ratfunc, ratfunc_is_q_only
from ..freealgebra.automorphisms import apply_auto, idempotent_A, idempotent_B
from ..freealgebra.ncpoly import gen_A, gen_B
from ..freealgebra.relators import RELATORS, relator, relator_arity
from ..freegroup.sl2z import SHIFT_A, SHIFT_A_INV, SHIFT_FLIP, SHIFT_FLIP_A
from ..freegroup.word import (
    Family,
    FreeWord,
    ONE_WORD,
    canonical_label,
    enumerate_words,
    format_word,
    random_word,
    sigma,
    word_mul,
)
from ..operators.catalog import DA_inverse_matrix, S_matrix, build_DA
from ..operators.checks import describe_entry
from ..operators.matrix import Mat3R, mat_equal
from ..plethystic.zero import ZeroTest, timed_zero_check
from ..qpoch.policy import NumericPolicy
from .auxiliary import aux_c, aux_c_tilde
from .matrices import GeneratorMatrixCache, default_cache, peel_block, psi, recursion_step

logger = logging.getLogger(__name__)

RelatorCase = Tuple[str, Tuple[FreeWord, ...]]

BASE_RELATIONS: Tuple[RelatorCase, ...] = (
    ("R3", (ONE_WORD,) * 3),
    ("R2", (ONE_WORD,) * 3),
    ("R4A", (ONE_WORD,)),
    ("R4B", (ONE_WORD,)),
    ("R6", (ONE_WORD,)),
    ("R7", (ONE_WORD,)),
)


def case_id(family: str, words: Sequence[FreeWord]) -> str:
    return f"{family}({', '.join(format_word(w) for w in words)})"


def _cache(cache: Optional[GeneratorMatrixCache]) -> GeneratorMatrixCache:
    return cache or default_cache()


# ----------------------------------------------------------------------
# relators
# ----------------------------------------------------------------------


def verify_relator_instance(
    family: str,
    words: Sequence[FreeWord],
    policy: NumericPolicy,
    cache: Optional[GeneratorMatrixCache] = None,
) -> ZeroTest:
    """
    ``Psi`` of one relator instance, tested for zero.

    Raises:
        UnknownRelator: If ``family`` is not a relator family.
        ArityMismatch: If the number of words does not fit the family.
        FormalSymbolPresent: If a word has a formal letter.
    """
    image = psi(relator(family, *words), _cache(cache))
    return image.zero_test(policy, case_id(family, words))


def relator_record(
    case: RelatorCase, policy: NumericPolicy, cache: Optional[GeneratorMatrixCache] = None
) -> CheckRecord:
    family, words = case
    return timed_zero_check(
        case_id(family, words),
        lambda: verify_relator_instance(family, words, policy, cache),
        describe_entry,
    )


def verify_base_relations(
    policy: NumericPolicy, cache: Optional[GeneratorMatrixCache] = None
) -> List[CheckRecord]:
    """The six identities between ``O_A^(1)`` and ``O_B^(1)``."""
    return [relator_record(case, policy, cache) for case in BASE_RELATIONS]


def _word_tuples(arity: int, max_total_len: int) -> Iterator[Tuple[FreeWord, ...]]:
    words = list(enumerate_words(max_total_len))
    for combo in itertools.product(words, repeat=arity):
        if sum(len(w) for w in combo) <= max_total_len:
            yield combo


def exhaustive_relator_cases(max_total_len: int) -> List[RelatorCase]:
    """Every family at every word tuple of total length ``<= max_total_len``."""
    cases: List[RelatorCase] = []
    for family in RELATORS:
        for combo in _word_tuples(relator_arity(family), max_total_len):
            cases.append((family, combo))
    return cases


def random_relator_cases(count: int, max_total_len: int, seed: int) -> List[RelatorCase]:
    """Seeded tuples; the total length is split at random between the slots."""
    rng = random.Random(f"{seed}:relations")
    families = list(RELATORS)
    cases: List[RelatorCase] = []
    for _ in range(count):
        family = rng.choice(families)
        arity = relator_arity(family)
        lengths = [0] * arity
        for _ in range(rng.randint(0, max_total_len)):
            lengths[rng.randrange(arity)] += 1
        cases.append((family, tuple(random_word(rng, n) for n in lengths)))
    return cases


def _run(
    suite: str,
    cases: Sequence,
    check,
    workers: int,
) -> List[CheckRecord]:
    if workers > 1 and len(cases) > 1:
        with CheckPool(max_workers=workers, name=suite) as pool:
            return pool.map_ordered(check, cases)
    return [check(case) for case in cases]


def relations_report(
    policy: NumericPolicy,
    max_total_len: int = 2,
    random_tuples: int = 25,
    random_max_total_len: int = 4,
    workers: int = 1,
    cache: Optional[GeneratorMatrixCache] = None,
) -> Report:
    """Base relations, then the exhaustive sweep, then the seeded random tuples."""
    cache = _cache(cache)
    report = Report(
        suite="relations",
        policy={
            **policy.model_dump(),
            "max_total_len": max_total_len,
            "random_tuples": random_tuples,
            "random_max_total_len": random_max_total_len,
        },
    )
    report.extend(verify_base_relations(policy, cache))

    cases = exhaustive_relator_cases(max_total_len)
    cases += random_relator_cases(random_tuples, random_max_total_len, policy.seed)
    logger.info(f"Checking {len(cases)} relator instances")
    report.extend(_run("relations", cases, lambda c: relator_record(c, policy, cache), workers))
    return report


# ----------------------------------------------------------------------
# shifts
# ----------------------------------------------------------------------


def check_a_shift(
    family: Family, g: FreeWord, policy: NumericPolicy, cache: Optional[GeneratorMatrixCache] = None
) -> ZeroTest:
    """``O_X^(g a)(p, s) = O_X^(g)(ps, s)``."""
    cache = _cache(cache)
    left = cache.matrix(family, word_mul(g, FreeWord.letter("a")))
    right = cache.matrix(family, g).shift(SHIFT_A)
    return mat_equal(left, right, policy, f"a-shift:{family}:{g}")


def check_b_identity(
    family: Family, g: FreeWord, policy: NumericPolicy, cache: Optional[GeneratorMatrixCache] = None
) -> ZeroTest:
    """
    ``S(1/s,p) O_X^(g b)(p, s) = O_Y^(σg)(p/s, p) S(1/s,p)`` with ``Y`` the other family.
    """
    cache = _cache(cache)
    other: Family = "B" if family == "A" else "A"
    S = S_matrix(SHIFT_FLIP)
    left = S @ cache.matrix(family, word_mul(g, FreeWord.letter("b")))
    right = cache.matrix(other, sigma(g)).shift(SHIFT_FLIP_A) @ S
    return mat_equal(left, right, policy, f"b-shift:{family}:{g}")


def verify_shift_properties(
    g: FreeWord,
    policy: NumericPolicy,
    cache: Optional[GeneratorMatrixCache] = None,
    b_identity: bool = True,
) -> List[CheckRecord]:
    records = []
    for family in ("A", "B"):
        records.append(
            timed_zero_check(
                f"a-shift {family}({format_word(g)})",
                lambda family=family: check_a_shift(family, g, policy, cache),
                describe_entry,
            )
        )
    if b_identity:
        for family in ("A", "B"):
            records.append(
                timed_zero_check(
                    f"b-shift {family}({format_word(g)})",
                    lambda family=family: check_b_identity(family, g, policy, cache),
                    describe_entry,
                )
            )
    return records


def shifts_report(
    policy: NumericPolicy,
    max_word_len: int = 3,
    max_b_word_len: int = 2,
    workers: int = 1,
    cache: Optional[GeneratorMatrixCache] = None,
) -> Report:
    cache = _cache(cache)
    report = Report(
        suite="shifts",
        policy={**policy.model_dump(), "max_word_len": max_word_len, "max_b_word_len": max_b_word_len},
    )
    words = list(enumerate_words(max_word_len))
    batches = _run(
        "shifts",
        words,
        lambda g: verify_shift_properties(g, policy, cache, b_identity=len(g) <= max_b_word_len),
        workers,
    )
    for batch in batches:
        report.extend(batch)
    return report


# ----------------------------------------------------------------------
# equivariance, flips and recursion consistency
# ----------------------------------------------------------------------


def check_equivariance(
    family: Family, g: FreeWord, policy: NumericPolicy, cache: Optional[GeneratorMatrixCache] = None
) -> ZeroTest:
    """
    ``Psi(a(O_X^(g))) = D_A^-1 O_X^(g)(p/s, s) D_A``.

    For ``X = A`` the left side is ``-O_A^(1) O_A^(g a^-1) O_A^(1) / (Q^2 - Q^-2)^2``.
    """
    cache = _cache(cache)
    generator = gen_A(g) if family == "A" else gen_B(g)
    left = psi(apply_auto("a", generator), cache)
    right = DA_inverse_matrix() @ cache.matrix(family, g).shift(SHIFT_A_INV) @ build_DA().matrix
    return mat_equal(left, right, policy, f"equivariance:{family}:{g}")


def verify_equivariance(
    g: FreeWord, policy: NumericPolicy, cache: Optional[GeneratorMatrixCache] = None
) -> List[CheckRecord]:
    """Both lines of the ``a``-equivariance identity at ``g``."""
    return [
        timed_zero_check(
            f"a-equivariance {family}({format_word(g)})",
            lambda family=family: check_equivariance(family, g, policy, cache),
            describe_entry,
        )
        for family in ("A", "B")
    ]


def check_conjugation_flips_ab(
    family: Family, g: FreeWord, policy: NumericPolicy, cache: Optional[GeneratorMatrixCache] = None
) -> ZeroTest:
    """
    ``S(1/s,p) O_Y^(σg) = O_X^(g)(1/s, p) S(1/s,p)``, i.e. ``O_Y^(σg) = S^-1 O_X^(g) S``.

    With ``family = "A"`` this is the definition of ``O_B`` that the dual
    recursion stands in for.
    """
    cache = _cache(cache)
    other: Family = "B" if family == "A" else "A"
    S = S_matrix(SHIFT_FLIP)
    left = S @ cache.matrix(other, sigma(g))
    right = cache.matrix(family, g).shift(SHIFT_FLIP) @ S
    return mat_equal(left, right, policy, f"flip:{family}:{g}")


def check_recursion_consistency(
    family: Family, g: FreeWord, policy: NumericPolicy, cache: Optional[GeneratorMatrixCache] = None
) -> ZeroTest:
    """
    One more recursion step with the inverse block must cancel the first one.

    For a label ``b^eps a^k f`` the step with ``h = b^-eps`` lands on
    ``O_A^(a^k f) = O_A^(f)``; the B family is the dual.
    """
    cache = _cache(cache)
    label = canonical_label(family, g)
    if label.is_identity():
        return ZeroTest(True)
    eps, _, f = peel_block(family, label)
    lead = "b" if family == "A" else "a"
    back = FreeWord.letter(lead, -eps)
    constant = aux_c(-eps, back, label) if family == "A" else aux_c_tilde(-eps, back, label)
    stepped = recursion_step(family, constant, cache.matrix(family, label))
    landed = word_mul(back, label)
    return mat_equal(stepped, cache.matrix(family, landed), policy, f"recursion:{family}:{g}")


def check_idempotent_image(
    family: Family, policy: NumericPolicy, cache: Optional[GeneratorMatrixCache] = None
) -> ZeroTest:
    """``Psi(e_X)`` is a constant idempotent matrix."""
    image = psi(idempotent_A() if family == "A" else idempotent_B(), _cache(cache))
    for index, entry in enumerate(image.entries()):
        value = entry.scalar_value()
        if value is None or not ratfunc_is_q_only(value):
            logger.warning(f"Psi(e_{family}) {describe_entry(index)} depends on p or s")
            return ZeroTest(False, failing=index)
    logger.debug(
        f"Psi(e_{family}) diagonal: "
        + ", ".join(format_ratfunc(image[i, i].scalar_value()) for i in range(3))  # type: ignore[arg-type]
    )
    return mat_equal(image @ image, image, policy, f"idempotent:{family}")


def equivariance_report(
    policy: NumericPolicy,
    max_word_len: int = 2,
    workers: int = 1,
    cache: Optional[GeneratorMatrixCache] = None,
) -> Report:
    """``a``-equivariance, the ``S`` flips, recursion consistency and idempotents."""
    cache = _cache(cache)
    report = Report(suite="equivariance", policy={**policy.model_dump(), "max_word_len": max_word_len})

    def per_word(g: FreeWord) -> List[CheckRecord]:
        records = verify_equivariance(g, policy, cache)
        for family in ("A", "B"):
            records.append(
                timed_zero_check(
                    f"flip {family}({format_word(g)})",
                    lambda family=family: check_conjugation_flips_ab(family, g, policy, cache),
                    describe_entry,
                )
            )
            records.append(
                timed_zero_check(
                    f"recursion {family}({format_word(g)})",
                    lambda family=family: check_recursion_consistency(family, g, policy, cache),
                    describe_entry,
                )
            )
        return records

    for batch in _run("equivariance", list(enumerate_words(max_word_len)), per_word, workers):
        report.extend(batch)
    for family in ("A", "B"):
        report.add(
            timed_zero_check(
                f"idempotent e_{family}",
                lambda family=family: check_idempotent_image(family, policy, cache),
                describe_entry,
            )
        )
    return report
