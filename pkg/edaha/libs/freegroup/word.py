"""
Reduced words in the free group on ``a`` and ``b``, with formal letters.

Formal letters (``g``, ``g1``, ``g2``, ``g3``, ``f``, ``h``) stand for arbitrary
group elements. They reduce only against their own inverses. The swap
automorphism sends a formal letter ``x`` to the distinct formal letter ``σx``.
"""

import logging
import random
import re
from dataclasses import dataclass, field
from typing import Iterator, List, Literal, Optional, Tuple

from ...core.exceptions import FormalSymbolPresent, WordSyntaxError
from .sl2z import IDENTITY, PHI_A, PHI_B, SL2ZMatrix

logger = logging.getLogger(__name__)

Family = Literal["A", "B"]
Letter = Tuple[str, int]

GENERATORS = ("a", "b")
FORMAL_BASES = ("g", "g1", "g2", "g3", "f", "h")
SIGMA_PREFIX = "σ"

_TOKEN = re.compile(r"^(?P<sigma>σ|~)?(?P<name>[a-z][a-z0-9]*)(?:\^\(?(?P<exp>-?\d+)\)?)?$")


def is_formal(symbol: str) -> bool:
    return symbol not in GENERATORS


def sigma_symbol(symbol: str) -> str:
    if symbol == "a":
        return "b"
    if symbol == "b":
        return "a"
    if symbol.startswith(SIGMA_PREFIX):
        return symbol[len(SIGMA_PREFIX) :]
    return SIGMA_PREFIX + symbol


def _reduce(letters: List[Letter]) -> Tuple[Letter, ...]:
    stack: List[Letter] = []
    for symbol, exp in letters:
        if exp == 0:
            continue
        if stack and stack[-1][0] == symbol:
            merged = stack[-1][1] + exp
            stack.pop()
            if merged:
                stack.append((symbol, merged))
        else:
            stack.append((symbol, exp))
    return tuple(stack)


@dataclass(frozen=True)
class FreeWord:
    """
    A reduced word stored as syllables ``(symbol, exponent)``.

    Attributes:
        letters: Syllables with nonzero exponents and distinct neighbours.
    """

    letters: Tuple[Letter, ...] = field(default_factory=tuple)

    def __post_init__(self):
        reduced = _reduce(list(self.letters))
        if reduced != self.letters:
            object.__setattr__(self, "letters", reduced)

    @classmethod
    def identity(cls) -> "FreeWord":
        return cls(())

    @classmethod
    def letter(cls, symbol: str, exp: int = 1) -> "FreeWord":
        return cls(((symbol, exp),))

    def __mul__(self, other: "FreeWord") -> "FreeWord":
        return FreeWord(self.letters + other.letters)

    def inverse(self) -> "FreeWord":
        return FreeWord(tuple((s, -e) for s, e in reversed(self.letters)))

    def is_identity(self) -> bool:
        return not self.letters

    def has_formal(self) -> bool:
        return any(is_formal(s) for s, _ in self.letters)

    def __len__(self) -> int:
        return sum(abs(e) for _, e in self.letters)

    def __str__(self) -> str:
        return format_word(self)


ONE_WORD = FreeWord.identity()
A = FreeWord.letter("a")
B = FreeWord.letter("b")
A_INV = FreeWord.letter("a", -1)
B_INV = FreeWord.letter("b", -1)
G = FreeWord.letter("g")
G1 = FreeWord.letter("g1")
G2 = FreeWord.letter("g2")
G3 = FreeWord.letter("g3")


def word_mul(*words: FreeWord) -> FreeWord:
    letters: Tuple[Letter, ...] = ()
    for w in words:
        letters += w.letters
    return FreeWord(letters)


def word_inverse(w: FreeWord) -> FreeWord:
    return w.inverse()


def word_length(w: FreeWord) -> int:
    return len(w)


def sigma(w: FreeWord) -> FreeWord:
    """Swaps ``a`` and ``b`` and sends every formal letter to its σ-partner."""
    return FreeWord(tuple((sigma_symbol(s), e) for s, e in w.letters))


def _matrix_power(m: SL2ZMatrix, n: int) -> SL2ZMatrix:
    base = m if n >= 0 else m.inverse()
    result = IDENTITY
    for _ in range(abs(n)):
        result = result @ base
    return result


def phi(w: FreeWord) -> SL2ZMatrix:
    """
    The homomorphism to SL(2, Z) with ``a -> [[1,-1],[0,1]]`` and ``b -> [[1,0],[1,1]]``.

    Raises:
        FormalSymbolPresent: If ``w`` contains a formal letter.
    """
    if w.has_formal():
        raise FormalSymbolPresent(format_word(w))
    result = IDENTITY
    for symbol, exp in w.letters:
        result = result @ _matrix_power(PHI_A if symbol == "a" else PHI_B, exp)
    return result


def decompose_special(
    w: FreeWord, family: Family = "B"
) -> Optional[List[Tuple[int, int]]]:
    """
    Splits ``w`` into blocks ``x^eps y^k`` with ``eps = ±1``.

    For the B family the word must read ``b^e1 a^k1 ... b^en a^kn``; the A family
    is the dual with ``a`` and ``b`` exchanged. A syllable ``b^m`` with ``|m| > 1``
    becomes ``|m|`` blocks with ``k = 0`` except the last.

    Returns:
        The list of ``(eps, k)`` pairs, or ``None`` if ``w`` has no such form.
    """
    if w.has_formal():
        return None
    lead, tail = ("b", "a") if family == "B" else ("a", "b")
    letters = list(w.letters)
    if letters and letters[0][0] != lead:
        return None
    blocks: List[Tuple[int, int]] = []
    i = 0
    while i < len(letters):
        symbol, m = letters[i]
        assert symbol == lead
        k = 0
        if i + 1 < len(letters) and letters[i + 1][0] == tail:
            k = letters[i + 1][1]
            i += 2
        else:
            i += 1
        eps = 1 if m > 0 else -1
        blocks.extend([(eps, 0)] * (abs(m) - 1))
        blocks.append((eps, k))
    return blocks


def recompose_special(blocks: List[Tuple[int, int]], family: Family = "B") -> FreeWord:
    lead, tail = ("b", "a") if family == "B" else ("a", "b")
    letters: List[Letter] = []
    for eps, k in blocks:
        letters.append((lead, eps))
        letters.append((tail, k))
    return FreeWord(tuple(letters))


def canonical_label(family: Family, w: FreeWord) -> FreeWord:
    """Strips the leading ``a``-power (family A) or ``b``-power (family B)."""
    strip = "a" if family == "A" else "b"
    if w.letters and w.letters[0][0] == strip:
        return FreeWord(w.letters[1:])
    return w


def parse_word(text: str) -> FreeWord:
    """
    Parses words such as ``"b a^-1 g"``, ``"σg a"`` or ``"1"``.

    Syllables are separated by whitespace or ``*``.
    """
    stripped = text.strip()
    if stripped in ("", "1", "e"):
        return ONE_WORD
    letters: List[Letter] = []
    for token in re.split(r"[\s*]+", stripped):
        if not token:
            continue
        match = _TOKEN.match(token)
        if not match:
            raise WordSyntaxError(text, token)
        name = match.group("name")
        if name not in GENERATORS and name not in FORMAL_BASES:
            raise WordSyntaxError(text, token)
        if match.group("sigma"):
            if name in GENERATORS:
                raise WordSyntaxError(text, token)
            name = SIGMA_PREFIX + name
        exp = int(match.group("exp")) if match.group("exp") else 1
        letters.append((name, exp))
    return FreeWord(tuple(letters))


def format_word(w: FreeWord) -> str:
    if w.is_identity():
        return "1"
    return " ".join(s if e == 1 else f"{s}^{e}" for s, e in w.letters)


def enumerate_words(max_len: int) -> Iterator[FreeWord]:
    """All reduced words in ``a, b`` of length at most ``max_len``, shortest first."""
    units = [("a", 1), ("a", -1), ("b", 1), ("b", -1)]
    layer: List[Tuple[Letter, ...]] = [()]
    yield ONE_WORD
    for _ in range(max_len):
        next_layer = []
        for seq in layer:
            for u in units:
                if seq and seq[-1] == (u[0], -u[1]):
                    continue
                next_layer.append(seq + (u,))
        for seq in next_layer:
            yield FreeWord(seq)
        layer = next_layer


def random_word(rng: random.Random, length: int) -> FreeWord:
    """A uniformly built reduced word of exactly ``length`` letters."""
    units = [("a", 1), ("a", -1), ("b", 1), ("b", -1)]
    seq: List[Letter] = []
    while len(seq) < length:
        u = rng.choice(units)
        if seq and seq[-1] == (u[0], -u[1]):
            continue
        seq.append(u)
    return FreeWord(tuple(seq))
