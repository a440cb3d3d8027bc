"""
The free algebra on the generators ``O_A^(g)`` and ``O_B^(g)`` over Q(Q).

Labels are canonicalized on construction, so ``O_A^(a^k g)`` and ``O_A^(g)``
are the same generator and the relators ``R0`` vanish identically.
"""

import re
from dataclasses import dataclass
from typing import Callable, Dict, Iterable, Iterator, List, Tuple, Union

from sympy.polys.fields import FracElement

from ...core.exceptions import WordSyntaxError
from ..corering.field import K
from ..corering.ratfunc import format_ratfunc
from ..freegroup.word import Family, FreeWord, canonical_label, format_word, parse_word, sigma

Coefficient = Union[int, FracElement]


@dataclass(frozen=True)
class GeneratorSymbol:
    """
    One generator of the free algebra.

    Attributes:
        family: ``A`` or ``B``.
        label: The free-group label, stored in canonical form.
    """

    family: Family
    label: FreeWord

    def __post_init__(self):
        if self.family not in ("A", "B"):
            raise ValueError(f"Unknown generator family '{self.family}'")
        canonical = canonical_label(self.family, self.label)
        if canonical != self.label:
            object.__setattr__(self, "label", canonical)

    def swapped(self) -> "GeneratorSymbol":
        """``O_A^(g) <-> O_B^(σ(g))``."""
        return GeneratorSymbol("B" if self.family == "A" else "A", sigma(self.label))

    def sort_key(self) -> Tuple[str, str]:
        return self.family, format_word(self.label)

    def __str__(self) -> str:
        return f"{self.family}({format_word(self.label)})"


Monomial = Tuple[GeneratorSymbol, ...]


def _coefficient(value: Coefficient) -> FracElement:
    return value if isinstance(value, FracElement) else K(value)


class NCPoly:
    """
    A noncommutative polynomial: a map from generator words to coefficients.

    Instances are immutable; zero coefficients are never stored.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Dict[Monomial, FracElement] = None):  # type: ignore[assignment]
        self._terms: Dict[Monomial, FracElement] = {}
        for mono, coeff in (terms or {}).items():
            if coeff:
                self._terms[mono] = coeff

    @classmethod
    def zero(cls) -> "NCPoly":
        return cls()

    @classmethod
    def scalar(cls, value: Coefficient) -> "NCPoly":
        return cls({(): _coefficient(value)})

    @classmethod
    def one(cls) -> "NCPoly":
        return cls.scalar(1)

    @classmethod
    def monomial(cls, symbols: Iterable[GeneratorSymbol], coeff: Coefficient = 1) -> "NCPoly":
        return cls({tuple(symbols): _coefficient(coeff)})

    @classmethod
    def gen(cls, family: Family, label: Union[str, FreeWord] = "1") -> "NCPoly":
        word = parse_word(label) if isinstance(label, str) else label
        return cls.monomial([GeneratorSymbol(family, word)])

    def terms(self) -> Iterator[Tuple[Monomial, FracElement]]:
        yield from self._terms.items()

    def __len__(self) -> int:
        return len(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def coefficient(self, mono: Monomial) -> FracElement:
        return self._terms.get(mono, K.zero)

    def degree(self) -> int:
        return max((len(m) for m in self._terms), default=0)

    def symbols(self) -> List[GeneratorSymbol]:
        seen: Dict[GeneratorSymbol, None] = {}
        for mono in self._terms:
            for symbol in mono:
                seen.setdefault(symbol, None)
        return list(seen)

    @staticmethod
    def _coerce(other) -> "NCPoly":
        return other if isinstance(other, NCPoly) else NCPoly.scalar(other)

    def __add__(self, other) -> "NCPoly":
        terms = dict(self._terms)
        for mono, coeff in self._coerce(other)._terms.items():
            terms[mono] = terms.get(mono, K.zero) + coeff
        return NCPoly(terms)

    __radd__ = __add__

    def __neg__(self) -> "NCPoly":
        return NCPoly({m: -c for m, c in self._terms.items()})

    def __sub__(self, other) -> "NCPoly":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "NCPoly":
        return self._coerce(other) - self

    def scale(self, factor: Coefficient) -> "NCPoly":
        factor = _coefficient(factor)
        return NCPoly({m: c * factor for m, c in self._terms.items()})

    def __mul__(self, other) -> "NCPoly":
        if not isinstance(other, NCPoly):
            return self.scale(other)
        return nc_mul(self, other)

    def __rmul__(self, other) -> "NCPoly":
        return self.scale(other)

    def __truediv__(self, other: Coefficient) -> "NCPoly":
        return self.scale(K.one / _coefficient(other))

    def __pow__(self, n: int) -> "NCPoly":
        result = NCPoly.one()
        for _ in range(n):
            result = result * self
        return result

    def __eq__(self, other) -> bool:
        if not isinstance(other, (NCPoly, int, FracElement)):
            return NotImplemented
        return (self - other).is_zero()

    __hash__ = None  # type: ignore[assignment]

    def map_generators(self, image: Callable[[GeneratorSymbol], "NCPoly"]) -> "NCPoly":
        """The algebra homomorphism determined by its values on generators."""
        cache: Dict[GeneratorSymbol, NCPoly] = {}
        total = NCPoly()
        for mono, coeff in self._terms.items():
            product = NCPoly.scalar(coeff)
            for symbol in mono:
                if symbol not in cache:
                    cache[symbol] = image(symbol)
                product = nc_mul(product, cache[symbol])
                if product.is_zero():
                    break
            total = total + product
        return total

    def __repr__(self) -> str:
        return f"NCPoly({format_ncpoly(self)})"

    def __str__(self) -> str:
        return format_ncpoly(self)


def nc_mul(x: NCPoly, y: NCPoly) -> NCPoly:
    terms: Dict[Monomial, FracElement] = {}
    for mx, cx in x.terms():
        for my, cy in y.terms():
            mono = mx + my
            terms[mono] = terms.get(mono, K.zero) + cx * cy
    return NCPoly(terms)


def format_monomial(mono: Monomial) -> str:
    return " ".join(str(s) for s in mono) if mono else "1"


def format_ncpoly(x: NCPoly) -> str:
    if x.is_zero():
        return "0"
    chunks = []
    for mono, coeff in sorted(
        x.terms(), key=lambda t: (len(t[0]), [s.sort_key() for s in t[0]])
    ):
        pre = format_ratfunc(coeff)
        if not mono:
            chunks.append(pre)
        elif pre == "1":
            chunks.append(format_monomial(mono))
        else:
            chunks.append(f"({pre})*{format_monomial(mono)}")
    return " + ".join(chunks)


_GENERATOR = re.compile(r"([AB])\(([^()]*)\)")


def parse_monomial(text: str) -> NCPoly:
    """
    Parses a product such as ``"A(1) B(g a^-1) A(1)"``; ``""`` or ``"1"`` is the unit.

    Raises:
        WordSyntaxError: On text that is not a product of generators.
    """
    stripped = text.strip()
    if stripped in ("", "1"):
        return NCPoly.one()
    symbols: List[GeneratorSymbol] = []
    position = 0
    for match in _GENERATOR.finditer(stripped):
        gap = stripped[position : match.start()]
        if gap.strip(" *"):
            raise WordSyntaxError(text, gap.strip())
        symbols.append(GeneratorSymbol(match.group(1), parse_word(match.group(2))))  # type: ignore[arg-type]
        position = match.end()
    if stripped[position:].strip(" *"):
        raise WordSyntaxError(text, stripped[position:].strip())
    return NCPoly.monomial(symbols)


def gen_A(label: Union[str, FreeWord] = "1") -> NCPoly:
    return NCPoly.gen("A", label)


def gen_B(label: Union[str, FreeWord] = "1") -> NCPoly:
    return NCPoly.gen("B", label)
