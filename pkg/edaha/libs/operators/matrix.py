"""
3x3 matrices over the pexp ring.

Matrices are immutable tuples of rows. Products multiply entries in the ring, so
they are exact; comparisons go through the two-tier zero test.
"""

from dataclasses import dataclass
from typing import Callable, Iterator, List, Sequence, Tuple

from sympy.polys.fields import FracElement

from ..freegroup.sl2z import SL2ZMatrix
from ..plethystic.ring import RingElement, Scalar, ring_at_p_zero
from ..plethystic.zero import ZeroTest, zero_test_many
from ..qpoch.policy import NumericPolicy

DIM = 3

Row = Tuple[RingElement, RingElement, RingElement]


def _element(value) -> RingElement:
    if isinstance(value, RingElement):
        return value
    return RingElement.scalar(value)


@dataclass(frozen=True)
class Mat3R:
    """
    A 3x3 matrix with entries in the ring.

    Attributes:
        rows: Three rows of three entries each.
    """

    rows: Tuple[Row, Row, Row]

    @classmethod
    def build(cls, entries: Sequence[Sequence[object]]) -> "Mat3R":
        """Accepts ring elements, ints or field elements."""
        if len(entries) != DIM or any(len(row) != DIM for row in entries):
            raise ValueError("Mat3R needs a 3x3 array of entries")
        return cls(tuple(tuple(_element(x) for x in row) for row in entries))  # type: ignore[arg-type]

    @classmethod
    def zero(cls) -> "Mat3R":
        return cls.build([[0] * DIM for _ in range(DIM)])

    @classmethod
    def identity(cls) -> "Mat3R":
        return cls.diagonal([1] * DIM)

    @classmethod
    def diagonal(cls, values: Sequence[object]) -> "Mat3R":
        return cls.build([[values[i] if i == j else 0 for j in range(DIM)] for i in range(DIM)])

    def __getitem__(self, index: Tuple[int, int]) -> RingElement:
        i, j = index
        return self.rows[i][j]

    def entries(self) -> Iterator[RingElement]:
        for row in self.rows:
            yield from row

    def map(self, func: Callable[[RingElement], RingElement]) -> "Mat3R":
        return Mat3R(tuple(tuple(func(x) for x in row) for row in self.rows))  # type: ignore[arg-type]

    def __add__(self, other: "Mat3R") -> "Mat3R":
        return Mat3R.build(
            [[self[i, j] + other[i, j] for j in range(DIM)] for i in range(DIM)]
        )

    def __neg__(self) -> "Mat3R":
        return self.map(lambda x: -x)

    def __sub__(self, other: "Mat3R") -> "Mat3R":
        return self + (-other)

    def __matmul__(self, other: "Mat3R") -> "Mat3R":
        product: List[List[RingElement]] = []
        for i in range(DIM):
            row = []
            for j in range(DIM):
                total = RingElement.zero()
                for k in range(DIM):
                    left, right = self[i, k], other[k, j]
                    if left and right:
                        total = total + left * right
                row.append(total)
            product.append(row)
        return Mat3R.build(product)

    def scale(self, factor) -> "Mat3R":
        if isinstance(factor, RingElement):
            return self.map(lambda x: factor * x)
        return self.map(lambda x: x.scale(factor))

    def shift(self, m: SL2ZMatrix) -> "Mat3R":
        """Substitutes ``(p, s)`` in every entry."""
        if m.is_identity():
            return self
        return self.map(lambda x: x.shift(m))

    def is_zero_symbolic(self) -> bool:
        return all(x.is_zero_symbolic() for x in self.entries())

    def zero_test(self, policy: NumericPolicy, salt: str = "") -> ZeroTest:
        return zero_test_many(list(self.entries()), policy, salt)

    def at_p_zero(self) -> List[List[FracElement]]:
        """Entry-wise value at ``p = 0``; see ``ring_at_p_zero``."""
        return [[ring_at_p_zero(self[i, j]) for j in range(DIM)] for i in range(DIM)]

    def __str__(self) -> str:
        return "\n".join("[" + ", ".join(str(x) for x in row) + "]" for row in self.rows)


def mat_equal(
    left: Mat3R, right: Mat3R, policy: NumericPolicy, salt: str = ""
) -> ZeroTest:
    """``left - right`` through the zero test, entry by entry."""
    return (left - right).zero_test(policy, salt)


def scalar_matrix(value: Scalar) -> Mat3R:
    return Mat3R.diagonal([value] * DIM)

