"""
Integer matrices of determinant one and the parameter substitutions they encode.

A matrix ``[[a, b], [c, d]]`` acts on exponent vectors by column action, so the
monomial ``p^x s^y`` goes to ``p^(a x + b y) s^(c x + d y)``. Composition of
substitutions is the matrix product in the same order.
"""

from dataclasses import dataclass
from typing import Tuple


@dataclass(frozen=True)
class SL2ZMatrix:
    """
    An element of SL(2, Z).

    Attributes:
        a, b, c, d: The entries of ``[[a, b], [c, d]]``.
    """

    a: int
    b: int
    c: int
    d: int

    def __post_init__(self):
        if self.a * self.d - self.b * self.c != 1:
            raise ValueError(
                f"Matrix [[{self.a}, {self.b}], [{self.c}, {self.d}]] does not have determinant 1"
            )

    @classmethod
    def identity(cls) -> "SL2ZMatrix":
        return cls(1, 0, 0, 1)

    def __matmul__(self, other: "SL2ZMatrix") -> "SL2ZMatrix":
        return SL2ZMatrix(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def inverse(self) -> "SL2ZMatrix":
        return SL2ZMatrix(self.d, -self.b, -self.c, self.a)

    def apply(self, x: int, y: int) -> Tuple[int, int]:
        """Transforms the exponent vector ``(x, y)`` of ``p^x s^y``."""
        return self.a * x + self.b * y, self.c * x + self.d * y

    def is_identity(self) -> bool:
        return self == SL2ZMatrix.identity()

    def as_rows(self) -> Tuple[Tuple[int, int], Tuple[int, int]]:
        return (self.a, self.b), (self.c, self.d)

    def describe(self) -> str:
        """Renders the substitution in ``(p, s) -> (...)`` notation."""

        def mono(x: int, y: int) -> str:
            parts = []
            for name, e in (("p", x), ("s", y)):
                if e == 1:
                    parts.append(name)
                elif e != 0:
                    parts.append(f"{name}^{e}")
            return "*".join(parts) or "1"

        return f"(p,s)->({mono(self.a, self.c)},{mono(self.b, self.d)})"

    def __str__(self) -> str:
        return f"[[{self.a},{self.b}],[{self.c},{self.d}]]"


IDENTITY = SL2ZMatrix(1, 0, 0, 1)

# (p, s) -> (p s, s)
SHIFT_A = SL2ZMatrix(1, 0, 1, 1)
# (p, s) -> (p, s / p)
SHIFT_B = SL2ZMatrix(1, -1, 0, 1)
# (p, s) -> (s, 1 / p)
SHIFT_S = SL2ZMatrix(0, -1, 1, 0)
# (p, s) -> (1 / p, 1 / s)
SHIFT_S2 = SL2ZMatrix(-1, 0, 0, -1)
# (p, s) -> (p / s, s)
SHIFT_A_INV = SL2ZMatrix(1, 0, -1, 1)
# (p, s) -> (1 / s, p)
SHIFT_FLIP = SL2ZMatrix(0, 1, -1, 0)
# (p, s) -> (p / s, p)
SHIFT_FLIP_A = SL2ZMatrix(1, 1, -1, 0)

# images of the free generators under the homomorphism to SL(2, Z)
PHI_A = SL2ZMatrix(1, -1, 0, 1)
PHI_B = SL2ZMatrix(1, 0, 1, 1)
