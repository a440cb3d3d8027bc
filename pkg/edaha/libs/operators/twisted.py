"""
Matrix operators composed with a parameter shift.

``(M, m)`` acts on vector-valued functions by ``f -> M . (f after m)``, where
``m`` substitutes ``(p, s)``. Composition therefore shifts the right-hand
matrix by the left-hand shift:

    (M1, m1) (M2, m2) = (M1 . M2(m1), m1 m2)
"""

from dataclasses import dataclass

from ..freegroup.sl2z import IDENTITY, SL2ZMatrix
from .matrix import Mat3R


@dataclass(frozen=True)
class TwistedOperator:
    """
    A 3x3 matrix followed by a shift of ``(p, s)``.

    Attributes:
        matrix: Entries in the pexp ring.
        shift: The monomial substitution applied to the argument.
    """

    matrix: Mat3R
    shift: SL2ZMatrix = IDENTITY

    @classmethod
    def identity(cls) -> "TwistedOperator":
        return cls(Mat3R.identity(), IDENTITY)

    @classmethod
    def plain(cls, matrix: Mat3R) -> "TwistedOperator":
        return cls(matrix, IDENTITY)

    def __matmul__(self, other: "TwistedOperator") -> "TwistedOperator":
        return twisted_mul(self, other)

    def __pow__(self, n: int) -> "TwistedOperator":
        if n < 0:
            raise ValueError("Only nonnegative powers of twisted operators are supported")
        result = TwistedOperator.identity()
        for _ in range(n):
            result = result @ self
        return result


def twisted_mul(x: TwistedOperator, y: TwistedOperator) -> TwistedOperator:
    return TwistedOperator(x.matrix @ y.matrix.shift(x.shift), x.shift @ y.shift)
