"""Exact rational dense linear algebra: rank, nullspace, span dimension.

Rank uses Bareiss fraction-free elimination over the integers after clearing
denominators, so intermediate values stay integral and results are exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm


class DimensionMismatch(ValueError):
    pass


def _frac(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


@dataclass(frozen=True)
class RationalMatrix:
    rows: int
    cols: int
    entries: tuple[tuple[Fraction, ...], ...]  # row-major

    def __post_init__(self):
        if len(self.entries) != self.rows:
            raise DimensionMismatch("row count mismatch")
        if any(len(r) != self.cols for r in self.entries):
            raise DimensionMismatch("column count mismatch")

    @classmethod
    def from_rows(cls, rows) -> "RationalMatrix":
        data = tuple(tuple(_frac(x) for x in row) for row in rows)
        ncols = len(data[0]) if data else 0
        return cls(len(data), ncols, data)

    @classmethod
    def zero(cls, rows: int, cols: int) -> "RationalMatrix":
        z = Fraction(0)
        return cls(rows, cols, tuple(tuple(z for _ in range(cols))
                                     for _ in range(rows)))

    @classmethod
    def identity(cls, n: int) -> "RationalMatrix":
        return cls.from_rows([[1 if i == j else 0 for j in range(n)]
                              for i in range(n)])

    def at(self, i: int, j: int) -> Fraction:
        return self.entries[i][j]

    def transpose(self) -> "RationalMatrix":
        return RationalMatrix(self.cols, self.rows,
                              tuple(zip(*self.entries)) if self.rows else
                              tuple(() for _ in range(self.cols)))

    def matvec(self, v) -> list[Fraction]:
        if len(v) != self.cols:
            raise DimensionMismatch("vector length mismatch")
        return [sum((r[j] * v[j] for j in range(self.cols)), Fraction(0))
                for r in self.entries]

    def matmul(self, other: "RationalMatrix") -> "RationalMatrix":
        if self.cols != other.rows:
            raise DimensionMismatch("inner dimensions differ")
        cols = other.transpose().entries
        return RationalMatrix.from_rows(
            [[sum((r[k] * c[k] for k in range(self.cols)), Fraction(0))
              for c in cols] for r in self.entries])


def _integer_rows(M: RationalMatrix) -> list[list[int]]:
    out = []
    for row in M.entries:
        scale = lcm(*(x.denominator for x in row)) if row else 1
        out.append([int(x * scale) for x in row])
    return out


def rank(M: RationalMatrix) -> int:
    """Rank over the rationals via Bareiss fraction-free elimination."""
    a = _integer_rows(M)
    rows, cols = M.rows, M.cols
    r = 0
    prev = 1
    for c in range(cols):
        if r == rows:
            break
        piv = next((i for i in range(r, rows) if a[i][c]), None)
        if piv is None:
            continue
        if piv != r:
            a[r], a[piv] = a[piv], a[r]
        arc = a[r][c]
        for i in range(r + 1, rows):
            aic = a[i][c]
            rowi = a[i]
            rowr = a[r]
            # Bareiss rescaling applies even when aic == 0

            for j in range(c + 1, cols):
                rowi[j] = (arc * rowi[j] - aic * rowr[j]) // prev
            rowi[c] = 0
        prev = a[r][c]
        r += 1
    return r


def nullspace_basis(M: RationalMatrix) -> list[tuple[Fraction, ...]]:
    """Basis of the right kernel {v : Mv = 0}; exact, size cols - rank."""
    a = [list(row) for row in M.entries]
    rows, cols = M.rows, M.cols
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        piv = next((i for i in range(r, rows) if a[i][c]), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = a[r][c]
        a[r] = [x / inv for x in a[r]]
        for i in range(rows):
            if i != r and a[i][c]:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
    free = [c for c in range(cols) if c not in pivots]
    basis = []
    for fc in free:
        v = [Fraction(0)] * cols
        v[fc] = Fraction(1)
        for i, pc in enumerate(pivots):
            v[pc] = -a[i][fc]
        basis.append(tuple(v))
    return basis


def span_dim(vectors) -> int:
    """Dimension of the span of the given equal-length rational vectors."""
    vectors = [tuple(_frac(x) for x in v) for v in vectors]
    if not vectors:
        return 0
    length = len(vectors[0])
    if any(len(v) != length for v in vectors):
        raise DimensionMismatch("vectors have differing lengths")
    return rank(RationalMatrix.from_rows(vectors))
