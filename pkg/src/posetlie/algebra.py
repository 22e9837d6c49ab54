"""Lie poset algebras over a poset: full, type-A, and nilpotent variants.

Bases follow the matrix-unit picture: E_{p,q} for each strict relation p ≺ q,
plus E_{p,p} diagonals (full) or the traceless differences E_{0,0} - E_{p,p}
(type A). Structure constants are precomputed into a sparse bracket table.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

from .exactla import RationalMatrix, nullspace_basis, rank, span_dim
from .poset import FinitePoset

FULL = "full"
TYPEA = "typea"
NILPOTENT = "nilpotent"
VARIANTS = (FULL, TYPEA, NILPOTENT)

UNIT = "unit"
DIAG = "diag"
TDIAG = "tdiag"


class AlgebraMismatch(ValueError):
    pass


@dataclass(frozen=True, order=True)
class BasisElement:
    kind: str
    p: int
    q: int

    @classmethod
    def unit(cls, p: int, q: int) -> "BasisElement":
        return cls(UNIT, p, q)

    @classmethod
    def diagonal(cls, p: int) -> "BasisElement":
        return cls(DIAG, p, p)

    @classmethod
    def traceless_diagonal(cls, p: int) -> "BasisElement":
        # E_{0,0} - E_{p,p}, p != 0
        return cls(TDIAG, p, p)

    def matrix_entries(self) -> dict[tuple[int, int], int]:
        if self.kind == UNIT:
            return {(self.p, self.q): 1}
        if self.kind == DIAG:
            return {(self.p, self.p): 1}
        return {(0, 0): 1, (self.p, self.p): -1}


@dataclass(frozen=True)
class AlgebraElement:
    algebra: "LiePosetAlgebra"
    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.coeffs) != self.algebra.dim:
            raise AlgebraMismatch("coefficient vector length != algebra dim")

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def matrix_entries(self) -> dict[tuple[int, int], Fraction]:
        """The element as a sparse n x n matrix over the poset's elements."""
        out: dict[tuple[int, int], Fraction] = {}
        for c, be in zip(self.coeffs, self.algebra.basis):
            if not c:
                continue
            for pos, v in be.matrix_entries().items():
                out[pos] = out.get(pos, Fraction(0)) + c * v
        return {pos: v for pos, v in out.items() if v}

    def __add__(self, other: "AlgebraElement") -> "AlgebraElement":
        if other.algebra is not self.algebra:
            raise AlgebraMismatch("elements belong to different algebras")
        return AlgebraElement(self.algebra,
                              tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "AlgebraElement":
        return AlgebraElement(self.algebra, tuple(-a for a in self.coeffs))


def _commutator_entries(x: dict, y: dict) -> dict[tuple[int, int], int]:
    out: dict[tuple[int, int], int] = {}
    for (a, b), u in x.items():
        for (c, d), v in y.items():
            if b == c:
                out[(a, d)] = out.get((a, d), 0) + u * v
            if d == a:
                out[(c, b)] = out.get((c, b), 0) - u * v
    return {k: v for k, v in out.items() if v}


class LiePosetAlgebra:
    def __init__(self, poset: FinitePoset, variant: str):
        if variant not in VARIANTS:
            raise ValueError(f"unknown variant {variant!r}")
        self.poset = poset
        self.variant = variant
        basis = [BasisElement.unit(p, q) for p, q in sorted(poset.strict)]
        if variant == FULL:
            basis += [BasisElement.diagonal(p) for p in range(poset.n)]
        elif variant == TYPEA:
            basis += [BasisElement.traceless_diagonal(p) for p in range(1, poset.n)]
        self.basis: tuple[BasisElement, ...] = tuple(basis)
        self.dim = len(basis)
        self.index = {be: i for i, be in enumerate(basis)}
        self._unit_index = {(be.p, be.q): i for i, be in enumerate(basis)
                            if be.kind == UNIT}
        self.bracket_table = self._build_table()

    # -- construction ------------------------------------------------------

    def _to_coords(self, entries: dict[tuple[int, int], int]) -> tuple:
        """Express a matrix (given by entries) in the variant's basis.
        Raises if the matrix falls outside the variant's span."""
        coords: dict[int, Fraction] = {}
        diag: dict[int, Fraction] = {}
        for (a, b), v in entries.items():
            if a == b:
                diag[a] = diag.get(a, Fraction(0)) + v
                continue
            k = self._unit_index.get((a, b))
            if k is None:
                raise AlgebraMismatch(f"entry at ({a},{b}) is outside the algebra")
            coords[k] = coords.get(k, Fraction(0)) + v
        diag = {p: v for p, v in diag.items() if v}
        if diag:
            if self.variant == NILPOTENT:
                raise AlgebraMismatch("diagonal part in a nilpotent bracket")
            if self.variant == FULL:
                for p, v in diag.items():
                    coords[self._diag_offset + p] = v
            else:
                if sum(diag.values()):
                    raise AlgebraMismatch("type-A bracket is not traceless")
                # sum_p c_p (E00 - Epp) has diagonal (sum c_p, -c_1, ...)
                for p, v in diag.items():
                    if p == 0:
                        continue
                    coords[self._tdiag_offset + p - 1] = -v
        return tuple(sorted((k, v) for k, v in coords.items() if v))

    @property
    def _diag_offset(self) -> int:
        return len(self._unit_index)

    @property
    def _tdiag_offset(self) -> int:
        return len(self._unit_index)

    def _build_table(self) -> dict[tuple[int, int], tuple]:
        table: dict[tuple[int, int], tuple] = {}
        mats = [be.matrix_entries() for be in self.basis]
        for i in range(self.dim):
            for j in range(i + 1, self.dim):
                entries = _commutator_entries(mats[i], mats[j])
                if not entries:
                    continue
                coords = self._to_coords(entries)
                if coords:
                    table[(i, j)] = coords
        return table

    # -- elements ----------------------------------------------------------

    def element(self, coeffs) -> AlgebraElement:
        return AlgebraElement(self, tuple(Fraction(c) for c in coeffs))

    def zero(self) -> AlgebraElement:
        return AlgebraElement(self, (Fraction(0),) * self.dim)

    def basis_vector(self, i: int) -> AlgebraElement:
        coeffs = [Fraction(0)] * self.dim
        coeffs[i] = Fraction(1)
        return AlgebraElement(self, tuple(coeffs))

    def unit_element(self, p: int, q: int) -> AlgebraElement:
        return self.basis_vector(self._unit_index[(p, q)])

    def unit_position(self, p: int, q: int) -> int:
        return self._unit_index[(p, q)]

    def _check(self, x: AlgebraElement):
        if x.algebra is not self:
            raise AlgebraMismatch("element belongs to a different algebra")

    # -- operations ----------------------------------------------------------

    def bracket(self, x: AlgebraElement, y: AlgebraElement) -> AlgebraElement:
        self._check(x)
        self._check(y)
        out = [Fraction(0)] * self.dim
        xs = [(i, c) for i, c in enumerate(x.coeffs) if c]
        ys = [(j, c) for j, c in enumerate(y.coeffs) if c]
        for i, ci in xs:
            for j, cj in ys:
                if i == j:
                    continue
                if i < j:
                    terms = self.bracket_table.get((i, j))
                    s = ci * cj
                else:
                    terms = self.bracket_table.get((j, i))
                    s = -ci * cj
                if terms:
                    for k, v in terms:
                        out[k] += s * v
        return AlgebraElement(self, tuple(out))

    def ad_matrix(self, x: AlgebraElement) -> RationalMatrix:
        """Matrix of [x, -] in the ordered basis; column j is [x, e_j]."""
        self._check(x)
        cols = []
        for j in range(self.dim):
            col = [Fraction(0)] * self.dim
            for i, ci in enumerate(x.coeffs):
                if not ci or i == j:
                    continue
                if i < j:
                    terms = self.bracket_table.get((i, j))
                    s = ci
                else:
                    terms = self.bracket_table.get((j, i))
                    s = -ci
                if terms:
                    for k, v in terms:
                        col[k] += s * v
            cols.append(col)
        entries = tuple(tuple(cols[j][k] for j in range(self.dim))
                        for k in range(self.dim))
        return RationalMatrix(self.dim, self.dim, entries)

    def element_breadth(self, x: AlgebraElement) -> int:
        self._check(x)
        return rank(self.ad_matrix(x))

    @cached_property
    def derived_dim(self) -> int:
        """dim [L, L], computed from the pairwise basis brackets."""
        vecs = set()
        for terms in self.bracket_table.values():
            v = [Fraction(0)] * self.dim
            for k, c in terms:
                v[k] = c
            vecs.add(tuple(v))
        d = span_dim(list(vecs))
        expected = (len(self.poset.strict) if self.variant in (FULL, TYPEA)
                    else len(self.poset.non_covering))
        if d != expected:
            raise AssertionError(
                f"derived dimension {d} != relation count {expected}")
        return d

    @cached_property
    def _center(self) -> list[AlgebraElement]:
        rows: dict[tuple[int, int], list[Fraction]] = {}

        def row(i, k):
            key = (i, k)
            if key not in rows:
                rows[key] = [Fraction(0)] * self.dim
            return rows[key]

        for (i, j), terms in self.bracket_table.items():
            for k, c in terms:
                row(i, k)[j] += c
                row(j, k)[i] -= c
        distinct = {tuple(r) for r in rows.values() if any(r)}
        if not distinct:
            return [self.basis_vector(i) for i in range(self.dim)]
        M = RationalMatrix.from_rows(sorted(distinct))
        basis = [AlgebraElement(self, v) for v in nullspace_basis(M)]
        if self.variant == NILPOTENT:
            rel_e = {self._unit_index[r] for r in self.poset.extremal_relations}
            if len(basis) != len(rel_e):
                raise AssertionError("nilpotent center dimension != |Rel_E|")
            for z in basis:
                if any(c and i not in rel_e for i, c in enumerate(z.coeffs)):
                    raise AssertionError(
                        "nilpotent center not supported on extremal relations")
        return basis

    def center_basis(self) -> list[AlgebraElement]:
        return list(self._center)

    @cached_property
    def center_dim(self) -> int:
        return len(self._center)


def build(poset: FinitePoset, variant: str) -> LiePosetAlgebra:
    return LiePosetAlgebra(poset, variant)
