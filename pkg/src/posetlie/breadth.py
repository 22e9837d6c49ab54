"""Breadth of Lie poset algebras: bounds, witnesses, sampling, certification.

The breadth b(L) = max_x rank(ad_x) is certified by sandwiching: an explicit
element whose exact adjoint rank meets a proven upper bound. Known witnesses
cover the full/type-A variants over any poset and the nilpotent variants over
chains, 2xn grids, m-ary trees, and double fans; elsewhere random integer
elements give a probabilistic lower bound (generic elements attain the
maximum rank over a characteristic-zero field).
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction

from .algebra import FULL, NILPOTENT, TYPEA, AlgebraElement, LiePosetAlgebra
from .exactla import RationalMatrix, rank
from .poset import (CHAIN, FAN, GRID, TREE, FamilyDescriptor, build_family,
                    count_non_covering_closed_form)

DERIVED_ALGEBRA = "derived_algebra"
CENTER_QUOTIENT = "center_quotient"
DOUBLE_FAN_BLOCK = "double_fan_block"

CERTIFIED = "certified"
PROBABILISTIC = "probabilistic"

DEFAULT_COEFF_BOUND = 10 ** 6
DEFAULT_TRIALS = 3
CERTIFIED_RETRIES = 3


class NoKnownWitness(Exception):
    pass


class NoKnownFormula(Exception):
    pass


class NotDoubleFan(Exception):
    pass


@dataclass(frozen=True)
class Bound:
    value: int
    provenance: str

    def __post_init__(self):
        if self.value < 0:
            raise ValueError("bound value must be non-negative")


@dataclass
class BreadthReport:
    value: int
    status: str
    witness: AlgebraElement
    witness_rank: int
    best_upper: Bound
    bounds: list[Bound]
    trials: int
    seed: int


def _fan_params(a: LiePosetAlgebra) -> tuple[int, int, int] | None:
    fam = a.poset.family
    if fam is not None and fam.kind == FAN:
        return fam.params
    return None


def upper_bounds(a: LiePosetAlgebra) -> list[Bound]:
    bounds = [Bound(a.derived_dim, DERIVED_ALGEBRA)]
    if a.dim > a.center_dim:
        bounds.append(Bound(a.dim - a.center_dim - 1, CENTER_QUOTIENT))
    fan = _fan_params(a)
    if fan is not None and a.variant == NILPOTENT:
        r0, r1, r2 = fan
        if r1 < r0 and r1 < r2:
            bounds.append(Bound(r1 * (r0 + r2 - r1), DOUBLE_FAN_BLOCK))
    return bounds


def paper_witness(a: LiePosetAlgebra) -> AlgebraElement:
    """The explicit breadth-realizing element for (family, variant) pairs
    with a proven formula."""
    P = a.poset
    coeffs = [Fraction(0)] * a.dim

    if a.variant in (FULL, TYPEA):
        # x = sum_{i != 1} i (E_{1,1} - E_{i,i}) in 1-based element numbering
        if a.variant == FULL:
            for i in range(1, P.n):
                coeffs[a._diag_offset] += i + 1
                coeffs[a._diag_offset + i] -= i + 1
        else:
            for i in range(1, P.n):
                coeffs[a._tdiag_offset + i - 1] += i + 1
        return AlgebraElement(a, tuple(coeffs))

    fam = P.family
    if fam is None:
        raise NoKnownWitness("no witness for a nilpotent algebra over an "
                             "arbitrary poset")

    def add_unit(lp: str, lq: str, c=1):
        coeffs[a.unit_position(P.id_of(lp), P.id_of(lq))] += c

    if fam.kind == CHAIN:
        (n,) = fam.params
        for i in range(1, n):
            add_unit(str(i), str(i + 1))
    elif fam.kind == GRID:
        m, n = fam.params
        if m != 2:
            raise NoKnownWitness("grid witness proven only for two rows")
        for i in range(1, n):
            add_unit(f"{i}_1", f"{i + 1}_1")
            add_unit(f"{i}_2", f"{i + 1}_2")
    elif fam.kind == TREE:
        for p, q in P.covers:
            coeffs[a.unit_position(p, q)] += 1
    elif fam.kind == FAN:
        r0, r1, r2 = fam.params
        if r1 >= r0:
            for i in range(1, r0 + 1):
                add_unit(f"b_{i}", f"m_{i}")
        elif r1 >= r2:
            for i in range(1, r2 + 1):
                add_unit(f"m_{i}", f"t_{i}")
        else:
            for i in range(1, r1 + 1):
                add_unit(f"b_{i}", f"m_{i}")
                add_unit(f"m_{i}", f"t_{i}", -1)
    else:
        raise NoKnownWitness(f"no witness for family {fam}")
    return AlgebraElement(a, tuple(coeffs))


def sample_generic(a: LiePosetAlgebra, seed: int, coeff_bound: int,
                   trials: int) -> tuple[int, AlgebraElement]:
    """Max exact adjoint rank over random integer elements, with the first
    maximizing element. Deterministic for a given seed."""
    if trials < 1 or coeff_bound < 1:
        raise ValueError("trials and coeff_bound must be at least 1")
    rng = random.Random(seed)
    best_rank = 0
    best = a.zero()
    for _ in range(trials):
        x = a.element([rng.randint(-coeff_bound, coeff_bound)
                       for _ in range(a.dim)])
        r = a.element_breadth(x)
        if r > best_rank:
            best_rank, best = r, x
    return best_rank, best


def breadth(a: LiePosetAlgebra, mode: str = "fast", seed: int = 0,
            coeff_bound: int = DEFAULT_COEFF_BOUND,
            trials: int = DEFAULT_TRIALS) -> BreadthReport:
    if mode not in ("fast", "certified"):
        raise ValueError(f"unknown mode {mode!r}")
    if a.dim == 0:
        b = Bound(0, DERIVED_ALGEBRA)
        return BreadthReport(0, CERTIFIED, a.zero(), 0, b, [b], 0, seed)

    bounds = upper_bounds(a)
    best_upper = min(bounds, key=lambda b: b.value)
    upper = best_upper.value

    lower = 0
    witness = a.zero()
    try:
        w = paper_witness(a)
        lower, witness = a.element_breadth(w), w
    except NoKnownWitness:
        pass

    trials_used = 0
    if lower < upper:
        attempts = 1 + (CERTIFIED_RETRIES if mode == "certified" else 0)
        bound = coeff_bound
        for _ in range(attempts):
            r, x = sample_generic(a, seed + trials_used, bound, trials)
            trials_used += trials
            if r > lower:
                lower, witness = r, x
            if lower >= upper:
                break
            bound *= 2

    status = CERTIFIED if lower == upper else PROBABILISTIC
    return BreadthReport(lower, status, witness, lower, best_upper, bounds,
                         trials_used, seed)


def formula_breadth(d: FamilyDescriptor, variant: str) -> int:
    """Closed-form breadth for the theorem-covered (family, variant) pairs."""
    if variant in (FULL, TYPEA):
        return len(build_family(d).strict)
    if variant != NILPOTENT:
        raise ValueError(f"unknown variant {variant!r}")
    if d.kind in (CHAIN, TREE):
        return count_non_covering_closed_form(d)
    if d.kind == GRID:
        if d.params[0] != 2:
            raise NoKnownFormula("breadth of m x n grids with m != 2 is "
                                 "conjectural")
        return count_non_covering_closed_form(d)
    if d.kind == FAN:
        r0, r1, r2 = d.params
        if r1 < r0 and r1 < r2:
            return r1 * (r0 + r2 - r1)
        return r0 * r2
    raise NoKnownFormula(f"no formula for {d} with variant {variant}")


@dataclass
class MxBlockReport:
    """Structure check of the reordered adjoint matrix of a double-fan
    nilpotent algebra (columns B1,B2,B3; rows B3,B2,B1)."""
    lower_rows_zero: bool       # rows indexed by B2 and B1 vanish
    scalar_blocks_match: bool   # B3xB1 region is -a_{m_h,t_j} identity blocks
    a_blocks_match: bool        # B3xB2 region is block-diagonal copies of A
    tail_zero: bool             # B3xB3 region vanishes

    @property
    def ok(self) -> bool:
        return (self.lower_rows_zero and self.scalar_blocks_match
                and self.a_blocks_match and self.tail_zero)


def mx_ordered(a: LiePosetAlgebra, x: AlgebraElement) -> tuple[RationalMatrix,
                                                               MxBlockReport]:
    fan = _fan_params(a)
    if fan is None or a.variant != NILPOTENT:
        raise NotDoubleFan("algebra is not a nilpotent double-fan algebra")
    r0, r1, r2 = fan
    P = a.poset

    def pos(lp, lq):
        return a.unit_position(P.id_of(lp), P.id_of(lq))

    b1 = [pos(f"b_{i}", f"m_{j}") for j in range(1, r1 + 1)
          for i in range(1, r0 + 1)]
    b2 = [pos(f"m_{i}", f"t_{j}") for j in range(1, r2 + 1)
          for i in range(1, r1 + 1)]
    b3 = [pos(f"b_{i}", f"t_{j}") for j in range(1, r2 + 1)
          for i in range(1, r0 + 1)]
    col_order = b1 + b2 + b3
    row_order = b3 + b2 + b1

    M = a.ad_matrix(x)
    reordered = RationalMatrix.from_rows(
        [[M.at(r, c) for c in col_order] for r in row_order])

    amt = {(h, j): x.coeffs[pos(f"m_{h}", f"t_{j}")]
           for h in range(1, r1 + 1) for j in range(1, r2 + 1)}
    abm = {(g, h): x.coeffs[pos(f"b_{g}", f"m_{h}")]
           for g in range(1, r0 + 1) for h in range(1, r1 + 1)}

    n3 = r0 * r2
    n2 = r1 * r2
    n1 = r0 * r1
    lower_rows_zero = all(not reordered.at(r, c)
                          for r in range(n3, n3 + n2 + n1)
                          for c in range(reordered.cols))
    scalar_ok = True
    for j in range(1, r2 + 1):          # B3 row block
        for h in range(1, r1 + 1):      # B1 column block
            for ri in range(r0):
                for ci in range(r0):
                    got = reordered.at((j - 1) * r0 + ri, (h - 1) * r0 + ci)
                    want = -amt[(h, j)] if ri == ci else Fraction(0)
                    if got != want:
                        scalar_ok = False
    a_ok = True
    for j in range(1, r2 + 1):          # B3 row block
        for l in range(1, r2 + 1):      # B2 column block
            for g in range(1, r0 + 1):
                for h in range(1, r1 + 1):
                    got = reordered.at((j - 1) * r0 + (g - 1),
                                       n1 + (l - 1) * r1 + (h - 1))
                    want = abm[(g, h)] if l == j else Fraction(0)
                    if got != want:
                        a_ok = False
    tail_zero = all(not reordered.at(r, c)
                    for r in range(n3)
                    for c in range(n1 + n2, n1 + n2 + n3))
    report = MxBlockReport(lower_rows_zero, scalar_ok, a_ok, tail_zero)
    return reordered, report


def breadth_spectrum_sample(a: LiePosetAlgebra, seed: int, trials: int,
                            coeff_bound: int = 10) -> set[int]:
    """Observed element-breadth values: zero, basis elements, any known
    witness, and random elements. Experimental; no completeness claim."""
    if trials < 1:
        raise ValueError("trials must be at least 1")
    values = {0}
    for i in range(a.dim):
        values.add(a.element_breadth(a.basis_vector(i)))
    try:
        values.add(a.element_breadth(paper_witness(a)))
    except NoKnownWitness:
        pass
    rng = random.Random(seed)
    for _ in range(trials):
        x = a.element([rng.randint(-coeff_bound, coeff_bound)
                       for _ in range(a.dim)])
        values.add(a.element_breadth(x))
    return values
