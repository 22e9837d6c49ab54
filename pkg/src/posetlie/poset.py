"""Finite posets: construction, relation classes, families, and Hasse export.

Elements are internally 0-based and topologically relabeled so that a < b
whenever a precedes b in the order; user-facing labels stay 1-based (or carry
the family's own naming like "2_1", "b_3").
"""

from __future__ import annotations

import heapq
import random
from dataclasses import dataclass, field
from functools import cached_property


class PosetError(Exception):
    pass


class CycleDetected(PosetError):
    pass


class OutOfRange(PosetError):
    pass


class InvalidParameter(PosetError):
    pass


class UnsupportedFamily(PosetError):
    pass


CHAIN = "chain"
GRID = "grid"
TREE = "tree"
FAN = "fan"


@dataclass(frozen=True)
class FamilyDescriptor:
    """One of the built-in poset families, with its parameters."""

    kind: str
    params: tuple[int, ...]

    def __post_init__(self):
        expected = {CHAIN: 1, GRID: 2, TREE: 2, FAN: 3}
        if self.kind not in expected:
            raise InvalidParameter(f"unknown family kind {self.kind!r}")
        if len(self.params) != expected[self.kind]:
            raise InvalidParameter(
                f"{self.kind} takes {expected[self.kind]} parameter(s), "
                f"got {self.params}"
            )
        if any(p < 1 for p in self.params):
            raise InvalidParameter(f"parameters must be positive, got {self.params}")
        if self.kind == TREE and self.params[0] < 2:
            raise InvalidParameter("tree branching factor must be at least 2")

    @classmethod
    def chain(cls, n: int) -> "FamilyDescriptor":
        return cls(CHAIN, (n,))

    @classmethod
    def grid(cls, m: int, n: int) -> "FamilyDescriptor":
        return cls(GRID, (m, n))

    @classmethod
    def tree(cls, m: int, n: int) -> "FamilyDescriptor":
        return cls(TREE, (m, n))

    @classmethod
    def fan(cls, r0: int, r1: int, r2: int) -> "FamilyDescriptor":
        return cls(FAN, (r0, r1, r2))

    def __str__(self) -> str:
        return f"{self.kind}({','.join(map(str, self.params))})"


@dataclass(frozen=True)
class FinitePoset:
    """Immutable finite poset on {0, ..., n-1} with a transitively closed
    strict relation satisfying a < b for every a ≺ b."""

    n: int
    strict: frozenset[tuple[int, int]]
    labels: tuple[str, ...]
    family: FamilyDescriptor | None = field(default=None, compare=False)

    def __post_init__(self):
        if len(self.labels) != self.n:
            raise InvalidParameter("label count must equal element count")
        for a, b in self.strict:
            if not (0 <= a < self.n and 0 <= b < self.n):
                raise OutOfRange(f"relation ({a},{b}) out of range")
            if a >= b:
                raise InvalidParameter(f"relation ({a},{b}) violates natural order")

    # -- queries ----------------------------------------------------------

    def less(self, a: int, b: int) -> bool:
        return (a, b) in self.strict

    @cached_property
    def _id_of_label(self) -> dict[str, int]:
        return {lab: i for i, lab in enumerate(self.labels)}

    def id_of(self, label: str) -> int:
        try:
            return self._id_of_label[label]
        except KeyError:
            raise OutOfRange(f"no element labeled {label!r}") from None

    @cached_property
    def covers(self) -> frozenset[tuple[int, int]]:
        out = set()
        for a, b in self.strict:
            if not any((a, c) in self.strict and (c, b) in self.strict
                       for c in range(a + 1, b)):
                out.add((a, b))
        return frozenset(out)

    @cached_property
    def non_covering(self) -> frozenset[tuple[int, int]]:
        return self.strict - self.covers

    def non_covering_at(self, p: int) -> frozenset[tuple[int, int]]:
        return frozenset((a, b) for a, b in self.non_covering if a == p or b == p)

    @cached_property
    def minimal_elements(self) -> frozenset[int]:
        below = {b for _, b in self.strict}
        return frozenset(i for i in range(self.n) if i not in below)

    @cached_property
    def maximal_elements(self) -> frozenset[int]:
        above = {a for a, _ in self.strict}
        return frozenset(i for i in range(self.n) if i not in above)

    @cached_property
    def extremal_elements(self) -> frozenset[int]:
        return self.minimal_elements | self.maximal_elements

    @cached_property
    def extremal_relations(self) -> frozenset[tuple[int, int]]:
        ext = self.extremal_elements
        return frozenset((a, b) for a, b in self.strict if a in ext and b in ext)

    # -- export -----------------------------------------------------------

    def hasse_dot(self) -> str:
        lines = ["digraph hasse {", "  rankdir=BT;"]
        for i in range(self.n):
            lines.append(f'  n{i} [label="{self.labels[i]}"];')
        for a, b in sorted(self.covers):
            lines.append(f"  n{a} -> n{b};")
        lines.append("}")
        return "\n".join(lines) + "\n"

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "covers": sorted([a + 1, b + 1] for a, b in self.covers),
            "labels": list(self.labels),
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "FinitePoset":
        n = data["n"]
        covers = [(a - 1, b - 1) for a, b in data.get("covers", [])]
        labels = data.get("labels")
        return from_covers(n, covers, labels=labels)


def _transitive_closure(n: int, rels: set[tuple[int, int]]) -> set[tuple[int, int]]:
    succ: dict[int, set[int]] = {i: set() for i in range(n)}
    for a, b in rels:
        succ[a].add(b)
    closed: set[tuple[int, int]] = set()
    for a in range(n):
        seen: set[int] = set()
        stack = list(succ[a])
        while stack:
            v = stack.pop()
            if v in seen:
                continue
            seen.add(v)
            stack.extend(succ[v])
        if a in seen:
            raise CycleDetected(f"element {a} is below itself")
        closed.update((a, b) for b in seen)
    return closed


def _topological_permutation(n: int, rels: set[tuple[int, int]]) -> list[int]:
    """perm[old_id] = new_id, with ties broken by old id for determinism."""
    indeg = [0] * n
    succ: dict[int, list[int]] = {i: [] for i in range(n)}
    for a, b in rels:
        succ[a].append(b)
        indeg[b] += 1
    heap = [i for i in range(n) if indeg[i] == 0]
    heapq.heapify(heap)
    perm = [-1] * n
    pos = 0
    while heap:
        v = heapq.heappop(heap)
        perm[v] = pos
        pos += 1
        for w in succ[v]:
            indeg[w] -= 1
            if indeg[w] == 0:
                heapq.heappush(heap, w)
    if pos != n:
        raise CycleDetected("relation graph contains a cycle")
    return perm


def from_covers(n: int, covers, labels=None,
                family: FamilyDescriptor | None = None) -> FinitePoset:
    """Build a poset as the transitive closure of the given covering
    relations, relabeling so internal ids respect the order."""
    if n < 0:
        raise InvalidParameter("element count must be non-negative")
    covers = [tuple(c) for c in covers]
    for a, b in covers:
        if not (0 <= a < n and 0 <= b < n):
            raise OutOfRange(f"cover ({a},{b}) out of range for n={n}")
        if a == b:
            raise CycleDetected(f"cover ({a},{b}) relates an element to itself")
    strict = _transitive_closure(n, set(covers))
    perm = _topological_permutation(n, strict)
    if labels is None:
        labels = [str(i + 1) for i in range(n)]
    if len(labels) != n:
        raise InvalidParameter("label count must equal element count")
    new_labels = [""] * n
    for old, new in enumerate(perm):
        new_labels[new] = labels[old]
    new_strict = frozenset((perm[a], perm[b]) for a, b in strict)
    return FinitePoset(n, new_strict, tuple(new_labels), family=family)


def build_family(d: FamilyDescriptor) -> FinitePoset:
    if d.kind == CHAIN:
        (n,) = d.params
        labels = [str(i + 1) for i in range(n)]
        covers = [(i, i + 1) for i in range(n - 1)]
        return from_covers(n, covers, labels=labels, family=d)

    if d.kind == GRID:
        m, n = d.params
        # element i_j for 1 <= i <= n, 1 <= j <= m
        idx = {(i, j): (j - 1) * n + (i - 1)
               for j in range(1, m + 1) for i in range(1, n + 1)}
        labels = [""] * (m * n)
        for (i, j), e in idx.items():
            labels[e] = f"{i}_{j}"
        covers = []
        for j in range(1, m + 1):
            for i in range(1, n + 1):
                if j < m:
                    covers.append((idx[(i, j)], idx[(i, j + 1)]))
                if i < n:
                    covers.append((idx[(i, j)], idx[(i + 1, j)]))
        return from_covers(m * n, covers, labels=labels, family=d)

    if d.kind == TREE:
        m, n = d.params
        # level k holds m^(k-1) nodes i_k; i_k covers (mi-j)_(k+1), 0 <= j < m
        idx = {}
        labels = []
        for k in range(1, n + 1):
            for i in range(1, m ** (k - 1) + 1):
                idx[(i, k)] = len(labels)
                labels.append(f"{i}_{k}")
        covers = []
        for k in range(1, n):
            for i in range(1, m ** (k - 1) + 1):
                for j in range(m):
                    covers.append((idx[(i, k)], idx[(m * i - j, k + 1)]))
        return from_covers(len(labels), covers, labels=labels, family=d)

    if d.kind == FAN:
        r0, r1, r2 = d.params
        labels = ([f"b_{i}" for i in range(1, r0 + 1)]
                  + [f"m_{i}" for i in range(1, r1 + 1)]
                  + [f"t_{i}" for i in range(1, r2 + 1)])
        covers = []
        for b in range(r0):
            for mid in range(r0, r0 + r1):
                covers.append((b, mid))
        for mid in range(r0, r0 + r1):
            for t in range(r0 + r1, r0 + r1 + r2):
                covers.append((mid, t))
        return from_covers(r0 + r1 + r2, covers, labels=labels, family=d)

    raise InvalidParameter(f"unknown family kind {d.kind!r}")


def count_non_covering_closed_form(d: FamilyDescriptor) -> int:
    """Closed-form |non-covering relations| for chains, 2xn grids, and trees."""
    if d.kind == CHAIN:
        (n,) = d.params
        return (n - 1) * (n - 2) // 2
    if d.kind == GRID:
        m, n = d.params
        if m != 2:
            raise UnsupportedFamily("closed form known only for 2xn grids")
        return (n - 1) * (3 * n - 4) // 2
    if d.kind == TREE:
        m, n = d.params
        num = (n - 2) * m ** (n + 1) + (1 - n) * m ** n + m * m
        den = (m - 1) ** 2
        if num % den:
            raise AssertionError("tree count formula did not divide evenly")
        return num // den
    raise UnsupportedFamily(f"no closed form for {d}; enumerate instead")


def random_poset(n: int, edge_probability: float, seed: int) -> FinitePoset:
    """Each pair i<j becomes a relation independently, then closure is taken.
    Deterministic for a given seed; not uniform over posets."""
    if not 0.0 <= edge_probability <= 1.0:
        raise InvalidParameter("edge probability must lie in [0, 1]")
    rng = random.Random(seed)
    rels = set()
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < edge_probability:
                rels.add((i, j))
    strict = frozenset(_transitive_closure(n, rels))
    labels = tuple(str(i + 1) for i in range(n))
    return FinitePoset(n, strict, labels)
