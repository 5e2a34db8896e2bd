"""Matroids given by their bases, with the fundamental operations.

Elements are labelled 1..n in all public interfaces.  Equality of matroids
is labelled equality of the canonical base list; isomorphism is never
computed.  Instances are immutable after construction and safe to share
across threads.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from itertools import combinations

from .bitset import from_mask, full_mask, iter_bits, popcount, to_mask
from .errors import CardinalityMismatch, ExchangeViolation, ParameterOutOfRange
from .linalg import frac_matrix, rank as matrix_rank, rref

DEFAULT_MAX_N = 20


def _max_ground() -> int:
    return int(os.environ.get("MFK_MAX_N", DEFAULT_MAX_N))


class Matroid:
    """A matroid on ground set [n], stored by its set of bases."""

    __slots__ = ("n", "base_masks", "rank_d", "__dict__")

    def __init__(self, n: int, base_masks, _validated: bool = False):
        if n < 0:
            raise ParameterOutOfRange("ground set size must be nonnegative")
        if n > _max_ground():
            raise ParameterOutOfRange(
                f"ground set size {n} exceeds cap {_max_ground()} "
                "(set MFK_MAX_N to override)")
        masks = tuple(sorted(set(base_masks)))
        if not masks:
            raise CardinalityMismatch("a matroid needs at least one basis")
        self.n = n
        self.base_masks = masks
        self.rank_d = popcount(masks[0])
        if not _validated:
            self._validate()

    def _validate(self) -> None:
        d = self.rank_d
        universe = full_mask(self.n)
        for b in self.base_masks:
            if b & ~universe:
                raise ParameterOutOfRange(
                    f"basis {sorted(from_mask(b))} not inside [{self.n}]")
            if popcount(b) != d:
                raise CardinalityMismatch(
                    f"bases of sizes {d} and {popcount(b)} both present")
        base_set = set(self.base_masks)
        for b1 in self.base_masks:
            for b2 in self.base_masks:
                if b1 == b2:
                    continue
                out = b1 & ~b2
                for x in iter_bits(out):
                    xbit = 1 << (x - 1)
                    stripped = b1 & ~xbit
                    if not any(stripped | ybit in base_set
                               for ybit in _single_bits(b2 & ~b1)):
                        raise ExchangeViolation(from_mask(b1), from_mask(b2), x)

    # -- canonical equality ------------------------------------------------

    def __eq__(self, other) -> bool:
        return (isinstance(other, Matroid) and self.n == other.n
                and self.base_masks == other.base_masks)

    def __hash__(self) -> int:
        return hash((self.n, self.base_masks))

    def __repr__(self) -> str:
        return f"Matroid(n={self.n}, rank={self.rank_d}, |bases|={len(self.base_masks)})"

    # -- basic queries -----------------------------------------------------

    @property
    def bases(self) -> tuple[frozenset[int], ...]:
        return tuple(from_mask(b) for b in self.base_masks)

    @property
    def ground(self) -> frozenset[int]:
        return frozenset(range(1, self.n + 1))

    def rank_mask(self, mask: int) -> int:
        return max(popcount(b & mask) for b in self.base_masks)

    def rank(self, subset) -> int:
        """Rank of a subset of [n]."""
        return self.rank_mask(to_mask(subset))

    def closure_mask(self, mask: int) -> int:
        r = self.rank_mask(mask)
        closed = mask
        for e in range(self.n):
            bit = 1 << e
            if not mask & bit and self.rank_mask(mask | bit) == r:
                closed |= bit
        return closed

    def closure(self, subset) -> frozenset[int]:
        """Smallest flat containing the subset."""
        return from_mask(self.closure_mask(to_mask(subset)))

    def is_independent(self, subset) -> bool:
        mask = to_mask(subset)
        return self.rank_mask(mask) == popcount(mask)

    def loops(self) -> frozenset[int]:
        loop_mask = full_mask(self.n)
        for b in self.base_masks:
            loop_mask &= ~b
        # elements missed by every basis of positive rank are loops; for
        # rank 0 everything is a loop
        if self.rank_d == 0:
            return frozenset(range(1, self.n + 1))
        return frozenset(e for e in iter_bits(loop_mask)
                         if self.rank_mask(1 << (e - 1)) == 0)

    def is_simple(self) -> bool:
        if self.loops():
            return False
        for i, j in combinations(range(1, self.n + 1), 2):
            if self.rank_mask(to_mask((i, j))) == 1:
                return False
        return True

    # -- duality and minors --------------------------------------------------

    def dual(self) -> "Matroid":
        universe = full_mask(self.n)
        return Matroid(self.n, (universe & ~b for b in self.base_masks),
                       _validated=True)

    def restriction(self, subset) -> "Matroid":
        """Restriction to the subset, relabelled 1..|X| in sorted order."""
        elems = sorted(set(subset))
        mask = to_mask(elems)
        r = self.rank_mask(mask)
        pos = {e: i + 1 for i, e in enumerate(elems)}
        new_bases = set()
        for b in self.base_masks:
            inter = b & mask
            if popcount(inter) == r:
                new_bases.add(to_mask(pos[e] for e in iter_bits(inter)))
        return Matroid(len(elems), new_bases, _validated=True)

    def contraction(self, subset) -> "Matroid":
        """Contraction by the subset, on [n]-X relabelled 1..n-|X|."""
        mask = to_mask(subset)
        r = self.rank_mask(mask)
        anchor = next(b & mask for b in self.base_masks
                      if popcount(b & mask) == r)
        rest = sorted(e for e in range(1, self.n + 1)
                      if not mask & (1 << (e - 1)))
        pos = {e: i + 1 for i, e in enumerate(rest)}
        new_bases = set()
        for b in self.base_masks:
            if b & mask == anchor:
                new_bases.add(to_mask(pos[e] for e in iter_bits(b & ~mask)))
        return Matroid(len(rest), new_bases, _validated=True)

    # -- connectivity ---------------------------------------------------------

    @cached_property
    def circuit_masks(self) -> tuple[int, ...]:
        """Minimal dependent sets; circuits have at most rank+1 elements."""
        found: list[int] = []
        for size in range(1, self.rank_d + 2):
            for combo in combinations(range(self.n), size):
                mask = 0
                for c in combo:
                    mask |= 1 << c
                if any(c & ~mask == 0 for c in found):
                    continue
                if self.rank_mask(mask) < size:
                    found.append(mask)
        return tuple(sorted(found))

    def circuits(self) -> list[frozenset[int]]:
        return [from_mask(c) for c in self.circuit_masks]

    @cached_property
    def _component_blocks(self) -> tuple[frozenset[int], ...]:
        parent = list(range(self.n + 1))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for c in self.circuit_masks:
            elems = list(iter_bits(c))
            for e in elems[1:]:
                parent[find(e)] = find(elems[0])
        groups: dict[int, set[int]] = {}
        for e in range(1, self.n + 1):
            groups.setdefault(find(e), set()).add(e)
        return tuple(sorted((frozenset(g) for g in groups.values()),
                            key=min))

    def components(self) -> ComponentPartition:
        blocks = self._component_blocks
        return ComponentPartition(blocks=blocks, kappa=len(blocks))

    def is_connected(self) -> bool:
        return self.components().kappa == 1


def _single_bits(mask: int):
    while mask:
        low = mask & -mask
        yield low
        mask &= ~low


@dataclass(frozen=True)
class ComponentPartition:
    """Finest decomposition of the ground set into direct summands."""

    blocks: tuple[frozenset[int], ...]
    kappa: int


@dataclass(frozen=True)
class LinearRealization:
    """A full-row-rank rational matrix whose column matroid is attached."""

    matrix: tuple[tuple[Fraction, ...], ...]
    matroid: Matroid

    @property
    def nrows(self) -> int:
        return len(self.matrix)

    @property
    def ncols(self) -> int:
        return len(self.matrix[0]) if self.matrix else self.matroid.n


# -- constructors -------------------------------------------------------------


def from_bases(n: int, bases) -> Matroid:
    """Validated matroid from explicit bases; exchange checked exhaustively."""
    masks = []
    for base in bases:
        base = set(base)
        if any(not 1 <= e <= n for e in base):
            raise ParameterOutOfRange(f"basis {sorted(base)} not inside [{n}]")
        masks.append(to_mask(base))
    if not masks:
        raise CardinalityMismatch("a matroid needs at least one basis")
    sizes = {popcount(m) for m in masks}
    if len(sizes) > 1:
        raise CardinalityMismatch(f"basis sizes {sorted(sizes)} differ")
    return Matroid(n, masks)


def from_matrix(rows) -> tuple[Matroid, LinearRealization]:
    """Column matroid of a rational matrix, with the realization attached.

    Zero columns become loops.  Bases are enumerated exhaustively over
    d-subsets of columns, d the row rank.
    """
    mat = frac_matrix(rows)
    ncols = len(mat[0]) if mat else 0
    d = matrix_rank(mat)
    cols = [[mat[i][j] for i in range(len(mat))] for j in range(ncols)]
    base_masks = []
    for combo in combinations(range(ncols), d):
        sub = [[cols[j][i] for j in combo] for i in range(len(mat))]
        if matrix_rank(sub) == d:
            base_masks.append(to_mask(c + 1 for c in combo))
    matroid = Matroid(ncols, base_masks or [0], _validated=True)
    if len(mat) != d:
        red, _ = rref(mat)
        mat = [row for row in red if any(x != 0 for x in row)]
    realization = LinearRealization(
        matrix=tuple(tuple(row) for row in mat), matroid=matroid)
    return matroid, realization


def from_graph(vertex_count: int, edge_list) -> Matroid:
    """Graphic matroid: element i is the i-th edge, bases are maximal forests.

    Computed from the signed incidence matrix over the rationals.
    """
    matrix = [[Fraction(0)] * len(edge_list) for _ in range(vertex_count)]
    for idx, (u, v) in enumerate(edge_list):
        if not (1 <= u <= vertex_count and 1 <= v <= vertex_count) or u == v:
            raise ParameterOutOfRange(f"bad edge {(u, v)}")
        matrix[u - 1][idx] = Fraction(1)
        matrix[v - 1][idx] = Fraction(-1)
    matroid, _ = from_matrix(matrix)
    return matroid


def uniform(d: int, n: int) -> Matroid:
    """Uniform matroid: every d-subset of [n] is a basis."""
    if not 1 <= d <= n:
        raise ParameterOutOfRange(f"uniform({d}, {n}) needs 1 <= d <= n")
    return Matroid(n, (to_mask(c) for c in combinations(range(1, n + 1), d)),
                   _validated=True)


def direct_sum(m1: Matroid, m2: Matroid) -> Matroid:
    """Direct sum, with the second ground set shifted past the first."""
    shift = m1.n
    masks = [b1 | (b2 << shift) for b1 in m1.base_masks
             for b2 in m2.base_masks]
    return Matroid(m1.n + m2.n, masks, _validated=True)
