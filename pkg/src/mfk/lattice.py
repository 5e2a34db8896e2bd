"""The lattice of flats of a matroid: intervals, Moebius values, complexes."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .bitset import from_mask, full_mask, to_mask
from .complexes import SimplicialComplex
from .errors import EmptyInterval, LoopsPresent
from .matroid import Matroid


class FlatLattice:
    """All flats of a matroid, graded by rank, with covering relations.

    Everything is computed eagerly at construction, so shared instances
    are safe for concurrent reads.
    """

    def __init__(self, matroid: Matroid):
        self.matroid = matroid
        by_rank: list[list[int]] = [[matroid.closure_mask(0)]]
        covers: list[tuple[int, int]] = []
        seen = {by_rank[0][0]}
        top = full_mask(matroid.n)
        for p in range(matroid.rank_d):
            level: set[int] = set()
            for flat in by_rank[p]:
                for e in range(matroid.n):
                    bit = 1 << e
                    if flat & bit:
                        continue
                    cover = matroid.closure_mask(flat | bit)
                    level.add(cover)
                    covers.append((flat, cover))
            by_rank.append(sorted(level))
            seen |= level
        assert matroid.rank_d == 0 or by_rank[-1] == [top]
        self.by_rank: tuple[tuple[int, ...], ...] = tuple(
            tuple(level) for level in by_rank)
        self.flat_masks: tuple[int, ...] = tuple(
            f for level in self.by_rank for f in level)
        self._flat_set = frozenset(self.flat_masks)
        self._rank_of = {f: p for p, level in enumerate(self.by_rank)
                         for f in level}
        self.cover_pairs: tuple[tuple[int, int], ...] = tuple(
            sorted(set(covers)))
        self._moebius = self._compute_moebius()

    # -- structure ----------------------------------------------------------

    @property
    def bottom(self) -> int:
        return self.flat_masks[0]

    @property
    def top(self) -> int:
        return full_mask(self.matroid.n)

    def is_flat_mask(self, mask: int) -> bool:
        return mask in self._flat_set

    def is_flat(self, subset) -> bool:
        return self.is_flat_mask(to_mask(subset))

    def rank_in_lattice(self, mask: int) -> int:
        return self._rank_of[mask]

    def join_mask(self, x: int, y: int) -> int:
        return self.matroid.closure_mask(x | y)

    def meet_mask(self, x: int, y: int) -> int:
        return x & y

    def interval_masks(self, lower: int, upper: int) -> list[int]:
        """Flats Z with lower <= Z <= upper, in rank order."""
        return [f for f in self.flat_masks
                if f & ~upper == 0 and lower & ~f == 0]

    def flats(self) -> list[list[frozenset[int]]]:
        return [[from_mask(f) for f in level] for level in self.by_rank]

    # -- Moebius ------------------------------------------------------------

    def _compute_moebius(self) -> dict[int, int]:
        mu: dict[int, int] = {}
        for flat in self.flat_masks:
            below = [g for g in self.flat_masks if g & ~flat == 0 and g != flat]
            mu[flat] = 1 if not below else -sum(mu[g] for g in below)
        for flat, value in mu.items():
            sign = -1 if self._rank_of[flat] % 2 else 1
            assert value * sign > 0, "Moebius alternation failed"
        return mu

    def moebius_mask(self, flat: int) -> int:
        return self._moebius[flat]


def flats(matroid: Matroid) -> FlatLattice:
    return FlatLattice(matroid)


@dataclass(frozen=True)
class MoebiusTable:
    """Values mu(0, X) over the lattice and the unsigned top invariant."""

    values: dict
    mu_top: int


def moebius(matroid: Matroid, lattice: FlatLattice | None = None) -> MoebiusTable:
    """Moebius function of the lattice of flats; requires no loops."""
    if matroid.loops():
        raise LoopsPresent("Moebius table requires a loop-free matroid")
    lattice = lattice or FlatLattice(matroid)
    values = {from_mask(f): lattice.moebius_mask(f)
              for f in lattice.flat_masks}
    sign = -1 if matroid.rank_d % 2 else 1
    mu_top = sign * lattice.moebius_mask(lattice.top)
    return MoebiusTable(values=values, mu_top=mu_top)


def irreducible_flats(matroid: Matroid,
                      lattice: FlatLattice | None = None) -> set[frozenset[int]]:
    """Flats of positive rank whose restriction is connected."""
    lattice = lattice or FlatLattice(matroid)
    out = set()
    for level in lattice.by_rank[1:]:
        for f in level:
            if matroid.restriction(from_mask(f)).is_connected():
                out.add(from_mask(f))
    return out


def order_complex(lattice: FlatLattice, lower, upper) -> SimplicialComplex:
    """Chains of flats strictly between two comparable flats."""
    lo, hi = to_mask(lower), to_mask(upper)
    if not (lattice.is_flat_mask(lo) and lattice.is_flat_mask(hi)):
        raise EmptyInterval("interval ends must be flats")
    if lo == hi or lo & ~hi:
        raise EmptyInterval("lower must be strictly below upper")
    between = [f for f in lattice.interval_masks(lo, hi)
               if f not in (lo, hi)]
    if not between:
        raise EmptyInterval("no flats strictly between the given ends")
    vertices = tuple(from_mask(f) for f in between)

    def less(a, b):
        return a != b and a & ~b == 0

    cover = {f: [g for g in between if less(f, g)
                 and not any(less(f, h) and less(h, g) for h in between)]
             for f in between}
    minimal = [f for f in between if not any(less(g, f) for g in between)]
    maximal_chains: list[frozenset] = []

    def descend(chain):
        if not cover[chain[-1]]:
            maximal_chains.append(frozenset(from_mask(f) for f in chain))
            return
        for g in cover[chain[-1]]:
            descend(chain + [g])

    for f in minimal:
        descend([f])
    return SimplicialComplex.from_faces(vertices, maximal_chains)


def interval_product_check(lattice: FlatLattice, flat, factors) -> bool:
    """Is the join map from the product of lower intervals an order-isomorphism?

    Checked exhaustively over tuples of the product.
    """
    x = to_mask(flat)
    factor_masks = [to_mask(f) for f in factors]
    if any(f & ~x for f in factor_masks):
        return False
    target = lattice.interval_masks(lattice.bottom, x)
    intervals = [lattice.interval_masks(lattice.bottom, f)
                 for f in factor_masks]
    size = 1
    for iv in intervals:
        size *= len(iv)
    if size != len(target):
        return False
    tuples = list(product(*intervals))
    joins = []
    for tup in tuples:
        j = lattice.bottom
        for f in tup:
            j = lattice.join_mask(j, f)
        joins.append(j)
    if len(set(joins)) != len(target) or set(joins) != set(target):
        return False
    for a, ja in zip(tuples, joins):
        for b, jb in zip(tuples, joins):
            le_tuple = all(x1 & ~x2 == 0 for x1, x2 in zip(a, b))
            le_join = ja & ~jb == 0
            if le_tuple != le_join:
                return False
    return True
