"""Bergman fans, initial degenerations of realizations, and amoeba sampling.

A weight w lies in the Bergman support when the chain of -w consists of
flats; equivalently, the face on which w is maximized carries a loop-free
matroid.  Cones over flags of proper flats are the fine structure; grouping
flags with a common degeneration gives the coarse fan, whose maximal cones
are the loop-free outer normal cones of the matroid polytope.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

import numpy as np
from scipy.optimize import nnls

from .bitset import from_mask, to_mask
from .errors import LoopsPresent, SingularSample
from .geometry import Cone, cone_contains, irredundant_rays
from .lattice import FlatLattice
from .linalg import frac, nullspace, rank as matrix_rank
from .matroid import LinearRealization, Matroid, from_matrix
from .polytope import constancy_chain


def _flat_vector(n: int, flat) -> tuple[int, ...]:
    mask = to_mask(flat)
    return tuple(1 if mask & (1 << (i - 1)) else 0 for i in range(1, n + 1))


def bergman_membership(matroid: Matroid, w) -> bool:
    """Does w lie in the Bergman support?

    True exactly when every set in the chain of -w is a flat.
    """
    if matroid.loops():
        raise LoopsPresent("Bergman membership needs a loop-free matroid")
    chain = constancy_chain([-frac(x) for x in w])
    return all(matroid.closure_mask(m) == m for m in chain.masks())


@dataclass(frozen=True)
class BergmanFan:
    """Fine flag cones grouped into the coarse Bergman fan.

    ``fine_chains[i]`` is a maximal chain of proper flats; ``groups[g]``
    lists the fine indices whose interior weights share one degeneration
    base-set ``group_bases[g]``; ``coarse_cones[g]`` carries the
    irredundant ray generators of the union.
    """

    matroid: Matroid
    fine_chains: tuple[tuple[frozenset[int], ...], ...]
    groups: tuple[tuple[int, ...], ...]
    group_bases: tuple[tuple[frozenset[int], ...], ...]
    coarse_cones: tuple[Cone, ...]

    @property
    def n(self) -> int:
        return self.matroid.n

    def rays(self) -> tuple[tuple[int, ...], ...]:
        return tuple(sorted({r for c in self.coarse_cones for r in c.rays}))

    def contains(self, w) -> bool:
        return bergman_membership(self.matroid, w)

    def coarse_contains(self, group_index: int, w) -> bool:
        """Closed-cone membership: the group's bases are all w-maximal."""
        weights = [frac(x) for x in w]
        cost = {}
        for b in self.matroid.base_masks:
            cost[b] = sum(weights[i] for i in range(self.matroid.n)
                          if b & (1 << i))
        best = max(cost.values())
        return all(cost[to_mask(b)] == best for b in self.group_bases[group_index])

    def any_coarse_contains(self, w) -> bool:
        return any(self.coarse_contains(g, w) for g in range(len(self.groups)))


def _maximal_proper_flag_masks(lattice: FlatLattice) -> list[tuple[int, ...]]:
    """Maximal chains of flats strictly between bottom and top."""
    d = lattice.matroid.rank_d
    if d <= 1:
        return [()]
    by_rank = lattice.by_rank
    flags: list[tuple[int, ...]] = []

    def grow(chain, level):
        if level == d:
            flags.append(tuple(chain))
            return
        for f in by_rank[level]:
            if chain[-1] & ~f == 0:
                grow(chain + [f], level + 1)

    for f in by_rank[1]:
        grow([f], 2)
    return flags


def bergman_fan(matroid: Matroid,
                lattice: FlatLattice | None = None) -> BergmanFan:
    """Coarse Bergman fan from flag cones grouped by degeneration bases."""
    if matroid.loops():
        raise LoopsPresent("Bergman fan needs a loop-free matroid")
    lattice = lattice or FlatLattice(matroid)
    flags = _maximal_proper_flag_masks(lattice)
    n = matroid.n
    groups: dict[tuple[int, ...], list[int]] = {}
    for idx, flag in enumerate(flags):
        w = [0] * n
        for f in flag:
            for i in range(n):
                if f & (1 << i):
                    w[i] += 1
        cost = {b: sum(w[i] for i in range(n) if b & (1 << i))
                for b in matroid.base_masks}
        best = max(cost.values())
        argmax = tuple(sorted(b for b, c in cost.items() if c == best))
        groups.setdefault(argmax, []).append(idx)

    order = sorted(groups, key=lambda bs: (len(groups[bs]), bs))
    group_list: list[tuple[int, ...]] = []
    base_list = []
    cones = []
    for bases in order:
        members = tuple(groups[bases])
        vectors = [_flat_vector(n, from_mask(f))
                   for i in members for f in flags[i]]
        rays = irredundant_rays(vectors)
        group_list.append(members)
        base_list.append(tuple(from_mask(b) for b in bases))
        cones.append(Cone(rays=rays))
    fan = BergmanFan(matroid=matroid,
                     fine_chains=tuple(tuple(from_mask(f) for f in flag)
                                       for flag in flags),
                     groups=tuple(group_list),
                     group_bases=tuple(base_list),
                     coarse_cones=tuple(cones))
    _convexity_diagnostic(fan)
    return fan


def _convexity_diagnostic(fan: BergmanFan) -> None:
    """Each group's flag rays must lie in the hull of its reduced rays."""
    for g, members in enumerate(fan.groups):
        cone = fan.coarse_cones[g]
        for i in members:
            for flat in fan.fine_chains[i]:
                vec = _flat_vector(fan.n, flat)
                assert cone_contains(cone, vec), (
                    f"group {g} is not convex at ray {vec}")


# -- initial degenerations ------------------------------------------------------


def initial_subspace(realization: LinearRealization, u) -> LinearRealization:
    """Limit of the row space scaled columnwise by t^{u_i}, as t -> 0.

    Entries are tracked as exact Laurent polynomials in t; elimination
    cancels lowest-degree parts until the degree-zero coefficient matrix
    has full rank.
    """
    weights = [int(x) for x in u]
    matrix = [list(row) for row in realization.matrix]
    d = len(matrix)
    n = realization.ncols
    if d == 0:
        return realization
    rows = [[{weights[j]: matrix[i][j]} if matrix[i][j] != 0 else {}
             for j in range(n)] for i in range(d)]

    def normalized(row):
        degrees = [min(entry) for entry in row if entry]
        shift = min(degrees)
        return [{deg - shift: c for deg, c in entry.items()}
                for entry in row]

    for _ in range(1000):
        rows = [normalized(row) for row in rows]
        low = [[entry.get(0, Fraction(0)) for entry in row] for row in rows]
        if matrix_rank(low) == d:
            limit, _ = from_matrix(low)
            return LinearRealization(
                matrix=tuple(tuple(frac(x) for x in row) for row in low),
                matroid=limit)
        transpose = [[low[i][j] for i in range(d)] for j in range(n)]
        combo = nullspace(transpose)[0]
        pivot = max(i for i in range(d) if combo[i] != 0)
        new_row = [{} for _ in range(n)]
        for i in range(d):
            if combo[i] == 0:
                continue
            for j in range(n):
                for deg, c in rows[i][j].items():
                    val = new_row[j].get(deg, Fraction(0)) + combo[i] * c
                    if val == 0:
                        new_row[j].pop(deg, None)
                    else:
                        new_row[j][deg] = val
        rows[pivot] = new_row
    raise AssertionError("initial subspace elimination did not terminate")


def check_prop_grob(realization: LinearRealization, u) -> bool:
    """Degeneration matroid equals the matroid of the initial subspace."""
    from .polytope import degeneration
    limit = initial_subspace(realization, u)
    expected = degeneration(realization.matroid, [frac(x) for x in u]).matroid_u
    return limit.matroid == expected


# -- amoeba sampling --------------------------------------------------------------


@dataclass(frozen=True)
class AmoebaSample:
    """Coordinatewise log-magnitude images of complement points, centered."""

    base: float
    points: tuple[tuple[float, ...], ...]


def amoeba_sample(realization: LinearRealization, t: float, count: int,
                  seed: int = 0, max_retries: int = 200) -> AmoebaSample:
    """Sample the projectivized complement and map through log_t magnitudes.

    Points are drawn from complex Gaussian row combinations; draws on a
    hyperplane are rejected.  The log vectors are centered to represent
    classes modulo the all-ones vector.
    """
    if t <= 1:
        raise ValueError("logarithm base must exceed 1")
    if realization.matroid.loops():
        raise LoopsPresent("amoeba sampling needs a loop-free realization")
    rng = random.Random(seed)
    matrix = np.array([[float(x) for x in row] for row in realization.matrix])
    d, n = matrix.shape
    points = []
    logt = np.log(t)
    for _ in range(count):
        for _ in range(max_retries):
            coeffs = np.array([complex(rng.gauss(0, 1), rng.gauss(0, 1))
                               for _ in range(d)])
            z = coeffs @ matrix
            if np.all(np.abs(z) > 1e-12):
                break
        else:
            raise SingularSample("too many draws hit the hyperplane union")
        logs = np.log(np.abs(z)) / logt
        centered = logs - logs.mean()
        points.append(tuple(float(x) for x in centered))
    return AmoebaSample(base=float(t), points=tuple(points))


def support_deviations(sample: AmoebaSample, fan: BergmanFan) -> list[float]:
    """Distance of each negated sample point from the Bergman support."""
    cones = []
    for cone in fan.coarse_cones:
        if cone.rays:
            mat = np.array([[float(x) for x in r] for r in cone.rays]).T
            mat = mat - mat.mean(axis=0, keepdims=True)
            cones.append(mat)
        else:
            cones.append(None)
    out = []
    for p in sample.points:
        target = -np.array(p)
        best = float(np.linalg.norm(target))
        for mat in cones:
            if mat is None:
                continue
            _, residual = nnls(mat, target)
            best = min(best, float(residual))
        out.append(best)
    return out


def support_deviation(sample: AmoebaSample, fan: BergmanFan) -> float:
    """Largest distance from the (negated) sample to the Bergman support."""
    return max(support_deviations(sample, fan))
