"""Matroid polytopes, weight-vector degenerations, and facet classification.

Weight vectors follow the minimizing convention throughout: the chain of a
weight vector lists its sublevel sets in ascending order, and the attached
degeneration is the matroid of the face on which the vector is minimized.
Outer-normal-fan questions are reduced to this convention by negating the
weight in one documented place (the Bergman module).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .bitset import from_mask, full_mask, popcount, to_mask
from .errors import Disconnected, LoopsPresent, NotAFace
from .geometry import RationalPolytope, convex_hull, face_lattice
from .lattice import FlatLattice
from .linalg import frac
from .matroid import Matroid, from_bases


def indicator_vertex(n: int, base: frozenset[int]) -> tuple[Fraction, ...]:
    return tuple(Fraction(1 if i in base else 0) for i in range(1, n + 1))


def polytope(matroid: Matroid) -> RationalPolytope:
    """Convex hull of the indicator vectors of the bases."""
    points = [indicator_vertex(matroid.n, b) for b in matroid.bases]
    hull = convex_hull(points)
    assert hull.dim == matroid.n - matroid.components().kappa
    assert len(hull.vertices) == len(matroid.base_masks)
    return hull


@dataclass(frozen=True)
class ConstancyChain:
    """Ascending sublevel sets of a weight vector, ending at the full set."""

    sets: tuple[frozenset[int], ...]

    def masks(self) -> tuple[int, ...]:
        return tuple(to_mask(s) for s in self.sets)


def constancy_chain(u) -> ConstancyChain:
    """The unique chain on which the weight is constant per difference block."""
    weights = [frac(x) for x in u]
    values = sorted(set(weights))
    sets = []
    cumulative: set[int] = set()
    for value in values:
        cumulative |= {i + 1 for i, w in enumerate(weights) if w == value}
        sets.append(frozenset(cumulative))
    return ConstancyChain(sets=tuple(sets))


@dataclass(frozen=True)
class Degeneration:
    """The matroid of the face minimizing a weight vector."""

    matroid_u: Matroid
    chain: ConstancyChain
    loop_free: bool


def _restriction_bases(matroid: Matroid, flat_mask: int) -> list[int]:
    r = matroid.rank_mask(flat_mask)
    return sorted({b & flat_mask for b in matroid.base_masks
                   if popcount(b & flat_mask) == r})


def degeneration(matroid: Matroid, u) -> Degeneration:
    """Degeneration along the constancy chain of ``u``.

    Built as the direct sum of the interval minors of the chain; the result
    is cross-checked against the bases minimizing ``u`` on the polytope.
    """
    chain = constancy_chain(list(u) or [0] * matroid.n)
    if matroid.n == 0:
        return Degeneration(matroid_u=matroid,
                            chain=ConstancyChain(sets=(frozenset(),)),
                            loop_free=True)
    block_bases: list[list[int]] = []
    prev_mask = 0
    anchor = 0
    for sset in chain.sets:
        mask = to_mask(sset)
        level = [b for b in _restriction_bases(matroid, mask)
                 if b & prev_mask == anchor]
        block_bases.append(sorted({b & ~prev_mask for b in level}))
        anchor = level[0]
        prev_mask = mask
    unions = [0]
    for blocks in block_bases:
        unions = [u0 | b for u0 in unions for b in blocks]
    weights = [frac(x) for x in u]
    costs = {b: sum(w for w, e in zip(weights, range(1, matroid.n + 1))
                    if b & (1 << (e - 1))) for b in matroid.base_masks}
    best = min(costs.values())
    argmin = sorted(b for b, c in costs.items() if c == best)
    assert sorted(set(unions)) == argmin, "minor composition disagrees with face"
    matroid_u = Matroid(matroid.n, argmin, _validated=True)
    loop_free = not matroid_u.loops()
    chain_flats = all(matroid.closure_mask(m) == m for m in chain.masks())
    assert loop_free == chain_flats
    return Degeneration(matroid_u=matroid_u, chain=chain, loop_free=loop_free)


@dataclass(frozen=True)
class FacetDescription:
    """One facet of the matroid polytope with its inner normal."""

    kind: str  # "interior" or "boundary"
    flat: frozenset[int] | None
    element: int | None
    inner_normal: tuple[int, ...]
    vertex_bases: tuple[frozenset[int], ...]


def facets(matroid: Matroid,
           lattice: FlatLattice | None = None) -> list[FacetDescription]:
    """Classified facet list of the matroid polytope.

    Interior facets (not on the boundary of the dilated simplex) correspond
    to flats whose restriction and contraction are both connected; boundary
    facets to elements whose deletion leaves a connected matroid.
    """
    if matroid.loops():
        raise LoopsPresent("facet classification needs a loop-free matroid")
    if not matroid.is_connected():
        raise Disconnected("facet classification needs a connected matroid")
    lattice = lattice or FlatLattice(matroid)
    out: list[FacetDescription] = []
    top = full_mask(matroid.n)
    for level in lattice.by_rank[1:-1] if matroid.rank_d >= 1 else []:
        for f in level:
            flat = from_mask(f)
            if not matroid.restriction(flat).is_connected():
                continue
            if not matroid.contraction(flat).is_connected():
                continue
            r = matroid.rank_mask(f)
            verts = tuple(from_mask(b) for b in matroid.base_masks
                          if popcount(b & f) == r)
            normal = tuple(-1 if i in flat else 0
                           for i in range(1, matroid.n + 1))
            out.append(FacetDescription(kind="interior", flat=flat,
                                        element=None, inner_normal=normal,
                                        vertex_bases=verts))
    for e in range(1, matroid.n + 1):
        bit = 1 << (e - 1)
        avoiding = [b for b in matroid.base_masks if not b & bit]
        if not avoiding:
            continue
        deletion = matroid.restriction(from_mask(top & ~bit))
        if not deletion.is_connected():
            continue
        normal = tuple(1 if i == e else 0 for i in range(1, matroid.n + 1))
        out.append(FacetDescription(
            kind="boundary", flat=None, element=e, inner_normal=normal,
            vertex_bases=tuple(from_mask(b) for b in avoiding)))
    return out


def face_matroid(matroid: Matroid, vertex_bases) -> Matroid:
    """Matroid whose bases are the vertices of a face of the polytope."""
    wanted = {frozenset(b) for b in vertex_bases}
    hull = polytope(matroid)
    lat = face_lattice(hull)
    vertex_to_base = {v: frozenset(i + 1 for i, x in enumerate(v) if x == 1)
                      for v in hull.vertices}
    face_sets = {frozenset(vertex_to_base[hull.vertices[i]] for i in fs)
                 for level in lat.faces_by_dim for fs in level}
    if wanted not in face_sets:
        raise NotAFace(f"{sorted(map(sorted, wanted))} is not a face")
    return from_bases(matroid.n, wanted)


def dual_reflection_check(matroid: Matroid) -> bool:
    """Vertexwise identity between the dual polytope and the reflected one."""
    dual_vertices = {indicator_vertex(matroid.n, b)
                     for b in matroid.dual().bases}
    reflected = {tuple(Fraction(1) - x for x in indicator_vertex(matroid.n, b))
                 for b in matroid.bases}
    return dual_vertices == reflected
