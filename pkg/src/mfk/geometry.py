"""Exact rational polytopes, cones in Z^n modulo the all-ones vector, fans.

The convex hull is brute force over candidate supporting hyperplanes, which
is fine at the intended scale (a few dozen vertices); there is no incremental
double-description machinery here.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import gcd

from sympy import Matrix as SympyMatrix
from sympy.matrices.normalforms import smith_normal_form as _sympy_snf

from .errors import DimensionMismatch
from .linalg import content, frac, lp_feasible, nullspace, rank, rref


# -- quotient lattice Z^n / Z·(1,...,1) ---------------------------------------


def quotient_rep(vec) -> tuple[int, ...]:
    """Canonical class representative: minimum coordinate zero."""
    ints = [int(x) for x in vec]
    m = min(ints)
    return tuple(x - m for x in ints)


def quotient_ray(vec) -> tuple[int, ...]:
    """Canonical primitive ray generator: min coordinate 0, coordinate gcd 1."""
    rep = quotient_rep(vec)
    g = content(rep)
    return rep if g in (0, 1) else tuple(x // g for x in rep)


def quotient_coordinates(vec) -> tuple[int, ...]:
    """Coordinates of a class in the basis e_1,...,e_{n-1} of Z^n/Z·e."""
    ints = [int(x) for x in vec]
    return tuple(x - ints[-1] for x in ints[:-1])


@dataclass(frozen=True)
class QuotientVector:
    """A class in Z^n / Z·e, stored by its canonical representative."""

    rep: tuple[int, ...]

    @staticmethod
    def of(vec) -> "QuotientVector":
        return QuotientVector(rep=quotient_rep(vec))

    @staticmethod
    def ray(vec) -> "QuotientVector":
        return QuotientVector(rep=quotient_ray(vec))


# -- cones and fans ------------------------------------------------------------


@dataclass(frozen=True)
class Cone:
    """Rational cone in the quotient, given by primitive ray generators."""

    rays: tuple[tuple[int, ...], ...]

    @staticmethod
    def over(vectors) -> "Cone":
        rays = sorted({quotient_ray(v) for v in vectors
                       if any(quotient_rep(v))})
        return Cone(rays=tuple(rays))

    @property
    def dim_ambient(self) -> int:
        return len(self.rays[0]) if self.rays else 0

    def is_simplicial(self) -> bool:
        if not self.rays:
            return True
        coords = [list(quotient_coordinates(r)) for r in self.rays]
        return rank([[Fraction(x) for x in row] for row in coords]) == len(self.rays)


def cone_contains(cone: Cone, vec) -> bool:
    """Exact membership: is vec a nonnegative combination of rays modulo e?"""
    if isinstance(vec, QuotientVector):
        vec = vec.rep
    target = [frac(x) for x in vec]
    n = len(target)
    if not cone.rays:
        return not any(quotient_rep(vec))
    a_eq = [[frac(r[i]) for r in cone.rays] + [Fraction(1)]
            for i in range(n)]
    return lp_feasible(a_eq, target, num_nonneg=len(cone.rays)) is not None


def cone_subset(inner: Cone, outer: Cone) -> bool:
    """Containment of cones, decided on the inner cone's generators."""
    return all(cone_contains(outer, r) for r in inner.rays)


def irredundant_rays(vectors) -> tuple[tuple[int, ...], ...]:
    """Drop generators lying in the cone of the remaining ones.

    One pass suffices: once a ray survives against the current generator
    set, later removals only shrink that set.
    """
    rays = sorted({quotient_ray(v) for v in vectors if any(quotient_rep(v))})
    keep = list(rays)
    for r in rays:
        rest = [s for s in keep if s != r]
        if rest and cone_contains(Cone(rays=tuple(rest)), r):
            keep.remove(r)
    return tuple(keep)


@dataclass(frozen=True)
class Fan:
    """A fan given by its maximal cones; face closure is left implicit."""

    n: int
    cones: tuple[Cone, ...]

    def rays(self) -> tuple[tuple[int, ...], ...]:
        return tuple(sorted({r for c in self.cones for r in c.rays}))

    def contains(self, vec) -> bool:
        return any(cone_contains(c, vec) for c in self.cones)

    def intersection_diagnostic(self) -> list[tuple[int, int]]:
        """Pairs of maximal cones whose shared rays look non-facial.

        A listed ray of one cone lying inside another cone without being one
        of its rays signals a non-face intersection.  Heuristic report only.
        """
        bad = []
        for i, c1 in enumerate(self.cones):
            for j in range(i + 1, len(self.cones)):
                c2 = self.cones[j]
                for r in c1.rays:
                    if r not in c2.rays and cone_contains(c2, r):
                        bad.append((i, j))
                        break
                else:
                    for r in c2.rays:
                        if r not in c1.rays and cone_contains(c1, r):
                            bad.append((i, j))
                            break
        return bad


def smith_normal_form(matrix) -> tuple[int, ...]:
    """Invariant factors of an integer matrix (absolute values, in order)."""
    rows = [[int(x) for x in row] for row in matrix]
    if not rows or not rows[0]:
        return ()
    snf = _sympy_snf(SympyMatrix(rows))
    diag = [abs(int(snf[i, i])) for i in range(min(snf.rows, snf.cols))]
    return tuple(d for d in diag if d != 0)


def cone_unimodular(cone: Cone, n: int) -> bool:
    """Simplicial with ray classes extendable to a lattice basis of Z^n/Z·e."""
    if not cone.rays:
        return True
    coords = [quotient_coordinates(r) for r in cone.rays]
    factors = smith_normal_form(coords)
    return len(factors) == len(cone.rays) and all(f == 1 for f in factors)


# -- rational polytopes ---------------------------------------------------------


@dataclass(frozen=True)
class RationalPolytope:
    """V- and H-description of a polytope over exact rationals.

    Facet inequalities are (normal, offset) pairs with integer primitive
    normals, oriented so that normal · x <= offset on the polytope.
    """

    vertices: tuple[tuple[Fraction, ...], ...]
    facets: tuple[tuple[tuple[int, ...], Fraction], ...]
    dim: int

    @property
    def ambient(self) -> int:
        return len(self.vertices[0]) if self.vertices else 0


def _extreme_points(points):
    """Irredundant subset via exact LP: drop convex combinations of others."""
    keep = []
    for i, p in enumerate(points):
        others = [q for j, q in enumerate(points) if j != i]
        if not others:
            keep.append(p)
            continue
        a_eq = [[q[c] for q in others] for c in range(len(p))]
        a_eq.append([Fraction(1)] * len(others))
        b_eq = list(p) + [Fraction(1)]
        if lp_feasible(a_eq, b_eq, num_nonneg=len(others)) is None:
            keep.append(p)
    return keep


def _primitive_inequality(normal, offset):
    """Scale (normal, offset) by a positive rational to a primitive integer normal."""
    denom = 1
    for x in normal:
        f = frac(x)
        denom = denom * f.denominator // gcd(denom, f.denominator)
    ints = [int(frac(x) * denom) for x in normal]
    g = content(ints)
    scale = Fraction(denom, g)
    return tuple(x // g for x in ints), frac(offset) * scale


def convex_hull(points) -> RationalPolytope:
    """Exact convex hull: irredundant vertices plus the full facet list."""
    pts = sorted({tuple(frac(x) for x in p) for p in points})
    if not pts:
        raise ValueError("need at least one point")
    verts = sorted(_extreme_points(pts))
    origin = verts[0]
    dirs = [[v[i] - origin[i] for i in range(len(origin))] for v in verts[1:]]
    red, pivots = rref(dirs) if dirs else ([], [])
    basis = [red[i] for i in range(len(pivots))]
    m = len(basis)
    if m == 0:
        return RationalPolytope(vertices=tuple(verts), facets=(), dim=0)

    facets = {}
    for combo in combinations(range(len(verts)), m):
        base = verts[combo[0]]
        rows = []
        for idx in combo[1:]:
            d = [verts[idx][i] - base[i] for i in range(len(base))]
            rows.append([sum(d[i] * w[i] for i in range(len(d))) for w in basis])
        if not rows:
            kernel = [[Fraction(1)]]
        else:
            kernel = nullspace(rows)
        if len(kernel) != 1:
            continue
        alpha = kernel[0]
        normal = [sum(alpha[i] * basis[i][c] for i in range(m))
                  for c in range(len(base))]
        offset = sum(normal[i] * base[i] for i in range(len(base)))
        sides = [sum(normal[i] * v[i] for i in range(len(v))) - offset
                 for v in verts]
        if all(s <= 0 for s in sides):
            pass
        elif all(s >= 0 for s in sides):
            normal = [-x for x in normal]
            offset = -offset
        else:
            continue
        facets[_primitive_inequality(normal, offset)] = True
    return RationalPolytope(vertices=tuple(verts),
                            facets=tuple(sorted(facets)),
                            dim=m)


@dataclass(frozen=True)
class FaceLattice:
    """Nonempty faces as vertex-index sets, graded by dimension.

    The polytope itself is included, so the alternating sum of the f-vector
    is 1 for every polytope.
    """

    faces_by_dim: tuple[tuple[frozenset[int], ...], ...]
    f_vector: tuple[int, ...]


def face_lattice(polytope: RationalPolytope) -> FaceLattice:
    """All faces as maximal vertex sets on common facet intersections."""
    verts = polytope.vertices
    full = frozenset(range(len(verts)))
    if polytope.dim == 0:
        return FaceLattice(faces_by_dim=((full,),), f_vector=(1,))
    facet_sets = []
    for normal, offset in polytope.facets:
        on = frozenset(i for i, v in enumerate(verts)
                       if sum(normal[c] * v[c] for c in range(len(v))) == offset)
        facet_sets.append(on)
    faces = set(facet_sets)
    frontier = set(facet_sets)
    while frontier:
        new = set()
        for f in frontier:
            for g in facet_sets:
                h = f & g
                if h and h not in faces:
                    new.add(h)
        faces |= new
        frontier = new
    faces.add(full)

    def affine_dim(index_set):
        idx = sorted(index_set)
        base = verts[idx[0]]
        rows = [[verts[i][c] - base[c] for c in range(len(base))]
                for i in idx[1:]]
        return rank(rows) if rows else 0

    by_dim: dict[int, list[frozenset[int]]] = {}
    for f in faces:
        by_dim.setdefault(affine_dim(f), []).append(f)
    levels = tuple(tuple(sorted(by_dim.get(d, []), key=sorted))
                   for d in range(polytope.dim + 1))
    return FaceLattice(faces_by_dim=levels,
                       f_vector=tuple(len(level) for level in levels))


def minkowski_sum(p1: RationalPolytope, p2: RationalPolytope) -> RationalPolytope:
    """Hull of pairwise vertex sums."""
    if p1.ambient != p2.ambient:
        raise DimensionMismatch(
            f"ambient dimensions {p1.ambient} and {p2.ambient} differ")
    sums = [tuple(a + b for a, b in zip(v, w))
            for v in p1.vertices for w in p2.vertices]
    return convex_hull(sums)
