"""Building sets, nested-set complexes and fans, and fan comparisons.

Flats are frozensets of 1-based elements; a nested set is a frozenset of
flats validated against its building set.  Fans expose their maximal cones,
and refinement questions reduce to exact cone membership of generators.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .bitset import from_mask, popcount, to_mask
from .complexes import SimplicialComplex
from .errors import (InvalidBuildingSet, NotAChain, NotFlats,
                     NotLinearExtension)
from .geometry import Cone, RationalPolytope, cone_contains, convex_hull, \
    minkowski_sum
from .lattice import FlatLattice, interval_product_check, irreducible_flats
from .matroid import Matroid

from fractions import Fraction


# -- building sets ---------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class BuildingSet:
    """A flat collection inducing product decompositions of lower intervals."""

    lattice: FlatLattice
    members: frozenset[frozenset[int]]

    def member_masks(self) -> list[int]:
        return sorted(to_mask(m) for m in self.members)

    def sorted_members(self) -> list[frozenset[int]]:
        lat = self.lattice
        return sorted(self.members,
                      key=lambda f: (lat.rank_in_lattice(to_mask(f)), sorted(f)))


def building_set_counterexample(lattice: FlatLattice, members):
    """A flat where the interval product property fails, or None."""
    member_masks = {to_mask(m) for m in members}
    bottom = lattice.bottom
    if bottom in member_masks:
        return from_mask(bottom)
    if any(m not in lattice._flat_set for m in member_masks):
        bad = next(m for m in member_masks if m not in lattice._flat_set)
        return from_mask(bad)
    for flat in lattice.flat_masks:
        if flat == bottom:
            continue
        inside = [g for g in member_masks if g & ~flat == 0]
        maximal = [g for g in inside
                   if not any(h != g and g & ~h == 0 for h in inside)]
        if not interval_product_check(lattice, from_mask(flat),
                                      [from_mask(g) for g in maximal]):
            return from_mask(flat)
    return None


def is_building_set(lattice: FlatLattice, members) -> bool:
    return building_set_counterexample(lattice, members) is None


def building_set(lattice: FlatLattice, members) -> BuildingSet:
    witness = building_set_counterexample(lattice, members)
    if witness is not None:
        raise InvalidBuildingSet(
            f"interval product fails at flat {sorted(witness)}")
    return BuildingSet(lattice=lattice,
                       members=frozenset(frozenset(m) for m in members))


def min_building(lattice: FlatLattice) -> BuildingSet:
    """The irreducible flats; the unique minimal building set."""
    return BuildingSet(lattice=lattice,
                       members=frozenset(irreducible_flats(lattice.matroid,
                                                           lattice)))


def max_building(lattice: FlatLattice) -> BuildingSet:
    """All flats of positive rank; the unique maximal building set."""
    members = frozenset(from_mask(f)
                        for level in lattice.by_rank[1:] for f in level)
    return BuildingSet(lattice=lattice, members=members)


# -- nested sets -------------------------------------------------------------------


def _incomparable(a: int, b: int) -> bool:
    return a & ~b != 0 and b & ~a != 0


def is_nested(building: BuildingSet, subset) -> bool:
    """Antichains of size at least two must join outside the building set."""
    lattice = building.lattice
    member_masks = set(building.member_masks())
    masks = [to_mask(s) for s in subset]
    if any(m not in member_masks for m in masks):
        return False
    for size in range(2, len(masks) + 1):
        for combo in combinations(masks, size):
            if all(_incomparable(a, b) for a, b in combinations(combo, 2)):
                join = 0
                for m in combo:
                    join = lattice.join_mask(join, m)
                if join in member_masks:
                    return False
    return True


def all_nested_sets(building: BuildingSet) -> list[frozenset[frozenset[int]]]:
    """Every nested set, the empty one included, in deterministic order."""
    lattice = building.lattice
    member_masks = set(building.member_masks())
    ordered = [to_mask(m) for m in building.sorted_members()]
    out: list[frozenset[frozenset[int]]] = []

    def extend_ok(chosen, new):
        incomp = [m for m in chosen if _incomparable(m, new)]
        for size in range(1, len(incomp) + 1):
            for combo in combinations(incomp, size):
                if not all(_incomparable(a, b)
                           for a, b in combinations(combo, 2)):
                    continue
                join = new
                for m in combo:
                    join = lattice.join_mask(join, m)
                if join in member_masks:
                    return False
        return True

    def grow(chosen, start):
        out.append(frozenset(from_mask(m) for m in chosen))
        for k in range(start, len(ordered)):
            cand = ordered[k]
            if extend_ok(chosen, cand):
                chosen.append(cand)
                grow(chosen, k + 1)
                chosen.pop()

    grow([], 0)
    return out


def maximal_nested_sets(building: BuildingSet) -> list[frozenset[frozenset[int]]]:
    everything = all_nested_sets(building)
    return [s for s in everything
            if not any(s < t for t in everything)]


def nested_complex(building: BuildingSet) -> SimplicialComplex:
    """The simplicial complex of nested sets on the building set."""
    facets = maximal_nested_sets(building)
    vertices = tuple(building.sorted_members())
    complex_ = SimplicialComplex.from_faces(vertices, facets)
    matroid = building.lattice.matroid
    if matroid.n and matroid.is_connected():
        top = matroid.ground
        assert all(top in f for f in complex_.facets), \
            "the full flat must sit in every maximal nested set"
    return complex_


def nested_complex_reduced(building: BuildingSet) -> SimplicialComplex:
    """Nested sets not containing the full flat."""
    top = building.lattice.matroid.ground
    facets = [s - {top} for s in maximal_nested_sets(building)]
    vertices = tuple(m for m in building.sorted_members() if m != top)
    return SimplicialComplex.from_faces(vertices, facets)


# -- nested fans ------------------------------------------------------------------


def _flat_vector(n: int, flat) -> tuple[int, ...]:
    mask = to_mask(flat)
    return tuple(1 if mask & (1 << (i - 1)) else 0 for i in range(1, n + 1))


@dataclass(frozen=True, eq=False)
class NestedFan:
    """One simplicial cone per maximal nested set, spanned by flat indicators."""

    matroid: Matroid
    building: BuildingSet
    nested_sets: tuple[frozenset[frozenset[int]], ...]
    cones: tuple[Cone, ...]

    @property
    def n(self) -> int:
        return self.matroid.n

    def rays(self) -> tuple[tuple[int, ...], ...]:
        return tuple(sorted({r for c in self.cones for r in c.rays}))

    def contains(self, vec) -> bool:
        """Exact support membership.

        Cones are simplicial, so membership is a single linear solve; a
        support test on the shifted vector prunes most cones first.
        """
        from .linalg import frac, rank, solve
        w = [frac(x) for x in vec]
        low = min(w) if w else 0
        shifted_support = {i for i, x in enumerate(w) if x != low}
        for cone in self.cones:
            union = set()
            for r in cone.rays:
                union |= {i for i, x in enumerate(r) if x}
            if not shifted_support <= union:
                continue
            columns = [list(r) for r in cone.rays] + [[1] * len(w)]
            system = [[frac(columns[j][i]) for j in range(len(columns))]
                      for i in range(len(w))]
            if rank(system) < len(columns):
                # degenerate cone (disconnected matroid); decide by LP
                if cone_contains(cone, vec):
                    return True
                continue
            solution = solve(system, w)
            if solution is None:
                continue
            if all(solution[j] >= 0 for j in range(len(cone.rays))):
                return True
        return False


def nested_fan(matroid: Matroid, building: BuildingSet) -> NestedFan:
    """Cone over the nested-set complex, one cone per maximal nested set."""
    sets = maximal_nested_sets(building)
    key = lambda s: sorted((len(f), sorted(f)) for f in s)
    sets = sorted(sets, key=key)
    cones = tuple(Cone.over([_flat_vector(matroid.n, f) for f in s])
                  for s in sets)
    return NestedFan(matroid=matroid, building=building,
                     nested_sets=tuple(sets), cones=cones)


# -- fan comparison ----------------------------------------------------------------


def _max_cones(fan) -> tuple[Cone, ...]:
    if hasattr(fan, "coarse_cones"):
        return fan.coarse_cones
    return fan.cones


def refines(fan_a, fan_b) -> bool:
    """Is every maximal cone of fan_a inside some single cone of fan_b?"""
    for cone in _max_cones(fan_a):
        if not any(all(cone_contains(big, r) for r in cone.rays)
                   for big in _max_cones(fan_b)):
            return False
    return True


def _support_contains(fan, vec) -> bool:
    return any(cone_contains(c, vec) for c in _max_cones(fan))


def supports_equal_on_generators(fan_a, fan_b) -> bool:
    """Symmetric containment of all ray generators in the opposite support."""
    rays_a = {r for c in _max_cones(fan_a) for r in c.rays}
    rays_b = {r for c in _max_cones(fan_b) for r in c.rays}
    return (all(_support_contains(fan_b, r) for r in rays_a)
            and all(_support_contains(fan_a, r) for r in rays_b))


@dataclass(frozen=True)
class FanComparison:
    refines_ab: bool
    refines_ba: bool
    equal: bool
    witness: str | None


def compare_fans(fan_a, fan_b) -> FanComparison:
    ab = refines(fan_a, fan_b)
    ba = refines(fan_b, fan_a)
    witness = None
    if not (ab and ba):
        direction = "a into b" if not ab else "b into a"
        bad_fan, other = (fan_a, fan_b) if not ab else (fan_b, fan_a)
        for cone in _max_cones(bad_fan):
            if not any(all(cone_contains(big, r) for r in cone.rays)
                       for big in _max_cones(other)):
                witness = f"cone with rays {list(cone.rays)} not contained ({direction})"
                break
    return FanComparison(refines_ab=ab, refines_ba=ba,
                         equal=ab and ba, witness=witness)


@dataclass(frozen=True)
class ConditionReport:
    holds: bool
    witness: tuple[frozenset[int], frozenset[int]] | None


def fans_equal_condition(matroid: Matroid,
                         lattice: FlatLattice | None = None) -> ConditionReport:
    """Is every minor (M|Y)/X with Y irreducible and X < Y connected?

    Exactly when this holds, the minimal nested-set fan equals the coarse
    Bergman fan.
    """
    lattice = lattice or FlatLattice(matroid)
    irr = sorted(irreducible_flats(matroid, lattice),
                 key=lambda f: (len(f), sorted(f)))
    for y in irr:
        ymask = to_mask(y)
        xs = sorted((f for f in lattice.flat_masks
                     if f & ~ymask == 0 and f != ymask),
                    key=lambda m: (popcount(m), sorted(from_mask(m))))
        for xmask in xs:
            restricted = matroid.restriction(y)
            elems = sorted(y)
            relabel = {e: i + 1 for i, e in enumerate(elems)}
            ximage = {relabel[e] for e in from_mask(xmask)}
            minor = restricted.contraction(ximage)
            if minor.n and not minor.is_connected():
                return ConditionReport(holds=False,
                                       witness=(from_mask(xmask), y))
    return ConditionReport(holds=True, witness=None)


# -- nested set structure ------------------------------------------------------------


def _validate_nested_input(building: BuildingSet, subset) -> list[int]:
    masks = [to_mask(s) for s in subset]
    assert is_nested(building, subset), "input is not a nested set"
    return masks


def blocks_partition(building: BuildingSet, nested_set,
                     extension=None) -> list[frozenset[int]]:
    """Difference blocks of successive joins along a linear extension.

    The blocks do not depend on the chosen extension as a set family.
    """
    lattice = building.lattice
    _validate_nested_input(building, nested_set)
    members = list(nested_set)
    if extension is None:
        extension = sorted(members,
                           key=lambda f: (lattice.rank_in_lattice(to_mask(f)),
                                          sorted(f)))
    ext = [frozenset(x) for x in extension]
    if sorted(map(sorted, ext)) != sorted(map(sorted, members)):
        raise NotLinearExtension("extension must list the nested set exactly")
    masks = [to_mask(x) for x in ext]
    for i, a in enumerate(masks):
        for b in masks[i + 1:]:
            if b != a and b & ~a == 0:
                raise NotLinearExtension(
                    f"{sorted(from_mask(b))} listed after a superset")
    blocks = []
    join = 0
    for m in masks:
        new_join = lattice.join_mask(join, m)
        block = new_join & ~join
        assert block, "difference blocks of a linear extension are nonempty"
        blocks.append(from_mask(block))
        join = new_join
    return blocks


@dataclass(frozen=True)
class NestedChainData:
    """Per-element chains S_i with their minima, plus Lemma-style indices."""

    chains: dict
    minima: dict
    min_support_index: dict


def nested_chain_helpers(building: BuildingSet, nested_set) -> NestedChainData:
    """The sets S_i = {X in S : i in X} as chains, and minimal-support data."""
    lattice = building.lattice
    _validate_nested_input(building, nested_set)
    n = lattice.matroid.n
    support: dict[int, list[frozenset[int]]] = {}
    for i in range(1, n + 1):
        si = [x for x in nested_set if i in x]
        si.sort(key=len)
        for a, b in zip(si, si[1:]):
            assert a < b, f"S_{i} is not a chain"
        if si:
            support[i] = si
    minima = {i: si[0] for i, si in support.items()}
    min_index: dict[frozenset[int], int] = {}
    for fmask in lattice.flat_masks:
        flat = from_mask(fmask)
        if not flat:
            continue
        families = {i: frozenset(support.get(i, [])) for i in flat}
        i0 = min(flat, key=lambda i: (len(families[i]), i))
        assert all(families[i0] <= families[i] for i in flat), \
            f"no unique minimal support family inside {sorted(flat)}"
        min_index[flat] = i0
    return NestedChainData(chains=support, minima=minima,
                           min_support_index=min_index)


def chain_to_nested(building: BuildingSet, chain):
    """Canonical nested set and extension whose prefix joins give the chain.

    Each chain element contributes all maximal building elements below it.
    """
    lattice = building.lattice
    masks = [to_mask(c) for c in chain]
    if not masks or masks[-1] != lattice.top:
        raise NotAChain("chain must end at the full ground set")
    for a, b in zip(masks, masks[1:]):
        if not (a != b and a & ~b == 0):
            raise NotAChain("chain must be strictly increasing")
    if any(m not in lattice._flat_set for m in masks):
        raise NotFlats("chain entries must be flats")
    member_masks = set(building.member_masks())
    extension: list[int] = []
    for fmask in masks:
        inside = [g for g in member_masks if g & ~fmask == 0]
        maximal = sorted((g for g in inside
                          if not any(h != g and g & ~h == 0 for h in inside)),
                         key=lambda m: (popcount(m), sorted(from_mask(m))))
        for g in maximal:
            if g not in extension:
                extension.append(g)
    nested = frozenset(from_mask(g) for g in extension)
    assert is_nested(building, nested)
    join = 0
    prefix_joins = []
    for g in extension:
        join = lattice.join_mask(join, g)
        prefix_joins.append(join)
    for fmask in masks:
        assert fmask in prefix_joins, "prefix joins must recover the chain"
    return nested, tuple(from_mask(g) for g in extension)


# -- weight polytopes -----------------------------------------------------------------


def dcp_weight_polytope(matroid: Matroid,
                        building: BuildingSet) -> RationalPolytope:
    """Minkowski sum of the coordinate simplices of the building set."""
    n = matroid.n
    members = building.sorted_members()
    polytopes = []
    for flat in members:
        verts = [tuple(Fraction(1 if j == i else 0) for j in range(1, n + 1))
                 for i in sorted(flat)]
        polytopes.append(convex_hull(verts))
    total = polytopes[0]
    for p in polytopes[1:]:
        total = minkowski_sum(total, p)
    return total


def dcp_normal_refinement_check(matroid: Matroid, building: BuildingSet,
                                fan: NestedFan | None = None) -> bool:
    """Each nested cone selects constant argmin sets on every member simplex.

    This is the executable form of the containment of the nested fan in the
    normal fan of the weight polytope.
    """
    fan = fan or nested_fan(matroid, building)
    n = matroid.n
    for nested in fan.nested_sets:
        support: dict[int, frozenset] = {}
        for i in range(1, n + 1):
            support[i] = frozenset(x for x in nested if i in x)
        coefficient_choices = [
            {x: 1 + k for k, x in enumerate(sorted(nested, key=sorted))},
            {x: 7 + 3 * k for k, x in enumerate(sorted(nested, key=sorted))},
        ]
        for flat in building.members:
            i0 = min(flat, key=lambda i: (len(support[i]), i))
            if not all(support[i0] <= support[i] for i in flat):
                return False
            predicted = {i for i in flat if support[i] == support[i0]}
            for coeffs in coefficient_choices:
                weights = [sum(c for x, c in coeffs.items() if i in x)
                           for i in range(1, n + 1)]
                low = min(weights[i - 1] for i in flat)
                argmin = {i for i in flat if weights[i - 1] == low}
                if argmin != predicted:
                    return False
    return True
