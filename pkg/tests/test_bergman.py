import statistics
from itertools import combinations, product

import pytest

from mfk.bergman import (AmoebaSample, amoeba_sample, bergman_fan,
                         bergman_membership, check_prop_grob,
                         initial_subspace, support_deviation,
                         support_deviations)
from mfk.corpus import corpus
from mfk.complexes import reduced_homology_ranks
from mfk.errors import LoopsPresent
from mfk.lattice import moebius, order_complex
from mfk.linalg import rref
from mfk.matroid import from_matrix, uniform


def _flat_pairs(cone):
    return tuple(sorted(tuple(sorted(i + 1 for i, x in enumerate(r) if x))
                        for r in cone.rays))


def test_membership_zero_weight(u24):
    assert bergman_membership(u24.matroid, [0, 0, 0, 0])


def test_membership_u24_rays(u24):
    # the support contains the flat indicator directions
    m = u24.matroid
    assert bergman_membership(m, [1, 0, 0, 0])
    assert bergman_membership(m, [0, 1, 0, 0])
    # and not the opposite classes: {2,3,4} is not a flat
    assert not bergman_membership(m, [0, 1, 1, 1])


def test_membership_u24_non_flat_chain(u24):
    assert not bergman_membership(u24.matroid, [0, 0, 1, 1])


def test_membership_requires_loop_free():
    m, _ = from_matrix([[1, 0, 0], [0, 0, 1]])
    with pytest.raises(LoopsPresent):
        bergman_membership(m, [0, 0, 0])


def test_bergman_fan_u24_four_rays(u24):
    fan = bergman_fan(u24.matroid)
    assert len(fan.coarse_cones) == 4
    assert fan.rays() == ((0, 0, 0, 1), (0, 0, 1, 0),
                          (0, 1, 0, 0), (1, 0, 0, 0))


def test_bergman_fan_dela3_complex(dela3, dela3_lattice):
    fan = bergman_fan(dela3.matroid, dela3_lattice)
    assert len(fan.fine_chains) == 14
    assert len(fan.coarse_cones) == 9
    # vertex set: the six facet flats; the e_1 direction and the pair
    # directions are interior to higher cones
    ray_flats = sorted(tuple(sorted(i + 1 for i, x in enumerate(r) if x))
                       for r in fan.rays())
    assert ray_flats == [(1, 2, 4), (1, 3, 5), (2,), (3,), (4,), (5,)]
    edges = sorted(_flat_pairs(c) for c in fan.coarse_cones)
    assert edges == [
        ((1, 2, 4), (1, 3, 5)), ((1, 2, 4), (2,)), ((1, 2, 4), (4,)),
        ((1, 3, 5), (3,)), ((1, 3, 5), (5,)),
        ((2,), (3,)), ((2,), (5,)), ((3,), (4,)), ((4,), (5,))]


def test_bergman_fan_uniform_coordinate_cones():
    for d, n in [(2, 4), (3, 5), (2, 5), (4, 5)]:
        fan = bergman_fan(uniform(d, n))
        assert len(fan.coarse_cones) == len(
            list(combinations(range(n), d - 1)))
        for cone in fan.coarse_cones:
            flats = _flat_pairs(cone)
            assert all(len(f) == 1 for f in flats)
            assert len(flats) == d - 1


def test_bergman_support_equals_coarse_union(u24, dela3):
    for m, radius in ((u24.matroid, 2), (dela3.matroid, 1)):
        fan = bergman_fan(m)
        for w in product(range(-radius, radius + 1), repeat=m.n):
            assert bergman_membership(m, w) == fan.any_coarse_contains(w)


def test_bergman_groups_share_degeneration(dela3):
    from mfk.polytope import degeneration
    fan = bergman_fan(dela3.matroid)
    for g, members in enumerate(fan.groups):
        for idx in members:
            chain = fan.fine_chains[idx]
            w = [0] * fan.n
            for flat in chain:
                for i in flat:
                    w[i - 1] -= 1
            deg = degeneration(dela3.matroid, w)
            assert sorted(map(sorted, deg.matroid_u.bases)) == sorted(
                map(sorted, fan.group_bases[g]))
            assert deg.loop_free


def test_fine_complex_homology_matches_mu(dela3, dela3_lattice):
    complex_ = order_complex(dela3_lattice, set(), dela3.matroid.ground)
    betti, _ = reduced_homology_ranks(complex_)
    mu = moebius(dela3.matroid, dela3_lattice).mu_top
    d = dela3.matroid.rank_d
    assert betti[d - 2] == mu
    assert all(b == 0 for i, b in enumerate(betti) if i != d - 2)


def test_initial_subspace_u24_example(u24):
    limit = initial_subspace(u24.realization, [1, 0, 0, 0])
    got = rref([list(r) for r in limit.matrix])[0]
    expected = rref([[0, 1, -1, 1], [0, 0, 1, 1]])[0]
    assert got == expected
    assert limit.matroid.loops() == {1}


def test_initial_subspace_zero_weight(u24):
    limit = initial_subspace(u24.realization, [0, 0, 0, 0])
    assert rref([list(r) for r in limit.matrix])[0] == \
        rref([list(r) for r in u24.realization.matrix])[0]


def test_initial_subspace_preserves_dimension(dela3):
    for u in [(1, 0, 0, 0, 0), (-2, 1, 3, 0, -1), (5, 5, 5, 5, 5)]:
        limit = initial_subspace(dela3.realization, u)
        assert len(limit.matrix) == 3
        assert limit.matroid.rank_d == 3


def test_prop_grob_u24_exhaustive(u24):
    for u in product(range(-2, 3), repeat=4):
        assert check_prop_grob(u24.realization, u)


def test_prop_grob_dela3_random(dela3):
    import random
    rng = random.Random(20120613)
    for _ in range(200):
        u = [rng.randint(-3, 3) for _ in range(5)]
        assert check_prop_grob(dela3.realization, u)


def test_amoeba_deviation_small():
    u23 = corpus("u23")
    fan = bergman_fan(u23.matroid)
    sample = amoeba_sample(u23.realization, 1e3, 500, seed=42)
    devs = support_deviations(sample, fan)
    assert len(devs) == 500
    assert max(devs) < 0.15


def test_amoeba_median_shrinks_with_base():
    u23 = corpus("u23")
    fan = bergman_fan(u23.matroid)
    s1 = amoeba_sample(u23.realization, 1e3, 200, seed=7)
    s2 = amoeba_sample(u23.realization, 1e6, 200, seed=7)
    m1 = statistics.median(support_deviations(s1, fan))
    m2 = statistics.median(support_deviations(s2, fan))
    assert m2 <= m1


def test_amoeba_unit_torus_point_deviation_zero():
    u23 = corpus("u23")
    fan = bergman_fan(u23.matroid)
    sample = AmoebaSample(base=1e3, points=((0.0, 0.0, 0.0),))
    assert support_deviation(sample, fan) == 0.0


def test_amoeba_deterministic_for_seed():
    u23 = corpus("u23")
    a = amoeba_sample(u23.realization, 1e3, 50, seed=5)
    b = amoeba_sample(u23.realization, 1e3, 50, seed=5)
    assert a == b


def test_amoeba_requires_loop_free():
    m, real = from_matrix([[1, 0, 0], [0, 0, 1]])
    with pytest.raises(LoopsPresent):
        amoeba_sample(real, 1e3, 10, seed=0)
