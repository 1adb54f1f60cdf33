import random
from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from projconv.cone import (
    PolyhedralCone,
    conic_hull,
    dual_cone,
    from_facets,
    from_generators,
    interior_point,
    intersect,
    is_fulldim,
    is_salient,
    is_zero,
    negate,
)
from projconv.errors import DimensionMismatch
from projconv.kernel import dot, normalize_primitive, primitive_ray, rank


def _cross(a, b):
    return (
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    )


def brute_force_facets_3d(rays):
    """Independent facet enumeration for a salient full-dim 3-D cone.

    Every facet is spanned by two generators, so its normal is a cross
    product; keep the orientations that support the whole ray set.
    """
    found = set()
    for a, b in combinations(rays, 2):
        n = _cross(a, b)
        if not any(n):
            continue
        for cand in (n, tuple(-x for x in n)):
            if all(dot(cand, r) >= 0 for r in rays):
                tight = sum(1 for r in rays if dot(cand, r) == 0)
                if tight >= 2 and rank([r for r in rays if dot(cand, r) == 0]) == 2:
                    found.add(primitive_ray(cand))
    return found


def brute_force_extreme_rays_3d(rays, facets):
    """A ray is extreme iff it lies on >= 2 facets spanning a rank-2 set."""
    out = set()
    for r in rays:
        tight = [f for f in facets if dot(f, r) == 0]
        if rank(tight) == 2:
            out.add(primitive_ray(r))
    return out


def test_orthant_self_dual():
    c = from_generators([(1, 0, 0), (0, 1, 0), (0, 0, 1)], 3)
    assert c.generators == ((0, 0, 1), (0, 1, 0), (1, 0, 0))
    assert c.facets == ((0, 0, 1), (0, 1, 0), (1, 0, 0))
    assert dual_cone(c) == c
    assert is_salient(c) and is_fulldim(c) and not is_zero(c)


def test_planar_cone_derived_facets():
    c = from_generators([(1, 0), (1, 1)], 2)
    assert c.facets == ((0, 1), (1, -1))
    d = dual_cone(c)
    assert d.generators == ((0, 1), (1, -1))
    assert d.facets == ((1, 0), (1, 1))


def test_empty_facets_gives_whole_space():
    c = from_facets([], 3)
    assert rank(c.generators) == 3
    assert c.facets == ()
    assert not is_salient(c)
    # and the zero cone is its dual
    z = dual_cone(c)
    assert is_zero(z)
    assert z.generators == ()


def test_halfspace_dual_is_ray():
    h = from_facets([(1, 0, 0)], 3)
    assert not is_salient(h)
    assert is_fulldim(h)
    d = dual_cone(h)
    assert d.generators == ((1, 0, 0),)
    assert is_salient(d) and not is_fulldim(d)


def test_intersect_and_hull():
    orthant = from_generators([(1, 0, 0), (0, 1, 0), (0, 0, 1)], 3)
    flipped = from_generators([(-1, 0, 0), (0, -1, 0), (0, 0, -1)], 3)
    assert is_zero(intersect(orthant, flipped))
    quarter = conic_hull(
        from_generators([(1, 0)], 2), from_generators([(0, 1)], 2)
    )
    assert quarter.generators == ((0, 1), (1, 0))
    assert intersect(orthant, dual_cone(orthant)) == orthant


def test_salience_examples():
    half_plane = from_generators([(1, 0), (0, 1), (-1, 0)], 2)
    assert not is_salient(half_plane)
    ray = from_generators([(1, 0, 0)], 3)
    assert is_salient(ray) and not is_fulldim(ray)


def test_interior_point_examples():
    orthant = from_generators([(1, 0, 0), (0, 1, 0), (0, 0, 1)], 3)
    assert interior_point(orthant) == (1, 1, 1)
    ray = from_generators([(1, 0)], 2)
    assert interior_point(ray) is None
    c = from_generators([(1, 0), (1, 1)], 2)
    assert interior_point(c) == (2, 1)


def test_dimension_guards():
    with pytest.raises(DimensionMismatch):
        from_generators([(1, 0)], 5)
    a = from_generators([(1, 0)], 2)
    b = from_generators([(1, 0, 0)], 3)
    with pytest.raises(DimensionMismatch):
        intersect(a, b)


def _random_salient_rays(rng, n):
    # first coordinate positive makes the cone salient by construction
    return [
        (rng.randint(1, 3), rng.randint(-3, 3), rng.randint(-3, 3))
        for _ in range(n)
    ]


def test_double_description_matches_brute_force():
    rng = random.Random(20240915)
    checked = 0
    while checked < 120:
        rays = _random_salient_rays(rng, rng.randint(3, 6))
        if rank(rays) < 3:
            continue
        c = from_generators(rays, 3)
        c.validate()
        expected_facets = brute_force_facets_3d(rays)
        assert set(c.facets) == expected_facets
        expected_rays = brute_force_extreme_rays_3d(rays, expected_facets)
        assert set(c.generators) == expected_rays
        checked += 1


def test_biduality_on_random_salient_cones():
    rng = random.Random(7)
    done = 0
    while done < 500:
        rays = _random_salient_rays(rng, rng.randint(1, 6))
        c = from_generators(rays, 3)
        assert dual_cone(dual_cone(c)) == c
        # and rebuilding from either description is stable
        assert from_generators(c.generators, 3) == c
        assert from_facets(c.facets, 3) == c
        done += 1


@settings(deadline=None)
@given(st.data())
def test_order_reversal(data):
    n = data.draw(st.integers(1, 4))
    rays_a = [
        tuple(data.draw(st.integers(-3, 3)) for _ in range(3)) for _ in range(n)
    ]
    extra = [
        tuple(data.draw(st.integers(-3, 3)) for _ in range(3))
        for _ in range(data.draw(st.integers(1, 3)))
    ]
    a = from_generators(rays_a, 3)
    b = from_generators(rays_a + extra, 3)  # a subseteq b
    da, db = dual_cone(a), dual_cone(b)
    # dual(b) subseteq dual(a): every generator of dual(b) satisfies a's dual facets
    assert all(da.contains(g) for g in db.generators)


def test_negate_is_involution():
    c = from_generators([(2, 1, 0), (0, 1, 1)], 3)
    assert negate(negate(c)) == c
    assert set(negate(c).generators) == {(-2, -1, 0), (0, -1, -1)}
