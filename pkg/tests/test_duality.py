import random

import pytest

from projconv import cone as conemod
from projconv.convexset import (
    Side,
    Topology,
    closed_from_generators,
    is_irreducible,
    membership,
    open_from_facets,
    point_polytope,
)
from projconv.duality import (
    galois_check,
    is_saturated,
    phi_multiconvex,
    phi_point,
    phi_polytope,
    phi_union,
    saturate,
    saturate_polytope,
    triangle_left,
    triangle_right,
)
from projconv.errors import EmptySet, NotAComponent
from projconv.kernel import dot
from projconv.multiconvex import (
    cocomponents,
    components,
    decompose,
    degree,
    membership as mc_membership,
    separating_irreducible,
)
from projconv.projective import ProjPoint

from test_convexset import random_closed, random_open
from test_multiconvex import fig2_instance, three_lines_complement


def test_phi_point_is_irreducible():
    p = ProjPoint.of((1, 0, 0))
    img = phi_point(p)
    assert is_irreducible(img)
    assert img.side is Side.DUAL
    assert img.cone.facets == ((1, 0, 0),)
    back = phi_polytope(img)
    assert back == point_polytope(p, Side.PRIMAL)


def test_phi_point_membership_is_nonincidence():
    rng = random.Random(8)
    p = ProjPoint.of((2, -3, 5))
    img = phi_point(p)
    for _ in range(200):
        h = tuple(rng.randint(-6, 6) for _ in range(3))
        if not any(h):
            continue
        assert membership(img, ProjPoint.of(h)) == (dot(h, p.coords) != 0)


def test_phi_polytope_orthant():
    T = closed_from_generators([(1, 0, 0), (0, 1, 0), (0, 0, 1)], 3)
    img = phi_polytope(T)
    assert img.topology is Topology.OPEN
    assert img.side is Side.DUAL
    assert img.cone == T.cone  # the orthant is self-dual
    assert phi_polytope(img) == T


def test_phi_of_chart_complement_is_point():
    chart = open_from_facets([(1, 1, 1)], 3)
    img = phi_polytope(chart)
    assert img.topology is Topology.CLOSED
    assert img.cone.generators == ((1, 1, 1),)


def test_phi_segment_gives_slab():
    S = closed_from_generators([(1, 0, 0), (0, 1, 0)], 3)
    img = phi_polytope(S)
    assert img.topology is Topology.OPEN
    assert img.cone.facets == ((0, 1, 0), (1, 0, 0))
    assert set(img.cone.generators) == {(0, 0, -1), (0, 0, 1), (0, 1, 0), (1, 0, 0)}
    assert phi_polytope(img) == S


def test_phi_flips_topology_and_side_on_random_polytopes():
    rng = random.Random(55)
    for _ in range(60):
        P = random_closed(rng) if rng.random() < 0.5 else random_open(rng)
        img = phi_polytope(P)
        assert img.topology is P.topology.flipped()
        assert img.side is P.side.flipped()
        assert phi_polytope(img) == P


def test_phi_antitone_on_nested_polytopes():
    inner = closed_from_generators([(2, 1, 1), (2, 1, -1), (2, -1, 0)], 3)
    outer = closed_from_generators(
        list(inner.cone.generators) + [(1, 2, 2)], 3
    )
    phi_inner, phi_outer = phi_polytope(inner), phi_polytope(outer)
    # outer contains inner, so phi(outer) is inside phi(inner)
    for g in phi_outer.cone.generators:
        assert phi_inner.cone.contains(g)


def test_phi_multiconvex_three_lines():
    M = three_lines_complement()
    img = phi_multiconvex(M)
    assert img.topology is Topology.CLOSED
    assert img.side is Side.DUAL
    assert degree(img) == 3
    assert sorted(c.polytope.cone.generators for c in img.cells) == [
        ((0, 0, 1),),
        ((0, 1, 0),),
        ((1, 0, 0),),
    ]
    assert phi_multiconvex(img) == M


def test_phi_multiconvex_fig2():
    C, D, M = fig2_instance()
    img = phi_multiconvex(M)
    assert img.topology is Topology.OPEN
    assert degree(img) == 2
    assert sorted(components(img), key=lambda P: P.cone.generators) == sorted(
        (phi_polytope(C), phi_polytope(D)), key=lambda P: P.cone.generators
    )
    assert phi_multiconvex(img) == M


def test_closed_phi_through_cocomponents_agrees():
    # the spec's co-component route for Closed inputs is a theorem here
    C, D, M = fig2_instance()
    img = phi_multiconvex(M)
    via_cocomp = sorted(
        (phi_polytope(K) for K in cocomponents(M)),
        key=lambda P: P.cone.generators,
    )
    assert via_cocomp == sorted(components(img), key=lambda P: P.cone.generators)


def test_saturate_three_points():
    pts = [ProjPoint.of(v) for v in [(1, 0, 0), (0, 1, 0), (0, 0, 1)]]
    sat = saturate(pts)
    assert sat.topology is Topology.CLOSED
    assert degree(sat) == 3
    assert sorted(c.polytope.cone.generators for c in sat.cells) == [
        ((0, 0, 1),),
        ((0, 1, 0),),
        ((1, 0, 0),),
    ]


def test_saturate_three_of_four_cells():
    M = three_lines_complement()
    three = [c.polytope for c in M.cells[:3]]
    assert saturate(three) == M


def test_saturate_fixes_multiconvex_sets():
    for M in (three_lines_complement(), fig2_instance()[2]):
        assert saturate(M) == M
        assert is_saturated(M)


def test_saturation_galois_laws_random_points():
    rng = random.Random(77)
    for _ in range(40):
        pts = []
        while len(pts) < rng.randint(1, 4):
            v = tuple(rng.randint(-5, 5) for _ in range(3))
            if any(v):
                pts.append(ProjPoint.of(v))
        sat = saturate(pts)
        # S subseteq sat(S)
        for p in pts:
            assert mc_membership(sat, p)
        # idempotence and phi = phi o phi o phi
        assert saturate(sat) == sat
        assert phi_union(pts) == phi_multiconvex(sat)


def test_galois_check_examples():
    assert galois_check([ProjPoint.of((1, 0, 0))], [ProjPoint.of((0, 1, 0))])
    rng = random.Random(123)
    for _ in range(100):
        S = [ProjPoint.of(v) for v in
             [tuple(rng.randint(-5, 5) for _ in range(3)) for _ in range(3)] if any(v)]
        T = [ProjPoint.of(v) for v in
             [tuple(rng.randint(-5, 5) for _ in range(3)) for _ in range(3)] if any(v)]
        if not S or not T:
            continue
        assert galois_check(S, T)


def test_saturation_agrees_with_separating_irreducible():
    rng = random.Random(31)
    for M in (three_lines_complement(), fig2_instance()[2]):
        sat = saturate(M)
        for _ in range(120):
            v = tuple(rng.randint(-8, 8) for _ in range(3))
            if not any(v):
                continue
            p = ProjPoint.of(v)
            in_sat = mc_membership(sat, p)
            assert in_sat == (separating_irreducible(M, p) is None)


def test_triangle_maps_are_mutually_inverse():
    for M in (three_lines_complement(), fig2_instance()[2]):
        phi_M = phi_multiconvex(M)
        cc = cocomponents(phi_M)
        assert len(components(M)) == len(cc)
        for N in components(M):
            img = triangle_right(N, M)
            assert img in cc
            assert triangle_left(img) == N
        for K in cc:
            assert triangle_right(triangle_left(K), M) == K


def test_triangle_right_rejects_non_component():
    M = three_lines_complement()
    stranger = closed_from_generators([(1, 0, 0)], 3)
    with pytest.raises(NotAComponent):
        triangle_right(stranger, M)


def test_saturate_polytope_identity():
    rng = random.Random(61)
    for _ in range(30):
        P = random_closed(rng) if rng.random() < 0.5 else random_open(rng)
        assert saturate_polytope(P) == P


def test_phi_rejects_empty():
    with pytest.raises(EmptySet):
        phi_union([])
