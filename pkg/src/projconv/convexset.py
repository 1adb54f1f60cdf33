"""Projective convex polytopes: the computable class of Steinitz convex sets.

A Closed polytope is pi(C \\ {0}) for a salient nonzero cone C; an Open one
is pi(interior(C)) for a full-dimensional proper cone C.  Since pi identifies
antipodes, C and -C describe the same set; construction therefore picks the
cone whose sorted generator list is lexicographically greater, making
structural equality coincide with set equality.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Iterable, Optional, Sequence, Union

from . import cone as conemod
from .cone import PolyhedralCone
from .errors import (
    DimensionMismatch,
    EmptySet,
    EqualPoints,
    InvalidPolytope,
    MixedTopology,
    NotContained,
    NotDisjoint,
    NotMembers,
)
from .kernel import (
    LinSystem,
    Rel,
    dot,
    primitive_ray,
    solve_feasibility,
    vec_add,
    vec_scale,
)
from .projective import ProjHyperplane, ProjPoint, Segment, SegmentSign


class Topology(Enum):
    OPEN = "open"
    CLOSED = "closed"

    def flipped(self) -> "Topology":
        return Topology.OPEN if self is Topology.CLOSED else Topology.CLOSED


class Side(Enum):
    PRIMAL = "primal"
    DUAL = "dual"

    def flipped(self) -> "Side":
        return Side.DUAL if self is Side.PRIMAL else Side.PRIMAL


@dataclass(frozen=True)
class ProjConvexPolytope:
    cone: PolyhedralCone
    topology: Topology
    side: Side = Side.PRIMAL

    @property
    def dim(self) -> int:
        return self.cone.ambient_dim


def _canonical_sign(c: PolyhedralCone) -> PolyhedralCone:
    neg = conemod.negate(c)
    return c if c.generators > neg.generators else neg


def make_polytope(
    c: PolyhedralCone, topology: Topology, side: Side = Side.PRIMAL
) -> ProjConvexPolytope:
    """Validate the cone for the topology and canonicalize the global sign."""
    if topology is Topology.CLOSED:
        if conemod.is_zero(c):
            raise EmptySet("a closed polytope needs a nonzero cone")
        if not conemod.is_salient(c):
            raise InvalidPolytope(
                "a closed polytope needs a salient cone (no full projective line)"
            )
    else:
        if not conemod.is_fulldim(c):
            raise EmptySet("an open polytope needs a full-dimensional cone")
        if not c.facets:
            raise InvalidPolytope("an open polytope must avoid some hyperplane")
    return ProjConvexPolytope(_canonical_sign(c), topology, side)


def closed_from_generators(
    rays: Iterable[Sequence], dim: int, side: Side = Side.PRIMAL
) -> ProjConvexPolytope:
    return make_polytope(conemod.from_generators(rays, dim), Topology.CLOSED, side)


def open_from_facets(
    functionals: Iterable[Sequence], dim: int, side: Side = Side.PRIMAL
) -> ProjConvexPolytope:
    return make_polytope(conemod.from_facets(functionals, dim), Topology.OPEN, side)


def point_polytope(p: ProjPoint, side: Side = Side.PRIMAL) -> ProjConvexPolytope:
    """A single point as a Closed rank-1 polytope."""
    return closed_from_generators([p.coords], len(p.coords), side)


def lift_into(P: ProjConvexPolytope, v: Sequence) -> Optional[tuple]:
    """The representative of pi(v) lying in P's cone (interior if Open), or None."""
    strict = P.topology is Topology.OPEN
    if P.cone.contains(v, strict=strict):
        return tuple(v)
    w = tuple(-x for x in v)
    if P.cone.contains(w, strict=strict):
        return w
    return None


def membership(P: ProjConvexPolytope, p: ProjPoint) -> bool:
    if len(p.coords) != P.dim:
        raise DimensionMismatch("point and polytope of different dimensions")
    return lift_into(P, p.coords) is not None


def witness_hyperplane(P: ProjConvexPolytope) -> ProjHyperplane:
    """A hyperplane avoiding P: the sum of the canonical facet functionals.

    For a Closed (salient) cone this lands in the interior of the dual cone,
    strictly positive on every generator; for an Open cone any nonzero
    element of the dual cone is strictly positive on the interior.
    """
    total = [0] * P.dim
    for f in P.cone.facets:
        total = [a + x for a, x in zip(total, f)]
    h = primitive_ray(total)
    if P.topology is Topology.CLOSED:
        assert all(dot(h, g) > 0 for g in P.cone.generators)
    else:
        assert dot(h, conemod.interior_point(P.cone)) > 0
    return ProjHyperplane.of(h)


def witness_functional(P: ProjConvexPolytope) -> tuple[int, ...]:
    """Like witness_hyperplane but keeping the orientation positive on P's cone."""
    total = [0] * P.dim
    for f in P.cone.facets:
        total = [a + x for a, x in zip(total, f)]
    return primitive_ray(total)


def segment_in(P: ProjConvexPolytope, p: ProjPoint, q: ProjPoint) -> Segment:
    """The unique segment joining p and q inside P (de Groot-de Vries)."""
    if p == q:
        raise EqualPoints("segment endpoints must be distinct")
    u = lift_into(P, p.coords)
    v = lift_into(P, q.coords)
    if u is None or v is None:
        raise NotMembers(f"{p} or {q} is not a member of the polytope")
    return Segment(primitive_ray(u), primitive_ray(v), SegmentSign.NON_NEGATIVE)


def _lift_pieces(
    pieces: Sequence[Union[ProjPoint, ProjConvexPolytope]], P: ProjConvexPolytope
) -> list[tuple[int, ...]]:
    lifted = []
    for piece in pieces:
        if isinstance(piece, ProjPoint):
            w = lift_into(P, piece.coords)
            if w is None:
                raise NotContained(f"point {piece} lies outside the container")
            lifted.append(primitive_ray(w))
        elif piece.topology is Topology.OPEN:
            # an open piece may touch the container's boundary only with its
            # closure: pick the sign at an interior probe, then include the
            # closure generators under the container's non-strict facets
            probe = conemod.interior_point(piece.cone)
            w = lift_into(P, probe)
            if w is None:
                raise NotContained(f"open piece probe {probe} lies outside the container")
            sigma = 1 if w == tuple(probe) else -1
            for g in piece.cone.generators:
                gg = tuple(sigma * x for x in g)
                if not P.cone.contains(gg):
                    raise NotContained(f"closure generator {g} lies outside the container")
                lifted.append(primitive_ray(gg))
        else:
            for g in piece.cone.generators:
                w = lift_into(P, g)
                if w is None:
                    raise NotContained(f"argument generator {g} lies outside the container")
                lifted.append(primitive_ray(w))
    return lifted


def relative_hull(
    pieces: Sequence[Union[ProjPoint, ProjConvexPolytope]], P: ProjConvexPolytope
) -> ProjConvexPolytope:
    """Least convex subset of P containing the pieces (points or polytopes).

    Points and Closed polytopes yield a Closed hull, Open polytopes an Open
    hull; mixing the two kinds is rejected.
    """
    if not pieces:
        raise EmptySet("relative hull of nothing")
    kinds = {
        Topology.CLOSED if isinstance(x, ProjPoint) else x.topology for x in pieces
    }
    if len(kinds) > 1:
        raise MixedTopology("relative hull arguments must share a topology")
    topology = kinds.pop()
    hull_cone = conemod.from_generators(_lift_pieces(pieces, P), P.dim)
    return make_polytope(hull_cone, topology, P.side)


def is_irreducible(P: ProjConvexPolytope) -> bool:
    """Open with a single facet: the complement of one projective hyperplane."""
    return P.topology is Topology.OPEN and len(P.cone.facets) == 1


def excluded_hyperplane(P: ProjConvexPolytope) -> ProjHyperplane:
    if not is_irreducible(P):
        raise NotContained("only irreducible polytopes exclude a single hyperplane")
    return ProjHyperplane.of(P.cone.facets[0])


def equal(P: ProjConvexPolytope, Q: ProjConvexPolytope) -> bool:
    return P == Q


def disjoint(K: ProjConvexPolytope, L: ProjConvexPolytope) -> bool:
    """Set-level disjointness of two Closed polytopes (both sign liftings)."""
    inter = conemod.intersect(K.cone, L.cone)
    if not conemod.is_zero(inter):
        return False
    return conemod.is_zero(conemod.intersect(K.cone, conemod.negate(L.cone)))


def common_witness(
    K: ProjConvexPolytope, L: ProjConvexPolytope
) -> Optional[tuple[tuple[int, ...], int]]:
    """A functional strictly positive on K and on sigma*L, with the sign sigma."""
    for sigma in (1, -1):
        rows = [(g, Rel.GT) for g in K.cone.generators]
        rows += [(vec_scale(sigma, g), Rel.GT) for g in L.cone.generators]
        w = solve_feasibility(LinSystem.of(rows, K.dim))
        if w is not None:
            return primitive_ray(w), sigma
    return None


def separate(
    K: ProjConvexPolytope, L: ProjConvexPolytope
) -> Optional[tuple[ProjConvexPolytope, ProjConvexPolytope]]:
    """Disjoint open neighborhoods of two disjoint Closed polytopes.

    Works inside a common witness chart: an exact separating functional is
    found by strict feasibility, then each polytope's facets are relaxed
    outward by half the minimum chart-normalized slack of the separator.
    Returns None when no common chart exists.
    """
    if K.topology is not Topology.CLOSED or L.topology is not Topology.CLOSED:
        raise MixedTopology("separate expects two Closed polytopes")
    if not disjoint(K, L):
        raise NotDisjoint("the polytopes intersect")
    found = common_witness(K, L)
    if found is None:
        return None
    h, sigma = found
    lifted_L = conemod.negate(L.cone) if sigma < 0 else L.cone
    phi = solve_feasibility(
        LinSystem.of(
            [(g, Rel.GT) for g in K.cone.generators]
            + [(vec_scale(-1, g), Rel.GT) for g in lifted_L.generators],
            K.dim,
        )
    )
    assert phi is not None, "disjoint polytopes in a common chart always separate"
    phi = primitive_ray(phi)

    slacks = [Fraction(abs(dot(phi, g)), dot(h, g)) for g in K.cone.generators]
    slacks += [Fraction(abs(dot(phi, g)), dot(h, g)) for g in lifted_L.generators]
    eps = min(slacks) / 2

    def fatten(c: PolyhedralCone, keep: tuple[int, ...]) -> PolyhedralCone:
        rows = [keep, h]
        rows += [vec_add(f, vec_scale(eps, h)) for f in c.facets]
        return conemod.from_facets(rows, K.dim)

    U = make_polytope(fatten(K.cone, phi), Topology.OPEN, K.side)
    V = make_polytope(fatten(lifted_L, tuple(-x for x in phi)), Topology.OPEN, K.side)
    return U, V
