"""The Phi operator, saturation, and the Galois-connection laws.

Phi(S) collects the dual points of all hyperplanes avoiding S.  On the
polytope level it is the dual cone with topology and side flipped; on
unions it turns into an intersection, which is what makes every operation
here constructive:

    Phi(union of pieces) = decompose({Phi(piece)})

A multi-convex set is the union of its cells, so that one law computes
Phi of anything representable, and saturation is Phi composed with itself.
"""

from __future__ import annotations

from typing import Iterable, Sequence, Union

from . import cone as conemod
from .convexset import (
    ProjConvexPolytope,
    Side,
    Topology,
    lift_into,
    make_polytope,
    membership,
    point_polytope,
    relative_hull,
)
from .errors import EmptySet, NotAComponent, NotSaturated, WholeSpace
from .multiconvex import MultiConvexSet, components, cocomponents, decompose
from .projective import ProjPoint


def phi_polytope(P: ProjConvexPolytope) -> ProjConvexPolytope:
    """Dual cone, flipped topology, flipped side; an exact involution."""
    return make_polytope(
        conemod.dual_cone(P.cone), P.topology.flipped(), P.side.flipped()
    )


def phi_point(p: ProjPoint, side: Side = Side.PRIMAL) -> ProjConvexPolytope:
    """Phi of a single point: the open complement of its dual hyperplane."""
    return phi_polytope(point_polytope(p, side))


Piece = Union[ProjPoint, ProjConvexPolytope]


def _as_polytope(piece: Piece, side: Side) -> ProjConvexPolytope:
    if isinstance(piece, ProjPoint):
        return point_polytope(piece, side)
    return piece


def phi_union(pieces: Sequence[Piece], side: Side = Side.PRIMAL) -> MultiConvexSet:
    """Phi of a finite union of points/polytopes: deccompose the Phi images."""
    if not pieces:
        raise EmptySet("Phi of the empty set is the whole dual space")
    family = [phi_polytope(_as_polytope(x, side)) for x in pieces]
    result = decompose(family)
    if not result.cells:
        raise WholeSpace("input admits no avoiding hyperplane")
    return result


def phi_multiconvex(M: MultiConvexSet) -> MultiConvexSet:
    """Phi of a uniform multi-convex set, through its cells."""
    if not M.cells:
        raise EmptySet("Phi needs a nonempty multi-convex set")
    return phi_union(components(M), M.side)


def saturate(
    X: Union[MultiConvexSet, Sequence[Piece]], side: Side = Side.PRIMAL
) -> MultiConvexSet:
    """Phi(Phi(X)): the least saturated multi-convex superset of X."""
    if isinstance(X, MultiConvexSet):
        return phi_multiconvex(phi_multiconvex(X))
    return phi_multiconvex(phi_union(X, side))


def is_saturated(M: MultiConvexSet) -> bool:
    """Whether Phi(Phi(M)) = M; true for every uniform multi-convex set here."""
    if not M.cells:
        raise EmptySet("saturation of the empty multi-convex set")
    return saturate(M) == M


def galois_check(S: Sequence[ProjPoint], T: Sequence[ProjPoint]) -> bool:
    """Evaluate S subseteq Phi(T) and T subseteq Phi(S) by membership; must agree."""
    from .multiconvex import membership as mc_membership

    phi_T = phi_union(T, Side.DUAL)  # lands on the primal side
    phi_S = phi_union(S, Side.PRIMAL)
    left = all(mc_membership(phi_T, p) for p in S)
    right = all(mc_membership(phi_S, t) for t in T)
    return left == right


def triangle_right(N: ProjConvexPolytope, M: MultiConvexSet) -> ProjConvexPolytope:
    """comp(M) -> cocomp(Phi(M)): the hull of Phi(M) relative to Phi(N)."""
    if not is_saturated(M):
        raise NotSaturated("triangle maps need a saturated multi-convex set")
    if N not in components(M):
        raise NotAComponent(f"{N} is not a component of the multi-convex set")
    phi_M = phi_multiconvex(M)
    return relative_hull(components(phi_M), phi_polytope(N))


def triangle_left(Mprime: ProjConvexPolytope) -> ProjConvexPolytope:
    """cocomp(Phi(M)) -> comp(M): Phi of the saturation of the co-component."""
    sat = saturate_polytope(Mprime)
    return phi_polytope(sat)


def saturate_polytope(P: ProjConvexPolytope) -> ProjConvexPolytope:
    """Phi(Phi(P)) for a single polytope; the identity for open/closed sets."""
    return phi_polytope(phi_polytope(P))
