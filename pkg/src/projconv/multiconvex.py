"""Multi-convex sets: sign-cell decompositions of polytope family intersections.

The intersection of k projective convex polytopes splits into the nonempty
cells of the 2^(k-1) sign vectors (the first sign is pinned to +1 because
pi identifies antipodes).  Cells are pairwise disjoint convex sets whose
union is the intersection, so they are exactly the components.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Optional, Sequence

from . import cone as conemod
from .convexset import ProjConvexPolytope, Side, Topology, make_polytope
from .errors import (
    DimensionMismatch,
    EmptyMultiConvex,
    MixedTopology,
)
from .kernel import LinSystem, Rel, solve_feasibility, vec_scale
from .projective import IrreducibleConvex, ProjHyperplane, ProjPoint

SignVector = tuple[int, ...]


@dataclass(frozen=True)
class Cell:
    signs: SignVector
    polytope: ProjConvexPolytope


@dataclass(frozen=True)
class MultiConvexSet:
    """A generating family plus its nonempty sign cells.

    Equality and canonical form are carried by (topology, side, cells): the
    family is honest metadata, but two different families can generate the
    same point set and the duality laws are statements about the cells.
    """

    family: tuple[ProjConvexPolytope, ...]
    cells: tuple[Cell, ...]
    topology: Topology
    side: Side

    @property
    def dim(self) -> int:
        return self.family[0].dim

    def canonical_cells(self) -> tuple[ProjConvexPolytope, ...]:
        """The cell polytopes sorted independently of the family's sign order."""
        return tuple(
            sorted((c.polytope for c in self.cells), key=lambda P: P.cone.generators)
        )

    def __eq__(self, other) -> bool:
        if not isinstance(other, MultiConvexSet):
            return NotImplemented
        return (
            self.topology is other.topology
            and self.side is other.side
            and self.canonical_cells() == other.canonical_cells()
        )

    def __hash__(self) -> int:
        return hash((self.topology, self.side, self.canonical_cells()))


def sign_vectors(k: int) -> list[SignVector]:
    """All sign vectors of length k with leading +1, in deterministic order."""
    return [(1,) + rest for rest in product((1, -1), repeat=k - 1)]


def decompose(family: Sequence[ProjConvexPolytope]) -> MultiConvexSet:
    """Cell decomposition of the intersection of a nonempty uniform family."""
    family = tuple(family)
    if not family:
        raise EmptyMultiConvex("a multi-convex set needs a nonempty family")
    topology = family[0].topology
    side = family[0].side
    dim = family[0].dim
    for P in family:
        if P.topology is not topology or P.side is not side:
            raise MixedTopology("family members must share topology and side")
        if P.dim != dim:
            raise DimensionMismatch("family members must share the ambient dimension")

    cells = []
    for signs in sign_vectors(len(family)):
        rows = []
        for s, P in zip(signs, family):
            rows.extend(vec_scale(s, f) for f in P.cone.facets)
        cell_cone = conemod.from_facets(rows, dim)
        if topology is Topology.CLOSED:
            if conemod.is_zero(cell_cone):
                continue
        else:
            if not conemod.is_fulldim(cell_cone):
                continue
        cells.append(Cell(signs, make_polytope(cell_cone, topology, side)))
    cells.sort(key=lambda c: c.signs)
    return MultiConvexSet(family, tuple(cells), topology, side)


def singleton(P: ProjConvexPolytope) -> MultiConvexSet:
    return decompose([P])


def components(M: MultiConvexSet) -> list[ProjConvexPolytope]:
    """The maximal convex subsets: exactly the cells."""
    return [c.polytope for c in M.cells]


def degree(M: MultiConvexSet) -> int:
    return len(M.cells)


def member_cell(M: MultiConvexSet, p: ProjPoint) -> Optional[SignVector]:
    from .convexset import membership

    for c in M.cells:
        if membership(c.polytope, p):
            return c.signs
    return None


def membership(M: MultiConvexSet, p: ProjPoint) -> bool:
    return member_cell(M, p) is not None


def _require_nonempty(M: MultiConvexSet) -> None:
    if not M.cells:
        raise EmptyMultiConvex("operation needs at least one cell")


def cocomponents(M: MultiConvexSet) -> list[ProjConvexPolytope]:
    """Minimal convex supersets, via sign liftings of the cells.

    A convex superset lifts every cell cone coherently up to sign, so the
    candidates are the conic hulls of the lifted cells; the hulls that are
    valid polytope cones for the family topology are exactly the minimal
    ones (an invalid lifting folds a cell onto its antipode and the hull
    degenerates: a line appears inside, or the hull fills the space).
    """
    _require_nonempty(M)
    dim = M.dim
    hulls: set[ProjConvexPolytope] = set()
    for signs in sign_vectors(len(M.cells)):
        rays: list[tuple[int, ...]] = []
        for s, cell in zip(signs, M.cells):
            rays.extend(
                tuple(s * x for x in g) for g in cell.polytope.cone.generators
            )
        hull = conemod.from_generators(rays, dim)
        if M.topology is Topology.CLOSED:
            if conemod.is_zero(hull) or not conemod.is_salient(hull):
                continue
        else:
            if not conemod.is_fulldim(hull) or not hull.facets:
                continue
        hulls.add(make_polytope(hull, M.topology, M.side))
    out = sorted(hulls, key=lambda P: P.cone.generators)
    assert out, "a nonempty multi-convex set has at least one co-component"
    return out


def codegree(M: MultiConvexSet) -> int:
    return len(cocomponents(M))


def separating_irreducible(M: MultiConvexSet, p: ProjPoint) -> Optional[IrreducibleConvex]:
    """An irreducible convex set containing M and avoiding p, or None.

    Searches sign liftings of the cells for a functional vanishing at p and
    positive on the lifted cells (strictly on generators for Closed cells;
    nonzero suffices for Open full-dimensional cells).  None certifies that
    p belongs to the saturation of M.
    """
    _require_nonempty(M)
    dim = M.dim
    if len(p.coords) != dim:
        raise DimensionMismatch("point and multi-convex set of different dimensions")
    for signs in sign_vectors(len(M.cells)):
        lifted: list[tuple[int, ...]] = []
        for s, cell in zip(signs, M.cells):
            lifted.extend(
                tuple(s * x for x in g) for g in cell.polytope.cone.generators
            )
        if M.topology is Topology.CLOSED:
            rows = [(p.coords, Rel.EQ)] + [(g, Rel.GT) for g in lifted]
            w = solve_feasibility(LinSystem.of(rows, dim))
            if w is not None:
                return IrreducibleConvex(ProjHyperplane.of(w))
        else:
            # w >= 0 on the closure and w != 0 give w > 0 on the open cells
            dual = conemod.dual_cone(
                conemod.from_generators(lifted + [p.coords, vec_scale(-1, p.coords)], dim)
            )
            if not conemod.is_zero(dual):
                return IrreducibleConvex(ProjHyperplane.of(dual.generators[0]))
    return None


# The saturation-facing operations live in duality.py (they need Phi); these
# wrappers keep them reachable from the multiconvex namespace without a cycle.


def is_saturated(M: MultiConvexSet) -> bool:
    from .duality import is_saturated as _impl

    return _impl(M)


def triangle_right(N: ProjConvexPolytope, M: MultiConvexSet) -> ProjConvexPolytope:
    from .duality import triangle_right as _impl

    return _impl(N, M)


def triangle_left(Mprime: ProjConvexPolytope) -> ProjConvexPolytope:
    from .duality import triangle_left as _impl

    return _impl(Mprime)
