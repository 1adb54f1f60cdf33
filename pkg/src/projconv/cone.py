"""Exact polyhedral cone engine: double description in ambient dimension <= 4.

A cone is stored with both descriptions, each in canonical form:

* ``generators`` -- primitive integer rays, sorted lexicographically.  For a
  cone with lineality the list is (+-)the reduced lineality basis together
  with the extreme rays of the pointed part in the orthogonal complement.
* ``facets`` -- the same canonical list computed for the dual cone, so that
  ``dual_cone`` is a constant-time swap and biduality is exact by
  construction.

Conversion both ways reduces to one routine, :func:`_cone_generators`, which
enumerates extreme rays of {x : <r, x> >= 0 for all rows} by brute force over
row subsets.  Ambient dimension <= 4 keeps this exact and fast.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

from .errors import DimensionMismatch
from .kernel import MAX_DIM, dot, nullspace, primitive_ray, rank


def _dedupe_sorted(vecs: Iterable[tuple[int, ...]]) -> tuple[tuple[int, ...], ...]:
    return tuple(sorted(set(vecs)))


def _det(m: list[tuple[int, ...]]) -> int:
    n = len(m)
    if n == 0:
        return 1
    if n == 1:
        return m[0][0]
    if n == 2:
        return m[0][0] * m[1][1] - m[0][1] * m[1][0]
    return (
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
        - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
    )


def _kernel_direction(rows: list[tuple[int, ...]], dim: int) -> tuple[int, ...]:
    """Generalized cross product: spans the kernel of dim-1 rows, or zero."""
    sign = 1
    out = []
    for j in range(dim):
        minor = [tuple(r[i] for i in range(dim) if i != j) for r in rows]
        out.append(sign * _det(minor))
        sign = -sign
    return tuple(out)


def _cone_generators(rows: Sequence[tuple[int, ...]], dim: int) -> tuple[tuple[int, ...], ...]:
    """Canonical generator list of {x in Q^dim : <r, x> >= 0 for every row}.

    Lineality (the kernel of the rows) contributes a +- reduced basis; the
    pointed remainder contributes its extreme rays.  An extreme ray has an
    active set of rank d'-1, so every one of them is the kernel direction
    (a signed-minor cross product) of some (d'-1)-subset of the rows,
    checked for membership afterwards.
    """
    rows = sorted({primitive_ray(r) for r in rows if any(r)})
    lin_basis = nullspace(rows, dim)
    gens: list[tuple[int, ...]] = []
    for b in lin_basis:
        gens.append(b)
        gens.append(tuple(-x for x in b))
    if len(lin_basis) == dim:
        return _dedupe_sorted(gens)

    if lin_basis:
        # work in coordinates of the orthogonal complement of the lineality
        comp = nullspace(lin_basis, dim)
        rows_w = sorted({primitive_ray(tuple(dot(r, c) for c in comp)) for r in rows})
    else:
        comp = None
        rows_w = rows
    dprime = dim - len(lin_basis)

    candidates: set[tuple[int, ...]] = set()
    for subset in combinations(rows_w, dprime - 1):
        y = _kernel_direction(list(subset), dprime)
        if not any(y):
            continue  # dependent subset; its rays come from independent ones
        for cand in (y, tuple(-c for c in y)):
            if all(dot(r, cand) >= 0 for r in rows_w):
                candidates.add(primitive_ray(cand))
                break
    if comp is None:
        gens.extend(candidates)
    else:
        for y in candidates:
            v = [0] * dim
            for yj, c in zip(y, comp):
                v = [a + yj * cj for a, cj in zip(v, c)]
            gens.append(primitive_ray(v))
    return _dedupe_sorted(gens)


@dataclass(frozen=True)
class PolyhedralCone:
    """Rational polyhedral cone with synchronized minimal V- and H-descriptions."""

    ambient_dim: int
    generators: tuple[tuple[int, ...], ...]
    facets: tuple[tuple[int, ...], ...]

    def contains(self, v: Sequence, strict: bool = False) -> bool:
        if len(v) != self.ambient_dim:
            raise DimensionMismatch(
                f"vector of length {len(v)} in cone of dimension {self.ambient_dim}"
            )
        if strict:
            return all(dot(f, v) > 0 for f in self.facets)
        return all(dot(f, v) >= 0 for f in self.facets)

    def validate(self) -> None:
        """Double-description consistency: every generator satisfies every facet."""
        for g in self.generators:
            for f in self.facets:
                if dot(f, g) < 0:
                    raise AssertionError(f"generator {g} violates facet {f}")


def _check_dim(dim: int) -> None:
    if not 1 <= dim <= MAX_DIM:
        raise DimensionMismatch(f"ambient dimension {dim} outside 1..{MAX_DIM}")


def from_generators(rays: Iterable[Sequence], ambient_dim: int) -> PolyhedralCone:
    _check_dim(ambient_dim)
    prim = []
    for r in rays:
        if len(r) != ambient_dim:
            raise DimensionMismatch("generator length != ambient dimension")
        if any(r):
            prim.append(primitive_ray(r))
    facets = _cone_generators(prim, ambient_dim)
    gens = _cone_generators(facets, ambient_dim)
    return PolyhedralCone(ambient_dim, gens, facets)


def from_facets(functionals: Iterable[Sequence], ambient_dim: int) -> PolyhedralCone:
    _check_dim(ambient_dim)
    prim = []
    for f in functionals:
        if len(f) != ambient_dim:
            raise DimensionMismatch("functional length != ambient dimension")
        if any(f):
            prim.append(primitive_ray(f))
    gens = _cone_generators(prim, ambient_dim)
    facets = _cone_generators(gens, ambient_dim)
    return PolyhedralCone(ambient_dim, gens, facets)


def dual_cone(c: PolyhedralCone) -> PolyhedralCone:
    """{w : <w, g> >= 0 for all generators g}; an exact involution here."""
    return PolyhedralCone(c.ambient_dim, c.facets, c.generators)


def negate(c: PolyhedralCone) -> PolyhedralCone:
    def neg(vs):
        return tuple(sorted(tuple(-x for x in v) for v in vs))

    return PolyhedralCone(c.ambient_dim, neg(c.generators), neg(c.facets))


def intersect(a: PolyhedralCone, b: PolyhedralCone) -> PolyhedralCone:
    if a.ambient_dim != b.ambient_dim:
        raise DimensionMismatch("intersect: ambient dimensions differ")
    return from_facets(a.facets + b.facets, a.ambient_dim)


def conic_hull(a: PolyhedralCone, b: PolyhedralCone) -> PolyhedralCone:
    if a.ambient_dim != b.ambient_dim:
        raise DimensionMismatch("conic_hull: ambient dimensions differ")
    return from_generators(a.generators + b.generators, a.ambient_dim)


def is_zero(c: PolyhedralCone) -> bool:
    return not c.generators


def is_fulldim(c: PolyhedralCone) -> bool:
    return rank(c.generators) == c.ambient_dim


def is_salient(c: PolyhedralCone) -> bool:
    """No full line inside; equivalently the facet matrix has full rank."""
    if not c.generators:
        return True
    return rank(c.facets) == c.ambient_dim


def lineality_dim(c: PolyhedralCone) -> int:
    return c.ambient_dim - rank(c.facets) if c.facets else c.ambient_dim


def interior_point(c: PolyhedralCone):
    """Deterministic interior witness for full-dimensional cones, else None.

    The sum of the canonical generators works: +-lineality pairs cancel and
    the pointed rays cannot all lie on one facet of a full-dimensional cone.
    An empty facet list means the whole space; any nonzero vector is interior.
    """
    if not is_fulldim(c):
        return None
    if not c.facets:
        return tuple(1 if i == 0 else 0 for i in range(c.ambient_dim))
    total = [0] * c.ambient_dim
    for g in c.generators:
        total = [a + x for a, x in zip(total, g)]
    point = primitive_ray(total)
    assert c.contains(point, strict=True)
    return point
