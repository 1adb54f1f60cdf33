"""Independent brute-force verifiers.

Nothing here touches the cone engine or the feasibility solver: every check
is a scalar product followed by a sign test, so agreement with the kernel is
evidence rather than tautology.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product
from typing import Iterable, Sequence

from .errors import DegeneratePolygon, NotGeneric
from .projective import ProjHyperplane, ProjPoint


@dataclass(frozen=True)
class SampleGrid:
    """Deterministic rational grid in the chart x0 = 1: [-extent, extent]^2."""

    resolution: int = 41
    extent: Fraction = Fraction(8)

    def points(self) -> Iterable[tuple[Fraction, ...]]:
        step = Fraction(2 * self.extent, self.resolution - 1)
        for i in range(self.resolution):
            for j in range(self.resolution):
                yield (
                    Fraction(1),
                    -self.extent + i * step,
                    -self.extent + j * step,
                )


def _sign(x) -> int:
    return (x > 0) - (x < 0)


def membership_oracle(P, grid: SampleGrid) -> set[tuple[Fraction, ...]]:
    """Grid points of the chart lying in the polytope, by raw sign evaluation."""
    strict = P.topology.value == "open"
    hits = set()
    for v in grid.points():
        for w in (v, tuple(-x for x in v)):
            vals = [sum(f[i] * w[i] for i in range(len(w))) for f in P.cone.facets]
            ok = all(x > 0 for x in vals) if strict else all(x >= 0 for x in vals)
            if ok:
                hits.add(v)
                break
    return hits


def avoidance_oracle(vertices: Sequence[Sequence], h: ProjHyperplane) -> bool:
    """Whether the line avoids the polygon: one strict sign at every vertex."""
    if len(vertices) < 3:
        raise DegeneratePolygon("a polygon needs at least 3 vertices")
    lifted = [(Fraction(1), Fraction(x), Fraction(y)) for x, y in vertices]
    if _poly_rank(lifted) < 3:
        raise DegeneratePolygon("polygon vertices are collinear")
    f = h.functional
    signs = {_sign(sum(f[i] * v[i] for i in range(3))) for v in lifted}
    return signs == {1} or signs == {-1}


def _poly_rank(vecs: Sequence[Sequence]) -> int:
    """3x3-determinant based rank bound for lifted polygon vertices."""
    for trio in combinations(vecs, 3):
        a, b, c = trio
        det = (
            a[0] * (b[1] * c[2] - b[2] * c[1])
            - a[1] * (b[0] * c[2] - b[2] * c[0])
            + a[2] * (b[0] * c[1] - b[1] * c[0])
        )
        if det != 0:
            return 3
    return 2


def _cross(a: Sequence[int], b: Sequence[int]) -> tuple[int, int, int]:
    return (
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    )


def cell_count_oracle(
    hyperplanes: Sequence[ProjHyperplane], grid: SampleGrid | None = None
) -> int:
    """Number of cells of the arrangement complement in the projective plane.

    Counts distinct full sign vectors (modulo a global flip) over the grid,
    augmented with exact probes in the four quadrants around every vertex of
    the arrangement: the probe N*(li x lj) + u keeps the sign of every
    non-incident line once N exceeds |<l, u>|, so for two or more lines every
    cell is hit regardless of grid resolution.
    """
    lines = [h.functional for h in hyperplanes]
    k = len(lines)
    if k == 0:
        raise NotGeneric("need at least one hyperplane")
    if len({tuple(l) for l in lines}) < k:
        raise NotGeneric("duplicate hyperplanes")
    for trio in combinations(lines, 3):
        if _poly_rank(trio) < 3:
            raise NotGeneric("three concurrent hyperplanes")

    samples: list[tuple] = []
    if grid is not None:
        samples.extend(grid.points())
    if k == 1:
        samples.append(lines[0])
    for a, b in combinations(lines, 2):
        vertex = _cross(a, b)
        offsets = [
            tuple(sa * x + sb * y for x, y in zip(a, b))
            for sa, sb in ((1, 1), (1, -1), (-1, 1), (-1, -1))
        ]
        big = 1 + max(
            abs(sum(l[i] * u[i] for i in range(3))) for l in lines for u in offsets
        )
        for u in offsets:
            samples.append(tuple(big * v + x for v, x in zip(vertex, u)))

    seen: set[tuple[int, ...]] = set()
    for p in samples:
        signs = [_sign(sum(l[i] * p[i] for i in range(3))) for l in lines]
        if 0 in signs:
            continue
        if signs[0] < 0:
            signs = [-s for s in signs]
        seen.add(tuple(signs))
    return len(seen)
