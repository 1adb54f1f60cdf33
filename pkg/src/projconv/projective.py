"""Points, hyperplanes, segment pairs, and the delta correspondence.

A point of n-dimensional projective space is a primitive integer vector of
length n+1 with positive leading entry; a hyperplane is the same data read
as a functional.  The two line segments joining a pair of points are the
images of the lambda*u + mu*v families with lambda*mu >= 0 and <= 0.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Sequence

from .errors import DimensionMismatch, EqualPoints, ZeroVector
from .kernel import dot, normalize_primitive, solve_columns


@dataclass(frozen=True)
class ProjPoint:
    coords: tuple[int, ...]

    @staticmethod
    def of(v: Sequence) -> "ProjPoint":
        return ProjPoint(normalize_primitive(v))

    @property
    def dim(self) -> int:
        """Dimension of the surrounding projective space."""
        return len(self.coords) - 1

    def __str__(self) -> str:
        return "[" + ", ".join(str(x) for x in self.coords) + "]"


@dataclass(frozen=True)
class ProjHyperplane:
    functional: tuple[int, ...]

    @staticmethod
    def of(v: Sequence) -> "ProjHyperplane":
        return ProjHyperplane(normalize_primitive(v))

    @property
    def dim(self) -> int:
        return len(self.functional) - 1

    def as_point(self) -> ProjPoint:
        """The same coordinates read as a point of the dual space."""
        return ProjPoint(self.functional)

    def __str__(self) -> str:
        return "[" + ", ".join(str(x) for x in self.functional) + "]"


def incident(p: ProjPoint, h: ProjHyperplane) -> bool:
    if len(p.coords) != len(h.functional):
        raise DimensionMismatch("point and hyperplane of different dimensions")
    return dot(h.functional, p.coords) == 0


class SegmentSign(Enum):
    NON_NEGATIVE = 1
    NON_POSITIVE = -1


@dataclass(frozen=True)
class Segment:
    """One of the two arcs joining pi(u) and pi(v); identity depends on u, v."""

    u: tuple[int, ...]
    v: tuple[int, ...]
    sign: SegmentSign


def segments(p: ProjPoint, q: ProjPoint) -> tuple[Segment, Segment]:
    if p.coords == q.coords:
        raise EqualPoints(f"segments need distinct endpoints, got {p}")
    if len(p.coords) != len(q.coords):
        raise DimensionMismatch("segment endpoints of different dimensions")
    return (
        Segment(p.coords, q.coords, SegmentSign.NON_NEGATIVE),
        Segment(p.coords, q.coords, SegmentSign.NON_POSITIVE),
    )


def segment_contains(s: Segment, r: ProjPoint) -> bool:
    """Exact 2x2 solve on span(u, v); points off the line are simply absent."""
    sol = solve_columns([s.u, s.v], r.coords)
    if sol is None:
        return False
    lam, mu = sol
    if s.sign is SegmentSign.NON_NEGATIVE:
        return lam * mu >= 0
    return lam * mu <= 0


def segment_sample(s: Segment, lam, mu) -> ProjPoint:
    """The point pi(lam*u + mu*v); raises ZeroVector for lam = mu = 0."""
    lam, mu = Fraction(lam), Fraction(mu)
    vec = tuple(lam * a + mu * b for a, b in zip(s.u, s.v))
    if not any(vec):
        raise ZeroVector("degenerate sample on a segment")
    return ProjPoint.of(vec)


@dataclass(frozen=True)
class IrreducibleConvex:
    """A maximal convex set: the complement of one projective hyperplane."""

    excluded: ProjHyperplane

    def contains(self, p: ProjPoint) -> bool:
        return not incident(p, self.excluded)

    @property
    def dim(self) -> int:
        return self.excluded.dim


def delta(p: ProjPoint) -> IrreducibleConvex:
    """The irreducible convex set in the dual space attached to a point."""
    return IrreducibleConvex(ProjHyperplane(p.coords))


def delta_inv(c: IrreducibleConvex) -> ProjPoint:
    return ProjPoint(c.excluded.functional)
