"""Exact rational linear algebra and homogeneous linear feasibility.

All vectors are tuples of ints or Fractions in an ambient space of
dimension at most 4.  Everything here is pure and total: no floats,
no tolerance parameters, no global state.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import gcd
from typing import Iterable, Optional, Sequence

from .errors import DimensionMismatch, ZeroVector

Rat = Fraction
Vec = tuple
IntVec = tuple

MAX_DIM = 4


def parse_rational(text: str) -> Fraction:
    """Parse "p/q" or an integer string; the only numeric text format used repo-wide."""
    return Fraction(text.strip())


def format_rational(x) -> str:
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def _lcm(a: int, b: int) -> int:
    return a * b // gcd(a, b)


def clear_denominators(v: Sequence) -> tuple[int, ...]:
    """Scale v by the positive lcm of denominators; parallel integer vector."""
    fracs = [Fraction(x) for x in v]
    m = 1
    for f in fracs:
        m = _lcm(m, f.denominator)
    return tuple(int(f * m) for f in fracs)


def primitive_ray(v: Sequence) -> tuple[int, ...]:
    """Integer vector parallel to v with componentwise gcd 1; orientation kept.

    Used for cone rays and facet functionals, where the sign carries meaning.
    """
    ints = clear_denominators(v)
    g = 0
    for x in ints:
        g = gcd(g, abs(x))
    if g == 0:
        raise ZeroVector(f"cannot normalize the zero vector of length {len(ints)}")
    return tuple(x // g for x in ints)


def normalize_primitive(v: Sequence) -> tuple[int, ...]:
    """Canonical projective representative: primitive, first nonzero entry positive."""
    w = primitive_ray(v)
    for x in w:
        if x > 0:
            return w
        if x < 0:
            return tuple(-y for y in w)
    raise ZeroVector("unreachable: primitive_ray rejects zero input")


def dot(a: Sequence, b: Sequence):
    """Exact scalar product; int for int inputs, Fraction otherwise."""
    if len(a) != len(b):
        raise DimensionMismatch(f"dot of lengths {len(a)} and {len(b)}")
    return sum(x * y for x, y in zip(a, b))


def vec_add(a: Sequence, b: Sequence) -> tuple:
    return tuple(Fraction(x) + Fraction(y) for x, y in zip(a, b))


def vec_scale(c, a: Sequence) -> tuple:
    c = Fraction(c)
    return tuple(c * Fraction(x) for x in a)


def vec_neg(a: Sequence) -> tuple:
    return tuple(-x for x in a)


def rank(rows: Iterable[Sequence]) -> int:
    """Exact rank by fraction-free integer elimination."""
    m = [list(clear_denominators(r)) for r in rows if any(r)]
    if not m:
        return 0
    ncols = len(m[0])
    if any(len(r) != ncols for r in m):
        raise DimensionMismatch("rank: rows of unequal length")
    r = 0
    for col in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][col]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        a = m[r][col]
        for i in range(r + 1, len(m)):
            b = m[i][col]
            if b:
                m[i] = [a * x - b * y for x, y in zip(m[i], m[r])]
                g = 0
                for x in m[i]:
                    g = gcd(g, abs(x))
                if g > 1:
                    m[i] = [x // g for x in m[i]]
        r += 1
        if r == len(m):
            break
    return r


def _rref(rows: list[list[Fraction]]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form over Fractions; returns (matrix, pivot columns)."""
    m = [list(map(Fraction, r)) for r in rows]
    pivots: list[int] = []
    r = 0
    ncols = len(m[0]) if m else 0
    for col in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][col] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = Fraction(1) / m[r][col]
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][col] != 0:
                c = m[i][col]
                m[i] = [x - c * y for x, y in zip(m[i], m[r])]
        pivots.append(col)
        r += 1
        if r == len(m):
            break
    return m, pivots


def nullspace(rows: Sequence[Sequence], dim: int) -> list[tuple[int, ...]]:
    """Primitive integer basis of {x : <r, x> = 0 for all rows}, deterministic order."""
    rows = [r for r in rows if any(r)]
    if not rows:
        return [tuple(1 if j == i else 0 for j in range(dim)) for i in range(dim)]
    if any(len(r) != dim for r in rows):
        raise DimensionMismatch("nullspace: row length != dim")
    m, pivots = _rref([list(r) for r in rows])
    free = [j for j in range(dim) if j not in pivots]
    basis = []
    for j in free:
        v = [Fraction(0)] * dim
        v[j] = Fraction(1)
        for i, pc in enumerate(pivots):
            v[pc] = -m[i][j]
        basis.append(normalize_primitive(v))
    return basis


def solve_columns(cols: Sequence[Sequence], target: Sequence) -> Optional[tuple[Fraction, ...]]:
    """Solve sum_i c_i * cols[i] = target exactly; None if inconsistent."""
    dim = len(target)
    if any(len(c) != dim for c in cols):
        raise DimensionMismatch("solve_columns: column length != target length")
    aug = [[Fraction(c[i]) for c in cols] + [Fraction(target[i])] for i in range(dim)]
    m, pivots = _rref(aug)
    k = len(cols)
    if k in pivots:
        return None  # pivot in the rhs column: inconsistent
    sol = [Fraction(0)] * k
    for i, pc in enumerate(pivots):
        sol[pc] = m[i][k]
    # rows beyond the pivots were checked by RREF zeroing; verify anyway
    for i in range(dim):
        if sum(Fraction(cols[j][i]) * sol[j] for j in range(k)) != Fraction(target[i]):
            return None
    return tuple(sol)


class Rel(Enum):
    EQ = "eq"
    GE = "ge"
    GT = "gt"


@dataclass(frozen=True)
class LinSystem:
    """Homogeneous system: rows of (functional, relation) over a common dimension."""

    rows: tuple[tuple[tuple, Rel], ...]
    dim: int

    @staticmethod
    def of(rows: Iterable[tuple[Sequence, Rel]], dim: Optional[int] = None) -> "LinSystem":
        rs = tuple((tuple(Fraction(x) for x in v), rel) for v, rel in rows)
        if dim is None:
            if not rs:
                raise DimensionMismatch("empty system needs an explicit dimension")
            dim = len(rs[0][0])
        for v, _ in rs:
            if len(v) != dim:
                raise DimensionMismatch(f"row length {len(v)} != dim {dim}")
        return LinSystem(rs, dim)


def _dedupe_ineqs(rows: Iterable[tuple[tuple, bool]]) -> Optional[list[tuple[tuple[int, ...], bool]]]:
    """Primitive-normalize inequality rows (vec, strict); None signals 0 > 0."""
    seen: dict[tuple[int, ...], bool] = {}
    for v, strict in rows:
        if not any(v):
            if strict:
                return None
            continue
        key = primitive_ray(v)
        seen[key] = seen.get(key, False) or strict
    return [(k, s) for k, s in seen.items()]


def solve_feasibility(sys: LinSystem) -> Optional[tuple[Fraction, ...]]:
    """Exact witness for a homogeneous system of EQ / GE / GT rows, or None.

    Fourier-Motzkin elimination with strictness flags: combining a strict row
    with any row yields a strict row, so infeasibility shows up as a final
    0 > 0.  The witness is rebuilt by back-substitution, picking deterministic
    values inside each feasible interval, and is re-checked against every
    original row before being returned.
    """
    if sys.dim > MAX_DIM:
        raise DimensionMismatch(f"dimension {sys.dim} exceeds supported maximum {MAX_DIM}")
    dim = sys.dim

    # Split off equalities and eliminate them by substitution.
    eqs = [list(v) for v, rel in sys.rows if rel is Rel.EQ]
    ineqs = [(tuple(v), rel is Rel.GT) for v, rel in sys.rows if rel is not Rel.EQ]

    # x[piv] = sum_j expr[j] * x[j]  (expr[piv] = 0), applied in order.
    subs: list[tuple[int, list[Fraction]]] = []
    active = list(range(dim))
    while True:
        eqs = [e for e in eqs if any(e)]
        if not eqs:
            break
        row = eqs.pop(0)
        piv = next(j for j in active if row[j] != 0)
        coef = row[piv]
        expr = [-row[j] / coef if j != piv else Fraction(0) for j in range(dim)]
        subs.append((piv, expr))
        active.remove(piv)

        def substitute(v: Sequence) -> tuple:
            c = Fraction(v[piv])
            return tuple(Fraction(v[j]) + c * expr[j] if j != piv else Fraction(0)
                         for j in range(dim))

        eqs = [list(substitute(e)) for e in eqs]
        ineqs = [(substitute(v), s) for v, s in ineqs]

    rows = _dedupe_ineqs(ineqs)
    if rows is None:
        return None

    # Fourier-Motzkin over the remaining variables.
    elim_trace: list[tuple[int, list[tuple[tuple[int, ...], bool]]]] = []
    remaining = list(active)
    while remaining:
        # eliminate the variable producing the fewest pair combinations
        def cost(k: int) -> tuple[int, int]:
            pos = sum(1 for v, _ in rows if v[k] > 0)
            neg = sum(1 for v, _ in rows if v[k] < 0)
            return (pos * neg, k)

        var = min(remaining, key=cost)
        remaining.remove(var)
        involved = [(v, s) for v, s in rows if v[var] != 0]
        elim_trace.append((var, involved))
        pos = [(v, s) for v, s in involved if v[var] > 0]
        neg = [(v, s) for v, s in involved if v[var] < 0]
        untouched = [(v, s) for v, s in rows if v[var] == 0]
        combined = []
        for pv, ps in pos:
            for nv, ns in neg:
                new = tuple(pv[var] * nv[j] - nv[var] * pv[j] for j in range(dim))
                combined.append((new, ps or ns))
        rows = _dedupe_ineqs(untouched + combined)
        if rows is None:
            return None

    # Witness: back-substitute eliminated inequality variables in reverse.
    x = [Fraction(0)] * dim
    for var, involved in reversed(elim_trace):
        lo: Optional[tuple[Fraction, bool]] = None
        hi: Optional[tuple[Fraction, bool]] = None
        for v, s in involved:
            rest = sum(Fraction(v[j]) * x[j] for j in range(dim) if j != var)
            bound = -rest / v[var]
            if v[var] > 0:
                if lo is None or bound > lo[0] or (bound == lo[0] and s):
                    lo = (bound, s)
            else:
                if hi is None or bound < hi[0] or (bound == hi[0] and s):
                    hi = (bound, s)
        if lo is None and hi is None:
            x[var] = Fraction(0)
        elif hi is None:
            x[var] = lo[0] + 1 if lo[1] else lo[0]
        elif lo is None:
            x[var] = hi[0] - 1 if hi[1] else hi[0]
        else:
            x[var] = lo[0] if lo[0] == hi[0] else (lo[0] + hi[0]) / 2

    # Equality pivots in reverse order of substitution.
    for piv, expr in reversed(subs):
        x[piv] = sum(expr[j] * x[j] for j in range(dim))

    witness = tuple(x)
    for v, rel in sys.rows:
        val = dot(v, witness)
        ok = val == 0 if rel is Rel.EQ else (val > 0 if rel is Rel.GT else val >= 0)
        if not ok:  # pragma: no cover - would indicate an elimination bug
            raise AssertionError(f"feasibility witness fails row {v} {rel}: {val}")
    return witness
