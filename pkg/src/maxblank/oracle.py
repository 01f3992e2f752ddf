"""Ground truth that does not go through the interval construction.

* :func:`enumerate_solutions` tries every vector of a finite carrier.
* :func:`build_grid` picks, for dense carriers, a finite set of probe points
  per coordinate: every endpoint the solver could produce plus points
  strictly between and beyond them, so that any disagreement between a
  region and the system shows up on the grid.
* :func:`check_joinblank_structure` tests, on an enumerated solution set over
  any finite join-blank algebra, that the set has a maximum and contains every
  order-interval from one of its points up to that maximum.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Iterator, Sequence

from .algebra import NEG_INF, POS_INF, Algebra
from .errors import EnumerationTooLargeError, NotTotallyOrderedError
from .solver import _check_system
from .tensor import Matrix, Vector, mat_vec, vec_join, vec_join_all

__all__ = [
    "DEFAULT_LIMIT",
    "SampleGrid",
    "StructureReport",
    "enumerate_solutions",
    "iter_carrier_vectors",
    "build_grid",
    "grid_points_between",
    "check_joinblank_structure",
]

DEFAULT_LIMIT = 10**6


def iter_carrier_vectors(algebra: Algebra, n: int, limit: int = DEFAULT_LIMIT) -> Iterator[Vector]:
    """Every vector of ``V^n`` for a finite carrier, in lexicographic order."""
    carrier = algebra.elements()
    total = len(carrier) ** n
    if total > limit:
        raise EnumerationTooLargeError(f"{len(carrier)}^{n} = {total} vectors exceed the limit of {limit}")
    for entries in itertools.product(carrier, repeat=n):
        yield Vector._trusted(algebra, entries)


def enumerate_solutions(
    A: Matrix | Sequence, w: Vector | Sequence, *, algebra: Algebra | None = None, limit: int = DEFAULT_LIMIT
) -> set[Vector]:
    """``{v | A v = w}`` by testing every vector of the carrier."""
    A, w = _check_system(A, w, algebra)
    _, n = A.shape
    return {v for v in iter_carrier_vectors(A.algebra, n, limit) if mat_vec(A, v) == w}


@dataclass(frozen=True)
class SampleGrid:
    """Per-coordinate probe values; the grid is their Cartesian product."""

    algebra: Algebra
    coordinates: tuple[tuple[Any, ...], ...]

    @property
    def size(self) -> int:
        return math.prod(len(c) for c in self.coordinates)

    def __len__(self) -> int:
        return self.size

    def __iter__(self) -> Iterator[Vector]:
        for entries in itertools.product(*self.coordinates):
            yield Vector._trusted(self.algebra, entries)


def _probes(points: set) -> tuple:
    finite = sorted(x for x in points if x not in (NEG_INF, POS_INF))
    extra = set()
    if not finite:
        extra.add(Fraction(0))
    else:
        extra.add(finite[0] - 1)
        extra.add(finite[-1] + 1)
        extra.update((a + b) / 2 for a, b in zip(finite, finite[1:]))
    return tuple(sorted(points | extra))


def build_grid(A: Matrix | Sequence, w: Vector | Sequence, *, algebra: Algebra | None = None) -> SampleGrid:
    """Probe values per coordinate for a dense totally ordered carrier.

    Coordinate ``j`` gets ``bottom``, ``top``, every residual bound ``q_j^i``,
    every scalar-solution lower end ``p_j^i``, the midpoints of consecutive
    finite breakpoints and one point beyond each finite extreme.
    """
    A, w = _check_system(A, w, algebra)
    alg = A.algebra
    if not alg.totally_ordered:
        raise NotTotallyOrderedError(f"grid sampling needs a totally ordered algebra, not {alg.descriptor}")
    m, n = A.shape
    coords = []
    for j in range(n):
        points = {alg.bottom, alg.top}
        for i in range(m):
            a, wi = A.rows[i][j], w[i]
            points.add(alg._residual(a, wi))
            sol = alg._solve_scalar(a, wi)
            if not sol.is_empty:
                points.add(sol.lower)
                points.add(sol.upper)
        coords.append(_probes(points) if alg.dense else tuple(sorted(points)))
    return SampleGrid(alg, tuple(coords))


@dataclass(frozen=True)
class StructureReport:
    passed: bool
    terminal: Vector | None = None
    reason: str = ""
    counterexample: tuple[Vector, ...] = ()

    def __bool__(self) -> bool:
        return self.passed


def check_joinblank_structure(
    solutions: set[Vector] | Sequence[Vector],
    algebra: Algebra,
    n: int,
    *,
    limit: int = DEFAULT_LIMIT,
) -> StructureReport:
    """Check the union-of-intervals-with-common-top shape of a solution set.

    For a non-empty ``X`` with ``x`` the join of all its members this verifies

    1. ``x`` is in ``X``;
    2. every ``z`` with ``u <= z <= x`` for some ``u`` in ``X`` is in ``X``;
    3. the join of any two members is in ``X``.

    Works for partial orders (e.g. :class:`~maxblank.algebra.PowerSet`); the
    carrier must be finite so that the order-intervals can be enumerated.
    """
    X = set(solutions)
    if not X:
        return StructureReport(True, None, "empty solution set")
    for v in X:
        if v.algebra != algebra or len(v) != n:
            raise ValueError(f"{v!r} is not a vector of {algebra.descriptor}^{n}")
    x = vec_join_all(X)
    if x not in X:
        return StructureReport(False, x, "join of all solutions is not a solution", (x,))

    carrier = algebra.elements()
    leq = algebra._leq
    for u in sorted(X, key=repr):
        ranges = [[c for c in carrier if leq(lo, c) and leq(c, hi)] for lo, hi in zip(u.entries, x.entries)]
        count = math.prod(len(r) for r in ranges)
        if count > limit:
            raise EnumerationTooLargeError(f"order-interval of {count} points exceeds the limit of {limit}")
        for entries in itertools.product(*ranges):
            z = Vector._trusted(algebra, entries)
            if z not in X:
                return StructureReport(False, x, "order-interval to the terminal point leaves the set", (u, z))

    ordered = sorted(X, key=repr)
    for a, b in itertools.combinations(ordered, 2):
        if vec_join(a, b) not in X:
            return StructureReport(False, x, "join of two solutions is not a solution", (a, b))
    return StructureReport(True, x)


def grid_points_between(grid: SampleGrid, lo: Vector, hi: Vector) -> Iterator[Vector]:
    """Grid points ``z`` with ``lo <= z <= hi``."""
    ranges = [[c for c in coord if a <= c <= b] for coord, a, b in zip(grid.coordinates, lo.entries, hi.entries)]
    for entries in itertools.product(*ranges):
        yield Vector._trusted(grid.algebra, entries)
