"""Solution spaces of ``A v = w`` over max-blank algebras.

Row ``i`` of the system holds iff some column ``j'`` attains ``w(i)`` exactly
while every column stays at or below it.  Writing ``q_j`` for the residual
bound of column ``j``, the row's solution set is therefore

    union over j' in U_i of  X(A(i,j'), w(i)) x prod_{j != j'} [bottom, q_j]

where ``U_i`` collects the columns whose scalar equation is solvable.  Each
term is a quasi-interval (left-open in coordinate ``j'`` when the scalar
solution is), so the whole solution space is the intersection over rows of
finite unions.  Distributing that intersection over the unions gives one
quasi-interval per choice of ``j'`` in every row; :func:`solve` walks those
choices depth-first and abandons a branch as soon as its running
intersection is empty.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Any, Sequence

from .algebra import Algebra, ScalarSolution
from .errors import DimensionMismatchError, TermBudgetExceededError
from .qinterval import QuasiInterval, SolutionRegion, canonicalize, intersect, is_empty
from .tensor import Matrix, Vector, as_matrix, as_vector, mat_vec, vec_meet_all

__all__ = [
    "DEFAULT_BUDGET",
    "RowAnalysis",
    "SearchStats",
    "analyze_row",
    "row_region",
    "solve",
    "greatest_solution",
    "verify",
]

DEFAULT_BUDGET = 10**6


@dataclass(frozen=True)
class RowAnalysis:
    """Per-column scalar data for one equation of the system.

    ``row`` and the column sets use 1-based numbering.  ``bounds[j-1]`` is the
    residual ``q_j`` for every column, solvable or not.
    """

    algebra: Algebra
    row: int
    solutions: tuple[ScalarSolution, ...]
    bounds: tuple[Any, ...]

    @property
    def solvable(self) -> frozenset[int]:
        return frozenset(j for j, s in enumerate(self.solutions, start=1) if not s.is_empty)

    @property
    def left_open(self) -> frozenset[int]:
        return frozenset(j for j, s in enumerate(self.solutions, start=1) if s.is_left_open)

    @property
    def closed(self) -> frozenset[int]:
        return self.solvable - self.left_open

    @property
    def upper(self) -> Vector:
        """The row's common upper corner, coordinate ``j`` being ``q_j``."""
        return Vector._trusted(self.algebra, self.bounds)


@dataclass
class SearchStats:
    """Counters filled in by :func:`solve`."""

    choices: int = 0  # product of |U_i|, before pruning
    nodes: int = 0  # partial intersections formed
    pruned: int = 0  # partial intersections found empty
    leaves: int = 0  # full choice functions that survived
    members: int = 0  # members in the returned region


def analyze_row(A: Matrix, i: int, w_i: Any) -> RowAnalysis:
    """Scalar solution sets and residual bounds for row ``i`` (1-based)."""
    alg = A.algebra
    alg._require_total("analyze_row")
    m, _ = A.shape
    if not 1 <= i <= m:
        raise DimensionMismatchError(f"row {i} outside 1..{m}")
    w_i = alg.coerce(w_i)
    solutions = []
    bounds = []
    for a in A.rows[i - 1]:
        sol = alg._solve_scalar(a, w_i)
        q = alg._residual(a, w_i)
        if not sol.is_empty and sol.upper != q:
            raise AssertionError(f"residual {q!r} disagrees with scalar solution {sol!r}")
        solutions.append(sol)
        bounds.append(q)
    return RowAnalysis(alg, i, tuple(solutions), tuple(bounds))


def row_region(ra: RowAnalysis, n: int | None = None) -> list[QuasiInterval]:
    """One quasi-interval per solvable column of the row.

    Member for column ``j'``: lower corner ``p_{j'}`` in coordinate ``j'`` and
    bottom elsewhere, upper corner the row bounds, lower end excluded in
    coordinate ``j'`` iff that scalar solution is left-open.  An empty list
    means the row, hence the system, has no solution.
    """
    alg = ra.algebra
    if n is None:
        n = len(ra.bounds)
    if n != len(ra.bounds):
        raise DimensionMismatchError(f"row analysis has {len(ra.bounds)} columns, not {n}")
    upper = ra.upper
    out = []
    for j, sol in enumerate(ra.solutions, start=1):
        if sol.is_empty:
            continue
        lower = [alg.bottom] * n
        lower[j - 1] = sol.lower
        excluded = frozenset({j}) if sol.is_left_open else frozenset()
        out.append(QuasiInterval(Vector._trusted(alg, tuple(lower)), upper, excluded))
    return out


def _check_system(A: Matrix | Sequence, w: Vector | Sequence, algebra: Algebra | None) -> tuple[Matrix, Vector]:
    if algebra is None:
        if isinstance(A, Matrix):
            algebra = A.algebra
        elif isinstance(w, Vector):
            algebra = w.algebra
        else:
            raise TypeError("pass a Matrix/Vector or an explicit algebra")
    A = as_matrix(algebra, A)
    w = as_vector(algebra, w)
    m, n = A.shape
    if len(w) != m:
        raise DimensionMismatchError(f"{m}x{n} system with right-hand side of length {len(w)}")
    return A, w


def _search(rows: list[list[QuasiInterval]], depth: int, running: QuasiInterval, stats: SearchStats) -> list:
    out = []
    stack = [(depth, running)]
    # explicit stack, visited in the same order as the recursive walk
    while stack:
        d, cur = stack.pop()
        if d == len(rows):
            stats.leaves += 1
            out.append(cur)
            continue
        children = []
        for piece in rows[d]:
            nxt = intersect(cur, piece)
            stats.nodes += 1
            if is_empty(nxt):
                stats.pruned += 1
                continue
            children.append((d + 1, nxt))
        stack.extend(reversed(children))
    return out


def solve(
    A: Matrix | Sequence,
    w: Vector | Sequence,
    *,
    algebra: Algebra | None = None,
    canonical: bool = True,
    budget: int = DEFAULT_BUDGET,
    threads: int = 1,
    stats: SearchStats | None = None,
) -> SolutionRegion:
    """The full solution space ``{v | A v = w}`` as a finite union of quasi-intervals.

    ``budget`` caps the number of choice functions (the product of the row
    solvable-set sizes, counted before pruning); larger systems raise
    :class:`TermBudgetExceededError`.  With ``threads > 1`` the subtrees below
    the first row's choices are searched concurrently; the result is the same
    as the single-threaded one.  ``canonical=False`` keeps every surviving
    intersection, including duplicates and members covered by others.
    """
    A, w = _check_system(A, w, algebra)
    alg = A.algebra
    alg._require_total("solve")
    m, n = A.shape
    if stats is None:
        stats = SearchStats()

    analyses = [analyze_row(A, i, w[i - 1]) for i in range(1, m + 1)]
    rows = [row_region(ra, n) for ra in analyses]
    stats.choices = math.prod(len(r) for r in rows)
    if stats.choices == 0:
        return SolutionRegion(alg, n)
    if stats.choices > budget:
        raise TermBudgetExceededError(f"{stats.choices} choice functions exceed the budget of {budget}")

    if threads <= 1 or len(rows[0]) < 2:
        found = _search(rows, 0, QuasiInterval.full(alg, n), stats)
    else:
        found = _parallel_search(rows, alg, n, threads, stats)

    region = SolutionRegion(alg, n, tuple(found))
    if canonical:
        region = canonicalize(region)
    stats.members = len(region)
    return region


def _parallel_search(rows, alg: Algebra, n: int, threads: int, stats: SearchStats) -> list:
    full = QuasiInterval.full(alg, n)
    branch_stats = [SearchStats() for _ in rows[0]]

    def branch(k: int) -> list:
        st = branch_stats[k]
        first = intersect(full, rows[0][k])
        st.nodes += 1
        if is_empty(first):
            st.pruned += 1
            return []
        return _search(rows, 1, first, st)

    with ThreadPoolExecutor(max_workers=threads) as pool:
        results = list(pool.map(branch, range(len(rows[0]))))
    for st in branch_stats:
        stats.nodes += st.nodes
        stats.pruned += st.pruned
        stats.leaves += st.leaves
    return [q for part in results for q in part]


def greatest_solution(
    A: Matrix | Sequence, w: Vector | Sequence, *, algebra: Algebra | None = None
) -> Vector | None:
    """The maximum of the solution space, or ``None`` when there is no solution.

    The candidate is the componentwise meet of all row bounds, which is the
    largest ``v`` with ``A v <= w``; the system is solvable iff it attains ``w``.
    """
    A, w = _check_system(A, w, algebra)
    A.algebra._require_total("greatest_solution")
    m, n = A.shape
    x = vec_meet_all(analyze_row(A, i, w[i - 1]).upper for i in range(1, m + 1))
    return x if mat_vec(A, x) == w else None


def verify(A: Matrix | Sequence, w: Vector | Sequence, v: Vector | Sequence, *, algebra: Algebra | None = None) -> bool:
    """Whether ``A v == w`` exactly."""
    A, w = _check_system(A, w, algebra)
    v = as_vector(A.algebra, v)
    return mat_vec(A, v) == w
