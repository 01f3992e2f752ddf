"""Quasi-intervals: boxes in V^n whose endpoints may be individually excluded.

A quasi-interval is the product of one-dimensional intervals ``I_1 x ... x I_n``
where ``I_k`` runs from ``lower[k]`` to ``upper[k]``, dropping the lower end
when ``k`` is in ``lower_excluded`` and the upper end when ``k`` is in
``upper_excluded``.  Exclusion sets hold 1-based coordinate numbers.

Over a total order the intersection of two quasi-intervals is again one,
which is what lets the solver distribute intersections over unions and still
land on a finite union of quasi-intervals.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Iterable, Iterator, Mapping, Sequence

from .algebra import Algebra
from .errors import AlgebraMismatchError, DimensionMismatchError
from .tensor import Vector, as_vector, vec_join, vec_meet

__all__ = [
    "QuasiInterval",
    "SolutionRegion",
    "contains",
    "is_empty",
    "intersect",
    "subsumes",
    "canonicalize",
]


def _index_set(values: Iterable[int], n: int) -> frozenset[int]:
    out = frozenset(int(k) for k in values)
    bad = [k for k in out if not 1 <= k <= n]
    if bad:
        raise DimensionMismatchError(f"exclusion indices {sorted(bad)} outside 1..{n}")
    return out


@dataclass(frozen=True)
class QuasiInterval:
    lower: Vector
    upper: Vector
    lower_excluded: frozenset[int] = field(default_factory=frozenset)
    upper_excluded: frozenset[int] = field(default_factory=frozenset)

    def __post_init__(self) -> None:
        if self.lower.algebra != self.upper.algebra:
            raise AlgebraMismatchError("lower and upper endpoints come from different algebras")
        if len(self.lower) != len(self.upper):
            raise DimensionMismatchError("lower and upper endpoints have different lengths")
        n = len(self.lower)
        object.__setattr__(self, "lower_excluded", _index_set(self.lower_excluded, n))
        object.__setattr__(self, "upper_excluded", _index_set(self.upper_excluded, n))

    @classmethod
    def closed(cls, lower: Vector, upper: Vector) -> QuasiInterval:
        return cls(lower, upper)

    @classmethod
    def full(cls, algebra: Algebra, n: int) -> QuasiInterval:
        """The closed box from the bottom vector to the top vector."""
        return cls(Vector.filled(algebra, n, algebra.bottom), Vector.filled(algebra, n, algebra.top))

    @property
    def algebra(self) -> Algebra:
        return self.lower.algebra

    @property
    def n(self) -> int:
        return len(self.lower)

    @property
    def is_right_closed(self) -> bool:
        return not self.upper_excluded

    def __contains__(self, v: Vector | Sequence[Any]) -> bool:
        return contains(self, v)

    def to_dict(self) -> dict:
        """Serialized form: element literals plus sorted 1-based exclusion lists."""
        return {
            "lower": self.lower.format(),
            "upper": self.upper.format(),
            "lowerExcluded": sorted(self.lower_excluded),
            "upperExcluded": sorted(self.upper_excluded),
        }

    @classmethod
    def from_dict(cls, algebra: Algebra, data: Mapping[str, Any]) -> QuasiInterval:
        return cls(
            Vector(algebra, tuple(data["lower"])),
            Vector(algebra, tuple(data["upper"])),
            frozenset(data.get("lowerExcluded", ())),
            frozenset(data.get("upperExcluded", ())),
        )

    def __str__(self) -> str:
        parts = []
        for k in range(self.n):
            lo = self.algebra.format(self.lower[k])
            hi = self.algebra.format(self.upper[k])
            left = "(" if k + 1 in self.lower_excluded else "["
            right = ")" if k + 1 in self.upper_excluded else "]"
            parts.append(f"{left}{lo}, {hi}{right}")
        return " x ".join(parts)


def _check_pair(q: QuasiInterval, other: QuasiInterval | Vector) -> None:
    if other.algebra != q.algebra:
        raise AlgebraMismatchError(f"cannot combine {q.algebra.descriptor} with {other.algebra.descriptor}")
    if len(other.lower if isinstance(other, QuasiInterval) else other) != q.n:
        raise DimensionMismatchError("quasi-intervals live in spaces of different dimension")


def contains(q: QuasiInterval, v: Vector | Sequence[Any]) -> bool:
    """Membership of ``v`` in ``q``.

    Uses only ``<=`` and equality, so it works for partial orders too.
    """
    v = as_vector(q.algebra, v)
    _check_pair(q, v)
    leq = q.algebra._leq
    lo_x, hi_x = q.lower_excluded, q.upper_excluded
    for k, (lo, x, hi) in enumerate(zip(q.lower.entries, v.entries, q.upper.entries), start=1):
        if not leq(lo, x) or (k in lo_x and x == lo):
            return False
        if not leq(x, hi) or (k in hi_x and x == hi):
            return False
    return True


def _coordinate_empty(alg: Algebra, lo: Any, lo_ex: bool, hi: Any, hi_ex: bool) -> bool:
    if lo > hi:
        return True
    if lo == hi:
        return lo_ex or hi_ex
    if lo_ex and hi_ex:
        return not alg.has_between(lo, hi)
    return False


def is_empty(q: QuasiInterval) -> bool:
    """Whether ``q`` has no points in the carrier."""
    alg = q.algebra
    alg._require_total("is_empty")
    for k, (lo, hi) in enumerate(zip(q.lower.entries, q.upper.entries), start=1):
        if _coordinate_empty(alg, lo, k in q.lower_excluded, hi, k in q.upper_excluded):
            return True
    return False


def intersect(q1: QuasiInterval, q2: QuasiInterval) -> QuasiInterval:
    """Intersection of two quasi-intervals over a total order.

    The lower endpoint of coordinate ``k`` is ``max(p_k, r_k)``; it is excluded
    exactly when the input that attains the max excludes it (either, on a
    tie).  The upper endpoint is handled the same way with ``min``.  The
    result may be empty and is not canonicalized.
    """
    alg = q1.algebra
    alg._require_total("intersect")
    _check_pair(q1, q2)
    p, r = q1.lower.entries, q2.lower.entries
    a, b = q1.lower_excluded, q2.lower_excluded
    lower_excluded = {i for i in a - b if p[i - 1] >= r[i - 1]}
    lower_excluded |= {j for j in b - a if p[j - 1] <= r[j - 1]}
    lower_excluded |= a & b

    q, s = q1.upper.entries, q2.upper.entries
    c, d = q1.upper_excluded, q2.upper_excluded
    upper_excluded = {i for i in c - d if q[i - 1] <= s[i - 1]}
    upper_excluded |= {j for j in d - c if q[j - 1] >= s[j - 1]}
    upper_excluded |= c & d

    return QuasiInterval(
        vec_join(q1.lower, q2.lower),
        vec_meet(q1.upper, q2.upper),
        frozenset(lower_excluded),
        frozenset(upper_excluded),
    )


def _closed_bounds(alg: Algebra, lo: Any, lo_ex: bool, hi: Any, hi_ex: bool) -> tuple:
    # on a discrete chain an open end is the same set as the neighbouring closed end
    if not alg.dense:
        if lo_ex:
            lo, lo_ex = alg.next_up(lo), False
        if hi_ex:
            hi, hi_ex = alg.next_down(hi), False
    return lo, lo_ex, hi, hi_ex


def subsumes(q1: QuasiInterval, q2: QuasiInterval) -> bool:
    """Whether every point of ``q2`` lies in ``q1``, decided per coordinate."""
    alg = q1.algebra
    alg._require_total("subsumes")
    _check_pair(q1, q2)
    if is_empty(q2):
        return True
    if is_empty(q1):
        return False
    for k in range(1, q1.n + 1):
        l1, e1, h1, f1 = _closed_bounds(
            alg, q1.lower[k - 1], k in q1.lower_excluded, q1.upper[k - 1], k in q1.upper_excluded
        )
        l2, e2, h2, f2 = _closed_bounds(
            alg, q2.lower[k - 1], k in q2.lower_excluded, q2.upper[k - 1], k in q2.upper_excluded
        )
        if not (l1 < l2 or (l1 == l2 and (e2 or not e1))):
            return False
        if not (h2 < h1 or (h1 == h2 and (f2 or not f1))):
            return False
    return True


@dataclass(frozen=True)
class SolutionRegion:
    """A finite union of quasi-intervals in V^n."""

    algebra: Algebra
    n: int
    members: tuple[QuasiInterval, ...] = ()

    def __post_init__(self) -> None:
        members = tuple(self.members)
        for q in members:
            if q.algebra != self.algebra:
                raise AlgebraMismatchError("region members must share the region's algebra")
            if q.n != self.n:
                raise DimensionMismatchError(f"region of dimension {self.n} got a member of dimension {q.n}")
        object.__setattr__(self, "members", members)

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[QuasiInterval]:
        return iter(self.members)

    def __contains__(self, v: Vector | Sequence[Any]) -> bool:
        v = as_vector(self.algebra, v)
        return any(contains(q, v) for q in self.members)

    @property
    def is_empty(self) -> bool:
        return all(is_empty(q) for q in self.members)

    def to_list(self) -> list[dict]:
        return [q.to_dict() for q in self.members]

    @classmethod
    def from_list(cls, algebra: Algebra, n: int, data: Iterable[Mapping[str, Any]]) -> SolutionRegion:
        return cls(algebra, n, tuple(QuasiInterval.from_dict(algebra, d) for d in data))

    def __str__(self) -> str:
        if not self.members:
            return "{}"
        return " u ".join("{" + str(q) + "}" for q in self.members)


def canonicalize(region: SolutionRegion) -> SolutionRegion:
    """Drop empty members, then members covered by another member.

    Order is preserved; among members describing the same set the first one
    is kept.
    """
    alive = [q for q in region.members if not is_empty(q)]
    keep = []
    for i, qi in enumerate(alive):
        dominated = False
        for j, qj in enumerate(alive):
            if i == j or not subsumes(qj, qi):
                continue
            if j < i or not subsumes(qi, qj):
                dominated = True
                break
        if not dominated:
            keep.append(qi)
    return SolutionRegion(region.algebra, region.n, tuple(keep))
