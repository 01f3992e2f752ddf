"""Dense vectors and matrices over an algebra, with the product order on V^n.

Containers validate their entries once on construction, so the arithmetic
below runs on raw carrier values.  Python indexing (``v[k]``, ``A[i, j]``) is
0-based as usual; every place where the package talks about coordinates as
*data* (exclusion sets, row numbers, choice functions, serialized output) uses
1-based indices.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Iterable, Iterator, Sequence

from .algebra import Algebra
from .errors import AlgebraMismatchError, DimensionMismatchError

__all__ = [
    "Vector",
    "Matrix",
    "mat_vec",
    "mat_add",
    "mat_mul",
    "vec_leq",
    "vec_join",
    "vec_meet",
    "vec_join_all",
    "vec_meet_all",
]


@dataclass(frozen=True)
class Vector:
    algebra: Algebra
    entries: tuple

    def __post_init__(self) -> None:
        entries = tuple(self.algebra.coerce(x) for x in self.entries)
        if not entries:
            raise DimensionMismatchError("vectors need at least one coordinate")
        object.__setattr__(self, "entries", entries)

    @classmethod
    def _trusted(cls, algebra: Algebra, entries: tuple) -> Vector:
        # entries already canonical: skip coercion
        v = object.__new__(cls)
        object.__setattr__(v, "algebra", algebra)
        object.__setattr__(v, "entries", entries)
        return v

    @classmethod
    def filled(cls, algebra: Algebra, n: int, value: Any) -> Vector:
        return cls(algebra, (value,) * n)

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self) -> Iterator[Any]:
        return iter(self.entries)

    def __getitem__(self, k: int) -> Any:
        return self.entries[k]

    def __le__(self, other: Vector) -> bool:
        return vec_leq(self, other)

    def __or__(self, other: Vector) -> Vector:
        return vec_join(self, other)

    def __and__(self, other: Vector) -> Vector:
        return vec_meet(self, other)

    def replace(self, k: int, value: Any) -> Vector:
        """Copy with the 0-based coordinate ``k`` set to ``value``."""
        entries = list(self.entries)
        entries[k] = self.algebra.coerce(value)
        return Vector._trusted(self.algebra, tuple(entries))

    def format(self) -> list[str]:
        return [self.algebra.format(x) for x in self.entries]

    def __repr__(self) -> str:
        return f"Vector[{self.algebra.descriptor}]({', '.join(self.format())})"


@dataclass(frozen=True)
class Matrix:
    algebra: Algebra
    rows: tuple

    def __post_init__(self) -> None:
        rows = tuple(tuple(self.algebra.coerce(x) for x in row) for row in self.rows)
        if not rows or not rows[0]:
            raise DimensionMismatchError("matrices need at least one row and one column")
        if any(len(r) != len(rows[0]) for r in rows):
            raise DimensionMismatchError("matrix rows have different lengths")
        object.__setattr__(self, "rows", rows)

    @classmethod
    def _trusted(cls, algebra: Algebra, rows: tuple) -> Matrix:
        a = object.__new__(cls)
        object.__setattr__(a, "algebra", algebra)
        object.__setattr__(a, "rows", rows)
        return a

    @classmethod
    def identity(cls, algebra: Algebra, n: int) -> Matrix:
        one, zero = algebra.one, algebra.bottom
        return cls._trusted(algebra, tuple(tuple(one if i == j else zero for j in range(n)) for i in range(n)))

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.rows), len(self.rows[0])

    def __getitem__(self, ij: tuple[int, int]) -> Any:
        i, j = ij
        return self.rows[i][j]

    def row(self, i: int) -> tuple:
        return self.rows[i]

    def format(self) -> list[list[str]]:
        return [[self.algebra.format(x) for x in row] for row in self.rows]

    def __repr__(self) -> str:
        body = "; ".join(", ".join(r) for r in self.format())
        return f"Matrix[{self.algebra.descriptor}]({body})"


def _same_algebra(*items: Vector | Matrix) -> Algebra:
    alg = items[0].algebra
    for it in items[1:]:
        if it.algebra != alg:
            raise AlgebraMismatchError(f"cannot combine {alg.descriptor} with {it.algebra.descriptor}")
    return alg


def _same_length(u: Vector, v: Vector) -> None:
    if len(u) != len(v):
        raise DimensionMismatchError(f"vector lengths differ: {len(u)} vs {len(v)}")


def mat_vec(A: Matrix, v: Vector) -> Vector:
    """``(A v)(i) = join_k A(i,k) (x) v(k)``."""
    alg = _same_algebra(A, v)
    m, n = A.shape
    if len(v) != n:
        raise DimensionMismatchError(f"{m}x{n} matrix times vector of length {len(v)}")
    join, otimes = alg._join, alg._otimes
    out = []
    for row in A.rows:
        acc = alg.bottom
        for a, x in zip(row, v.entries):
            acc = join(acc, otimes(a, x))
        out.append(acc)
    return Vector._trusted(alg, tuple(out))


def mat_add(A: Matrix, B: Matrix) -> Matrix:
    alg = _same_algebra(A, B)
    if A.shape != B.shape:
        raise DimensionMismatchError(f"cannot add {A.shape} and {B.shape} matrices")
    join = alg._join
    return Matrix._trusted(alg, tuple(tuple(join(a, b) for a, b in zip(ra, rb)) for ra, rb in zip(A.rows, B.rows)))


def mat_mul(A: Matrix, B: Matrix) -> Matrix:
    alg = _same_algebra(A, B)
    (m, n), (n2, p) = A.shape, B.shape
    if n != n2:
        raise DimensionMismatchError(f"cannot multiply {m}x{n} by {n2}x{p}")
    join, otimes = alg._join, alg._otimes
    rows = []
    for i in range(m):
        row = []
        for j in range(p):
            acc = alg.bottom
            for k in range(n):
                acc = join(acc, otimes(A.rows[i][k], B.rows[k][j]))
            row.append(acc)
        rows.append(tuple(row))
    return Matrix._trusted(alg, tuple(rows))


def vec_leq(u: Vector, v: Vector) -> bool:
    """Product order: ``u(i) <= v(i)`` for every coordinate."""
    alg = _same_algebra(u, v)
    _same_length(u, v)
    leq = alg._leq
    return all(leq(a, b) for a, b in zip(u.entries, v.entries))


def vec_join(u: Vector, v: Vector) -> Vector:
    alg = _same_algebra(u, v)
    _same_length(u, v)
    join = alg._join
    return Vector._trusted(alg, tuple(join(a, b) for a, b in zip(u.entries, v.entries)))


def vec_meet(u: Vector, v: Vector) -> Vector:
    alg = _same_algebra(u, v)
    _same_length(u, v)
    meet = alg._meet
    return Vector._trusted(alg, tuple(meet(a, b) for a, b in zip(u.entries, v.entries)))


def vec_join_all(vectors: Iterable[Vector], algebra: Algebra | None = None, n: int | None = None) -> Vector:
    """Componentwise supremum of a family.

    The empty family needs ``algebra`` and ``n`` and yields the bottom vector.
    """
    return _fold(vectors, vec_join, "bottom", algebra, n)


def vec_meet_all(vectors: Iterable[Vector], algebra: Algebra | None = None, n: int | None = None) -> Vector:
    return _fold(vectors, vec_meet, "top", algebra, n)


def _fold(vectors, op, unit: str, algebra, n) -> Vector:
    acc = None
    for v in vectors:
        acc = v if acc is None else op(acc, v)
    if acc is None:
        if algebra is None or n is None:
            raise ValueError("empty family needs an explicit algebra and dimension")
        return Vector.filled(algebra, n, getattr(algebra, unit))
    return acc


def as_vector(algebra: Algebra, values: Sequence[Any] | Vector) -> Vector:
    if isinstance(values, Vector):
        if values.algebra != algebra:
            raise AlgebraMismatchError(f"expected a {algebra.descriptor} vector, got {values.algebra.descriptor}")
        return values
    return Vector(algebra, tuple(values))


def as_matrix(algebra: Algebra, rows: Sequence[Sequence[Any]] | Matrix) -> Matrix:
    if isinstance(rows, Matrix):
        if rows.algebra != algebra:
            raise AlgebraMismatchError(f"expected a {algebra.descriptor} matrix, got {rows.algebra.descriptor}")
        return rows
    return Matrix(algebra, tuple(tuple(r) for r in rows))
