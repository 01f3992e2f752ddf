"""Join-blank and max-blank algebras.

An algebra here is a complete lattice ``(V, <=)`` whose addition is the
lattice join and whose multiplication ``otimes`` distributes over arbitrary
joins, with the lattice minimum as the additive identity and multiplicative
annihilator.  When the order is total the algebra is *max-blank* and join is
simply ``max``.

Elements are plain Python values rather than wrapper objects:

=====================  =========================================  ============
algebra                carrier representation                     descriptor
=====================  =========================================  ============
:class:`MaxPlus`       ``Fraction`` or ``NEG_INF`` / ``POS_INF``  ``max-plus``
:class:`MaxMin`        ``Fraction`` or ``NEG_INF`` / ``POS_INF``  ``max-min``
:class:`BooleanChain`  ``False`` / ``True``                       ``bool``
:class:`FiniteChain`   ``int`` in ``0..N``                        ``chain-min:N``
:class:`PowerSet`      ``frozenset`` of ground-set members        ``powerset:k``
=====================  =========================================  ============

Every totally ordered carrier above is ordered by Python's native comparison
operators, which the interval code relies on.  The public scalar methods
coerce and validate their arguments (raising :class:`AlgebraMismatchError`
for foreign values); the underscore-prefixed variants skip that and are
meant for inner loops over already validated containers.
"""

from __future__ import annotations

import enum
import math
import string
from dataclasses import dataclass
from decimal import Decimal
from fractions import Fraction
from itertools import combinations
from typing import Any, ClassVar, Hashable, Iterable

from .errors import (
    AlgebraMismatchError,
    CarrierNotFiniteError,
    LiteralParseError,
    NotTotallyOrderedError,
)

__all__ = [
    "NEG_INF",
    "POS_INF",
    "Ordering",
    "ScalarKind",
    "ScalarSolution",
    "Algebra",
    "MaxPlus",
    "MaxMin",
    "BooleanChain",
    "FiniteChain",
    "PowerSet",
    "FiniteChainMinMult",
    "PowerSetAlgebra",
    "parse_algebra",
]

NEG_INF = float("-inf")
POS_INF = float("inf")

_NEG_LITERALS = {"-inf", "-infinity", "-∞", "−∞", "bottom"}
_POS_LITERALS = {"inf", "+inf", "infinity", "+infinity", "∞", "+∞", "top"}


class Ordering(enum.IntEnum):
    LT = -1
    EQ = 0
    GT = 1


class ScalarKind(enum.Enum):
    EMPTY = "empty"
    CLOSED = "closed"
    LEFT_OPEN = "left-open"


@dataclass(frozen=True)
class ScalarSolution:
    """Solution set of ``a (x) v = w`` in a totally ordered algebra.

    Only three shapes occur: the empty set, a closed interval ``[lower, upper]``
    and a left-open interval ``(lower, upper]``.  The right endpoint is always
    a member of a non-empty solution set.
    """

    kind: ScalarKind
    lower: Any = None
    upper: Any = None

    def __post_init__(self) -> None:
        if self.kind is ScalarKind.EMPTY:
            if self.lower is not None or self.upper is not None:
                raise ValueError("an empty solution carries no endpoints")
        elif self.kind is ScalarKind.CLOSED:
            if not self.lower <= self.upper:
                raise ValueError(f"closed interval needs lower <= upper, got {self.lower}, {self.upper}")
        elif not self.lower < self.upper:
            raise ValueError(f"left-open interval needs lower < upper, got {self.lower}, {self.upper}")

    @classmethod
    def empty(cls) -> ScalarSolution:
        return cls(ScalarKind.EMPTY)

    @classmethod
    def closed(cls, lower: Any, upper: Any) -> ScalarSolution:
        return cls(ScalarKind.CLOSED, lower, upper)

    @classmethod
    def left_open(cls, lower: Any, upper: Any) -> ScalarSolution:
        return cls(ScalarKind.LEFT_OPEN, lower, upper)

    @property
    def is_empty(self) -> bool:
        return self.kind is ScalarKind.EMPTY

    @property
    def is_left_open(self) -> bool:
        return self.kind is ScalarKind.LEFT_OPEN

    def __contains__(self, v: Any) -> bool:
        if self.kind is ScalarKind.EMPTY:
            return False
        if self.kind is ScalarKind.CLOSED:
            return self.lower <= v <= self.upper
        return self.lower < v <= self.upper


class Algebra:
    """Interface shared by all algebra instances.

    Subclasses are frozen dataclasses, so two instances describing the same
    algebra compare equal and can be used to check that containers match.
    """

    totally_ordered: ClassVar[bool] = True
    finite: ClassVar[bool] = False
    dense: ClassVar[bool] = False

    # -- carrier -----------------------------------------------------------

    @property
    def descriptor(self) -> str:
        raise NotImplementedError

    @property
    def bottom(self) -> Any:
        raise NotImplementedError

    @property
    def top(self) -> Any:
        raise NotImplementedError

    @property
    def one(self) -> Any:
        raise NotImplementedError

    def coerce(self, x: Any) -> Any:
        """Return the canonical carrier value for ``x`` or raise AlgebraMismatchError."""
        raise NotImplementedError

    def parse(self, text: str) -> Any:
        raise NotImplementedError

    def format(self, x: Any) -> str:
        raise NotImplementedError

    def elements(self) -> tuple:
        """All carrier values in ascending order (finite carriers only)."""
        raise CarrierNotFiniteError(f"carrier of {self.descriptor} is not finite")

    def __str__(self) -> str:
        return self.descriptor

    # -- raw operations, no validation --------------------------------------

    def _leq(self, a: Any, b: Any) -> bool:
        return a <= b

    def _join(self, a: Any, b: Any) -> Any:
        return a if a >= b else b

    def _meet(self, a: Any, b: Any) -> Any:
        return a if a <= b else b

    def _otimes(self, a: Any, b: Any) -> Any:
        raise NotImplementedError

    def _residual(self, a: Any, w: Any) -> Any:
        raise NotImplementedError

    def _solve_scalar(self, a: Any, w: Any) -> ScalarSolution:
        raise NotImplementedError

    # -- public operations ---------------------------------------------------

    def _require_total(self, op: str) -> None:
        if not self.totally_ordered:
            raise NotTotallyOrderedError(f"{op} needs a totally ordered algebra, {self.descriptor} is not")

    def leq(self, a: Any, b: Any) -> bool:
        return self._leq(self.coerce(a), self.coerce(b))

    def compare(self, a: Any, b: Any) -> Ordering:
        self._require_total("compare")
        a, b = self.coerce(a), self.coerce(b)
        if a == b:
            return Ordering.EQ
        return Ordering.LT if a < b else Ordering.GT

    def join(self, a: Any, b: Any) -> Any:
        return self._join(self.coerce(a), self.coerce(b))

    def meet(self, a: Any, b: Any) -> Any:
        return self._meet(self.coerce(a), self.coerce(b))

    def otimes(self, a: Any, b: Any) -> Any:
        return self._otimes(self.coerce(a), self.coerce(b))

    def join_all(self, values: Iterable[Any]) -> Any:
        """Supremum of an arbitrary finite family; the empty join is ``bottom``."""
        acc = self.bottom
        for v in values:
            acc = self._join(acc, self.coerce(v))
        return acc

    def meet_all(self, values: Iterable[Any]) -> Any:
        """Infimum of a finite family; the empty meet is ``top``."""
        acc = self.top
        for v in values:
            acc = self._meet(acc, self.coerce(v))
        return acc

    def solve_scalar(self, a: Any, w: Any) -> ScalarSolution:
        """Exact solution set of ``a (x) v = w`` over the carrier."""
        self._require_total("solve_scalar")
        return self._solve_scalar(self.coerce(a), self.coerce(w))

    def residual(self, a: Any, w: Any) -> Any:
        """Largest ``v`` with ``a (x) v <= w``.

        Always exists: ``bottom`` satisfies the inequality and the carrier is
        a complete lattice on which ``a (x) -`` preserves joins.
        """
        self._require_total("residual")
        return self._residual(self.coerce(a), self.coerce(w))

    def has_between(self, a: Any, b: Any) -> bool:
        """Whether some carrier value lies strictly between ``a`` and ``b``."""
        raise NotImplementedError

    def next_up(self, a: Any) -> Any:
        """Immediate successor on a discrete chain (``a`` must not be ``top``)."""
        raise NotImplementedError

    def next_down(self, a: Any) -> Any:
        raise NotImplementedError


# ---------------------------------------------------------------------------
# extended rationals
# ---------------------------------------------------------------------------


class _ExtendedRationals(Algebra):
    dense: ClassVar[bool] = True

    @property
    def bottom(self) -> Any:
        return NEG_INF

    @property
    def top(self) -> Any:
        return POS_INF

    def coerce(self, x: Any) -> Any:
        if isinstance(x, Fraction):
            return x
        if isinstance(x, bool):
            raise AlgebraMismatchError(f"boolean {x!r} is not an element of {self.descriptor}")
        if isinstance(x, int):
            return Fraction(x)
        if isinstance(x, float):
            if math.isnan(x):
                raise AlgebraMismatchError("NaN is not an element of the extended rationals")
            if math.isinf(x):
                return POS_INF if x > 0 else NEG_INF
            return Fraction(x)
        if isinstance(x, Decimal):
            if x.is_nan():
                raise AlgebraMismatchError("NaN is not an element of the extended rationals")
            if x.is_infinite():
                return POS_INF if x > 0 else NEG_INF
            return Fraction(x)
        if isinstance(x, str):
            return self.parse(x)
        raise AlgebraMismatchError(f"{x!r} is not an element of {self.descriptor}")

    def parse(self, text: str) -> Any:
        t = text.strip().lower()
        if t in _NEG_LITERALS:
            return NEG_INF
        if t in _POS_LITERALS:
            return POS_INF
        try:
            return Fraction(t)
        except (ValueError, ZeroDivisionError):
            raise LiteralParseError(f"not an extended rational literal: {text!r}") from None

    def format(self, x: Any) -> str:
        if x == NEG_INF:
            return "-inf"
        if x == POS_INF:
            return "inf"
        return str(x)

    def has_between(self, a: Any, b: Any) -> bool:
        return a < b


@dataclass(frozen=True)
class MaxPlus(_ExtendedRationals):
    """``(Q u {-inf, inf}, max, +, -inf, 0)``.

    ``-inf`` annihilates even against ``inf``; any other sum involving
    ``inf`` is ``inf``.
    """

    @property
    def descriptor(self) -> str:
        return "max-plus"

    @property
    def one(self) -> Any:
        return Fraction(0)

    def _otimes(self, a: Any, b: Any) -> Any:
        if a == NEG_INF or b == NEG_INF:
            return NEG_INF
        if a == POS_INF or b == POS_INF:
            return POS_INF
        return a + b

    def _residual(self, a: Any, w: Any) -> Any:
        if a == NEG_INF or w == POS_INF:
            return POS_INF
        if a == POS_INF or w == NEG_INF:
            return NEG_INF
        return w - a

    def _solve_scalar(self, a: Any, w: Any) -> ScalarSolution:
        q = self._residual(a, w)
        if self._otimes(a, q) != w:
            return ScalarSolution.empty()
        if a == NEG_INF:
            # w == -inf here, every v works
            return ScalarSolution.closed(NEG_INF, POS_INF)
        if a == POS_INF and w == POS_INF:
            # inf (x) v = inf for every v except -inf
            return ScalarSolution.left_open(NEG_INF, POS_INF)
        return ScalarSolution.closed(q, q)


class _MinTimes(Algebra):
    """Chains whose product is ``min``: the top is the unit."""

    @property
    def one(self) -> Any:
        return self.top

    def _otimes(self, a: Any, b: Any) -> Any:
        return a if a <= b else b

    def _residual(self, a: Any, w: Any) -> Any:
        # min(a, v) <= w holds for all v once a <= w, otherwise forces v <= w
        return self.top if a <= w else w

    def _solve_scalar(self, a: Any, w: Any) -> ScalarSolution:
        if w < a:
            return ScalarSolution.closed(w, w)
        if w == a:
            return ScalarSolution.closed(a, self.top)
        return ScalarSolution.empty()


@dataclass(frozen=True)
class MaxMin(_MinTimes, _ExtendedRationals):
    """``(Q u {-inf, inf}, max, min, -inf, inf)``."""

    @property
    def descriptor(self) -> str:
        return "max-min"


class _DiscreteChain(_MinTimes):
    finite: ClassVar[bool] = True

    def has_between(self, a: Any, b: Any) -> bool:
        return int(b) - int(a) >= 2


@dataclass(frozen=True)
class BooleanChain(_DiscreteChain):
    """``({False, True}, or, and, False, True)``."""

    @property
    def descriptor(self) -> str:
        return "bool"

    @property
    def bottom(self) -> Any:
        return False

    @property
    def top(self) -> Any:
        return True

    def coerce(self, x: Any) -> Any:
        if isinstance(x, bool):
            return x
        if isinstance(x, int) and x in (0, 1):
            return bool(x)
        if isinstance(x, str):
            return self.parse(x)
        raise AlgebraMismatchError(f"{x!r} is not an element of bool")

    def parse(self, text: str) -> Any:
        t = text.strip().lower()
        if t in ("0", "false", "f"):
            return False
        if t in ("1", "true", "t"):
            return True
        raise LiteralParseError(f"not a boolean literal: {text!r}")

    def format(self, x: Any) -> str:
        return "1" if x else "0"

    def elements(self) -> tuple:
        return (False, True)

    def next_up(self, a: Any) -> Any:
        return True

    def next_down(self, a: Any) -> Any:
        return False


@dataclass(frozen=True)
class FiniteChain(_DiscreteChain):
    """The chain ``0 < 1 < ... < size`` with ``max`` and ``min``."""

    size: int

    def __post_init__(self) -> None:
        if isinstance(self.size, bool) or not isinstance(self.size, int) or self.size < 1:
            raise ValueError(f"chain size must be a positive integer, got {self.size!r}")

    @property
    def descriptor(self) -> str:
        return f"chain-min:{self.size}"

    @property
    def bottom(self) -> Any:
        return 0

    @property
    def top(self) -> Any:
        return self.size

    def coerce(self, x: Any) -> Any:
        if isinstance(x, str):
            return self.parse(x)
        if isinstance(x, bool) or not isinstance(x, int) or not 0 <= x <= self.size:
            raise AlgebraMismatchError(f"{x!r} is not an element of {self.descriptor}")
        return x

    def parse(self, text: str) -> Any:
        t = text.strip().lower()
        if t in _NEG_LITERALS:
            return 0
        if t in _POS_LITERALS:
            return self.size
        try:
            v = int(t)
        except ValueError:
            raise LiteralParseError(f"not a chain index: {text!r}") from None
        if not 0 <= v <= self.size:
            raise LiteralParseError(f"chain index {v} outside 0..{self.size}")
        return v

    def format(self, x: Any) -> str:
        return str(x)

    def elements(self) -> tuple:
        return tuple(range(self.size + 1))

    def next_up(self, a: Any) -> Any:
        return a + 1

    def next_down(self, a: Any) -> Any:
        return a - 1


@dataclass(frozen=True)
class PowerSet(Algebra):
    """``(P(S), union, intersection, {}, S)`` over a finite ground set.

    Only partially ordered, so it supports the lattice and semiring operations
    but rejects ``compare``, ``solve_scalar`` and ``residual``.
    """

    ground: frozenset

    totally_ordered: ClassVar[bool] = False
    finite: ClassVar[bool] = True

    def __post_init__(self) -> None:
        object.__setattr__(self, "ground", frozenset(self.ground))

    @classmethod
    def of_size(cls, k: int) -> PowerSet:
        """Power set of the first ``k`` lowercase letters."""
        if not 0 <= k <= 26:
            raise ValueError(f"ground set size must be in 0..26, got {k}")
        return cls(frozenset(string.ascii_lowercase[:k]))

    @property
    def descriptor(self) -> str:
        if self.ground == frozenset(string.ascii_lowercase[: len(self.ground)]):
            return f"powerset:{len(self.ground)}"
        return "powerset:{" + ",".join(self._sorted(self.ground)) + "}"

    @staticmethod
    def _sorted(s: Iterable[Hashable]) -> list[str]:
        return sorted(str(x) for x in s)

    @property
    def bottom(self) -> Any:
        return frozenset()

    @property
    def top(self) -> Any:
        return self.ground

    @property
    def one(self) -> Any:
        return self.ground

    def coerce(self, x: Any) -> Any:
        if isinstance(x, str):
            return self.parse(x)
        if isinstance(x, (set, frozenset, list, tuple)):
            s = frozenset(x)
            if s <= self.ground:
                return s
        raise AlgebraMismatchError(f"{x!r} is not an element of {self.descriptor}")

    def parse(self, text: str) -> Any:
        t = text.strip()
        if t.startswith("{") and t.endswith("}"):
            t = t[1:-1]
        by_name = {str(g): g for g in self.ground}
        out = set()
        for part in t.split(","):
            part = part.strip()
            if not part:
                continue
            if part not in by_name:
                raise LiteralParseError(f"{part!r} is not in the ground set of {self.descriptor}")
            out.add(by_name[part])
        return frozenset(out)

    def format(self, x: Any) -> str:
        return "{" + ",".join(self._sorted(x)) + "}"

    def elements(self) -> tuple:
        items = sorted(self.ground, key=str)
        return tuple(frozenset(c) for r in range(len(items) + 1) for c in combinations(items, r))

    def _leq(self, a: Any, b: Any) -> bool:
        return a <= b

    def _join(self, a: Any, b: Any) -> Any:
        return a | b

    def _meet(self, a: Any, b: Any) -> Any:
        return a & b

    def _otimes(self, a: Any, b: Any) -> Any:
        return a & b


_SIMPLE = {"max-plus": MaxPlus, "max-min": MaxMin, "bool": BooleanChain}


# longer names for the same classes
FiniteChainMinMult = FiniteChain
PowerSetAlgebra = PowerSet


def parse_algebra(descriptor: str) -> Algebra:
    """Build an algebra from its textual name.

    >>> parse_algebra("chain-min:3")
    FiniteChain(size=3)
    """
    d = descriptor.strip().lower()
    if d in _SIMPLE:
        return _SIMPLE[d]()
    name, sep, arg = d.partition(":")
    if sep and name in ("chain-min", "powerset"):
        try:
            k = int(arg)
        except ValueError:
            raise LiteralParseError(f"bad size in algebra descriptor {descriptor!r}") from None
        try:
            return FiniteChain(k) if name == "chain-min" else PowerSet.of_size(k)
        except ValueError as exc:
            raise LiteralParseError(str(exc)) from None
    raise LiteralParseError(f"unknown algebra {descriptor!r}")
