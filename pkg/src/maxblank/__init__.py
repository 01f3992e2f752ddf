"""Exact solution spaces of linear systems over max-blank algebras.

Over a totally ordered complete lattice with a join-distributive product
(max-plus, max-min, finite chains, ...) the set of all solutions of
``A v = w`` is a finite union of quasi-intervals: boxes in the product order
whose endpoints may be individually open.  :func:`solve` computes that union
exactly; :mod:`maxblank.oracle` provides brute-force checks against it.

>>> from maxblank import MaxPlus, solve
>>> region = solve([["inf"]], ["inf"], algebra=MaxPlus())
>>> print(region)
{(-inf, inf]}
"""

from .algebra import (
    NEG_INF,
    POS_INF,
    Algebra,
    BooleanChain,
    FiniteChain,
    FiniteChainMinMult,
    MaxMin,
    MaxPlus,
    Ordering,
    PowerSet,
    PowerSetAlgebra,
    ScalarKind,
    ScalarSolution,
    parse_algebra,
)
from .errors import (
    AlgebraMismatchError,
    CarrierNotFiniteError,
    DimensionMismatchError,
    EnumerationTooLargeError,
    LiteralParseError,
    MaxBlankError,
    NotTotallyOrderedError,
    TermBudgetExceededError,
)
from .oracle import (
    SampleGrid,
    StructureReport,
    build_grid,
    check_joinblank_structure,
    enumerate_solutions,
)
from .qinterval import (
    QuasiInterval,
    SolutionRegion,
    canonicalize,
    contains,
    intersect,
    is_empty,
    subsumes,
)
from .solver import (
    RowAnalysis,
    SearchStats,
    analyze_row,
    greatest_solution,
    row_region,
    solve,
    verify,
)
from .tensor import (
    Matrix,
    Vector,
    mat_add,
    mat_mul,
    mat_vec,
    vec_join,
    vec_join_all,
    vec_leq,
    vec_meet,
    vec_meet_all,
)

__version__ = "0.1.0"
