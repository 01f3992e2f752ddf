"""Command-line front end.

System files are JSON with string element literals::

    {"algebra": "max-plus", "A": [["inf"]], "w": ["inf"]}

Exit codes: 0 success, 2 unreadable or malformed input, 3 dimension or
algebra error, 4 term budget exceeded, 5 oracle/check disagreement,
6 carrier not enumerable (infinite or over the enumeration limit).
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path
from typing import Any, Sequence

from .algebra import Algebra, parse_algebra
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
from .oracle import DEFAULT_LIMIT, check_joinblank_structure, enumerate_solutions, iter_carrier_vectors
from .qinterval import SolutionRegion
from .solver import DEFAULT_BUDGET, SearchStats, greatest_solution, solve, verify
from .tensor import Matrix, Vector

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_DIMENSION = 3
EXIT_BUDGET = 4
EXIT_DISAGREE = 5
EXIT_NOT_FINITE = 6


class InputError(Exception):
    """Malformed system file or literal; maps to exit code 2."""


def _literal(x: Any) -> Any:
    if isinstance(x, (dict, type(None))) or isinstance(x, bool):
        raise InputError(f"element literals must be strings or numbers, got {x!r}")
    return x


def load_system(data: dict, algebra: str | None = None) -> tuple[Algebra, Matrix, Vector]:
    """Build ``(algebra, A, w)`` from a parsed system document."""
    if not isinstance(data, dict):
        raise InputError("system file must hold a JSON object")
    descriptor = algebra or data.get("algebra")
    if not descriptor:
        raise InputError("no algebra given in the file or on the command line")
    try:
        alg = parse_algebra(descriptor)
    except LiteralParseError as exc:
        raise InputError(str(exc)) from None
    A, w = data.get("A"), data.get("w")
    if not isinstance(A, list) or not all(isinstance(r, list) for r in A):
        raise InputError("'A' must be an array of arrays")
    if not isinstance(w, list):
        raise InputError("'w' must be an array")
    if not A or not A[0] or not w:
        raise InputError("empty systems (m = 0 or n = 0) are not accepted")
    try:
        matrix = Matrix(alg, tuple(tuple(_literal(x) for x in row) for row in A))
        rhs = Vector(alg, tuple(_literal(x) for x in w))
    except (LiteralParseError, AlgebraMismatchError) as exc:
        raise InputError(str(exc)) from None
    if len(rhs) != matrix.shape[0]:
        raise DimensionMismatchError(f"A has {matrix.shape[0]} rows but w has {len(rhs)} entries")
    return alg, matrix, rhs


def read_system(path: str, algebra: str | None = None) -> tuple[Algebra, Matrix, Vector]:
    try:
        text = Path(path).read_text() if path != "-" else sys.stdin.read()
        data = json.loads(text)
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError(f"cannot read {path}: {exc}") from None
    return load_system(data, algebra)


def parse_vector(alg: Algebra, text: str) -> Vector:
    """A vector literal: a JSON array, or comma-separated literals."""
    try:
        items = json.loads(text)
    except json.JSONDecodeError:
        items = [t for t in text.strip().strip("[]").split(",") if t.strip()]
    if not isinstance(items, list):
        items = [items]
    if not items:
        raise InputError("empty vector literal")
    try:
        return Vector(alg, tuple(_literal(x) if not isinstance(x, str) else x for x in items))
    except (LiteralParseError, AlgebraMismatchError) as exc:
        raise InputError(str(exc)) from None


def region_report(
    alg: Algebra,
    A: Matrix,
    w: Vector,
    region: SolutionRegion,
    greatest: Vector | None,
    *,
    canonical: bool,
    stats: SearchStats | None = None,
    seconds: float | None = None,
) -> dict:
    report = {
        "algebra": alg.descriptor,
        "A": A.format(),
        "w": w.format(),
        "members": region.to_list(),
        "greatest": greatest.format() if greatest is not None else None,
        "canonical": canonical,
    }
    if stats is not None:
        report["stats"] = {
            "choiceFunctions": stats.choices,
            "explored": stats.nodes,
            "pruned": stats.pruned,
            "leaves": stats.leaves,
            "wallTimeSeconds": seconds,
        }
    return report


def _emit(obj: Any) -> None:
    print(json.dumps(obj, indent=2))


def cmd_solve(args: argparse.Namespace) -> int:
    alg, A, w = read_system(args.input, args.algebra)
    stats = SearchStats()
    t0 = time.perf_counter()
    region = solve(A, w, canonical=not args.raw, budget=args.budget, threads=args.threads, stats=stats)
    greatest = greatest_solution(A, w)
    elapsed = time.perf_counter() - t0
    _emit(
        region_report(
            alg,
            A,
            w,
            region,
            greatest,
            canonical=not args.raw,
            stats=None if args.deterministic else stats,
            seconds=elapsed,
        )
    )
    return EXIT_OK


def cmd_check(args: argparse.Namespace) -> int:
    alg, A, w = read_system(args.input, args.algebra)
    v = parse_vector(alg, args.vector)
    if len(v) != A.shape[1]:
        raise DimensionMismatchError(f"vector of length {len(v)} for a system with {A.shape[1]} unknowns")
    region = solve(A, w, canonical=not args.raw, budget=args.budget, threads=args.threads)
    satisfies = verify(A, w, v)
    contained = v in region
    print(f"satisfies Av=w: {str(satisfies).lower()}")
    print(f"contained in computed region: {str(contained).lower()}")
    return EXIT_OK if satisfies == contained else EXIT_DISAGREE


def cmd_oracle(args: argparse.Namespace) -> int:
    alg, A, w = read_system(args.input, args.algebra)
    if not alg.finite:
        raise CarrierNotFiniteError(f"{alg.descriptor} has an infinite carrier")
    n = A.shape[1]
    expected = enumerate_solutions(A, w, limit=args.limit)
    if not alg.totally_ordered:
        report = check_joinblank_structure(expected, alg, n, limit=args.limit)
        _emit(
            {
                "algebra": alg.descriptor,
                "solutions": len(expected),
                "structure": "pass" if report.passed else "fail",
                "terminal": report.terminal.format() if report.terminal is not None else None,
                "reason": report.reason,
                "counterexample": [v.format() for v in report.counterexample],
            }
        )
        return EXIT_OK if report.passed else EXIT_DISAGREE

    region = solve(A, w, canonical=not args.raw, budget=args.budget, threads=args.threads)
    checked = 0
    for v in iter_carrier_vectors(alg, n, args.limit):
        checked += 1
        if (v in region) != (v in expected):
            _emit(
                {
                    "algebra": alg.descriptor,
                    "agree": False,
                    "counterexample": v.format(),
                    "inRegion": v in region,
                    "isSolution": v in expected,
                }
            )
            return EXIT_DISAGREE
    _emit(
        {
            "algebra": alg.descriptor,
            "agree": True,
            "checked": checked,
            "solutions": len(expected),
            "members": len(region),
        }
    )
    return EXIT_OK


def cmd_bench(args: argparse.Namespace) -> int:
    alg, A, w = read_system(args.input, args.algebra)
    times = []
    stats = SearchStats()
    for _ in range(args.repeat):
        stats = SearchStats()
        t0 = time.perf_counter()
        region = solve(A, w, canonical=not args.raw, budget=args.budget, threads=args.threads, stats=stats)
        times.append(time.perf_counter() - t0)
    times.sort()
    _emit(
        {
            "algebra": alg.descriptor,
            "shape": list(A.shape),
            "repeat": args.repeat,
            "members": len(region),
            "choiceFunctions": stats.choices,
            "explored": stats.nodes,
            "pruned": stats.pruned,
            "minSeconds": times[0],
            "medianSeconds": times[len(times) // 2],
            "maxSeconds": times[-1],
        }
    )
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="maxblank", description="Solution spaces of linear systems over max-blank algebras."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("input", help="system file (JSON), or - for stdin")
    common.add_argument("--algebra", help="override the file's algebra descriptor")
    common.add_argument("--raw", action="store_true", help="skip canonicalization of the union")
    common.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="cap on choice functions")
    common.add_argument("--threads", type=int, default=1, help="parallel search threads")

    p = sub.add_parser("solve", parents=[common], help="print the solution region as JSON")
    p.add_argument("--deterministic", action="store_true", help="omit the timing/statistics block")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("check", parents=[common], help="test one vector against the system and the region")
    p.add_argument("vector", help='vector literal, e.g. \'["-inf"]\' or 2,3')
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("oracle", parents=[common], help="compare the region with exhaustive enumeration")
    p.add_argument("--limit", type=int, default=DEFAULT_LIMIT, help="maximum vectors to enumerate")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("bench", parents=[common], help="time the solver on a system file")
    p.add_argument("--repeat", type=int, default=20)
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (DimensionMismatchError, AlgebraMismatchError, NotTotallyOrderedError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DIMENSION
    except TermBudgetExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (CarrierNotFiniteError, EnumerationTooLargeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NOT_FINITE
    except MaxBlankError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
