import itertools
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from maxblank import (
    NEG_INF,
    POS_INF,
    AlgebraMismatchError,
    BooleanChain,
    CarrierNotFiniteError,
    FiniteChain,
    LiteralParseError,
    MaxMin,
    MaxPlus,
    NotTotallyOrderedError,
    Ordering,
    PowerSet,
    ScalarKind,
    ScalarSolution,
    parse_algebra,
)

from _util import FINITE_TOTAL, TOTAL_ALGEBRAS, dense_probe_values, rational_sample, sample_element

MP, MM = MaxPlus(), MaxMin()
C3 = FiniteChain(3)

ext_rationals = st.one_of(
    st.just(NEG_INF),
    st.just(POS_INF),
    st.fractions(min_value=-50, max_value=50, max_denominator=12),
)


def exhaust_scalar(alg, a, w):
    return [v for v in alg.elements() if alg.otimes(a, v) == w]


def exhaust_residual(alg, a, w):
    return max(v for v in alg.elements() if alg.leq(alg.otimes(a, v), w))


# -- examples -----------------------------------------------------------------


def test_compare_examples():
    assert MP.compare(NEG_INF, 0) is Ordering.LT
    assert MP.compare(3, 3) is Ordering.EQ
    assert C3.compare(2, 3) is Ordering.LT
    assert MP.compare(POS_INF, "7/2") is Ordering.GT


def test_join_meet_examples():
    assert MP.join(2, 5) == 5
    assert PowerSet.of_size(3).join({"a"}, {"b"}) == frozenset("ab")
    assert MM.meet(POS_INF, 1) == 1
    assert PowerSet.of_size(3).meet({"a", "b"}, {"b", "c"}) == frozenset("b")


def test_otimes_examples():
    assert MP.otimes(POS_INF, NEG_INF) == NEG_INF
    assert MP.otimes(NEG_INF, POS_INF) == NEG_INF
    assert MP.otimes(2, 3) == 5
    assert MP.otimes(POS_INF, -7) == POS_INF
    assert MM.otimes(2, 7) == 2
    assert BooleanChain().otimes(True, False) is False
    assert PowerSet.of_size(2).otimes({"a", "b"}, {"a"}) == frozenset("a")


def test_solve_scalar_examples():
    assert MP.solve_scalar(POS_INF, POS_INF) == ScalarSolution.left_open(NEG_INF, POS_INF)
    assert MP.solve_scalar(0, 5) == ScalarSolution.closed(5, 5)
    assert MP.solve_scalar(NEG_INF, 5) == ScalarSolution.empty()
    assert MM.solve_scalar(3, 3) == ScalarSolution.closed(3, POS_INF)


def test_chain_scalar_example_by_exhaustion():
    # min(2, v) <= 2 for every v in 0..3, so 3 is never reached
    assert exhaust_scalar(C3, 2, 3) == []
    assert C3.solve_scalar(2, 3).is_empty


def test_residual_examples():
    assert MP.residual(3, 7) == 4
    assert MP.residual(NEG_INF, 5) == POS_INF
    assert exhaust_residual(C3, 3, 2) == 2
    assert C3.residual(3, 2) == 2


def test_scalar_solution_invariants():
    with pytest.raises(ValueError):
        ScalarSolution.closed(3, 2)
    with pytest.raises(ValueError):
        ScalarSolution.left_open(2, 2)
    s = ScalarSolution.left_open(NEG_INF, POS_INF)
    assert NEG_INF not in s and POS_INF in s and Fraction(-10**9) in s


# -- errors -------------------------------------------------------------------


def test_powerset_rejects_total_order_operations():
    P = PowerSet.of_size(2)
    assert P.leq({"a"}, {"a", "b"})
    assert not P.leq({"a"}, {"b"})
    for op in (P.compare, P.solve_scalar, P.residual):
        with pytest.raises(NotTotallyOrderedError):
            op({"a"}, {"b"})


@pytest.mark.parametrize(
    "alg, bad",
    [
        (MP, frozenset()),
        (MP, True),
        (MP, float("nan")),
        (C3, 4),
        (C3, -1),
        (C3, Fraction(1, 2)),
        (BooleanChain(), 2),
        (PowerSet.of_size(2), {"z"}),
        (PowerSet.of_size(2), 3),
    ],
)
def test_foreign_values_raise_mismatch(alg, bad):
    with pytest.raises(AlgebraMismatchError):
        alg.otimes(bad, alg.one)


def test_dense_carrier_is_not_enumerable():
    with pytest.raises(CarrierNotFiniteError):
        MP.elements()


# -- literals and descriptors ------------------------------------------------


@pytest.mark.parametrize(
    "text, value",
    [("-inf", NEG_INF), ("inf", POS_INF), ("3", Fraction(3)), ("1/2", Fraction(1, 2)), ("-0.25", Fraction(-1, 4))],
)
def test_rational_literals(text, value):
    assert MP.parse(text) == value
    assert MP.parse(MP.format(value)) == value


def test_bad_literals():
    for alg, text in [(MP, "abc"), (MP, "1/0"), (C3, "7"), (C3, "x"), (BooleanChain(), "2"), (PowerSet.of_size(2), "{q}")]:
        with pytest.raises(LiteralParseError):
            alg.parse(text)


def test_powerset_literals_round_trip():
    P = PowerSet.of_size(3)
    for s in P.elements():
        assert P.parse(P.format(s)) == s
    assert P.parse("{}") == frozenset()
    assert P.parse("a, c") == frozenset("ac")


@pytest.mark.parametrize(
    "descriptor, alg",
    [
        ("max-plus", MaxPlus()),
        ("max-min", MaxMin()),
        ("bool", BooleanChain()),
        ("chain-min:3", FiniteChain(3)),
        ("powerset:2", PowerSet.of_size(2)),
    ],
)
def test_parse_algebra(descriptor, alg):
    assert parse_algebra(descriptor) == alg
    assert alg.descriptor == descriptor


@pytest.mark.parametrize("descriptor", ["min-plus", "chain-min:0", "chain-min:x", "powerset:-1", ""])
def test_parse_algebra_rejects(descriptor):
    with pytest.raises(LiteralParseError):
        parse_algebra(descriptor)


# -- laws on finite carriers, exhaustively -----------------------------------


FINITE_ALL = FINITE_TOTAL + [PowerSet.of_size(2), PowerSet.of_size(3)]


@pytest.mark.parametrize("alg", FINITE_ALL, ids=str)
def test_semiring_laws_exhaustive(alg):
    V = alg.elements()
    for a in V:
        assert alg.otimes(alg.one, a) == a == alg.otimes(a, alg.one)
        assert alg.otimes(alg.bottom, a) == alg.bottom == alg.otimes(a, alg.bottom)
        assert alg.join(alg.bottom, a) == a
    for a, b in itertools.product(V, repeat=2):
        assert alg.join(a, b) == alg.join(b, a)
    for a, b, c in itertools.product(V, repeat=3):
        assert alg.join(alg.join(a, b), c) == alg.join(a, alg.join(b, c))
        assert alg.otimes(alg.otimes(a, b), c) == alg.otimes(a, alg.otimes(b, c))
        assert alg.otimes(a, alg.join(b, c)) == alg.join(alg.otimes(a, b), alg.otimes(a, c))
        assert alg.otimes(alg.join(b, c), a) == alg.join(alg.otimes(b, a), alg.otimes(c, a))


@pytest.mark.parametrize("alg", FINITE_ALL, ids=str)
def test_otimes_monotone_exhaustive(alg):
    V = alg.elements()
    for a, u, v in itertools.product(V, repeat=3):
        if alg.leq(u, v):
            assert alg.leq(alg.otimes(a, u), alg.otimes(a, v))
            assert alg.leq(alg.otimes(u, a), alg.otimes(v, a))


@pytest.mark.parametrize(
    "alg", [BooleanChain(), FiniteChain(2), FiniteChain(3), PowerSet.of_size(2)], ids=str
)
def test_infinite_distributivity_over_all_subsets(alg):
    V = alg.elements()
    assert len(V) <= 4
    subsets = [U for r in range(len(V) + 1) for U in itertools.combinations(V, r)]
    for v in V:
        for U in subsets:
            lhs = alg.otimes(v, alg.join_all(U))
            rhs = alg.join_all(alg.otimes(v, u) for u in U)
            assert lhs == rhs


@pytest.mark.parametrize("alg", FINITE_TOTAL, ids=str)
def test_galois_and_scalar_soundness_exhaustive(alg):
    V = alg.elements()
    for a, w in itertools.product(V, repeat=2):
        q = alg.residual(a, w)
        assert q == exhaust_residual(alg, a, w)
        sol = alg.solve_scalar(a, w)
        exact = exhaust_scalar(alg, a, w)
        assert [v for v in V if v in sol] == exact
        for v in V:
            assert alg.leq(alg.otimes(a, v), w) == alg.leq(v, q)
        if not sol.is_empty:
            assert sol.upper == q and alg.otimes(a, q) == w
            # finite chains with min never produce left-open sets
            assert sol.kind is ScalarKind.CLOSED


# -- dense carriers, sampled ---------------------------------------------------


@pytest.mark.parametrize("alg", [MP, MM], ids=str)
def test_semiring_laws_random_dense(alg):
    rng = random.Random(20261018)
    for _ in range(1000):
        a, b, c = (rational_sample(rng) for _ in range(3))
        assert alg.join(alg.join(a, b), c) == alg.join(a, alg.join(b, c))
        assert alg.join(a, b) == alg.join(b, a)
        assert alg.otimes(alg.otimes(a, b), c) == alg.otimes(a, alg.otimes(b, c))
        assert alg.otimes(a, b) == alg.otimes(b, a)
        assert alg.otimes(a, alg.join(b, c)) == alg.join(alg.otimes(a, b), alg.otimes(a, c))
        assert alg.otimes(alg.one, a) == a
        assert alg.otimes(alg.bottom, a) == alg.bottom
        if alg.leq(b, c):
            assert alg.leq(alg.otimes(a, b), alg.otimes(a, c))


@pytest.mark.parametrize("alg", [MP, MM], ids=str)
@settings(max_examples=300, deadline=None)
@given(a=ext_rationals, w=ext_rationals)
def test_dense_scalar_solution_matches_probes(alg, a, w):
    sol = alg.solve_scalar(a, w)
    q = alg.residual(a, w)
    probes = dense_probe_values(a, w, q, *([sol.lower, sol.upper] if not sol.is_empty else []))
    for v in probes:
        assert (v in sol) == (alg.otimes(a, v) == w)
        assert alg.leq(alg.otimes(a, v), w) == alg.leq(v, q)
    if not sol.is_empty:
        assert sol.upper == q and alg.otimes(a, q) == w


@settings(max_examples=200, deadline=None)
@given(values=st.lists(ext_rationals, min_size=0, max_size=6), v=ext_rationals)
def test_maxplus_distributes_over_finite_joins(values, v):
    assert MP.otimes(v, MP.join_all(values)) == MP.join_all(MP.otimes(v, u) for u in values)


def test_only_maxplus_produces_left_open_sets():
    rng = random.Random(7)
    kinds = {alg.descriptor: set() for alg in TOTAL_ALGEBRAS}
    for alg in TOTAL_ALGEBRAS:
        for _ in range(500):
            kinds[alg.descriptor].add(alg.solve_scalar(sample_element(alg, rng), sample_element(alg, rng)).kind)
    assert ScalarKind.LEFT_OPEN in kinds["max-plus"]
    for name, seen in kinds.items():
        if name != "max-plus":
            assert ScalarKind.LEFT_OPEN not in seen
