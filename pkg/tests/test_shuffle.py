import math
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from polydendriform.clans import (
    SEMISTRICT,
    STRICT,
    Erosohedron,
    Gamma,
    Hypercube,
    NotStrict,
    Simplex,
    make_team,
)
from polydendriform.constructs import enumerate_constructs, parse_construct as P, restrict_construct, validate
from polydendriform.qalgebra import LinearConstruct, coefficient_sum, evaluate_q, graft, q
from polydendriform.shuffle import (
    Arity,
    Delegation,
    InvalidConstruct,
    UnrootedAtB,
    check_associativity,
    check_polydendriform,
    check_tridendriform,
    make_delegation,
    measure,
    shuffle,
    shuffle_B,
    shuffle_nonrecursive,
    trio,
)
from polydendriform.suites import random_delegation, random_grafting


def terms(lc):
    return {c.notation(): coeff for c, coeff in lc.items()}


FRIEZE_PRODUCT = {
    "2(1(3(4)))": 1,
    "2(13(4))": q,
    "2(3(1,4))": 1,
    "23(1,4)": q,
    "3(2(1,4))": 1,
    "3(24(1))": q,
    "3(4(2(1)))": 1,
}


def test_friezohedron_pair_product():
    d = make_delegation(Gamma(2), [P("2(1)"), P("3(4)")])
    assert terms(shuffle(d)) == FRIEZE_PRODUCT
    assert coefficient_sum(shuffle(d)) == 4 + 3 * q
    assert shuffle_nonrecursive(d) == shuffle(d)


def test_product_of_singletons():
    d = make_delegation(Gamma(1), [P("1"), P("2")])
    assert terms(shuffle(d)) == {"1(2)": 1, "12": q, "2(1)": 1}
    prec, dot, succ = trio(d)
    assert terms(prec) == {"1(2)": 1}
    assert terms(dot) == {"12": 1}
    assert terms(succ) == {"2(1)": 1}


def test_single_participant_is_identity():
    d = make_delegation(Gamma(2), [P("3(14(2,5))")])
    assert terms(shuffle(d)) == {"3(14(2,5))": 1}


def test_summand_for_the_third_participant():
    d = make_delegation(Gamma(2), [P("4"), P("5"), P("678")])
    assert terms(shuffle_B(d, {2})) == {"678(4(5))": 1, "678(45)": q, "678(5(4))": 1}


def test_summand_grafts_the_remaining_product():
    d8 = make_delegation(Gamma(2), [P("3(1,5)"), P("2(4)"), P("678")])
    out = shuffle_B(d8, {0, 1})
    assert all(c.root == {2, 3} for c, _ in out.items())
    assert len(out) == 13
    rest = shuffle(make_delegation(Gamma(2), [P("4"), P("5"), P("678")]))
    assert out == graft({2, 3}, [P("1"), rest])


def test_summand_argument_checks():
    d = make_delegation(Gamma(1), [P("1"), P("2")])
    with pytest.raises(ValueError):
        shuffle_B(d, set())
    with pytest.raises(IndexError):
        shuffle_B(d, {2})
    unrooted = LinearConstruct({P("1(2)"): 1, P("2(1)"): 1})
    d = Delegation(make_team(Gamma(1), [[1, 2], [3]], [1, 2, 3]), (unrooted, P("3")))
    with pytest.raises(UnrootedAtB):
        shuffle_B(d, {0})
    assert shuffle_B(d, {1})


def test_trio_arity():
    d = make_delegation(Gamma(1), [P("1"), P("2"), P("3")])
    with pytest.raises(Arity):
        trio(d)


def test_linear_arguments_expand_multilinearly():
    team = make_team(Gamma(1), [[1, 2], [3]], [1, 2, 3])
    a = LinearConstruct({P("1(2)"): 1, P("12"): q})
    lhs = shuffle(Delegation(team, (a, P("3"))), q=None)
    parts = [shuffle(Delegation(team, (c, P("3"))), q=None) for c in (P("1(2)"), P("12"))]
    assert lhs == parts[0] + q * parts[1]


def test_measure_examples():
    t = make_team(Gamma(2), [[1, 3, 5], [2, 4]], range(1, 6))
    assert measure(t, P("3(14(2,5))")) == 1
    assert measure(t, P("12345")) == 1
    assert measure(t, P("3(1(4(2,5)))")) == 0
    with pytest.raises(InvalidConstruct):
        measure(t, P("3(1,245)"))


def test_nonrecursive_needs_a_strict_small_team():
    t = make_team(Simplex(), [[1, 3], [2, 4]], [1, 2, 3, 4], SEMISTRICT)
    d = Delegation(t, (P("13"), P("24")))
    with pytest.raises(NotStrict):
        shuffle_nonrecursive(d)
    d = make_delegation(Gamma(1), [P("1"), P("2")])
    with pytest.raises(ValueError):
        shuffle_nonrecursive(d, limit=1)


def test_simplex_inner_product():
    d = make_delegation(Simplex(), [P("2(3)"), P("4(5,6)")], mode=SEMISTRICT)
    assert terms(shuffle(d, q=None)) == {"2(3,4,5,6)": 1, "24(3,5,6)": q, "4(2,3,5,6)": 1}


def test_simplex_associativity_only_at_minus_one():
    xs = range(1, 7)
    linear = shuffle(make_delegation(Simplex(), [P("2(3)"), P("4(5,6)")], mode=SEMISTRICT), q=None)
    outer = Delegation(make_team(Simplex(), [[1], [2, 3, 4, 5, 6]], xs, SEMISTRICT), (P("1"), linear))
    flat = make_delegation(Simplex(), [P("1"), P("2(3)"), P("4(5,6)")], mode=SEMISTRICT)
    nested = shuffle_B(outer, {0}, q=None)
    direct = shuffle_B(flat, {0}, q=None)
    assert terms(nested) == {"1(2,3,4,5,6)": 2 + q}
    assert terms(direct) == {"1(2,3,4,5,6)": 1}
    assert evaluate_q(nested, -1) == evaluate_q(direct, -1)


def test_semistrict_product_is_evaluated():
    d = make_delegation(Simplex(), [P("1"), P("2")], mode=SEMISTRICT)
    assert terms(shuffle(d)) == {"1(2)": 1, "12": -1, "2(1)": 1}
    assert terms(shuffle(d, q=None))["12"] == q


def test_hypercube_product_is_valid():
    d = make_delegation(Hypercube(), [P("1(2)"), P("3(4)")], mode=SEMISTRICT)
    out = shuffle(d)
    assert out and all(validate(d.team.whole, c) for c, _ in out.items())
    assert coefficient_sum(out) == 1


# -- properties --------------------------------------------------------------

GAMMAS = [Gamma(1), Gamma(2), Gamma(3), Gamma(math.inf)]
seeds = st.integers(0, 2**32 - 1)


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(GAMMAS), seeds)
def test_root_lies_in_the_union_of_roots(u, seed):
    d = random_delegation(u, random.Random(seed), 6)
    roots = frozenset().union(*(c.root for c in d.constructs))
    for c, _ in shuffle(d).items():
        assert c.root <= roots


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(GAMMAS), seeds)
def test_strict_terms_restrict_to_the_factors(u, seed):
    d = random_delegation(u, random.Random(seed), 6)
    whole = d.team.whole
    for c, coeff in shuffle(d).items():
        assert validate(whole, c)
        assert coeff == q ** measure(d.team, c)
        for h, f in zip(d.team.participants, d.constructs):
            assert restrict_construct(c, whole, h) == f


@settings(max_examples=30, deadline=None)
@given(st.sampled_from(GAMMAS), seeds)
def test_recursive_and_nonrecursive_agree(u, seed):
    d = random_delegation(u, random.Random(seed), 6)
    assert shuffle(d) == shuffle_nonrecursive(d)


@settings(max_examples=30, deadline=None)
@given(st.sampled_from(GAMMAS), seeds)
def test_summands_add_up(u, seed):
    d = random_delegation(u, random.Random(seed), 6, arity=2)
    prec, dot, succ = trio(d)
    assert shuffle(d) == prec + succ + q * dot


@settings(max_examples=30, deadline=None)
@given(st.sampled_from(GAMMAS), seeds)
def test_product_covers_every_compatible_construct(u, seed):
    d = random_delegation(u, random.Random(seed), 5)
    whole = d.team.whole
    expected = {
        c
        for c in enumerate_constructs(whole)
        if all(restrict_construct(c, whole, h) == f for h, f in zip(d.team.participants, d.constructs))
    }
    assert set(c for c, _ in shuffle(d).items()) == expected


@settings(max_examples=30, deadline=None)
@given(st.sampled_from([Simplex(), Hypercube(), Erosohedron()]), seeds)
def test_semistrict_coefficient_sum_is_one(u, seed):
    d = random_delegation(u, random.Random(seed), 6)
    assert coefficient_sum(shuffle(d)) == 1


@settings(max_examples=20, deadline=None)
@given(st.sampled_from(GAMMAS), seeds)
def test_strict_associativity(u, seed):
    outer, pos, inner, cs = random_grafting(u, random.Random(seed), 6)
    assert check_associativity(outer, pos, inner, cs)


@settings(max_examples=20, deadline=None)
@given(st.sampled_from([Simplex(), Hypercube(), Erosohedron()]), seeds)
def test_semistrict_associativity(u, seed):
    outer, pos, inner, cs = random_grafting(u, random.Random(seed), 6)
    assert check_associativity(outer, pos, inner, cs)


@settings(max_examples=15, deadline=None)
@given(st.sampled_from([Gamma(1), Gamma(2), Gamma(math.inf)]), seeds, st.data())
def test_polydendriform_equation(u, seed, data):
    outer, pos, inner, cs = random_grafting(u, random.Random(seed), 6, ordered=True)
    n = len(cs)
    b2 = data.draw(st.sets(st.integers(0, n - 1), min_size=1))
    assert check_polydendriform(outer, pos, inner, cs, b2)


def test_tridendriform_example():
    team = make_team(Gamma(math.inf), [[1, 2], [3], [4, 5]], range(1, 6), STRICT)
    results = check_tridendriform(team, [P("2(1)"), P("3"), P("45")])
    assert len(results) == 7 and all(results.values())
    with pytest.raises(Arity):
        check_tridendriform(make_team(Gamma(1), [[1], [2]], [1, 2]), [P("1"), P("2")])
