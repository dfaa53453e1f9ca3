import math
from collections import Counter

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from polydendriform.clans import SEMISTRICT, Gamma, Hypercube, make_team
from polydendriform.constructs import enumerate_constructs, parse_construct as P
from polydendriform.encodings import (
    LEAF,
    BadWord,
    EncodingError,
    NotInterval,
    NotPacked,
    associahedron_decode,
    associahedron_encode,
    br_shuffle,
    erosohedron_counts,
    hypercube_decode,
    hypercube_encode,
    hypercube_trio_words,
    is_packed,
    lr_star,
    lr_trio_trees,
    permutohedron_decode,
    permutohedron_encode,
    schroeder_leaves,
    std,
)
from polydendriform.hypergraph import erosohedron_hypergraph, gamma_hypergraph, hypercube_hypergraph
from polydendriform.qalgebra import q
from polydendriform.shuffle import Delegation, trio


def test_std_and_packed():
    assert std((1, 4, 3, 4)) == (1, 3, 2, 3)
    assert is_packed((2, 1, 2)) and not is_packed((1, 3))
    with pytest.raises(EncodingError):
        std(())


def test_permutohedron_examples():
    # The largest letter marks the root.
    assert permutohedron_decode((1, 2, 1), [1, 2, 3]) == P("2(13)")
    assert permutohedron_decode((1, 2), [1, 2]) == P("2(1)")
    assert permutohedron_decode((2, 1), [3, 4]) == P("3(4)")
    assert permutohedron_encode(P("2(13)")) == (1, 2, 1)
    with pytest.raises(NotPacked):
        permutohedron_decode((1, 3), [1, 2])
    with pytest.raises(EncodingError):
        permutohedron_encode(P("3(1,2)"))


def test_br_shuffle_of_singletons():
    prec, dot, succ = br_shuffle((1,), (1,))
    assert dot == Counter({(1, 1): 1})
    assert prec == Counter({(2, 1): 1})
    assert succ == Counter({(1, 2): 1})


def test_br_shuffle_worked_example():
    prec, dot, succ = br_shuffle((1, 2, 1), (2, 1))
    assert set(prec) == {(2, 3, 2, 2, 1), (1, 3, 1, 2, 1), (1, 4, 1, 3, 2), (2, 4, 2, 3, 1), (3, 4, 3, 2, 1)}
    assert set(dot) == {(1, 2, 1, 2, 1), (1, 3, 1, 3, 2), (2, 3, 2, 3, 1)}
    assert set(succ) == {(1, 2, 1, 3, 1), (1, 2, 1, 3, 2), (1, 2, 1, 4, 3), (1, 3, 1, 4, 2), (2, 3, 2, 4, 1)}
    assert all(v == 1 for part in (prec, dot, succ) for v in part.values())


def test_hypercube_examples():
    xs = [1, 2, 3, 4]
    assert hypercube_decode("+.+-", xs) == P("3(12,4)")
    assert hypercube_decode("++.-", xs) == P("23(1,4)")
    assert hypercube_decode("+--+", xs) == P("4(1(2,3))")
    assert hypercube_decode("++++", xs) == P("4(3(2(1)))")
    for w in ("+.+-", "++.-", "+--+", "++++"):
        assert hypercube_encode(hypercube_decode(w, xs)) == w


def test_hypercube_words_on_three_vertices():
    words = {"+-+", "+++", "+--", "++-", "+.+", "+-.", "++.", "+.-", "+.."}
    cube = hypercube_hypergraph([1, 2, 3])
    assert {hypercube_encode(c) for c in enumerate_constructs(cube)} == words
    with pytest.raises(BadWord):
        hypercube_decode("-+", [1, 2])
    with pytest.raises(BadWord):
        hypercube_decode("+x", [1, 2])


def test_associahedron_examples():
    assert associahedron_encode(P("1(2(3))")) == ((), ((), ((), ())))
    assert associahedron_encode(P("123")) == ((), (), (), ())
    assert associahedron_encode(P("2(1,3)")) == (((), ()), ((), ()))
    assert associahedron_decode((((), ()), ((), ())), [1, 2, 3]) == P("2(1,3)")
    assert schroeder_leaves(((), ((), ()))) == 3
    with pytest.raises(NotInterval):
        associahedron_encode(P("1(3)"))
    with pytest.raises(EncodingError):
        associahedron_decode(((), ()), [1, 2, 3])


def test_tree_product_sizes():
    # A three-vertex tree times a two-vertex tree: 5 left, 3 middle, 5 right.
    prec, dot, succ = lr_trio_trees(associahedron_encode(P("1(3(2))")), associahedron_encode(P("5(4)")))
    assert (len(prec), len(dot), len(succ)) == (5, 3, 5)
    assert lr_star(LEAF, ((), ())) == {((), ()): 1}


@pytest.mark.parametrize("m", range(3, 8))
def test_erosohedron_counts_match_enumeration(m):
    vertices, faces, total = erosohedron_counts(m)
    cs = enumerate_constructs(erosohedron_hypergraph(range(1, m + 1)))
    by_dim = Counter(m - c.n_nodes for c in cs)
    assert total == len(cs)
    assert vertices == by_dim[0]
    assert faces == dict(by_dim)


def test_erosohedron_small():
    assert erosohedron_counts(3) == (6, {0: 6, 1: 6, 2: 1}, 13)
    assert erosohedron_counts(2) == (2, {0: 2, 1: 1}, 3)
    with pytest.raises(ValueError):
        erosohedron_counts(1)


# -- agreement with the generic product -------------------------------------

packed = st.integers(1, 4).flatmap(
    lambda n: st.lists(st.integers(1, n), min_size=1, max_size=n).filter(is_packed).map(tuple)
)


@settings(max_examples=60, deadline=None)
@given(packed, packed)
def test_br_shuffle_matches_permutohedron_trio(f, g):
    n1, n = len(f), len(f) + len(g)
    a = permutohedron_decode(f, range(1, n1 + 1))
    b = permutohedron_decode(g, range(n1 + 1, n + 1))
    team = make_team(Gamma(math.inf), [a.carrier, b.carrier], range(1, n + 1))
    for x, y in zip(trio(Delegation(team, (a, b)), q=1), br_shuffle(f, g)):
        assert {permutohedron_encode(c): p.eval(1) for c, p in x.items()} == dict(y)


@settings(max_examples=60, deadline=None)
@given(packed)
def test_permutohedron_round_trip(f):
    xs = range(10, 10 + len(f))
    assert permutohedron_encode(permutohedron_decode(f, xs)) == tuple(f)


@pytest.mark.parametrize("n", range(2, 6))
def test_tree_trio_matches_generic_product(n):
    xs = range(1, n + 1)
    for cut in range(1, n):
        team = make_team(Gamma(1), [xs[:cut], xs[cut:]], xs)
        for a in enumerate_constructs(gamma_hypergraph(xs[:cut], 1)):
            for b in enumerate_constructs(gamma_hypergraph(xs[cut:], 1)):
                ours = trio(Delegation(team, (a, b)), q=None)
                trees = lr_trio_trees(associahedron_encode(a), associahedron_encode(b))
                for x, y in zip(ours, trees):
                    assert {associahedron_encode(c): p for c, p in x.items()} == y


@pytest.mark.parametrize("n", range(2, 6))
def test_cube_trio_matches_generic_product(n):
    xs = list(range(1, n + 1))
    for cut in range(1, n):
        team = make_team(Hypercube(), [xs[:cut], xs[cut:]], xs, SEMISTRICT)
        for a in enumerate_constructs(team.participants[0]):
            for b in enumerate_constructs(team.participants[1]):
                ours = trio(Delegation(team, (a, b)), q=-1)
                words = hypercube_trio_words(hypercube_encode(a), hypercube_encode(b))
                for x, y in zip(ours, words):
                    assert {hypercube_encode(c): p.eval(0) for c, p in x.items()} == dict(y)


@given(st.integers(1, 6).flatmap(lambda n: st.lists(st.sampled_from("+-."), min_size=n - 1, max_size=n - 1)))
def test_hypercube_round_trip(tail):
    w = "+" + "".join(tail)
    xs = list(range(1, len(w) + 1))
    c = hypercube_decode(w, xs)
    assert c in enumerate_constructs(hypercube_hypergraph(xs))
    assert hypercube_encode(c) == w


@pytest.mark.parametrize("n", range(1, 6))
def test_associahedron_round_trip(n):
    xs = range(3, 3 + n)
    for c in enumerate_constructs(gamma_hypergraph(xs, 1)):
        t = associahedron_encode(c)
        assert schroeder_leaves(t) == n + 1
        assert associahedron_decode(t, xs) == c


def test_tree_star_weights_middle_by_q():
    s = t = ((), ())
    assert lr_star(s, t) == {((), ((), ())): 1, ((), (), ()): q, (((), ()), ()): 1}
