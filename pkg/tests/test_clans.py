import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from polydendriform.clans import (
    SEMISTRICT,
    STRICT,
    Erosohedron,
    Explicit,
    Gamma,
    Hypercube,
    Mismatch,
    NotInClan,
    NotInUniverse,
    NotOrdered,
    NotPartition,
    NotSemiStrict,
    NotStrict,
    Simplex,
    TooLarge,
    brute_force_strict,
    decompose,
    graft_team,
    is_strict,
    make_team,
    parse_universe,
)
from polydendriform.hypergraph import (
    Hypergraph,
    erosohedron_hypergraph,
    friezohedron_hypergraph,
    gamma_hypergraph,
    simplex_hypergraph,
)
from polydendriform.suites import all_preteams


def carriers(result):
    return [sorted(h.carrier) for h in result]


def test_parse_universe():
    assert parse_universe("frieze") == Gamma(2)
    assert parse_universe("gamma:inf") == Gamma(math.inf)
    assert parse_universe("gamma:3").name == "gamma:3"
    assert isinstance(parse_universe("erosohedron"), Erosohedron)
    for bad in ("gamma:0", "gamma:x", "cube"):
        with pytest.raises(ValueError):
            parse_universe(bad)


def test_membership():
    assert Gamma(2).member([1, 3, 5]) == friezohedron_hypergraph([1, 3, 5])
    assert Gamma(2).member([1, 4]) is None
    assert Simplex().member("xyz") == simplex_hypergraph("xyz")
    e = Erosohedron()
    assert e.member([1, 2, 3]) == erosohedron_hypergraph([1, 2, 3])
    assert e.member([1, 2, 3], "simplex") == simplex_hypergraph([1, 2, 3])
    assert e.member([1, 2]) == simplex_hypergraph([1, 2])
    assert e.member([1, 2], "eroso") is None
    assert e.contains(simplex_hypergraph([1, 2, 3]))


def test_explicit_universe():
    u = Explicit([Hypergraph([1, 2], [[1, 2]]), Hypergraph([1])])
    assert u.member([1, 2]) == Hypergraph([1, 2], [[1, 2]])
    assert u.member([3]) is None
    with pytest.raises(ValueError):
        Explicit([Hypergraph([1, 2])])


def test_make_team_example():
    t = make_team(Gamma(2), [{1, 3, 5}, {2, 4}, {6, 7, 8}], range(1, 9), STRICT)
    assert carriers(t.participants) == [[1, 3, 5], [2, 4], [6, 7, 8]]
    assert t.whole == friezohedron_hypergraph(range(1, 9))
    single = make_team(Gamma(1), [[1, 2]], [1, 2])
    assert single.participants == (single.whole,)


def test_make_team_errors():
    with pytest.raises(NotStrict):
        make_team(Simplex(), [{1, 3}, {2, 4}], {1, 2, 3, 4}, STRICT)
    with pytest.raises(NotInUniverse):
        make_team(Gamma(1), [[1, 3]], [1, 3])
    with pytest.raises(NotPartition):
        make_team(Gamma(1), [[1, 2], [2, 3]], [1, 2, 3])
    with pytest.raises(NotPartition):
        make_team(Gamma(1), [[1], [2]], [1, 2, 3])
    with pytest.raises(NotOrdered):
        make_team(Hypercube(), [[3, 4], [1, 2]], [1, 2, 3, 4], SEMISTRICT)


def test_erosohedron_clan_forbids_mixed_teams():
    e = Erosohedron()
    make_team(e, [[1, 2, 3], [4]], [1, 2, 3, 4], SEMISTRICT)
    make_team(e, [[1, 2, 3], [4]], [1, 2, 3, 4], SEMISTRICT, tags=["simplex", None], whole_tag="simplex")
    with pytest.raises(NotInClan):
        make_team(e, [[1, 2, 3], [4]], [1, 2, 3, 4], SEMISTRICT, tags=["simplex", None])


def test_strictness_examples():
    parts = [simplex_hypergraph([1, 3]), simplex_hypergraph([2, 4])]
    whole = simplex_hypergraph([1, 2, 3, 4])
    assert not is_strict(parts, whole)
    assert not brute_force_strict(parts, whole)
    p = [gamma_hypergraph([1, 4], math.inf), gamma_hypergraph([2, 3], math.inf)]
    assert is_strict(p, gamma_hypergraph(range(1, 5), math.inf))
    h = friezohedron_hypergraph(range(1, 5))
    assert is_strict([h], h) and brute_force_strict([h], h)
    with pytest.raises(TooLarge):
        brute_force_strict([gamma_hypergraph(range(1, 10), 1)], gamma_hypergraph(range(1, 10), 1))
    with pytest.raises(TypeError):
        is_strict(parts)


@pytest.mark.parametrize("universe", [Gamma(1), Gamma(2), Gamma(math.inf), Simplex(), Hypercube()])
def test_strictness_lemma_exhaustive(universe):
    n = 0
    for whole, parts in all_preteams(universe, 5, 6):
        assert is_strict(parts, whole) == brute_force_strict(parts, whole)
        n += 1
    assert n > 50


def test_decompose_friezohedron_example():
    t = make_team(Gamma(2), [{1, 3, 5}, {2, 4}, {6, 7, 8}], range(1, 9), STRICT)
    r = decompose(t, {0, 1}, {0: {3}, 1: {2}})
    assert r.n_components == 2
    assert [carriers(s.participants) for s in r.subteams] == [[[1]], [[4], [5], [6, 7, 8]]]
    assert [sorted(s.whole.carrier) for s in r.subteams] == [[1], [4, 5, 6, 7, 8]]
    assert r.component_map == {(0, 0): 0, (0, 1): 1, (1, 0): 1, 2: 1}
    assert not r.dissolved


def test_decompose_everything_removed():
    t = make_team(Gamma(2), [{1, 3, 5}, {2, 4}], range(1, 6), STRICT)
    r = decompose(t, {0, 1}, {0: {1, 3, 5}, 1: {2, 4}})
    assert r.subteams == () and r.n_components == 0


def test_decompose_hypercube_dissolution():
    t = make_team(Hypercube(), [[1, 2], [3, 4]], [1, 2, 3, 4], SEMISTRICT)
    r = decompose(t, {0}, {0: {1}})
    assert r.dissolved == {1}
    assert r.singleton_fill == {1: (3, 4)}
    assert r.members == (((0, 0),), (("atom", 3),), (("atom", 4),))
    assert 1 not in r.component_map


def test_decompose_not_semistrict():
    # {1,4} straddles the components {1,2} and {4,5} of the path minus {3}.
    u = Explicit([gamma_hypergraph(range(1, 6), 1), Hypergraph([1, 4], [[1, 4]]), Hypergraph([2, 5], [[2, 5]]), Hypergraph([3])])
    t = make_team(u, [[1, 4], [2, 5], [3]], range(1, 6), SEMISTRICT)
    with pytest.raises(NotSemiStrict):
        decompose(t, {2}, {2: {3}})


def test_decompose_argument_checks():
    t = make_team(Gamma(1), [[1], [2]], [1, 2])
    with pytest.raises(ValueError):
        decompose(t, set(), {})
    with pytest.raises(ValueError):
        decompose(t, {0}, {0: {2}})
    with pytest.raises(IndexError):
        decompose(t, {5}, {5: {1}})


def test_graft_team():
    outer = make_team(Gamma(1), [[1, 2], [3]], [1, 2, 3])
    inner = make_team(Gamma(1), [[1], [2]], [1, 2])
    g = graft_team(outer, 0, inner)
    assert carriers(g.participants) == [[1], [2], [3]]
    assert g.whole == outer.whole
    unit = make_team(Gamma(1), [[3]], [3])
    assert graft_team(outer, 1, unit) == outer
    with pytest.raises(Mismatch):
        graft_team(outer, 1, inner)


@settings(max_examples=80, deadline=None)
@given(
    st.sampled_from([1, 2, 3, math.inf]),
    st.lists(st.integers(1, 9), min_size=2, max_size=7, unique=True),
    st.data(),
)
def test_strict_decompositions_stay_in_the_clan(k, xs, data):
    u = Gamma(k)
    h = u.member(xs)
    if h is None or not h.is_connected():
        return
    order = sorted(xs)
    cuts = sorted(data.draw(st.sets(st.integers(1, len(order) - 1), max_size=3)))
    bounds = [0, *cuts, len(order)]
    parts = [order[a:b] for a, b in zip(bounds, bounds[1:])]
    try:
        t = make_team(u, parts, xs, STRICT, ordered=True)
    except ValueError:
        return
    b_set = data.draw(st.sets(st.integers(0, len(parts) - 1), min_size=1))
    x_sets = {b: data.draw(st.sets(st.sampled_from(parts[b]), min_size=1)) for b in b_set}
    r = decompose(t, b_set, x_sets)
    assert not r.dissolved
    for s in r.subteams:
        make_team(u, [p.carrier for p in s.participants], s.whole.carrier, STRICT, ordered=True)
