"""Seeded samplers and the equation-checking suites behind ``check``."""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass, field
from typing import Callable, Iterator

from .clans import (
    SEMISTRICT,
    STRICT,
    Erosohedron,
    Gamma,
    Hypercube,
    Simplex,
    Team,
    Universe,
    brute_force_strict,
    decompose,
    is_strict,
    make_team,
)
from .constructs import (
    Construct,
    enumerate_constructs,
    restrict_construct,
    tube_to_construct,
    tubing,
)
from .encodings import (
    associahedron_encode,
    br_shuffle,
    hypercube_encode,
    hypercube_trio_words,
    lr_trio_trees,
    permutohedron_decode,
    permutohedron_encode,
)
from .hypergraph import Hypergraph
from .qalgebra import coefficient_sum, evaluate_q
from .shuffle import (
    Delegation,
    check_associativity,
    check_polydendriform,
    check_tridendriform,
    measure,
    shuffle,
    shuffle_nonrecursive,
    trio,
)

SUITES = (
    "strict-assoc",
    "semistrict-assoc",
    "tridendriform",
    "polydendriform",
    "oracle-agreement",
    "coeff-sum",
    "strictness-lemma",
    "tubing-lemma",
)


@dataclass
class SuiteReport:
    suite: str
    universe: str
    cases: int = 0
    failures: int = 0
    counterexample: str | None = None
    notes: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.failures == 0 and self.cases > 0

    def record(self, ok: bool, describe: Callable[[], str]) -> None:
        self.cases += 1
        if not ok:
            self.failures += 1
            if self.counterexample is None:
                self.counterexample = describe()

    def to_json(self) -> dict:
        return {
            "suite": self.suite,
            "universe": self.universe,
            "cases": self.cases,
            "failures": self.failures,
            "passed": self.passed,
            "counterexample": self.counterexample,
        }


# -- samplers ---------------------------------------------------------------

def default_mode(universe: Universe):
    return STRICT if isinstance(universe, Gamma) else SEMISTRICT


def random_construct(h: Hypergraph, rng: random.Random) -> Construct:
    """A random construct: random nonempty root, then recurse on components."""
    xs = sorted(h.carrier)
    size = rng.randint(1, len(xs))
    root = rng.sample(xs, size)
    kids = [random_construct(c, rng) for c in h.remove(root).connected_components()]
    return Construct(root, kids)


def _random_carrier(universe: Universe, n: int, rng: random.Random) -> frozenset:
    if isinstance(universe, Gamma) and universe.k != math.inf:
        span = n + rng.randint(0, max(0, universe.k - 1) * max(0, n - 1))
        while True:
            xs = frozenset([1, span] if n >= 2 else [1]) | frozenset(
                rng.sample(range(2, span), n - 2) if n > 2 else []
            )
            if len(xs) == n and universe.member(xs) is not None:
                return xs
    return frozenset(range(1, n + 1))


def _blocks(xs: list, k: int, rng: random.Random, ordered: bool) -> list[frozenset]:
    if ordered:
        cuts = sorted(rng.sample(range(1, len(xs)), k - 1))
        bounds = [0] + cuts + [len(xs)]
        return [frozenset(xs[a:b]) for a, b in zip(bounds, bounds[1:])]
    labels = list(range(k)) + [rng.randrange(k) for _ in range(len(xs) - k)]
    rng.shuffle(labels)
    parts = [set() for _ in range(k)]
    for x, lab in zip(xs, labels):
        parts[lab].add(x)
    return sorted((frozenset(p) for p in parts), key=min)


def _tags(universe: Universe, parts, whole_tag):
    """Erosohedron teams use default members throughout or simplices throughout."""
    if isinstance(universe, Erosohedron) and whole_tag == "simplex":
        return ["simplex"] * len(parts)
    return None


def random_team(
    universe: Universe,
    rng: random.Random,
    max_carrier: int,
    arity: int | None = None,
    *,
    whole: frozenset | None = None,
    whole_tag: str | None = None,
    ordered: bool | None = None,
    min_carrier: int = 2,
    tries: int = 500,
) -> Team:
    """A random team with at least two participants whenever possible."""
    if ordered is None:
        ordered = isinstance(universe, Hypercube)
    mode = default_mode(universe)
    for _ in range(tries):
        if whole is None:
            n = rng.randint(min_carrier, max_carrier)
            carrier = _random_carrier(universe, n, rng)
            wtag = rng.choice([None, "simplex"]) if isinstance(universe, Erosohedron) else None
        else:
            carrier, wtag = whole, whole_tag
        xs = sorted(carrier)
        k = arity or rng.randint(min(2, len(xs)), len(xs))
        if k > len(xs):
            continue
        parts = _blocks(xs, k, rng, ordered)
        try:
            return make_team(
                universe, parts, carrier, mode, tags=_tags(universe, parts, wtag), whole_tag=wtag, ordered=ordered
            )
        except ValueError:
            continue
    raise RuntimeError(f"could not sample a team in {universe.name}")


def random_delegation(universe, rng, max_carrier, arity=None, **kw) -> Delegation:
    team = random_team(universe, rng, max_carrier, arity, **kw)
    return Delegation(team, tuple(random_construct(h, rng) for h in team.participants))


def random_grafting(universe: Universe, rng: random.Random, max_carrier: int, *, ordered=None, tries: int = 500):
    """``(outer, pos, inner, constructs)`` with at least two inner participants."""
    for _ in range(tries):
        outer = random_team(universe, rng, max_carrier, ordered=ordered, min_carrier=2)
        big = [a for a, h in enumerate(outer.participants) if len(h.carrier) >= 2]
        if not big:
            continue
        pos = rng.choice(big)
        h = outer.participants[pos]
        tag = None
        if isinstance(universe, Erosohedron):
            tag = "eroso" if h == universe.member(h.carrier, "eroso") else "simplex"
        try:
            inner = random_team(universe, rng, len(h.carrier), whole=h.carrier, whole_tag=tag, ordered=ordered)
        except RuntimeError:
            continue
        if inner.whole != h or len(inner.participants) < 2:
            continue
        parts = outer.participants[:pos] + inner.participants + outer.participants[pos + 1:]
        cs = tuple(random_construct(p, rng) for p in parts)
        return outer, pos, inner, cs
    raise RuntimeError(f"could not sample a grafting in {universe.name}")


def ordered_teams(universe: Universe, carrier: frozenset, arity: int) -> Iterator[Team]:
    """Every ordered team of the given arity on ``carrier``."""
    xs = sorted(carrier)
    mode = default_mode(universe)
    for cuts in itertools.combinations(range(1, len(xs)), arity - 1):
        bounds = (0,) + cuts + (len(xs),)
        parts = [xs[a:b] for a, b in zip(bounds, bounds[1:])]
        try:
            yield make_team(universe, parts, carrier, mode, ordered=True)
        except ValueError:
            continue


def connected_carriers(universe: Universe, max_size: int, span: int) -> Iterator[frozenset]:
    for n in range(1, max_size + 1):
        for xs in itertools.combinations(range(1, span + 1), n):
            if universe.member(xs) is not None:
                yield frozenset(xs)


def set_partitions(xs: list) -> Iterator[list[list]]:
    if not xs:
        yield []
        return
    first, rest = xs[0], xs[1:]
    for p in set_partitions(rest):
        yield [[first]] + p
        for i in range(len(p)):
            yield p[:i] + [[first] + p[i]] + p[i + 1:]


# -- suites ----------------------------------------------------------------

def _describe(*objs) -> Callable[[], str]:
    return lambda: " | ".join(repr(o) for o in objs)


def suite_strict_assoc(universe, max_carrier=7, seed=0, samples=100) -> SuiteReport:
    rng = random.Random(seed)
    rep = SuiteReport("strict-assoc", universe.name)
    for _ in range(samples):
        outer, pos, inner, cs = random_grafting(universe, rng, max_carrier)
        rep.record(check_associativity(outer, pos, inner, cs, q=None), _describe(outer, pos, inner, cs))
    return rep


def suite_semistrict_assoc(universe, max_carrier=6, seed=0, samples=100) -> SuiteReport:
    rng = random.Random(seed)
    rep = SuiteReport("semistrict-assoc", universe.name)
    for _ in range(samples):
        outer, pos, inner, cs = random_grafting(universe, rng, max_carrier)
        rep.record(check_associativity(outer, pos, inner, cs, q=-1), _describe(outer, pos, inner, cs))
    return rep


def suite_polydendriform(universe, max_carrier=6, seed=0, samples=30) -> SuiteReport:
    """Every nonempty ``B''`` on sampled ternary graftings (both bracketings)."""
    rng = random.Random(seed)
    rep = SuiteReport("polydendriform", universe.name)
    q = None if default_mode(universe) is STRICT else -1
    for _ in range(samples):
        n = rng.randint(3, max_carrier)
        carrier = _random_carrier(universe, n, rng)
        teams = list(ordered_teams(universe, carrier, 3)) if universe.ordered else []
        if not teams:
            continue
        team = rng.choice(teams)
        cs = tuple(random_construct(h, rng) for h in team.participants)
        for outer, pos, inner in _bracketings(universe, team):
            for r in range(1, 4):
                for b2 in itertools.combinations(range(3), r):
                    ok = check_polydendriform(outer, pos, inner, cs, b2, q=q)
                    rep.record(ok, _describe(outer, pos, inner, cs, b2))
    return rep


def _bracketings(universe: Universe, team: Team):
    h1, h2, h3 = team.participants
    mode = team.mode
    left = universe.member(h1.carrier | h2.carrier)
    right = universe.member(h2.carrier | h3.carrier)
    if left is not None:
        yield Team(universe, (left, h3), team.whole, mode), 0, Team(universe, (h1, h2), left, mode)
    if right is not None:
        yield Team(universe, (h1, right), team.whole, mode), 1, Team(universe, (h2, h3), right, mode)


def suite_tridendriform(universe, max_carrier=5, seed=0, samples=None) -> SuiteReport:
    """Exhaustive over ordered ternary teams and all constructs, or sampled."""
    rep = SuiteReport("tridendriform", universe.name)
    q = None if default_mode(universe) is STRICT else -1
    if samples is None:
        for carrier in connected_carriers(universe, max_carrier, max_carrier + 1):
            if len(carrier) < 3:
                continue
            for team in ordered_teams(universe, carrier, 3):
                for cs in itertools.product(*(enumerate_constructs(h) for h in team.participants)):
                    for name, ok in check_tridendriform(team, cs, q=q).items():
                        rep.record(ok, _describe(team, cs, name))
        return rep
    rng = random.Random(seed)
    for _ in range(samples):
        carrier = _random_carrier(universe, rng.randint(3, max_carrier), rng)
        teams = list(ordered_teams(universe, carrier, 3))
        if not teams:
            continue
        team = rng.choice(teams)
        cs = tuple(random_construct(h, rng) for h in team.participants)
        for name, ok in check_tridendriform(team, cs, q=q).items():
            rep.record(ok, _describe(team, cs, name))
    return rep


def suite_coeff_sum(universe, max_carrier=6, seed=0, samples=100) -> SuiteReport:
    rng = random.Random(seed)
    rep = SuiteReport("coeff-sum", universe.name)
    for _ in range(samples):
        d = random_delegation(universe, rng, max_carrier)
        value = coefficient_sum(shuffle(d, q=-1))
        rep.record(value == 1, _describe(d.team, d.constructs, value))
    return rep


def suite_strictness_lemma(universe, max_carrier=5, seed=0, span=6) -> SuiteReport:
    """``is_strict`` against brute force on every preteam with a small whole."""
    rep = SuiteReport("strictness-lemma", universe.name)
    for whole, parts in all_preteams(universe, max_carrier, span):
        ok = is_strict(parts, whole) == brute_force_strict(parts, whole)
        rep.record(ok, _describe(parts, whole))
    return rep


def all_preteams(universe: Universe, max_carrier: int, span: int):
    tags = universe.tags or (None,)
    for carrier in connected_carriers(universe, max_carrier, span):
        wholes = {universe.member(carrier, t) for t in tags} - {None}
        for whole in sorted(wholes, key=repr):
            for blocks in set_partitions(sorted(carrier)):
                options = []
                for b in blocks:
                    hs = sorted({universe.member(b, t) for t in tags} - {None}, key=repr)
                    options.append(hs)
                for parts in itertools.product(*options):
                    yield whole, tuple(parts)


def suite_tubing_lemma(universe, max_carrier=6, seed=0, span=None) -> SuiteReport:
    """Tubing of a restriction equals the union of tubings of tube constructs."""
    rep = SuiteReport("tubing-lemma", universe.name)
    span = span or max_carrier
    for lc in connected_carriers(universe, max_carrier, span):
        l = universe.member(lc)
        subs = [c for c in connected_carriers(universe, len(lc), span) if c <= lc]
        hs = [universe.member(c) for c in subs]
        hs = [h for h in hs if all(l.is_connected_subset(e) for e in h.big_hyperedges)]
        for s in enumerate_constructs(l):
            tubes = tubing(s)
            for h in hs:
                lhs = tubing(restrict_construct(s, l, h))
                rhs = frozenset().union(*(tubing(tube_to_construct(t, h)) for t in tubes))
                rep.record(lhs == rhs, _describe(s, l, h))
    return rep


def suite_oracle_agreement(universe, max_carrier=6, seed=0, samples=None) -> SuiteReport:
    """Recursive product against the non-recursive one and against encodings."""
    rep = SuiteReport("oracle-agreement", universe.name)
    if isinstance(universe, Gamma):
        rng = random.Random(seed)
        for _ in range(samples or 200):
            d = random_delegation(universe, rng, max_carrier)
            rec = shuffle(d)
            ok = rec == shuffle_nonrecursive(d) and all(
                p.monomial_exponent() == measure(d.team, u) for u, p in rec.items()
            )
            rep.record(ok, _describe(d.team, d.constructs))
        if universe.k == math.inf:
            _permutohedron_words(rep, min(max_carrier, 6))
        if universe.k == 1:
            _associahedron_trees(rep, min(max_carrier, 4))
    elif isinstance(universe, Hypercube):
        _hypercube_words(rep, universe, min(max_carrier, 5))
    else:
        rep.notes.append("no independent encoding for this universe; coefficient sums checked instead")
        rng = random.Random(seed)
        for _ in range(samples or 100):
            d = random_delegation(universe, rng, max_carrier)
            value = coefficient_sum(shuffle(d, q=-1))
            rep.record(value == 1, _describe(d.team, d.constructs, value))
    return rep


def _packed_words(n: int):
    for w in itertools.product(range(1, n + 1), repeat=n):
        if set(w) == set(range(1, max(w) + 1)):
            yield w


def _permutohedron_words(rep: SuiteReport, max_carrier: int) -> None:
    universe = Gamma(math.inf)
    for n in range(2, max_carrier + 1):
        for n1 in range(1, n):
            for f in _packed_words(n1):
                for g in _packed_words(n - n1):
                    cs = (permutohedron_decode(f, range(1, n1 + 1)), permutohedron_decode(g, range(n1 + 1, n + 1)))
                    team = make_team(universe, [c.carrier for c in cs], range(1, n + 1))
                    parts = trio(Delegation(team, cs), q=1)
                    words = br_shuffle(f, g)
                    ok = all(
                        {permutohedron_encode(c): p.eval(1) for c, p in x.items()} == dict(y)
                        for x, y in zip(parts, words)
                    )
                    rep.record(ok, _describe(f, g))


def _associahedron_trees(rep: SuiteReport, max_carrier: int) -> None:
    universe = Gamma(1)
    for n in range(2, max_carrier + 1):
        for team in ordered_teams(universe, frozenset(range(1, n + 1)), 2):
            for cs in itertools.product(*(enumerate_constructs(h) for h in team.participants)):
                parts = trio(Delegation(team, cs), q=None)
                trees = lr_trio_trees(*(associahedron_encode(c) for c in cs))
                ok = all({associahedron_encode(c): p for c, p in x.items()} == y for x, y in zip(parts, trees))
                rep.record(ok, _describe(cs))


def _hypercube_words(rep: SuiteReport, universe: Universe, max_carrier: int) -> None:
    for n in range(2, max_carrier + 1):
        for team in ordered_teams(universe, frozenset(range(1, n + 1)), 2):
            for cs in itertools.product(*(enumerate_constructs(h) for h in team.participants)):
                parts = trio(Delegation(team, cs), q=-1)
                words = hypercube_trio_words(*(hypercube_encode(c) for c in cs))
                ok = all({hypercube_encode(c): p.eval(0) for c, p in x.items()} == dict(y) for x, y in zip(parts, words))
                rep.record(ok, _describe(cs))


RUNNERS = {
    "strict-assoc": suite_strict_assoc,
    "semistrict-assoc": suite_semistrict_assoc,
    "tridendriform": suite_tridendriform,
    "polydendriform": suite_polydendriform,
    "oracle-agreement": suite_oracle_agreement,
    "coeff-sum": suite_coeff_sum,
    "strictness-lemma": suite_strictness_lemma,
    "tubing-lemma": suite_tubing_lemma,
}


def run_suite(name: str, universe: Universe, max_carrier: int, seed: int = 0) -> SuiteReport:
    if name not in RUNNERS:
        raise ValueError(f"unknown suite {name!r}")
    return RUNNERS[name](universe, max_carrier=max_carrier, seed=seed)
