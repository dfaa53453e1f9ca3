"""The shuffle product of constructs and the equations it satisfies.

Products are computed with ``q`` symbolic.  Semi-strict teams only make sense
at ``q = -1``; since substituting a value for ``q`` commutes with every
operation involved, they are evaluated once at the end.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Mapping, Sequence

from .clans import (
    NotSemiStrict,
    NotStrict,
    SEMISTRICT,
    Team,
    TooLarge,
    Universe,
    graft_team,
    make_team,
)
from .constructs import (
    Construct,
    ConstructError,
    _restrict_construct,
    enumerate_constructs,
    validate,
)
from .hypergraph import Hypergraph
from .qalgebra import (
    ONE,
    LinearConstruct,
    QPolynomial,
    evaluate_q,
    graft,
    q as Q,
    scale,
    total,
)

__all__ = [
    "AUTO",
    "Delegation",
    "make_delegation",
    "InvalidConstruct",
    "UnrootedAtB",
    "Arity",
    "shuffle",
    "shuffle_B",
    "trio",
    "measure",
    "shuffle_nonrecursive",
    "polydendriform_sides",
    "check_polydendriform",
    "associativity_sides",
    "check_associativity",
    "TRIDENDRIFORM_EQUATIONS",
    "tridendriform_sides",
    "check_tridendriform",
]

AUTO = "auto"


class InvalidConstruct(ConstructError):
    pass


class UnrootedAtB(ValueError):
    pass


class Arity(ValueError):
    pass


Entry = Construct | LinearConstruct


def _linear(x: Entry) -> LinearConstruct:
    return x if isinstance(x, LinearConstruct) else LinearConstruct.of(x)


@dataclass(frozen=True)
class Delegation:
    """A team with one (possibly linear) construct per participant."""

    team: Team
    constructs: tuple[Entry, ...]

    def __post_init__(self):
        object.__setattr__(self, "constructs", tuple(self.constructs))
        if len(self.constructs) != len(self.team.participants):
            raise InvalidConstruct("one construct per participant is required")
        for a, (h, c) in enumerate(zip(self.team.participants, self.constructs)):
            for t in _linear(c).constructs():
                ok = validate(h, t)
                if not ok:
                    raise InvalidConstruct(f"position {a}: {ok.reason}")

    @property
    def is_plain(self) -> bool:
        return all(isinstance(c, Construct) for c in self.constructs)


def make_delegation(
    universe: Universe,
    constructs: Sequence[Entry],
    whole: Iterable | None = None,
    mode=None,
    **kwargs,
) -> Delegation:
    """Delegation whose participants are read off the construct carriers."""
    from .clans import STRICT

    carriers = [c.carrier for c in constructs]
    if whole is None:
        whole = frozenset().union(*carriers)
    team = make_team(universe, carriers, whole, mode or STRICT, **kwargs)
    return Delegation(team, tuple(constructs))


# -- core recursion on plain constructs -------------------------------------

Part = tuple[Hypergraph, Construct]


def _canon(parts: Iterable[Part]) -> tuple[Part, ...]:
    return tuple(sorted(parts, key=lambda p: p[0].min_vertex))


@lru_cache(maxsize=1 << 16)
def _star(parts: tuple[Part, ...], whole: Hypergraph) -> LinearConstruct:
    if len(parts) == 1 and parts[0][0] == whole:
        return LinearConstruct.of(parts[0][1])
    n = len(parts)
    summands = []
    for r in range(1, n + 1):
        weight = Q ** (r - 1)
        for b_set in itertools.combinations(range(n), r):
            summands.append(scale(weight, _star_B(parts, whole, b_set)))
    return total(summands, whole.carrier)


def _star_B(parts: tuple[Part, ...], whole: Hypergraph, b_set: tuple[int, ...]) -> LinearConstruct:
    root = frozenset().union(*(parts[b][1].root for b in b_set))
    refined: list[Part] = []
    for a, (h, c) in enumerate(parts):
        if a in b_set:
            refined.extend((h.restrict(k.carrier), k) for k in c.children)
        else:
            refined.append((h, c))
    rest = whole.remove(root)
    comps = rest.connected_components()
    if not comps:
        return LinearConstruct.of(Construct.graft(root, ()))
    where = {v: j for j, comp in enumerate(comps) for v in comp.carrier}
    buckets: list[list[Part]] = [[] for _ in comps]
    for h, c in refined:
        js = {where[v] for v in h.carrier}
        if len(js) == 1:
            buckets[js.pop()].append((h, c))
        elif all(len(comps[where[v]].carrier) == 1 for v in h.carrier):
            for v in h.carrier:
                buckets[where[v]].append((Hypergraph([v]), Construct([v])))
        else:
            raise NotSemiStrict(f"{h!r} straddles components of the whole without dissolving")
    return graft(root, [_star(_canon(b), comp) for b, comp in zip(buckets, comps)])


def _expand(d: Delegation):
    """Multilinear expansion: yields (coefficient, canonical parts)."""
    items = [_linear(c).items() for c in d.constructs]
    for combo in itertools.product(*items):
        coeff = ONE
        for _, p in combo:
            coeff = coeff * p
        yield coeff, tuple((h, c) for h, (c, _) in zip(d.team.participants, combo))


def _finish(result: LinearConstruct, team: Team, q) -> LinearConstruct:
    if q == AUTO:
        q = -1 if team.mode is SEMISTRICT else None
    return result if q is None else evaluate_q(result, q)


def shuffle(d: Delegation, q=AUTO) -> LinearConstruct:
    """The product of the delegation.

    ``q=AUTO`` keeps ``q`` symbolic for strict teams and sets ``q=-1`` for
    semi-strict ones; ``q=None`` is always symbolic; an integer evaluates.
    """
    whole = d.team.whole
    out = total(
        (scale(coeff, _star(_canon(parts), whole)) for coeff, parts in _expand(d)),
        whole.carrier,
    )
    return _finish(out, d.team, q)


def shuffle_B(d: Delegation, b_set: Iterable[int], q=AUTO) -> LinearConstruct:
    """The unweighted summand of the product for the positions in ``b_set``."""
    b_set = tuple(sorted(set(b_set)))
    if not b_set:
        raise ValueError("B must be nonempty")
    n = len(d.constructs)
    for b in b_set:
        if not 0 <= b < n:
            raise IndexError(f"no participant at position {b}")
        lc = _linear(d.constructs[b])
        if not lc.is_rooted():
            raise UnrootedAtB(f"the linear construct at position {b} has several roots")
    whole = d.team.whole
    summands = []
    for coeff, parts in _expand(d):
        order = sorted(range(n), key=lambda a: parts[a][0].min_vertex)
        canon = tuple(parts[a] for a in order)
        local = tuple(sorted(order.index(b) for b in b_set))
        summands.append(scale(coeff, _star_B(canon, whole, local)))
    return _finish(total(summands, whole.carrier), d.team, q)


def trio(d: Delegation, q=AUTO) -> tuple[LinearConstruct, LinearConstruct, LinearConstruct]:
    """``(prec, dot, succ)`` for a two-participant delegation (left is position 0)."""
    if len(d.constructs) != 2:
        raise Arity("trio needs exactly two participants")
    return shuffle_B(d, {0}, q), shuffle_B(d, {0, 1}, q), shuffle_B(d, {1}, q)


# -- measure and the non-recursive description --------------------------------

def _measure(parts: tuple[Hypergraph, ...], whole: Hypergraph, u: Construct) -> int:
    root = u.root
    b_set = [a for a, h in enumerate(parts) if h.carrier & root]
    refined = []
    for a, h in enumerate(parts):
        if a in b_set:
            refined.extend(h.remove(h.carrier & root).connected_components())
        else:
            refined.append(h)
    mu = len(b_set) - 1
    for child in u.children:
        inside = []
        for h in refined:
            if h.carrier <= child.carrier:
                inside.append(h)
            elif h.carrier & child.carrier:
                # dissolved participant: keep its vertices as singletons
                inside.extend(Hypergraph([v]) for v in h.carrier & child.carrier)
        mu += _measure(tuple(inside), whole.restrict(child.carrier), child)
    return mu


def measure(team: Team, u: Construct) -> int:
    """Total merge count of ``u`` relative to ``team``: the exponent of ``q``."""
    ok = validate(team.whole, u)
    if not ok:
        raise InvalidConstruct(ok.reason)
    return _measure(team.participants, team.whole, u)


def shuffle_nonrecursive(d: Delegation, q=AUTO, limit: int = 10) -> LinearConstruct:
    """Sum of ``q^measure(U) U`` over the constructs ``U`` restricting to every factor."""
    team = d.team
    if not d.is_plain:
        raise TypeError("the non-recursive product takes plain constructs")
    if len(team.whole.carrier) > limit:
        raise TooLarge(f"enumeration is limited to {limit} vertices")
    from .clans import is_strict

    if not is_strict(team):
        raise NotStrict("the non-recursive description needs a strict team")
    pairs = list(zip(team.participants, d.constructs))
    terms = {}
    for u in enumerate_constructs(team.whole):
        root = u.root
        if any((root & h.carrier) and (root & h.carrier) != c.root for h, c in pairs):
            continue
        if all(_restrict_construct(u, h) == c for h, c in pairs):
            terms[u] = QPolynomial.monomial(_measure(team.participants, team.whole, u))
    return _finish(LinearConstruct(terms, team.whole.carrier), team, q)


# -- polydendriform equation and associativity --------------------------------

def _grafted_positions(outer: Team, pos: int, inner: Team):
    """Map each grafted position to ('outer', a) or ('inner', a')."""
    k = len(inner.participants)
    out = []
    for i in range(len(outer.participants) + k - 1):
        if i < pos:
            out.append(("outer", i))
        elif i < pos + k:
            out.append(("inner", i - pos))
        else:
            out.append(("outer", i - k + 1))
    return out


def polydendriform_sides(
    outer: Team,
    pos: int,
    inner: Team,
    constructs: Sequence[Construct],
    b_double_prime: Iterable[int],
    q=AUTO,
) -> tuple[LinearConstruct, LinearConstruct]:
    """Both sides of the polydendriform equation for ``B''`` (grafted positions)."""
    grafted = graft_team(outer, pos, inner)
    d2 = Delegation(grafted, tuple(constructs))
    labels = _grafted_positions(outer, pos, inner)
    b2 = sorted(set(b_double_prime))
    lhs = shuffle_B(d2, b2, q=None)
    inner_cs = [c for (side, _), c in zip(labels, constructs) if side == "inner"]
    d1 = Delegation(inner, tuple(inner_cs))
    outer_b = [labels[i][1] for i in b2 if labels[i][0] == "outer"]
    inner_b = [labels[i][1] for i in b2 if labels[i][0] == "inner"]
    if not inner_b:
        filler = shuffle(d1, q=None)
        b_set = outer_b
    else:
        filler = shuffle_B(d1, inner_b, q=None)
        b_set = outer_b + [pos]
    outer_cs = []
    for a in range(len(outer.participants)):
        if a == pos:
            outer_cs.append(filler)
        else:
            outer_cs.append(next(c for (side, i), c in zip(labels, constructs) if side == "outer" and i == a))
    rhs = shuffle_B(Delegation(outer, tuple(outer_cs)), b_set, q=None)
    return _finish(lhs, grafted, q), _finish(rhs, grafted, q)


def check_polydendriform(outer, pos, inner, constructs, b_double_prime, q=AUTO) -> bool:
    lhs, rhs = polydendriform_sides(outer, pos, inner, constructs, b_double_prime, q)
    return lhs == rhs


def associativity_sides(
    outer: Team, pos: int, inner: Team, constructs: Sequence[Construct], q=AUTO
) -> tuple[LinearConstruct, LinearConstruct]:
    """``*`` of the grafted delegation against the nested product."""
    grafted = graft_team(outer, pos, inner)
    lhs = shuffle(Delegation(grafted, tuple(constructs)), q=None)
    k = len(inner.participants)
    filler = shuffle(Delegation(inner, tuple(constructs[pos:pos + k])), q=None)
    outer_cs = list(constructs[:pos]) + [filler] + list(constructs[pos + k:])
    rhs = shuffle(Delegation(outer, tuple(outer_cs)), q=None)
    return _finish(lhs, grafted, q), _finish(rhs, grafted, q)


def check_associativity(outer, pos, inner, constructs, q=AUTO) -> bool:
    lhs, rhs = associativity_sides(outer, pos, inner, constructs, q)
    return lhs == rhs


# -- tridendriform equations ---------------------------------------------------

TRIDENDRIFORM_EQUATIONS = (
    "(a<b)<c = a<(b*c)",
    "(a>b)<c = a>(b<c)",
    "(a*b)>c = a>(b>c)",
    "(a.b).c = a.(b.c)",
    "(a>b).c = a>(b.c)",
    "(a<b).c = a.(b>c)",
    "(a.b)<c = a.(b<c)",
)


class _Binary:
    """Binary operations on linear constructs of members of one universe."""

    def __init__(self, universe: Universe, mode, pieces: Mapping[frozenset, Hypergraph]):
        self.universe = universe
        self.mode = mode
        self.pieces = dict(pieces)

    def _h(self, carrier: frozenset) -> Hypergraph:
        h = self.pieces.get(carrier)
        if h is None:
            h = self.universe.member(carrier)
            if h is None:
                raise ValueError(f"{sorted(carrier)} has no member in {self.universe.name}")
            self.pieces[carrier] = h
        return h

    def _delegation(self, x: LinearConstruct, y: LinearConstruct) -> Delegation:
        hx, hy = self._h(x.carrier), self._h(y.carrier)
        whole = self._h(x.carrier | y.carrier)
        return Delegation(Team(self.universe, (hx, hy), whole, self.mode), (x, y))

    def prec(self, x, y):
        return shuffle_B(self._delegation(x, y), {0}, q=None)

    def dot(self, x, y):
        return shuffle_B(self._delegation(x, y), {0, 1}, q=None)

    def succ(self, x, y):
        return shuffle_B(self._delegation(x, y), {1}, q=None)

    def star(self, x, y):
        return shuffle(self._delegation(x, y), q=None)


def tridendriform_sides(team: Team, constructs: Sequence[Construct], q=AUTO) -> dict:
    """Both sides of the seven equations for an ordered three-participant team.

    The products of pairs live on the universe members over the unions of
    consecutive participants.
    """
    if len(team.participants) != 3:
        raise Arity("the tridendriform equations need three participants")
    pieces = {h.carrier: h for h in team.participants}
    pieces[team.whole.carrier] = team.whole
    ops = _Binary(team.universe, team.mode, pieces)
    a, b, c = (_linear(x) for x in constructs)
    p, d, s, m = ops.prec, ops.dot, ops.succ, ops.star
    sides = [
        (p(p(a, b), c), p(a, m(b, c))),
        (p(s(a, b), c), s(a, p(b, c))),
        (s(m(a, b), c), s(a, s(b, c))),
        (d(d(a, b), c), d(a, d(b, c))),
        (d(s(a, b), c), s(a, d(b, c))),
        (d(p(a, b), c), d(a, s(b, c))),
        (p(d(a, b), c), d(a, p(b, c))),
    ]
    return {
        name: (_finish(lhs, team, q), _finish(rhs, team, q))
        for name, (lhs, rhs) in zip(TRIDENDRIFORM_EQUATIONS, sides)
    }


def check_tridendriform(team: Team, constructs: Sequence[Construct], q=AUTO) -> dict[str, bool]:
    return {name: lhs == rhs for name, (lhs, rhs) in tridendriform_sides(team, constructs, q).items()}
