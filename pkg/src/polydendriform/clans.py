"""Universes, teams and their decompositions.

A universe answers membership queries: given a finite carrier (and, where a
carrier can hold several members, a tag) it returns the member hypergraph or
``None``.  Teams pair participating hypergraphs with a coordinating one.
Positions are 0-based indices into the participant sequence; refined indices
are either a plain position ``a`` or a pair ``(b, i)`` for the ``i``-th
component of participant ``b`` after removal.
"""

from __future__ import annotations

import enum
import itertools
import math
from dataclasses import dataclass, field
from typing import Hashable, Iterable, Mapping, Sequence

from .hypergraph import (
    Hypergraph,
    erosohedron_hypergraph,
    gamma_hypergraph,
    hypercube_hypergraph,
    simplex_hypergraph,
)

__all__ = [
    "Mode",
    "STRICT",
    "SEMISTRICT",
    "Universe",
    "Gamma",
    "Simplex",
    "Hypercube",
    "Erosohedron",
    "Explicit",
    "parse_universe",
    "Team",
    "DecompositionResult",
    "ClanError",
    "NotInUniverse",
    "NotInClan",
    "NotPartition",
    "NotStrict",
    "NotOrdered",
    "NotSemiStrict",
    "TooLarge",
    "Mismatch",
    "make_team",
    "is_strict",
    "brute_force_strict",
    "decompose",
    "graft_team",
]


class ClanError(ValueError):
    pass


class NotInUniverse(ClanError):
    pass


class NotInClan(ClanError):
    pass


class NotPartition(ClanError):
    pass


class NotStrict(ClanError):
    pass


class NotOrdered(ClanError):
    pass


class NotSemiStrict(ClanError):
    pass


class TooLarge(ClanError):
    pass


class Mismatch(ClanError):
    pass


class Mode(enum.Enum):
    STRICT = "strict"
    SEMISTRICT = "semistrict"


STRICT = Mode.STRICT
SEMISTRICT = Mode.SEMISTRICT


# -- universes ------------------------------------------------------------

class Universe:
    """Membership oracle for a family of connected hypergraphs."""

    name: str = "universe"
    ordered: bool = False
    tags: tuple[str, ...] = ()

    def member(self, carrier: Iterable, tag: str | None = None) -> Hypergraph | None:
        raise NotImplementedError

    def contains(self, h: Hypergraph) -> bool:
        return any(self.member(h.carrier, t) == h for t in (self.tags or (None,)))

    def admits(self, parts: Sequence[Hypergraph], whole: Hypergraph) -> bool:
        """Whether members drawn from this universe form a team of its clan."""
        return True

    def __repr__(self) -> str:
        return f"<universe {self.name}>"

    def __eq__(self, other) -> bool:
        return type(self) is type(other) and self.name == other.name

    def __hash__(self) -> int:
        return hash((type(self).__name__, self.name))


class Gamma(Universe):
    """Connected restrictions of ``Gamma^k``; ``k`` may be ``math.inf``."""

    ordered = True

    def __init__(self, k: float = 1):
        if k != math.inf and (int(k) != k or k < 1):
            raise ValueError("k must be a positive integer or math.inf")
        self.k = k if k == math.inf else int(k)
        self.name = "gamma:inf" if k == math.inf else f"gamma:{self.k}"

    def member(self, carrier, tag=None):
        if tag not in (None, "gamma"):
            return None
        h = gamma_hypergraph(carrier, self.k)
        return h if h.is_connected() else None


class Simplex(Universe):
    name = "simplex"

    def member(self, carrier, tag=None):
        if tag not in (None, "simplex"):
            return None
        return simplex_hypergraph(carrier)


class Hypercube(Universe):
    """Hypercubes ordered by vertex id; team blocks must be ascending intervals."""

    name = "hypercube"
    ordered = True

    def member(self, carrier, tag=None):
        if tag not in (None, "hypercube"):
            return None
        return hypercube_hypergraph(carrier)


class Erosohedron(Universe):
    """Erosohedra together with simplices.

    Both live on every carrier of size three or more; the tag ``"eroso"`` or
    ``"simplex"`` picks one.  Without a tag, carriers of size at least three
    give the erosohedron and smaller carriers the simplex.
    """

    name = "erosohedron"
    ordered = True
    tags = ("eroso", "simplex")

    def member(self, carrier, tag=None):
        xs = frozenset(carrier)
        if tag is None:
            tag = "eroso" if len(xs) >= 3 else "simplex"
        if tag == "simplex":
            return simplex_hypergraph(xs)
        if tag == "eroso" and len(xs) >= 3:
            return erosohedron_hypergraph(xs)
        return None

    def admits(self, parts, whole):
        # Teams use either the default member on every carrier or simplices
        # throughout; mixing the two breaks associativity.
        members = (*parts, whole)
        return all(h == self.member(h.carrier) for h in members) or all(
            h == simplex_hypergraph(h.carrier) for h in members
        )


class Explicit(Universe):
    """A finite list of hypergraphs; the tag is the index into the list."""

    def __init__(self, hypergraphs: Iterable[Hypergraph], name: str = "explicit"):
        self.hypergraphs = tuple(hypergraphs)
        self.name = name
        for h in self.hypergraphs:
            if not h.is_connected():
                raise ValueError(f"{h!r} is not connected")

    def member(self, carrier, tag=None):
        xs = frozenset(carrier)
        hits = [(i, h) for i, h in enumerate(self.hypergraphs) if h.carrier == xs]
        if tag is not None:
            hits = [(i, h) for i, h in hits if str(i) == str(tag)]
        return hits[0][1] if hits else None

    def contains(self, h):
        return h in self.hypergraphs

    def __eq__(self, other):
        return isinstance(other, Explicit) and self.hypergraphs == other.hypergraphs

    def __hash__(self):
        return hash(self.hypergraphs)


def parse_universe(tag: str) -> Universe:
    """``gamma:K``, ``gamma:inf``, ``frieze``, ``simplex``, ``hypercube`` or ``erosohedron``."""
    tag = tag.strip().lower()
    if tag == "frieze":
        return Gamma(2)
    if tag.startswith("gamma:"):
        k = tag.split(":", 1)[1]
        if k in ("inf", "infinity", "∞"):
            return Gamma(math.inf)
        if not k.isdigit() or int(k) < 1:
            raise ValueError(f"bad gamma parameter {k!r}")
        return Gamma(int(k))
    simple = {"simplex": Simplex, "hypercube": Hypercube, "erosohedron": Erosohedron}
    if tag in simple:
        return simple[tag]()
    raise ValueError(f"unknown universe {tag!r}")


# -- teams ----------------------------------------------------------------

@dataclass(frozen=True)
class Team:
    universe: Universe
    participants: tuple[Hypergraph, ...]
    whole: Hypergraph
    mode: Mode = STRICT

    def __len__(self) -> int:
        return len(self.participants)

    @property
    def strict(self) -> bool:
        return self.mode is STRICT


def _check_partition(parts: Sequence[Hypergraph], whole: Hypergraph) -> None:
    seen: set = set()
    for h in parts:
        if seen & h.carrier:
            raise NotPartition("participant carriers overlap")
        seen |= h.carrier
    if seen != whole.carrier:
        raise NotPartition("participant carriers do not cover the whole")


def _check_order(parts: Sequence[Hypergraph]) -> None:
    for a, b in zip(parts, parts[1:]):
        if not max(a.carrier) < min(b.carrier):
            raise NotOrdered("participants must be listed in ascending blocks")


def make_team(
    universe: Universe,
    parts: Sequence[Iterable],
    whole: Iterable,
    mode: Mode | str = STRICT,
    *,
    tags: Sequence[str | None] | None = None,
    whole_tag: str | None = None,
    ordered: bool | None = None,
) -> Team:
    """Build a team from carriers through the universe oracle.

    ``ordered`` defaults to True for hypercubes only; pass True to demand
    ascending blocks in other ordered universes.
    """
    mode = Mode(mode)
    parts = [frozenset(p) for p in parts]
    if not parts:
        raise NotPartition("a team needs at least one participant")
    tags = list(tags) if tags is not None else [None] * len(parts)
    if len(tags) != len(parts):
        raise ValueError("one tag per participant")
    hs = []
    for p, t in zip(parts, tags):
        if not p:
            raise NotPartition("participants must be nonempty")
        h = universe.member(p, t)
        if h is None:
            raise NotInUniverse(f"{sorted(p)} has no member in {universe.name}")
        hs.append(h)
    whole = frozenset(whole)
    w = universe.member(whole, whole_tag) if whole else None
    if w is None:
        raise NotInUniverse(f"{sorted(whole)} has no member in {universe.name}")
    _check_partition(hs, w)
    if not universe.admits(hs, w):
        raise NotInClan(f"these members do not form a team of the {universe.name} clan")
    if ordered is None:
        ordered = isinstance(universe, Hypercube)
    if ordered:
        _check_order(hs)
    if mode is STRICT and not is_strict(hs, w):
        raise NotStrict("some participant hyperedge is disconnected in the whole")
    return Team(universe, tuple(hs), w, mode)


def _unpack(team_or_parts, whole):
    if isinstance(team_or_parts, Team):
        return team_or_parts.participants, team_or_parts.whole
    if whole is None:
        raise TypeError("pass a Team or participants together with the whole")
    return tuple(team_or_parts), whole


def is_strict(team_or_parts, whole: Hypergraph | None = None) -> bool:
    """Every hyperedge of every participant is connected in the whole."""
    parts, whole = _unpack(team_or_parts, whole)
    return all(whole.is_connected_subset(e) for h in parts for e in h.big_hyperedges)


def brute_force_strict(team_or_parts, whole: Hypergraph | None = None, limit: int = 8) -> bool:
    """Strictness by exhausting every ``B`` and every choice of removed sets."""
    parts, whole = _unpack(team_or_parts, whole)
    if len(whole.carrier) > limit:
        raise TooLarge(f"brute force is limited to {limit} vertices")
    subsets = [
        [frozenset(s) for r in range(1, len(h.carrier) + 1) for s in itertools.combinations(sorted(h.carrier), r)]
        for h in parts
    ]
    n = len(parts)
    for r in range(1, n + 1):
        for b_set in itertools.combinations(range(n), r):
            for choice in itertools.product(*(subsets[b] for b in b_set)):
                x_sets = dict(zip(b_set, choice))
                refined, _ = _refine(parts, x_sets)
                removed = frozenset().union(*choice)
                where = _component_index(whole.remove(removed))
                for _, h in refined:
                    if len({where[v] for v in h.carrier}) != 1:
                        return False
    return True


# -- decomposition ----------------------------------------------------------

def _refine(parts: Sequence[Hypergraph], x_sets: Mapping[int, frozenset]):
    refined = []
    for a, h in enumerate(parts):
        if a in x_sets:
            rest = h.remove(x_sets[a])
            for i, c in enumerate(rest.connected_components()):
                refined.append(((a, i), c))
        else:
            refined.append((a, h))
    removed = frozenset().union(*x_sets.values()) if x_sets else frozenset()
    return refined, removed


def _component_index(rest) -> dict:
    return {v: j for j, c in enumerate(rest.connected_components()) for v in c.carrier}


@dataclass(frozen=True)
class DecompositionResult:
    """Outcome of removing ``X_b`` from each ``b`` in ``B``.

    ``members[j]`` lists, for subteam ``j``, the refined index behind each of
    its participants; atomized vertices of dissolved participants appear as
    ``("atom", x)``.
    """

    refined: tuple[tuple[Hashable, Hypergraph], ...]
    components: tuple[Hypergraph, ...]
    component_map: dict
    subteams: tuple[Team, ...]
    members: tuple[tuple, ...]
    dissolved: frozenset
    singleton_fill: dict = field(default_factory=dict)

    @property
    def n_components(self) -> int:
        return len(self.components)


def decompose(team: Team, b_set: Iterable[int], x_sets: Mapping[int, Iterable]) -> DecompositionResult:
    b_set = sorted(set(b_set))
    if not b_set:
        raise ValueError("B must be nonempty")
    xs = {}
    for b in b_set:
        if not 0 <= b < len(team.participants):
            raise IndexError(f"no participant at position {b}")
        x = frozenset(x_sets[b])
        if not x or not x <= team.participants[b].carrier:
            raise ValueError(f"X_{b} must be a nonempty subset of participant {b}")
        xs[b] = x
    refined, removed = _refine(team.participants, xs)
    rest = team.whole.remove(removed)
    comps = rest.connected_components()
    where = _component_index(rest)
    cmap: dict = {}
    dissolved = set()
    fill: dict = {}
    buckets: list[list] = [[] for _ in comps]
    for idx, h in refined:
        js = {where[v] for v in h.carrier}
        if len(js) == 1:
            j = js.pop()
            cmap[idx] = j
            buckets[j].append((idx, h))
        elif all(len(comps[where[v]].carrier) == 1 for v in h.carrier):
            dissolved.add(idx)
            fill[idx] = tuple(sorted(h.carrier))
            for v in h.carrier:
                buckets[where[v]].append((("atom", v), Hypergraph([v])))
        else:
            raise NotSemiStrict(f"refined participant {idx} straddles components without dissolving")
    subteams = []
    members = []
    for comp, bucket in zip(comps, buckets):
        bucket.sort(key=lambda item: item[1].min_vertex)
        subteams.append(Team(team.universe, tuple(h for _, h in bucket), comp, team.mode))
        members.append(tuple(i for i, _ in bucket))
    return DecompositionResult(
        refined=tuple(refined),
        components=tuple(comps),
        component_map=cmap,
        subteams=tuple(subteams),
        members=tuple(members),
        dissolved=frozenset(dissolved),
        singleton_fill=fill,
    )


def graft_team(outer: Team, pos: int, inner: Team) -> Team:
    """Replace participant ``pos`` of ``outer`` by the participants of ``inner``."""
    if inner.whole != outer.participants[pos]:
        raise Mismatch("the inner whole must equal the participant it replaces")
    parts = outer.participants[:pos] + inner.participants + outer.participants[pos + 1:]
    mode = STRICT if outer.mode is STRICT and inner.mode is STRICT else SEMISTRICT
    if mode is STRICT and not is_strict(parts, outer.whole):
        raise NotStrict("the grafted team is not strict")
    return Team(outer.universe, parts, outer.whole, mode)
