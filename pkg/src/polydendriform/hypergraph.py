"""Finite atomic hypergraphs.

A hypergraph is a nonempty carrier together with a family of nonempty
hyperedges covering it.  Singletons are always hyperedges (atomicity), so
they are added implicitly by the constructor and only the hyperedges of
size >= 2 are stored.

The module also builds the standard families used throughout the package:
simplices, hypercubes, erosohedra and the restrictions of the graphs
``Gamma^k`` (associahedra for k=1, friezohedra for k=2, permutohedra for
k=inf).
"""

from __future__ import annotations

import math
from functools import lru_cache
from typing import Iterable

__all__ = [
    "Hypergraph",
    "EMPTY",
    "HypergraphError",
    "EmptyRestriction",
    "NotSubset",
    "gamma_hypergraph",
    "simplex_hypergraph",
    "hypercube_hypergraph",
    "erosohedron_hypergraph",
    "friezohedron_hypergraph",
]

INF = math.inf


class HypergraphError(ValueError):
    pass


class EmptyRestriction(HypergraphError):
    pass


class NotSubset(HypergraphError):
    pass


class _EmptyHypergraph:
    """Marker returned by :meth:`Hypergraph.remove` when nothing is left."""

    __slots__ = ()
    carrier: frozenset = frozenset()
    hyperedges: frozenset = frozenset()

    def __bool__(self) -> bool:
        return False

    def __len__(self) -> int:
        return 0

    def connected_components(self) -> tuple:
        return ()

    def __repr__(self) -> str:
        return "EMPTY"


EMPTY = _EmptyHypergraph()


class Hypergraph:
    """Immutable atomic hypergraph.

    >>> h = Hypergraph([1, 2, 3], [[1, 2], [2, 3]])
    >>> h.is_connected()
    True
    >>> [sorted(c.carrier) for c in h.remove({2}).connected_components()]
    [[1], [3]]
    """

    __slots__ = ("carrier", "_big", "_hash", "_components")

    def __init__(self, vertices: Iterable, hyperedges: Iterable[Iterable] = ()):
        carrier = frozenset(vertices)
        if not carrier:
            raise HypergraphError("a hypergraph needs a nonempty carrier")
        big = set()
        for e in hyperedges:
            e = frozenset(e)
            if not e:
                raise HypergraphError("hyperedges must be nonempty")
            if not e <= carrier:
                raise NotSubset(f"hyperedge {sorted(e)} is not contained in the carrier")
            if len(e) > 1:
                big.add(e)
        self._init(carrier, frozenset(big))

    def _init(self, carrier: frozenset, big: frozenset) -> None:
        self.carrier = carrier
        self._big = big
        self._hash = hash((carrier, big))
        self._components = None

    @classmethod
    def _make(cls, carrier: frozenset, big: frozenset) -> Hypergraph:
        # Trusted constructor: no validation.
        h = cls.__new__(cls)
        h._init(carrier, big)
        return h

    # -- basic protocol -------------------------------------------------
    @property
    def hyperedges(self) -> frozenset:
        """All hyperedges, singletons included."""
        return self._big | frozenset(frozenset((x,)) for x in self.carrier)

    @property
    def big_hyperedges(self) -> frozenset:
        """Hyperedges of cardinality at least two."""
        return self._big

    def __len__(self) -> int:
        return len(self.carrier)

    def __bool__(self) -> bool:
        return True

    def __hash__(self) -> int:
        return self._hash

    def __eq__(self, other) -> bool:
        if self is other:
            return True
        if not isinstance(other, Hypergraph):
            return NotImplemented
        return self._hash == other._hash and self.carrier == other.carrier and self._big == other._big

    def __repr__(self) -> str:
        edges = sorted((sorted(e) for e in self._big), key=lambda e: (len(e), e))
        return f"Hypergraph({sorted(self.carrier)}, {edges})"

    @property
    def min_vertex(self):
        return min(self.carrier)

    # -- operations -----------------------------------------------------
    def restrict(self, x_set: Iterable) -> Hypergraph:
        """Hypergraph on ``x_set`` keeping the hyperedges contained in it."""
        x_set = frozenset(x_set)
        if not x_set:
            raise EmptyRestriction("cannot restrict to the empty set")
        if not x_set <= self.carrier:
            raise NotSubset(f"{sorted(x_set)} is not a subset of {sorted(self.carrier)}")
        if x_set == self.carrier:
            return self
        return _restrict(self, x_set)

    def remove(self, x_set: Iterable) -> Hypergraph | _EmptyHypergraph:
        """Restriction to the complement of ``x_set``; ``EMPTY`` if nothing is left."""
        x_set = frozenset(x_set)
        if not x_set <= self.carrier:
            raise NotSubset(f"{sorted(x_set)} is not a subset of {sorted(self.carrier)}")
        rest = self.carrier - x_set
        if not rest:
            return EMPTY
        if not x_set:
            return self
        return _restrict(self, rest)

    def connected_components(self) -> tuple[Hypergraph, ...]:
        """Connected components, ordered by their minimum vertex."""
        if self._components is None:
            parts = _component_carriers(self.carrier, self._big)
            if len(parts) == 1:
                self._components = (self,)
            else:
                self._components = tuple(_restrict(self, p) for p in parts)
        return self._components

    def is_connected(self) -> bool:
        return len(self.connected_components()) == 1

    def is_connected_subset(self, x_set: Iterable) -> bool:
        """Whether ``x_set`` is connected in this hypergraph."""
        x_set = frozenset(x_set)
        return len(_component_carriers(x_set, [e for e in self._big if e <= x_set])) == 1


@lru_cache(maxsize=1 << 16)
def _restrict(h: Hypergraph, x_set: frozenset) -> Hypergraph:
    return Hypergraph._make(x_set, frozenset(e for e in h._big if e <= x_set))


def _component_carriers(carrier: frozenset, edges) -> list[frozenset]:
    parent = {x: x for x in carrier}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for e in edges:
        it = iter(e)
        r = find(next(it))
        for y in it:
            s = find(y)
            if s != r:
                parent[s] = r
    groups: dict = {}
    for x in carrier:
        groups.setdefault(find(x), set()).add(x)
    return sorted((frozenset(g) for g in groups.values()), key=min)


# -- families -----------------------------------------------------------

def gamma_hypergraph(vertices: Iterable[int], k: float = 1) -> Hypergraph:
    """Restriction of ``Gamma^k`` (edges ``{a, a+l}``, ``1 <= l <= k``) to ``vertices``.

    ``k`` may be ``math.inf``.  The result may be disconnected.
    """
    xs = sorted(set(vertices))
    edges = [(a, b) for i, a in enumerate(xs) for b in xs[i + 1:] if b - a <= k]
    return Hypergraph(xs, edges)


def friezohedron_hypergraph(vertices: Iterable[int]) -> Hypergraph:
    return gamma_hypergraph(vertices, 2)


def simplex_hypergraph(vertices: Iterable) -> Hypergraph:
    xs = frozenset(vertices)
    return Hypergraph(xs, [xs])


def hypercube_hypergraph(vertices: Iterable) -> Hypergraph:
    """Hyperedges are the prefixes ``{x_1, ..., x_i}`` of the sorted vertices."""
    xs = sorted(set(vertices))
    return Hypergraph(xs, [xs[:i] for i in range(1, len(xs) + 1)])


def erosohedron_hypergraph(vertices: Iterable) -> Hypergraph:
    """Hyperedges are the complements of single vertices; needs 3 or more vertices."""
    xs = frozenset(vertices)
    if len(xs) < 3:
        raise HypergraphError("erosohedra need at least three vertices")
    return Hypergraph(xs, [xs - {x} for x in xs])
