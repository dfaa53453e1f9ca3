"""Constructs: the decorated trees labelling the faces of hypergraph polytopes.

A construct ``Y(T_1, ..., T_n)`` of a hypergraph ``H`` has root decoration
``Y`` and one subtree for each connected component of ``H \\ Y``.  Trees are
non-planar; the canonical form sorts decorations and orders children by the
minimum vertex they contain, so structural equality is construct equality.
"""

from __future__ import annotations

import itertools
import re
from functools import lru_cache
from typing import Iterable, Iterator, NamedTuple, Sequence

from .hypergraph import Hypergraph

__all__ = [
    "Construct",
    "ConstructError",
    "Disconnected",
    "PreconditionViolated",
    "Validation",
    "parse_construct",
    "validate",
    "enumerate_constructs",
    "count_by_nodes",
    "tubing",
    "tubing_to_construct",
    "restrict_construct",
    "tube_to_construct",
]


class ConstructError(ValueError):
    pass


class Disconnected(ConstructError):
    pass


class PreconditionViolated(ConstructError):
    pass


class Construct:
    """Canonical immutable construct.

    >>> c = Construct([1, 4], [Construct([5]), Construct([2])])
    >>> c
    14(2,5)
    >>> sorted(c.carrier)
    [1, 2, 4, 5]
    """

    __slots__ = ("decoration", "children", "carrier", "min_vertex", "_hash")

    def __init__(self, decoration: Iterable, children: Iterable[Construct] = ()):
        deco = tuple(sorted(set(decoration)))
        if not deco:
            raise ConstructError("decorations must be nonempty")
        kids = tuple(sorted(children, key=lambda c: c.min_vertex))
        carrier = frozenset(deco)
        size = len(deco)
        for k in kids:
            carrier |= k.carrier
            size += len(k.carrier)
        if len(carrier) != size:
            raise ConstructError("decorations of a construct must be pairwise disjoint")
        self._set(deco, kids, carrier)

    def _set(self, deco, kids, carrier) -> None:
        self.decoration = deco
        self.children = kids
        self.carrier = carrier
        self.min_vertex = min(carrier)
        self._hash = hash((deco, kids))

    @classmethod
    def _make(cls, deco: tuple, kids: tuple, carrier: frozenset) -> Construct:
        # Trusted constructor: ``deco`` sorted, ``kids`` canonically ordered.
        c = cls.__new__(cls)
        c._set(deco, kids, carrier)
        return c

    @classmethod
    def graft(cls, root: Iterable, children: Iterable[Construct]) -> Construct:
        """``root(children...)`` for disjoint, already canonical children (unchecked)."""
        deco = tuple(sorted(root))
        kids = tuple(sorted(children, key=lambda c: c.min_vertex))
        carrier = frozenset(deco).union(*(k.carrier for k in kids))
        return cls._make(deco, kids, carrier)

    @property
    def root(self) -> frozenset:
        return frozenset(self.decoration)

    def __hash__(self) -> int:
        return self._hash

    def __eq__(self, other) -> bool:
        if self is other:
            return True
        if not isinstance(other, Construct):
            return NotImplemented
        return self._hash == other._hash and self.decoration == other.decoration and self.children == other.children

    def __lt__(self, other: Construct) -> bool:
        return self.sort_key() < other.sort_key()

    def sort_key(self) -> tuple:
        return (self.decoration, tuple(c.sort_key() for c in self.children))

    @property
    def n_nodes(self) -> int:
        return 1 + sum(c.n_nodes for c in self.children)

    def nodes(self) -> Iterator[Construct]:
        """Subtrees in preorder."""
        yield self
        for c in self.children:
            yield from c.nodes()

    def is_chain(self) -> bool:
        return len(self.children) <= 1 and all(c.is_chain() for c in self.children)

    def __repr__(self) -> str:
        return self.notation()

    def notation(self) -> str:
        """Nested notation such as ``23(1,4)``; multi-digit labels use braces."""
        if all(isinstance(x, int) and 0 <= x <= 9 for x in self.decoration):
            label = "".join(str(x) for x in self.decoration)
        else:
            label = "{" + ",".join(str(x) for x in self.decoration) + "}"
        if not self.children:
            return label
        return label + "(" + ",".join(c.notation() for c in self.children) + ")"

    def to_json(self) -> dict:
        return {"decoration": list(self.decoration), "children": [c.to_json() for c in self.children]}

    @classmethod
    def from_json(cls, obj) -> Construct:
        if isinstance(obj, str):
            return parse_construct(obj)
        return cls(obj["decoration"], [cls.from_json(c) for c in obj.get("children", ())])


_TOKEN = re.compile(r"\s*(?:(\{[^}]*\})|(\d+)|([(),]))")


def parse_construct(text: str) -> Construct:
    """Parse the nested notation: ``3(14(2,5))`` or ``{10,11}(3)``.

    A run of digits outside braces stands for one single-digit vertex per digit.
    """
    tokens = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ConstructError(f"unexpected character at {pos} in {text!r}")
        pos = m.end()
        if m.group(1):
            body = m.group(1)[1:-1]
            tokens.append(("label", [int(v) for v in body.split(",") if v.strip()]))
        elif m.group(2):
            tokens.append(("label", [int(d) for d in m.group(2)]))
        else:
            tokens.append((m.group(3), None))
    tokens.append(("end", None))
    i = 0

    def node():
        nonlocal i
        kind, label = tokens[i]
        if kind != "label":
            raise ConstructError(f"expected a decoration in {text!r}")
        i += 1
        kids = []
        if tokens[i][0] == "(":
            i += 1
            kids.append(node())
            while tokens[i][0] == ",":
                i += 1
                kids.append(node())
            if tokens[i][0] != ")":
                raise ConstructError(f"unbalanced parentheses in {text!r}")
            i += 1
        return Construct(label, kids)

    result = node()
    if tokens[i][0] != "end":
        raise ConstructError(f"trailing input in {text!r}")
    return result


class Validation(NamedTuple):
    ok: bool
    reason: str | None = None

    def __bool__(self) -> bool:
        return self.ok


def validate(h: Hypergraph, t: Construct) -> Validation:
    """Check that ``t`` is a construct of ``h``; the reason names the first bad node."""
    if t.carrier != h.carrier:
        return Validation(False, f"carrier {sorted(t.carrier)} differs from {sorted(h.carrier)}")
    root = t.root
    comps = h.remove(root).connected_components()
    want = sorted(sorted(c.carrier) for c in comps)
    have = sorted(sorted(c.carrier) for c in t.children)
    if want != have:
        return Validation(
            False,
            f"at node {t.notation()}: children carriers {have} do not match the components {want}",
        )
    by_carrier = {c.carrier: c for c in comps}
    for child in t.children:
        v = validate(by_carrier[child.carrier], child)
        if not v:
            return v
    return Validation(True)


def _require_connected(h: Hypergraph) -> None:
    if not h.is_connected():
        raise Disconnected(f"{h!r} is not connected")


def _lex_subsets(vertices: Sequence) -> list[tuple]:
    xs = sorted(vertices)
    subsets = [s for r in range(1, len(xs) + 1) for s in itertools.combinations(xs, r)]
    subsets.sort()
    return subsets


@lru_cache(maxsize=4096)
def _enumerate(h: Hypergraph) -> tuple[Construct, ...]:
    out = []
    for root in _lex_subsets(h.carrier):
        comps = h.remove(root).connected_components()
        choices = [_enumerate(c) for c in comps]
        for kids in itertools.product(*choices):
            out.append(Construct._make(root, kids, h.carrier))
    return tuple(out)


def enumerate_constructs(h: Hypergraph) -> tuple[Construct, ...]:
    """All constructs of a connected hypergraph, roots in lexicographic order."""
    _require_connected(h)
    return _enumerate(h)


@lru_cache(maxsize=4096)
def _count_poly(h: Hypergraph) -> tuple[int, ...]:
    # entry i counts constructs with i + 1 nodes
    n = len(h.carrier)
    total = [0] * n
    for root in _lex_subsets(h.carrier):
        acc = [1]
        for c in h.remove(root).connected_components():
            sub = _count_poly(c)
            nxt = [0] * (len(acc) + len(sub))
            for i, a in enumerate(acc):
                if a:
                    for j, b in enumerate(sub):
                        nxt[i + j + 1] += a * b
            acc = nxt
        for i, a in enumerate(acc):
            total[i] += a
    while total and total[-1] == 0:
        total.pop()
    return tuple(total)


def count_by_nodes(h: Hypergraph) -> list[int]:
    """Entry ``k-1`` is the number of constructs of ``h`` with ``k`` nodes.

    Counted by a generating-function recursion, without listing constructs.
    """
    _require_connected(h)
    return list(_count_poly(h))


def tubing(t: Construct) -> frozenset[frozenset]:
    """The set of tubes: for each node, its decoration plus all descendants."""
    return frozenset(node.carrier for node in t.nodes())


def tubing_to_construct(tubes: Iterable[Iterable]) -> Construct:
    """Inverse of :func:`tubing`: rebuild the construct from its tubes."""
    tubes = sorted({frozenset(t) for t in tubes}, key=len, reverse=True)
    if not tubes:
        raise ConstructError("empty tubing")

    def build(tube, inside):
        # maximal proper subtubes become the children
        kids = []
        rest = []
        for t in inside:
            if any(t < k for k in kids):
                rest.append(t)
            else:
                kids.append(t)
        children = [build(k, [t for t in rest if t < k]) for k in kids]
        covered = frozenset().union(*kids) if kids else frozenset()
        return Construct(tube - covered, children)

    top = tubes[0]
    return build(top, [t for t in tubes[1:]])


def restrict_construct(s: Construct, l: Hypergraph, h: Hypergraph) -> Construct:
    """Restriction ``S|_H`` of a construct of ``l`` to the hypergraph ``h``.

    Requires every hyperedge of ``h`` to be connected in ``l``.
    """
    if not h.carrier <= l.carrier:
        raise PreconditionViolated("the carrier of h must be contained in the carrier of l")
    if s.carrier != l.carrier:
        raise PreconditionViolated("s is not a construct of l")
    for e in h.big_hyperedges:
        if not l.is_connected_subset(e):
            raise PreconditionViolated(f"hyperedge {sorted(e)} of h is disconnected in l")
    return _restrict_construct(s, h)


@lru_cache(maxsize=1 << 17)
def _restrict_construct(s: Construct, h: Hypergraph) -> Construct:
    meet = s.root & h.carrier
    if not meet:
        for child in s.children:
            if h.carrier <= child.carrier:
                return _restrict_construct(child, h)
        raise PreconditionViolated("h does not fit inside a single subtree")
    kids = []
    for comp in h.remove(meet).connected_components():
        for child in s.children:
            if comp.carrier <= child.carrier:
                kids.append(_restrict_construct(child, comp))
                break
        else:
            raise PreconditionViolated("a component of h straddles two subtrees")
    return Construct._make(tuple(sorted(meet)), tuple(kids), h.carrier)


def tube_to_construct(t: Iterable, h: Hypergraph) -> Construct:
    """Construct of ``h`` associated with the tube ``t``.

    ``h.carrier - t`` becomes the root, with one one-node child per component
    of what remains; if ``t`` covers ``h`` the result is the one-node construct.
    """
    t = frozenset(t)
    root = h.carrier - t
    if not root:
        return Construct(h.carrier)
    kids = [Construct(c.carrier) for c in h.remove(root).connected_components()]
    return Construct(root, kids)
