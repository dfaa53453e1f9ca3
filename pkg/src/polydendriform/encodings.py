"""Classical encodings of faces, used as independent oracles.

* packed words for permutohedra (chains of level sets, maximum letter on top),
* words over ``+``, ``-`` and ``.`` for hypercubes,
* Schröder trees for associahedra, with the left/right trio on trees,
* the face counts of erosohedra.
"""

from __future__ import annotations

import itertools
from collections import Counter
from math import comb
from typing import Sequence

from .constructs import Construct
from .qalgebra import ONE, QPolynomial, q

__all__ = [
    "EncodingError",
    "NotPacked",
    "BadWord",
    "NotInterval",
    "std",
    "is_packed",
    "permutohedron_encode",
    "permutohedron_decode",
    "br_shuffle",
    "hypercube_encode",
    "hypercube_decode",
    "hypercube_trio_words",
    "LEAF",
    "schroeder_leaves",
    "associahedron_encode",
    "associahedron_decode",
    "lr_trio_trees",
    "lr_star",
    "erosohedron_counts",
]


class EncodingError(ValueError):
    pass


class NotPacked(EncodingError):
    pass


class BadWord(EncodingError):
    pass


class NotInterval(EncodingError):
    pass


# -- packed words -------------------------------------------------------------

def std(word: Sequence[int]) -> tuple[int, ...]:
    """Standardization: relabel the image increasingly onto ``1..k``.

    >>> std((1, 4, 3, 4))
    (1, 3, 2, 3)
    """
    if not word:
        raise EncodingError("std needs a nonempty word")
    rank = {v: i + 1 for i, v in enumerate(sorted(set(word)))}
    return tuple(rank[v] for v in word)


def is_packed(word: Sequence[int]) -> bool:
    return bool(word) and set(word) == set(range(1, max(word) + 1))


def permutohedron_encode(c: Construct) -> tuple[int, ...]:
    """Packed word of a chain: the root gets the largest letter."""
    if not c.is_chain():
        raise EncodingError("permutohedron constructs are chains")
    levels = []
    node = c
    while True:
        levels.append(node.decoration)
        if not node.children:
            break
        node = node.children[0]
    letter = {}
    for depth, deco in enumerate(levels):
        for v in deco:
            letter[v] = len(levels) - depth
    return tuple(letter[v] for v in sorted(c.carrier))


def permutohedron_decode(word: Sequence[int], carrier: Sequence[int]) -> Construct:
    """Chain ``f^-1(n)(f^-1(n-1)(...(f^-1(1))))`` over the sorted carrier."""
    xs = sorted(carrier)
    if len(word) != len(xs):
        raise EncodingError("word and carrier lengths differ")
    if not is_packed(word):
        raise NotPacked(f"{tuple(word)} is not a packed word")
    node = None
    for level in range(1, max(word) + 1):
        deco = [x for x, w in zip(xs, word) if w == level]
        node = Construct(deco, [node] if node else [])
    return node


def br_shuffle(f: Sequence[int], g: Sequence[int]) -> tuple[Counter, Counter, Counter]:
    """All pairs ``(h, k)`` with ``std(h)=f``, ``std(k)=g`` and packed union.

    Concatenated words ``h + k`` are split by comparing ``max(h)`` and
    ``max(k)``: larger on the left gives ``prec``, a tie ``dot``, smaller ``succ``.
    """
    if not (is_packed(f) and is_packed(g)):
        raise NotPacked("both arguments must be packed words")
    mf, mg = max(f), max(g)
    prec, dot, succ = Counter(), Counter(), Counter()
    for n in range(max(mf, mg), mf + mg + 1):
        for sf in itertools.combinations(range(1, n + 1), mf):
            rest = set(range(1, n + 1)) - set(sf)
            for sg in itertools.combinations(range(1, n + 1), mg):
                if not rest <= set(sg):
                    continue
                h = tuple(sf[x - 1] for x in f)
                k = tuple(sg[x - 1] for x in g)
                target = prec if max(h) > max(k) else dot if max(h) == max(k) else succ
                target[h + k] += 1
    return prec, dot, succ


# -- hypercube words ----------------------------------------------------------

_CUBE = {"+", "-", "."}


def _check_cube_word(word: str) -> None:
    if not word or word[0] != "+" or set(word) - _CUBE:
        raise BadWord(f"{word!r} is not a word over '+-.' starting with '+'")


def hypercube_decode(word: str, carrier: Sequence[int]) -> Construct:
    """Split at the last ``+``: it and the later dots form the root, later
    minuses become singleton children, the prefix is decoded recursively."""
    _check_cube_word(word)
    xs = sorted(carrier)
    if len(word) != len(xs):
        raise BadWord("word and carrier lengths differ")
    p = word.rindex("+")
    root = [xs[p]] + [x for x, w in zip(xs[p + 1:], word[p + 1:]) if w == "."]
    kids = [Construct([x]) for x, w in zip(xs[p + 1:], word[p + 1:]) if w == "-"]
    if p:
        kids.append(hypercube_decode(word[:p], xs[:p]))
    return Construct(root, kids)


def hypercube_encode(c: Construct) -> str:
    xs = sorted(c.carrier)
    pos = {x: i for i, x in enumerate(xs)}
    word = [""] * len(xs)

    def fill(node: Construct) -> None:
        p = min(pos[v] for v in node.decoration)
        for v in node.decoration:
            word[pos[v]] = "+" if pos[v] == p else "."
        for child in node.children:
            idx = sorted(pos[v] for v in child.carrier)
            if idx == list(range(p)):
                fill(child)
            elif len(idx) == 1 and idx[0] > p:
                word[idx[0]] = "-"
            else:
                raise EncodingError(f"{c!r} is not a hypercube construct")
        if p and not any(word[i] for i in range(p)):
            raise EncodingError(f"{c!r} is not a hypercube construct")

    fill(c)
    return "".join(word)


def _add(acc: Counter, words, coeff: int = 1) -> None:
    for w, v in words.items():
        acc[w] += coeff * v
        if not acc[w]:
            del acc[w]


def hypercube_trio_words(u: str, v: str) -> tuple[Counter, Counter, Counter]:
    """Word-level ``(prec, dot, succ)`` at ``q=-1``; ``v = v1 + v2`` splits at its last plus."""
    _check_cube_word(u)
    _check_cube_word(v)
    p = v.rindex("+")
    v1, v2 = v[:p], v[p + 1:]
    prec = Counter({u + "-" * len(v): 1})
    dot = Counter({u + "-" * len(v1) + "." + v2: 1})
    succ = Counter()
    if v1:
        for w, c in _cube_star(u, v1).items():
            succ[w + "+" + v2] += c
    else:
        succ[u + "+" + v2] += 1
    return prec, dot, Counter({w: c for w, c in succ.items() if c})


def _cube_star(u: str, v: str) -> Counter:
    prec, dot, succ = hypercube_trio_words(u, v)
    out = Counter()
    _add(out, prec)
    _add(out, dot, -1)
    _add(out, succ)
    return out


# -- Schröder trees -------------------------------------------------------------

LEAF: tuple = ()


def schroeder_leaves(t: tuple) -> int:
    return 1 if t == LEAF else sum(schroeder_leaves(s) for s in t)


def _check_interval(xs: list[int]) -> None:
    if xs != list(range(xs[0], xs[0] + len(xs))):
        raise NotInterval(f"{xs} is not an integer interval")


def associahedron_encode(c: Construct) -> tuple:
    """Planar tree: a root ``x_1 < ... < x_p`` interleaves ``p+1`` subtrees."""
    xs = sorted(c.carrier)
    _check_interval(xs)
    by_min = {min(k.carrier): k for k in c.children}
    out = []
    lo = xs[0]
    for r in list(c.decoration) + [xs[-1] + 1]:
        if lo < r:
            kid = by_min.get(lo)
            if kid is None or sorted(kid.carrier) != list(range(lo, r)):
                raise EncodingError(f"{c!r} is not an associahedron construct")
            out.append(associahedron_encode(kid))
        else:
            out.append(LEAF)
        lo = r + 1
    return tuple(out)


def associahedron_decode(t: tuple, carrier: Sequence[int]) -> Construct:
    xs = sorted(carrier)
    _check_interval(xs)
    if t == LEAF or len(t) < 2:
        raise EncodingError("the tree must have a root of arity at least two")
    if schroeder_leaves(t) != len(xs) + 1:
        raise EncodingError("the tree does not fit the carrier")
    root, kids = [], []
    i = 0
    for j, sub in enumerate(t):
        size = schroeder_leaves(sub) - 1
        if size:
            kids.append(associahedron_decode(sub, xs[i:i + size]))
        i += size
        if j < len(t) - 1:
            root.append(xs[i])
            i += 1
    return Construct(root, kids)


def _graft_sum(prefix: tuple, middle: dict, suffix: tuple) -> dict:
    return {prefix + (m,) + suffix: p for m, p in middle.items()}


def lr_star(s: tuple, t: tuple) -> dict:
    """``s * t = prec + q dot + succ`` with the leaf acting as a unit."""
    if s == LEAF:
        return {t: ONE}
    if t == LEAF:
        return {s: ONE}
    prec, dot, succ = lr_trio_trees(s, t)
    out: dict = {}
    for part, w in ((prec, ONE), (dot, q), (succ, ONE)):
        for tree, p in part.items():
            out[tree] = out.get(tree, QPolynomial()) + w * p
    return {k: v for k, v in out.items() if v}


def lr_trio_trees(s: tuple, t: tuple) -> tuple[dict, dict, dict]:
    """Left, middle and right products of two non-leaf Schröder trees."""
    if s == LEAF or t == LEAF:
        raise EncodingError("the trio is defined on non-leaf trees")
    prec = _graft_sum(s[:-1], lr_star(s[-1], t), ())
    succ = _graft_sum((), lr_star(s, t[0]), t[1:])
    dot = _graft_sum(s[:-1], lr_star(s[-1], t[0]), t[1:])
    return prec, dot, succ


# -- erosohedra ----------------------------------------------------------------

def erosohedron_counts(m: int) -> tuple[int, dict[int, int], int]:
    """Vertices, faces by dimension and total for the erosohedron on ``m`` vertices.

    The polytope has dimension ``m - 1``; ``k``-faces for ``k >= 1`` number
    ``(m - k) * C(m, k + 1)``.
    """
    if m < 2:
        raise ValueError("m must be at least 2")
    vertices = (m - 1) * m
    faces = {0: vertices}
    for k in range(1, m):
        faces[k] = (m - k) * comb(m, k + 1)
    total = 2 ** (m - 1) * (m + 2) - 2 * m - 1
    return vertices, faces, total
