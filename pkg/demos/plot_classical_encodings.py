"""
Classical shadows
=================

Permutohedra, associahedra and hypercubes each have a classical product on
words or trees.  Here the generic trio is compared with all three.
"""

from polydendriform.clans import SEMISTRICT, Gamma, Hypercube, make_team
from polydendriform.constructs import parse_construct as P
from polydendriform.encodings import (
    associahedron_encode,
    br_shuffle,
    hypercube_encode,
    hypercube_trio_words,
    lr_trio_trees,
    permutohedron_decode,
    permutohedron_encode,
)
from polydendriform.shuffle import Delegation, trio

# %%
# Packed words: the largest letter marks the root of the chain.
f, g = (1, 2, 1), (2, 1)
a, b = permutohedron_decode(f, [1, 2, 3]), permutohedron_decode(g, [4, 5])
print(a, b)
team = make_team(Gamma(float("inf")), [a.carrier, b.carrier], range(1, 6))
ours = trio(Delegation(team, (a, b)), q=1)
for name, x, y in zip(("prec", "dot", "succ"), ours, br_shuffle(f, g)):
    words = sorted(permutohedron_encode(c) for c, _ in x.items())
    print(name, words == sorted(y), words)

# %%
# Schroeder trees: the friezohedron with k = 1 is the associahedron.
s, t = P("1(3(2))"), P("5(4)")
team = make_team(Gamma(1), [[1, 2, 3], [4, 5]], range(1, 6))
for x, y in zip(trio(Delegation(team, (s, t)), q=None), lr_trio_trees(associahedron_encode(s), associahedron_encode(t))):
    print(len(x), {associahedron_encode(c): p for c, p in x.items()} == y)

# %%
# Hypercube words over '+', '-' and '.' at q = -1.
u, v = P("2(1)"), P("34")
team = make_team(Hypercube(), [[1, 2], [3, 4]], [1, 2, 3, 4], SEMISTRICT)
for x, y in zip(trio(Delegation(team, (u, v)), q=-1), hypercube_trio_words(hypercube_encode(u), hypercube_encode(v))):
    print({hypercube_encode(c): p.eval(0) for c, p in x.items()}, dict(y))
