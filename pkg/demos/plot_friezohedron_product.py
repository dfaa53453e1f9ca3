"""
Products on friezohedra
=======================

Two faces of smaller friezohedra combine into a sum of faces of a bigger
one.  Every term carries a power of ``q`` that counts how often roots merged.
"""

from polydendriform.clans import Gamma
from polydendriform.constructs import count_by_nodes, parse_construct
from polydendriform.hypergraph import friezohedron_hypergraph
from polydendriform.qalgebra import coefficient_sum
from polydendriform.shuffle import make_delegation, measure, shuffle, shuffle_nonrecursive, trio

# %%
# Faces of the compact friezohedra, counted by number of nodes.
for n in range(1, 6):
    print(n, count_by_nodes(friezohedron_hypergraph(range(1, n + 1))))

# %%
# The team is read off the factors: carriers {1, 2} and {3, 4} inside F_{1..4}.
d = make_delegation(Gamma(2), [parse_construct("2(1)"), parse_construct("3(4)")])
product = shuffle(d)
print(product)
print("coefficient sum:", coefficient_sum(product))

# %%
# The exponent of q is the measure of each term.
for c, coeff in product.items():
    print(c.notation(), coeff, measure(d.team, c))

# %%
# Summing over constructs that restrict to both factors gives the same result.
assert shuffle_nonrecursive(d) == product

# %%
# The binary splitting by which factor reaches the root.
prec, dot, succ = trio(d)
print("prec:", prec)
print("dot: ", dot)
print("succ:", succ)
