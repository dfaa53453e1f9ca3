"""
Why simplices need q = -1
=========================

On simplices a participant can dissolve into singletons.  Associativity then
only holds after setting ``q = -1``, which this script makes visible.
"""

from polydendriform.clans import SEMISTRICT, Simplex, make_team
from polydendriform.constructs import parse_construct as P
from polydendriform.qalgebra import evaluate_q
from polydendriform.shuffle import Delegation, make_delegation, shuffle, shuffle_B

# %%
# The inner product of two simplex faces, kept symbolic.
inner = shuffle(make_delegation(Simplex(), [P("2(3)"), P("4(5,6)")], mode=SEMISTRICT), q=None)
print(inner)

# %%
# Nested: the vertex 1 takes the root over the inner product.
team = make_team(Simplex(), [[1], [2, 3, 4, 5, 6]], range(1, 7), SEMISTRICT)
nested = shuffle_B(Delegation(team, (P("1"), inner)), {0}, q=None)

# %%
# Flat: the same summand taken directly on three participants.
flat = shuffle_B(make_delegation(Simplex(), [P("1"), P("2(3)"), P("4(5,6)")], mode=SEMISTRICT), {0}, q=None)
print("nested:", nested)
print("flat:  ", flat)

# %%
# They agree exactly at q = -1.
for value in (-1, 0, 1):
    print(value, evaluate_q(nested, value) == evaluate_q(flat, value))
