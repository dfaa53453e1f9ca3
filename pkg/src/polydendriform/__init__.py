"""Shuffle products on the faces of hypergraph polytopes."""

from .clans import (
    SEMISTRICT,
    STRICT,
    Erosohedron,
    Explicit,
    Gamma,
    Hypercube,
    Mode,
    Simplex,
    Team,
    brute_force_strict,
    decompose,
    graft_team,
    is_strict,
    make_team,
    parse_universe,
)
from .constructs import (
    Construct,
    count_by_nodes,
    enumerate_constructs,
    parse_construct,
    restrict_construct,
    tube_to_construct,
    tubing,
    validate,
)
from .hypergraph import (
    EMPTY,
    Hypergraph,
    erosohedron_hypergraph,
    friezohedron_hypergraph,
    gamma_hypergraph,
    hypercube_hypergraph,
    simplex_hypergraph,
)
from .qalgebra import LinearConstruct, QPolynomial, coefficient_sum, evaluate_q, q
from .shuffle import (
    Delegation,
    check_associativity,
    check_polydendriform,
    check_tridendriform,
    make_delegation,
    measure,
    shuffle,
    shuffle_B,
    shuffle_nonrecursive,
    trio,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
