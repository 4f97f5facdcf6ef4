"""Orthogonal representations of graphs and instance checks of the delta conjecture.

The building blocks are a small simple-graph model (:mod:`.graph`, :mod:`.graph6`),
exact rational linear algebra (:mod:`.linalg`), delta-graph recognition
(:mod:`.delta`), the incremental representation solver (:mod:`.solver`) and
exact msr values for classical families (:mod:`.oracles`).
"""

from __future__ import annotations

from .conjecture import check_delta_conjecture, sweep
from .delta import classify, delta_bound, find_delta_ordering
from .errors import CapacityError, FormatError, ParameterError, PreconditionError
from .graph import Graph, cartesian_product, complement, generate, induced_subgraph, stats
from .oracles import edge_clique_cover, msr_base, msr_known
from .solver import (OrthogonalRepresentation, SolverConfig, build_representation,
                     verify_representation)

__version__ = "0.1.0"

__all__ = [
    "CapacityError", "FormatError", "Graph", "OrthogonalRepresentation", "ParameterError",
    "PreconditionError", "SolverConfig", "build_representation", "cartesian_product",
    "check_delta_conjecture", "classify", "complement", "delta_bound", "edge_clique_cover",
    "find_delta_ordering", "generate", "induced_subgraph", "msr_base", "msr_known", "stats",
    "sweep", "verify_representation",
]
