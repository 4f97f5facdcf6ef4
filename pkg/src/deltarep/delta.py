"""Recognition of delta-graphs and C-delta-graphs.

A delta ordering v1..vn of a graph G satisfies

1. v1, v2, v3 induce either three isolated vertices or one edge plus an
   isolated vertex, and
2. every later vertex v_m (m >= 4) is non-adjacent to at most
   ``m // 2 - 1`` of its predecessors.

G must have at least four vertices and both G and its complement must be
connected. A C-delta-graph is a graph whose complement is a delta-graph.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Sequence

from .errors import ParameterError, PreconditionError
from .graph import Graph, check_ordering, complement, stats


def budget(m: int) -> int:
    """Non-adjacency allowance for the vertex at 1-based position m."""
    return m // 2 - 1


@dataclass(frozen=True)
class DeltaCertificate:
    order: tuple[int, ...]
    first_three_kind: str           # "threeK1" or "K2plusK1"
    missed: tuple[int, ...]         # positions 4..n
    budget: tuple[int, ...]         # positions 4..n


@dataclass(frozen=True)
class DeltaViolation:
    """Why an ordering is not a delta ordering.

    ``position`` is the first failing 1-based position (3 when the seed
    triple fails). ``failures`` lists every failing position together with
    its missed count and allowance; the seed failure is reported with the
    number of edges among the first three vertices.
    """
    position: int
    reason: str
    failures: tuple[tuple[int, int, int], ...] = field(default=())


def check_preconditions(g: Graph) -> None:
    if g.n < 4:
        raise PreconditionError(f"delta-graph definition needs n >= 4, got {g.n}")
    st = stats(g)
    if not st.connected:
        raise PreconditionError("graph is disconnected")
    if not st.complement_connected:
        raise PreconditionError("complement is disconnected")


def _seed_kind(g: Graph, a: int, b: int, c: int) -> str | None:
    e = g.has_edge(a, b) + g.has_edge(a, c) + g.has_edge(b, c)
    return {0: "threeK1", 1: "K2plusK1"}.get(e)


def check_delta_ordering(g: Graph, order: Sequence[int]) -> DeltaCertificate | DeltaViolation:
    check_preconditions(g)
    order = check_ordering(order, g.n)
    failures = []
    kind = _seed_kind(g, *order[:3])
    if kind is None:
        edges = sum(g.has_edge(a, b) for a, b in combinations(order[:3], 2))
        failures.append((3, edges, 1))
    missed, allow = [], []
    for m in range(4, g.n + 1):
        v = order[m - 1]
        miss = sum(1 for u in order[:m - 1] if not g.has_edge(u, v))
        missed.append(miss)
        allow.append(budget(m))
        if miss > budget(m):
            failures.append((m, miss, budget(m)))
    if failures:
        pos = failures[0][0]
        reason = ("first three vertices induce more than one edge" if pos == 3
                  else f"vertex at position {pos} misses {failures[0][1]} predecessors, "
                       f"allowance {failures[0][2]}")
        return DeltaViolation(pos, reason, tuple(failures))
    return DeltaCertificate(tuple(order), kind, tuple(missed), tuple(allow))


def find_delta_ordering(g: Graph) -> DeltaCertificate | None:
    """Exhaustive search for a delta ordering.

    Seeds (3-subsets in lexicographic order) are tried first; each seed is
    extended depth-first, always trying the lowest-index admissible vertex.
    Whether a prefix can be completed depends only on its vertex set, so
    dead sets are memoised and the search is exhaustive in O(2^n n) steps.
    """
    check_preconditions(g)
    n = g.n
    adj = [0] * (n + 1)
    for i, j in g.edges:
        adj[i] |= 1 << j
        adj[j] |= 1 << i
    full = sum(1 << v for v in range(1, n + 1))
    dead: set[int] = set()

    def extend(placed: int, order: list[int]) -> list[int] | None:
        if placed == full:
            return order
        if placed in dead:
            return None
        m = len(order) + 1
        for v in range(1, n + 1):
            if placed >> v & 1:
                continue
            miss = bin(placed & ~adj[v]).count("1")
            if miss <= budget(m):
                order.append(v)
                found = extend(placed | 1 << v, order)
                if found is not None:
                    return found
                order.pop()
        dead.add(placed)
        return None

    for seed in combinations(range(1, n + 1), 3):
        if _seed_kind(g, *seed) is None:
            continue
        found = extend(sum(1 << v for v in seed), list(seed))
        if found is not None:
            cert = check_delta_ordering(g, found)
            assert isinstance(cert, DeltaCertificate)
            return cert
    return None


@dataclass(frozen=True)
class DeltaClass:
    kind: str                                   # delta, c_delta, both, neither
    certificate: DeltaCertificate | None = None  # for the graph itself
    complement_certificate: DeltaCertificate | None = None


def classify(g: Graph) -> DeltaClass:
    own = find_delta_ordering(g)
    comp = find_delta_ordering(complement(g))
    kind = {(True, True): "both", (True, False): "delta",
            (False, True): "c_delta", (False, False): "neither"}[(own is not None, comp is not None)]
    return DeltaClass(kind, own, comp)


def delta_bound(g: Graph, cert: DeltaCertificate) -> int:
    """Dimension ``Delta(complement) + 1``, checked equal to ``n - delta(g)``."""
    result = check_delta_ordering(g, cert.order)
    if not isinstance(result, DeltaCertificate):
        raise ParameterError(f"certificate does not validate: {result.reason}")
    d = stats(complement(g)).max_degree + 1
    assert d == g.n - stats(g).min_degree
    return d
