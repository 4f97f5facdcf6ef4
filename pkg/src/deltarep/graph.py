"""Simple undirected graphs on vertices 1..n.

Vertices are always the consecutive integers ``1..n``. Edges are stored as
sorted pairs ``(i, j)`` with ``i < j``. Graph values are immutable.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Iterable, Sequence

from .errors import ParameterError

Edge = tuple[int, int]

FAMILY_MINIMUM = {
    "path": 1,
    "cycle": 3,
    "complete": 1,
    "mobius_ladder": 3,
    "prism": 3,
    "star": 2,
}


def _norm(i: int, j: int) -> Edge:
    return (i, j) if i < j else (j, i)


@dataclass(frozen=True)
class Graph:
    n: int
    edges: frozenset[Edge] = field(default_factory=frozenset)

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ParameterError(f"vertex count must be nonnegative, got {self.n}")
        clean = set()
        for e in self.edges:
            i, j = e
            if i == j:
                raise ParameterError(f"self-loop at vertex {i}")
            if not (1 <= i <= self.n and 1 <= j <= self.n):
                raise ParameterError(f"edge {e} has an endpoint outside 1..{self.n}")
            clean.add(_norm(i, j))
        object.__setattr__(self, "edges", frozenset(clean))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> Graph:
        return cls(n, frozenset(tuple(e) for e in edges))

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    @cached_property
    def adj(self) -> dict[int, frozenset[int]]:
        nbrs: dict[int, set[int]] = {v: set() for v in self.vertices}
        for i, j in self.edges:
            nbrs[i].add(j)
            nbrs[j].add(i)
        return {v: frozenset(s) for v, s in nbrs.items()}

    def has_edge(self, i: int, j: int) -> bool:
        return _norm(i, j) in self.edges

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.sorted_edges()})"


@dataclass(frozen=True)
class GraphStats:
    min_degree: int
    max_degree: int
    connected: bool
    complement_connected: bool
    degree_sequence: list[int]


def check_ordering(order: Sequence[int], n: int) -> list[int]:
    """Return ``order`` as a list, raising unless it is a permutation of 1..n."""
    order = [int(v) for v in order]
    if sorted(order) != list(range(1, n + 1)):
        raise ParameterError(f"ordering {order} is not a permutation of 1..{n}")
    return order


# -- generators ------------------------------------------------------------

def generate(family: str, k: int) -> Graph:
    """Build a named graph with its canonical numbering.

    Cycles and Mobius ladders are numbered clockwise around their outer
    cycle. ``mobius_ladder`` with parameter k has 2k vertices (the cycle
    C_2k plus the k antipodal chords ``{i, i+k}``). ``prism`` with parameter
    k numbers the outer k-cycle 1..k, the inner k-cycle k+1..2k, and joins
    ``i`` to ``i+k``. ``star`` with parameter k has k vertices, centre 1.
    """
    if family not in FAMILY_MINIMUM:
        raise ParameterError(f"unknown family {family!r}; choose from {sorted(FAMILY_MINIMUM)}")
    if k < FAMILY_MINIMUM[family]:
        raise ParameterError(f"{family} needs k >= {FAMILY_MINIMUM[family]}, got {k}")

    if family == "path":
        return Graph.from_edges(k, [(i, i + 1) for i in range(1, k)])
    if family == "cycle":
        return Graph.from_edges(k, _cycle_edges(range(1, k + 1)))
    if family == "complete":
        return Graph.from_edges(k, combinations(range(1, k + 1), 2))
    if family == "mobius_ladder":
        edges = _cycle_edges(range(1, 2 * k + 1)) + [(i, i + k) for i in range(1, k + 1)]
        return Graph.from_edges(2 * k, edges)
    if family == "prism":
        edges = (_cycle_edges(range(1, k + 1))
                 + _cycle_edges(range(k + 1, 2 * k + 1))
                 + [(i, i + k) for i in range(1, k + 1)])
        return Graph.from_edges(2 * k, edges)
    # star
    return Graph.from_edges(k, [(1, i) for i in range(2, k + 1)])


def _cycle_edges(vs: Iterable[int]) -> list[Edge]:
    vs = list(vs)
    return [(vs[i], vs[(i + 1) % len(vs)]) for i in range(len(vs))]


# -- operations ------------------------------------------------------------

def complement(g: Graph) -> Graph:
    return Graph.from_edges(
        g.n, (e for e in combinations(g.vertices, 2) if e not in g.edges))


def cartesian_product(g: Graph, h: Graph) -> Graph:
    """Cartesian product with row-major flattening ``(u, v) -> (u-1)*|h| + v``."""
    if g.n == 0 or h.n == 0:
        raise ParameterError("cartesian product needs two nonempty graphs")
    nh = h.n

    def idx(u: int, v: int) -> int:
        return (u - 1) * nh + v

    edges = []
    for u in g.vertices:
        for a, b in h.edges:
            edges.append((idx(u, a), idx(u, b)))
    for v in h.vertices:
        for a, b in g.edges:
            edges.append((idx(a, v), idx(b, v)))
    return Graph.from_edges(g.n * nh, edges)


def product_label(index: int, nh: int) -> tuple[int, int]:
    """Inverse of the row-major flattening used by :func:`cartesian_product`."""
    return ((index - 1) // nh + 1, (index - 1) % nh + 1)


def induced_subgraph(g: Graph, vs: Iterable[int]) -> Graph:
    """Subgraph induced by ``vs``, relabelled 1..|vs| in ascending order of ``vs``."""
    vs = sorted(set(vs))
    if not vs:
        raise ParameterError("induced subgraph of an empty vertex set")
    for v in vs:
        if not 1 <= v <= g.n:
            raise ParameterError(f"vertex {v} outside 1..{g.n}")
    pos = {v: k for k, v in enumerate(vs, start=1)}
    return Graph.from_edges(
        len(vs), ((pos[i], pos[j]) for i, j in g.edges if i in pos and j in pos))


def relabel(g: Graph, order: Sequence[int]) -> Graph:
    """Graph whose vertex k is ``order[k-1]`` of ``g``."""
    order = check_ordering(order, g.n)
    pos = {v: k for k, v in enumerate(order, start=1)}
    return Graph.from_edges(g.n, ((pos[i], pos[j]) for i, j in g.edges))


def components(g: Graph, removed: Iterable[int] = ()) -> list[list[int]]:
    """Connected components (BFS), ignoring the vertices in ``removed``."""
    removed = set(removed)
    seen: set[int] = set()
    comps = []
    for s in g.vertices:
        if s in removed or s in seen:
            continue
        comp = [s]
        seen.add(s)
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in g.adj[u]:
                if w not in seen and w not in removed:
                    seen.add(w)
                    comp.append(w)
                    queue.append(w)
        comps.append(sorted(comp))
    return comps


def is_connected(g: Graph) -> bool:
    return g.n > 0 and len(components(g)) == 1


def stats(g: Graph) -> GraphStats:
    degs = [g.degree(v) for v in g.vertices]
    return GraphStats(
        min_degree=min(degs, default=0),
        max_degree=max(degs, default=0),
        connected=is_connected(g),
        complement_connected=is_connected(complement(g)),
        degree_sequence=degs,
    )


def pendant_and_cut_vertices(g: Graph) -> tuple[list[int], list[int]]:
    pendants = [v for v in g.vertices if g.degree(v) == 1]
    base = len(components(g))
    cuts = [v for v in g.vertices if len(components(g, removed=[v])) > base]
    return pendants, cuts


def is_chordal(g: Graph) -> tuple[bool, list[int] | None]:
    """Chordality test by maximum-cardinality search.

    Returns ``(True, peo)`` where ``peo`` is a perfect elimination ordering
    (each vertex's later neighbours form a clique), or ``(False, None)``.
    """
    weight = {v: 0 for v in g.vertices}
    visit: list[int] = []
    unvisited = set(g.vertices)
    while unvisited:
        v = max(sorted(unvisited), key=lambda u: weight[u])
        visit.append(v)
        unvisited.discard(v)
        for w in g.adj[v]:
            if w in unvisited:
                weight[w] += 1
    peo = visit[::-1]
    if is_perfect_elimination_ordering(g, peo):
        return True, peo
    return False, None


def is_perfect_elimination_ordering(g: Graph, order: Sequence[int]) -> bool:
    pos = {v: k for k, v in enumerate(order)}
    for v in order:
        later = [w for w in g.adj[v] if pos[w] > pos[v]]
        for a, b in combinations(later, 2):
            if not g.has_edge(a, b):
                return False
    return True


def is_tree(g: Graph) -> bool:
    return is_connected(g) and len(g.edges) == g.n - 1


def is_cycle(g: Graph) -> bool:
    return g.n >= 3 and is_connected(g) and all(g.degree(v) == 2 for v in g.vertices)


def is_complete(g: Graph) -> bool:
    return len(g.edges) == g.n * (g.n - 1) // 2
