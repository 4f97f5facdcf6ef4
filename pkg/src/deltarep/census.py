"""Isomorphism classes of small graphs.

Canonical forms come from colour refinement plus individualisation: the
canonical labelling is the one whose adjacency bit string (graph6 order) is
lexicographically largest among the leaves of the search tree. Classes on n
vertices are grown from classes on n-1 vertices by adding one vertex with
every possible neighbourhood.
"""

from __future__ import annotations

from functools import lru_cache

from . import graph6
from .graph import Graph, is_connected, complement, relabel

MAX_N = 8


def _refine(g: Graph, colors: list[int]) -> list[int]:
    # colors indexed by vertex - 1; returns an equitable colouring with
    # labelling-invariant colour names 0..k-1
    n = g.n
    while True:
        sigs = [(colors[v - 1], tuple(sorted(colors[u - 1] for u in g.adj[v])))
                for v in range(1, n + 1)]
        names = {s: k for k, s in enumerate(sorted(set(sigs)))}
        new = [names[s] for s in sigs]
        if len(set(new)) == len(set(colors)):
            return new
        colors = new


def _bits(g: Graph, order: list[int]) -> tuple[int, ...]:
    return tuple(1 if g.has_edge(order[i], order[j]) else 0
                 for j in range(1, g.n) for i in range(j))


def canonical_order(g: Graph) -> list[int]:
    """Vertex ordering giving the canonical labelling of ``g``."""
    best: list = [None, None]

    def search(colors: list[int]) -> None:
        colors = _refine(g, colors)
        k = len(set(colors))
        if k == g.n:
            order = sorted(range(1, g.n + 1), key=lambda v: colors[v - 1])
            bits = _bits(g, order)
            if best[0] is None or bits > best[0]:
                best[0], best[1] = bits, order
            return
        sizes = {}
        for c in colors:
            sizes[c] = sizes.get(c, 0) + 1
        cell = min((c for c in sizes if sizes[c] > 1), key=lambda c: (sizes[c], c))
        for v in range(1, g.n + 1):
            if colors[v - 1] == cell:
                search([2 * c + (1 if c == cell and u != v else 0)
                        for u, c in enumerate(colors, start=1)])

    search([0] * g.n)
    return best[1]


def canonical_form(g: Graph) -> str:
    """graph6 string of the canonical relabelling; equal iff isomorphic."""
    return graph6.encode(relabel(g, canonical_order(g)))


def canonical_graph(g: Graph) -> Graph:
    return relabel(g, canonical_order(g))


@lru_cache(maxsize=None)
def all_graphs(n: int) -> tuple[str, ...]:
    """Canonical graph6 strings of all graphs on n vertices, sorted."""
    if n < 1 or n > MAX_N:
        raise ValueError(f"census supports 1 <= n <= {MAX_N}")
    if n == 1:
        return (graph6.encode(Graph(1)),)
    found = set()
    for code in all_graphs(n - 1):
        base = graph6.decode(code)
        for mask in range(1 << (n - 1)):
            extra = [(v, n) for v in range(1, n) if mask >> (v - 1) & 1]
            g = Graph.from_edges(n, list(base.edges) + extra)
            found.add(canonical_form(g))
    return tuple(sorted(found))


def doubly_connected_graphs(n: int) -> list[Graph]:
    """Connected graphs on n vertices whose complement is connected."""
    out = []
    for code in all_graphs(n):
        g = graph6.decode(code)
        if is_connected(g) and is_connected(complement(g)):
            out.append(g)
    return out
