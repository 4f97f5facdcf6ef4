"""Exact minimum semidefinite rank for graph classes where it is known.

Rules used:

* a tree T has msr(T) = |T| - 1
* a cycle C_n has msr = n - 2
* a complete graph has msr = 1
* a connected chordal graph has msr equal to its edge clique cover number
* stripping a pendant vertex lowers msr by exactly one
* msr adds over the two sides of a cut vertex

The single vertex K1 is given msr 0. That is the value which keeps the
tree and pendant rules consistent (msr(K2) = 1 = msr(K1) + 1).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .errors import CapacityError, ParameterError
from .graph import (Graph, components, induced_subgraph, is_chordal, is_complete,
                    is_connected, is_cycle, is_tree, pendant_and_cut_vertices)

METHODS = ("tree", "cycle", "complete", "chordal_cc", "pendant_reduction",
           "cut_vertex_sum", "unknown")

CLIQUE_COVER_CAP = 10


@dataclass(frozen=True)
class MsrVerdict:
    value: int | None
    method: str
    trace: tuple[str, ...] = field(default=())

    @property
    def known(self) -> bool:
        return self.value is not None


# -- edge clique cover -------------------------------------------------------

def maximal_cliques(g: Graph) -> list[frozenset[int]]:
    """Bron-Kerbosch with pivoting; output sorted for determinism."""
    out: list[frozenset[int]] = []

    def expand(r: set[int], p: set[int], x: set[int]) -> None:
        if not p and not x:
            out.append(frozenset(r))
            return
        pivot = max(sorted(p | x), key=lambda u: len(g.adj[u] & p))
        for v in sorted(p - g.adj[pivot]):
            expand(r | {v}, p & g.adj[v], x & g.adj[v])
            p = p - {v}
            x = x | {v}

    expand(set(), set(g.vertices), set())
    return sorted(out, key=lambda c: (-len(c), sorted(c)))


def edge_clique_cover(g: Graph, cap: int = CLIQUE_COVER_CAP) -> tuple[int, list[frozenset[int]]]:
    """Minimum number of cliques covering every edge, with one optimal cover.

    Branch and bound over maximal cliques: branch on the uncovered edge
    contained in the fewest cliques, seeded with a greedy upper bound.
    """
    if g.n > cap:
        raise CapacityError(f"edge clique cover capped at n={cap}, got n={g.n}")
    edges = g.sorted_edges()
    if not edges:
        return 0, []
    cliques = [c for c in maximal_cliques(g) if len(c) >= 2]
    cover_sets = [frozenset(e for e in combinations(sorted(c), 2)) for c in cliques]
    containing = {e: [k for k, s in enumerate(cover_sets) if e in s] for e in edges}
    largest = max(len(s) for s in cover_sets)

    # greedy upper bound
    uncovered = set(edges)
    greedy: list[int] = []
    while uncovered:
        k = max(range(len(cover_sets)), key=lambda k: (len(cover_sets[k] & uncovered), -k))
        greedy.append(k)
        uncovered -= cover_sets[k]
    best = list(greedy)

    def search(uncovered: frozenset, chosen: list[int]) -> None:
        nonlocal best
        if not uncovered:
            if len(chosen) < len(best):
                best = list(chosen)
            return
        if len(chosen) + -(-len(uncovered) // largest) >= len(best):
            return
        e = min(sorted(uncovered), key=lambda e: len(containing[e]))
        for k in containing[e]:
            chosen.append(k)
            search(uncovered - cover_sets[k], chosen)
            chosen.pop()

    search(frozenset(edges), [])
    return len(best), [cliques[k] for k in sorted(best)]


# -- base results and reductions --------------------------------------------

def _require_connected(g: Graph) -> None:
    if not is_connected(g):
        raise ParameterError("msr rules here need a connected graph")


def msr_base(g: Graph) -> MsrVerdict:
    _require_connected(g)
    n = g.n
    if n == 1:
        return MsrVerdict(0, "tree", ("K1 -> 0",))
    if is_tree(g):
        return MsrVerdict(n - 1, "tree", (f"tree on {n} vertices -> {n - 1}",))
    if is_cycle(g):
        return MsrVerdict(n - 2, "cycle", (f"C{n} -> {n - 2}",))
    if is_complete(g):
        return MsrVerdict(1, "complete", (f"K{n} -> 1",))
    chordal, _ = is_chordal(g)
    if chordal and n <= CLIQUE_COVER_CAP:
        cc, _ = edge_clique_cover(g)
        return MsrVerdict(cc, "chordal_cc", (f"chordal, cc = {cc}",))
    return MsrVerdict(None, "unknown", ("no base rule applies",))


@dataclass(frozen=True)
class PendantReduction:
    core: Graph
    count: int
    core_vertices: tuple[int, ...]   # original labels of the core, ascending
    stripped: tuple[int, ...]        # original labels, in stripping order


def reduce_pendant(g: Graph) -> PendantReduction:
    """Strip degree-1 vertices until none remain; msr(g) = msr(core) + count."""
    _require_connected(g)
    alive = set(g.vertices)
    stripped = []
    while True:
        pend = next((v for v in sorted(alive)
                     if len(g.adj[v] & alive) == 1), None)
        if pend is None:
            break
        alive.discard(pend)
        stripped.append(pend)
    core = induced_subgraph(g, alive)
    return PendantReduction(core, len(stripped), tuple(sorted(alive)), tuple(stripped))


def decompose_cut_vertex(g: Graph) -> list[tuple[int, ...]] | None:
    """Split at cut vertices recursively; return vertex sets of the pieces.

    Returns None when g has no cut vertex. Each piece is 2-connected or K2.
    """
    _require_connected(g)
    _, cuts = pendant_and_cut_vertices(g)
    if not cuts:
        return None
    c = cuts[0]
    pieces = []
    for comp in components(g, removed=[c]):
        part = sorted(set(comp) | {c})
        sub = induced_subgraph(g, part)
        inner = decompose_cut_vertex(sub)
        if inner is None:
            pieces.append(tuple(part))
        else:
            pieces.extend(tuple(part[i - 1] for i in piece) for piece in inner)
    return sorted(pieces)


def msr_known(g: Graph) -> MsrVerdict:
    """Pendant stripping, then cut-vertex splitting, then base rules per piece."""
    _require_connected(g)
    red = reduce_pendant(g)
    trace = []
    if red.count:
        trace.append(f"stripped {red.count} pendant vertices {list(red.stripped)}")
    pieces = decompose_cut_vertex(red.core)
    if pieces is None:
        base = msr_base(red.core)
        if base.value is None:
            return MsrVerdict(None, "unknown", tuple(trace) + base.trace)
        method = "pendant_reduction" if red.count else base.method
        return MsrVerdict(base.value + red.count, method, tuple(trace) + base.trace)
    total = red.count
    for piece in pieces:
        labels = [red.core_vertices[i - 1] for i in piece]
        base = msr_base(induced_subgraph(red.core, piece))
        trace.append(f"block {labels}: " + "; ".join(base.trace))
        if base.value is None:
            return MsrVerdict(None, "unknown", tuple(trace))
        total += base.value
    method = "pendant_reduction" if red.count else "cut_vertex_sum"
    return MsrVerdict(total, method, tuple(trace))
