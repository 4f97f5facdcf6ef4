"""Vertex-by-vertex construction of orthogonal representations.

For a target graph H and an ordering v1..vn, vertex v_m receives a vector
k in Q^d such that <k, v_j> = 0 for every earlier non-neighbour v_j and
<k, v_j> = g_j != 0 for every earlier neighbour. The unknown nonzero
values g_j are appended as auxiliary unknowns with coefficient -1, turning
each step into a homogeneous system A w = 0 over Q^(d+p). Free variables of
its nullspace are filled from a fixed value pool until the auxiliary values
are nonzero and the new vector is pairwise independent of all earlier
ones. When a vertex admits no such choice, the earliest earlier vertex with
spare freedom is revised and construction resumes from there.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field, replace
from fractions import Fraction
from itertools import combinations, product
from typing import Iterator, Sequence

from . import graph6
from .errors import FormatError, ParameterError
from .graph import Graph, check_ordering
from .linalg import (RationalMatrix, Vector, dot, gram_matrix, pairwise_independent,
                     parallel, primitive_integer, psd_pivots, rank, solve_parametric,
                     vectors_as_matrix)

SEED_POLICIES = ("sparse", "generic")


@dataclass(frozen=True)
class SolverConfig:
    """Deterministic search settings.

    ``seed_vector_policy`` picks the free-variable enumeration. ``sparse``
    tries assignments with the fewest nonzero free coordinates first (the
    empty system then yields e1, e2, ...). ``generic`` gives every free
    coordinate a pool value. Auxiliary unknowns always take nonzero pool
    values. When a pass aborts and ``fallback_policy`` is set, the whole
    build is rerun once under that policy.
    """
    value_pool: tuple[int, ...] = (1, -1, 2, -2, 3, -3)
    max_backtracks: int = 500
    max_assignments: int = 20000
    max_alternatives: int = 8
    seed_vector_policy: str = "sparse"
    fallback_policy: str | None = "generic"

    def __post_init__(self) -> None:
        if not self.value_pool or 0 in self.value_pool:
            raise ParameterError("value_pool must be nonempty and exclude 0")
        if len(set(self.value_pool)) != len(self.value_pool):
            raise ParameterError("value_pool has repeated values")
        if self.seed_vector_policy not in SEED_POLICIES:
            raise ParameterError(f"seed_vector_policy must be one of {SEED_POLICIES}")
        if self.fallback_policy not in (None, *SEED_POLICIES):
            raise ParameterError(f"fallback_policy must be None or one of {SEED_POLICIES}")
        if self.max_alternatives < 1 or self.max_assignments < 1 or self.max_backtracks < 0:
            raise ParameterError("search limits must be positive")


@dataclass(frozen=True)
class ConstraintSystem:
    unknown_count: int                  # d
    aux_count: int                      # p
    matrix: RationalMatrix              # (m-1) x (d+p)
    aux_map: dict[int, int]             # predecessor rank (0-based) -> aux column
    previous: tuple[Vector, ...]


def build_constraint_system(previous: Sequence[Sequence], adjacency_row: Sequence[bool],
                            d: int) -> ConstraintSystem:
    """One row per predecessor: its vector, then -1 in its aux column if adjacent."""
    if len(previous) != len(adjacency_row):
        raise ParameterError("one adjacency flag per previous vector required")
    prev = tuple(tuple(Fraction(x) for x in v) for v in previous)
    for v in prev:
        if len(v) != d:
            raise ParameterError(f"previous vector of length {len(v)} in dimension {d}")
    aux_map = {}
    for j, adjacent in enumerate(adjacency_row):
        if adjacent:
            aux_map[j] = d + len(aux_map)
    p = len(aux_map)
    rows = []
    for j, v in enumerate(prev):
        row = list(v) + [Fraction(0)] * p
        if j in aux_map:
            row[aux_map[j]] = Fraction(-1)
        rows.append(row)
    return ConstraintSystem(d, p, RationalMatrix.from_rows(rows, d + p), aux_map, prev)


@dataclass(frozen=True)
class Extension:
    vector: tuple[int, ...]             # primitive integer vector
    aux_values: tuple[int, ...]         # inner products with adjacent predecessors
    alternative: int                    # index among accepted candidates
    nullspace_dimension: int


def _assignments(free: Sequence[int], d: int, config: SolverConfig) -> Iterator[dict[int, int]]:
    kfree = [c for c in free if c < d]
    afree = [c for c in free if c >= d]
    pool = config.value_pool
    if config.seed_vector_policy == "generic":
        for vals in product(pool, repeat=len(free)):
            yield dict(zip(free, vals))
        return
    for w in range(len(kfree) + 1):
        for cols in combinations(kfree, w):
            for vals in product(pool, repeat=w + len(afree)):
                yield dict(zip(list(cols) + afree, vals))


def candidates(system: ConstraintSystem, config: SolverConfig) -> Iterator[Extension]:
    """Accepted extensions in deterministic order, distinct up to scaling."""
    d = system.unknown_count
    sol = solve_parametric(system.matrix)
    if sol.dimension == 0:
        return
    accepted: list[tuple[int, ...]] = []
    for count, assign in enumerate(_assignments(sol.free_cols, d, config)):
        if count >= config.max_assignments:
            return
        w = sol.evaluate([assign.get(c, 0) for c in sol.free_cols])
        k, aux = w[:d], w[d:]
        if not any(k) or not all(aux):
            continue
        if any(parallel(k, v) for v in system.previous):
            continue
        vec = primitive_integer(k)
        if any(parallel(vec, a) for a in accepted):
            continue
        accepted.append(vec)
        aux_vals = tuple(int(dot(vec, system.previous[j])) for j in sorted(system.aux_map))
        yield Extension(vec, aux_vals, len(accepted) - 1, sol.dimension)


def extend_vertex(system: ConstraintSystem, config: SolverConfig | None = None,
                  alternative: int = 0) -> Extension | None:
    """The ``alternative``-th accepted extension, or None when infeasible."""
    config = config or SolverConfig()
    for ext in candidates(system, config):
        if ext.alternative == alternative:
            return ext
    return None


@dataclass(frozen=True)
class OrthogonalRepresentation:
    """Vectors are stored by vertex: ``vectors[v-1]`` belongs to vertex v."""
    graph: Graph
    order: tuple[int, ...]
    dimension: int
    vectors: tuple[tuple[int, ...], ...]

    def to_json(self) -> str:
        return json.dumps({
            "graph6": graph6.encode(self.graph),
            "order": list(self.order),
            "dimension": self.dimension,
            "vectors": [[str(x) for x in v] for v in self.vectors],
        }, indent=1)

    @classmethod
    def from_json(cls, text: str) -> OrthogonalRepresentation:
        try:
            data = json.loads(text)
            g = graph6.decode(data["graph6"])
            order = tuple(check_ordering(data["order"], g.n))
            dim = int(data["dimension"])
            vectors = tuple(tuple(int(x) for x in v) for v in data["vectors"])
        except (KeyError, TypeError, ValueError) as exc:
            raise FormatError(f"malformed representation JSON: {exc}") from exc
        if len(vectors) != g.n or any(len(v) != dim for v in vectors):
            raise FormatError("vector count or length disagrees with graph6/dimension")
        return cls(g, order, dim, vectors)


@dataclass(frozen=True)
class TraceEvent:
    kind: str        # place, infeasible, revise, abort, restart
    rank: int        # 1-based position in the ordering
    vertex: int
    vector: tuple[int, ...] | None = None
    alternative: int = 0


@dataclass
class BuildResult:
    success: bool
    representation: OrthogonalRepresentation | None
    trace: list[TraceEvent] = field(default_factory=list)
    backtracks: int = 0

    def events(self, kind: str) -> list[TraceEvent]:
        return [e for e in self.trace if e.kind == kind]


def build_representation(h: Graph, order: Sequence[int] | None = None, d: int = 1,
                         config: SolverConfig | None = None) -> BuildResult:
    """Construct an orthogonal representation of ``h`` in Q^d.

    A failed build is not evidence that no representation exists.
    """
    config = config or SolverConfig()
    order = check_ordering(list(h.vertices) if order is None else order, h.n)
    if d < 1:
        raise ParameterError(f"dimension must be positive, got {d}")

    placed, trace, backtracks = _build_pass(h, order, d, config)
    fallback = config.fallback_policy
    if placed is None and fallback is not None and fallback != config.seed_vector_policy:
        trace.append(TraceEvent("restart", 1, order[0]))
        retry = replace(config, seed_vector_policy=fallback, fallback_policy=None)
        placed, more, extra = _build_pass(h, order, d, retry)
        trace.extend(more)
        backtracks += extra
    if placed is None:
        return BuildResult(False, None, trace, backtracks)

    by_vertex: list[tuple[int, ...]] = [()] * h.n
    for rank_, v in enumerate(order):
        by_vertex[v - 1] = primitive_integer(placed[rank_])
    rep = OrthogonalRepresentation(h, tuple(order), d, tuple(by_vertex))
    return BuildResult(True, rep, trace, backtracks)


def _build_pass(h: Graph, order: list[int], d: int, config: SolverConfig
                ) -> tuple[list[tuple[int, ...]] | None, list[TraceEvent], int]:
    n = h.n
    choice = [0] * n
    exhausted = [False] * n
    freedom = [0] * n
    placed: list[tuple[int, ...]] = []
    trace: list[TraceEvent] = []
    backtracks = 0
    m = 0
    while m < n:
        v = order[m]
        adjacency = [h.has_edge(order[j], v) for j in range(m)]
        system = build_constraint_system(placed[:m], adjacency, d)
        ext = None
        if choice[m] < config.max_alternatives:
            ext = extend_vertex(system, config, choice[m])
        if ext is not None:
            del placed[m:]
            placed.append(ext.vector)
            freedom[m] = ext.nullspace_dimension
            trace.append(TraceEvent("place", m + 1, v, ext.vector, ext.alternative))
            m += 1
            continue

        trace.append(TraceEvent("infeasible", m + 1, v, None, choice[m]))
        if backtracks >= config.max_backtracks:
            trace.append(TraceEvent("abort", m + 1, v))
            return None, trace, backtracks
        if choice[m] > 0:
            # a revision target ran out of alternatives: restore its first
            # choice and let the next failure revise a later vertex
            exhausted[m] = True
            choice[m] = 0
            backtracks += 1
            trace.append(TraceEvent("revise", m + 1, v, None, 0))
            continue
        target = next((j for j in range(m) if freedom[j] > 1 and not exhausted[j]), None)
        if target is None:
            trace.append(TraceEvent("abort", m + 1, v))
            return None, trace, backtracks
        backtracks += 1
        choice[target] += 1
        for k in range(target + 1, n):
            choice[k] = 0
            exhausted[k] = False
        trace.append(TraceEvent("revise", target + 1, order[target], None, choice[target]))
        m = target
    return placed, trace, backtracks


@dataclass(frozen=True)
class VerificationReport:
    pattern_ok: bool
    pairwise_ok: bool
    rank: int
    psd_ok: bool
    bound: int
    failures: tuple[tuple[int, int, bool, int], ...]   # (i, j, edge expected, inner product)
    dependent_pair: tuple[int, int] | None = None
    pivots: tuple[Fraction, ...] = ()

    @property
    def ok(self) -> bool:
        return self.pattern_ok and self.pairwise_ok and self.psd_ok and self.rank <= self.bound


def verify_representation(h: Graph, rep: OrthogonalRepresentation) -> VerificationReport:
    if rep.graph != h:
        raise ParameterError("representation was built for a different graph")
    if len(rep.vectors) != h.n:
        raise ParameterError(f"{len(rep.vectors)} vectors for a graph on {h.n} vertices")
    gram = gram_matrix(rep.vectors)
    failures = []
    for i in range(1, h.n + 1):
        for j in range(i + 1, h.n + 1):
            ip = gram[i - 1, j - 1]
            expected = h.has_edge(i, j)
            if (ip != 0) != expected:
                failures.append((i, j, expected, int(ip)))
    indep = pairwise_independent(rep.vectors)
    psd = psd_pivots(gram)
    return VerificationReport(
        pattern_ok=not failures,
        pairwise_ok=indep.ok,
        rank=rank(vectors_as_matrix(rep.vectors)),
        psd_ok=psd.is_psd,
        bound=rep.dimension,
        failures=tuple(failures),
        dependent_pair=indep.pair,
        pivots=psd.pivots,
    )
