"""Instance checks of the delta conjecture msr(G) <= |G| - delta(G).

Two routes can settle an instance. The exact route evaluates msr with the
known-result dispatcher in :mod:`deltarep.oracles`. The constructive route
builds an orthogonal representation in dimension |G| - delta(G) and
certifies it, which bounds msr from above. A solver failure never counts
against the conjecture; only an exact msr above the bound would.
"""

from __future__ import annotations

import time
from dataclasses import asdict, dataclass
from multiprocessing import Pool
from typing import Iterator, Sequence

from . import graph6
from .census import MAX_N, doubly_connected_graphs
from .delta import DeltaCertificate, classify, delta_bound, find_delta_ordering
from .errors import ParameterError, PreconditionError
from .graph import Graph, stats
from .oracles import msr_known
from .solver import (OrthogonalRepresentation, SolverConfig, build_representation,
                     verify_representation)

STATUSES = ("verified_exact", "verified_constructive", "inconclusive", "refuted")


def conjecture_bound(g: Graph) -> int:
    return g.n - stats(g).min_degree


def _status(msr: int | None, bound: int, constructed: bool) -> str:
    if msr is not None:
        return "verified_exact" if msr <= bound else "refuted"
    return "verified_constructive" if constructed else "inconclusive"


@dataclass(frozen=True)
class ConjectureRecord:
    bound: int
    msr_known: int | None
    msr_method: str
    rep_dimension: int | None
    status: str
    representation: OrthogonalRepresentation | None = None


def certify_roundtrip(g: Graph, rep: OrthogonalRepresentation) -> bool:
    """Serialize, parse back and verify; only the parsed copy is trusted."""
    parsed = OrthogonalRepresentation.from_json(rep.to_json())
    return verify_representation(g, parsed).ok


def check_delta_conjecture(g: Graph, config: SolverConfig | None = None,
                           order: Sequence[int] | None = None) -> ConjectureRecord:
    """Settle msr(g) <= |g| - delta(g) for one connected graph if possible.

    The exact route is tried first. Without an exact value the solver runs
    in dimension equal to the bound, along ``order`` if given, otherwise
    along a delta ordering when one exists.
    """
    bound = conjecture_bound(g)
    verdict = msr_known(g)
    if verdict.known:
        return ConjectureRecord(bound, verdict.value, verdict.method, None,
                                _status(verdict.value, bound, False))
    if order is None and g.n >= 4:
        try:
            cert = find_delta_ordering(g)
        except PreconditionError:
            cert = None
        order = cert.order if cert is not None else None
    if order is None:
        return ConjectureRecord(bound, None, verdict.method, None, "inconclusive")
    result = build_representation(g, order, bound, config)
    if result.success and certify_roundtrip(g, result.representation):
        return ConjectureRecord(bound, None, verdict.method, bound,
                                "verified_constructive", result.representation)
    return ConjectureRecord(bound, None, verdict.method, None, "inconclusive")


# -- sweep -------------------------------------------------------------------

def sweep_record(g: Graph, config: SolverConfig | None = None,
                 timing: bool = False) -> dict:
    """One JSON-ready record for a graph whose complement is also connected."""
    start = time.perf_counter()
    st = stats(g)
    bound = g.n - st.min_degree
    cls = classify(g)
    verdict = msr_known(g)
    solver_status, dimension_used, rank = "not_attempted", None, None
    if cls.certificate is not None:
        cert: DeltaCertificate = cls.certificate
        d = delta_bound(g, cert)
        result = build_representation(g, cert.order, d, config)
        if result.success and certify_roundtrip(g, result.representation):
            solver_status, dimension_used = "success", d
            rank = verify_representation(g, result.representation).rank
        else:
            solver_status = "failure"
    record = {
        "graph6": graph6.encode(g),
        "n": g.n,
        "delta": st.min_degree,
        "bound": bound,
        "delta_class": cls.kind,
        "solver_status": solver_status,
        "dimension_used": dimension_used,
        "rank": rank,
        "msr_known": verdict.value,
        "status": _status(verdict.value, bound, solver_status == "success"),
    }
    if timing:
        record["runtime_ms"] = round((time.perf_counter() - start) * 1000, 3)
    return record


def _sweep_task(args: tuple[str, SolverConfig | None, bool]) -> dict:
    code, config, timing = args
    return sweep_record(graph6.decode(code), config, timing)


def sweep(max_n: int, min_n: int = 4, jobs: int = 1, config: SolverConfig | None = None,
          timing: bool = False) -> Iterator[dict]:
    """Records for every doubly connected graph with min_n <= n <= max_n.

    Graphs come in canonical graph6 order per n, and records are yielded in
    that order regardless of ``jobs``.
    """
    if not 4 <= max_n <= MAX_N:
        raise ParameterError(f"max_n must lie in 4..{MAX_N}, got {max_n}")
    if not 4 <= min_n <= max_n:
        raise ParameterError(f"min_n must lie in 4..max_n, got {min_n}")
    if jobs < 1:
        raise ParameterError("jobs must be positive")
    tasks = [(graph6.encode(g), config, timing)
             for n in range(min_n, max_n + 1) for g in doubly_connected_graphs(n)]
    if jobs == 1:
        yield from map(_sweep_task, tasks)
        return
    with Pool(jobs) as pool:
        yield from pool.imap(_sweep_task, tasks, chunksize=4)


def summarize(records: Sequence[dict]) -> dict:
    counts = {s: 0 for s in STATUSES}
    solver = {"success": 0, "failure": 0, "not_attempted": 0}
    for r in records:
        counts[r["status"]] += 1
        solver[r["solver_status"]] += 1
    return {"graphs": len(records), **counts, "solver": solver}


def record_to_dict(rec: ConjectureRecord) -> dict:
    out = asdict(rec)
    out.pop("representation")
    return out
