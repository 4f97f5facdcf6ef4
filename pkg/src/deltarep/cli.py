"""Command-line interface: ``deltarep <subcommand> ...``.

Exit status is 0 on success, 1 when a solver run or a verification fails,
and 2 for usage errors and malformed input.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Sequence

from . import graph6
from .conjecture import check_delta_conjecture, record_to_dict, summarize, sweep
from .delta import classify, find_delta_ordering
from .errors import CapacityError, FormatError, ParameterError, PreconditionError
from .graph import Graph, cartesian_product, complement, generate, stats
from .layout import circular_layout, emit_dot, emit_svg
from .oracles import msr_known
from .solver import (SEED_POLICIES, OrthogonalRepresentation, SolverConfig,
                     build_representation, verify_representation)

FAMILIES = ("path", "cycle", "complete", "mobius_ladder", "prism", "star")

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


# -- input helpers -----------------------------------------------------------

def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        return Path(path).read_text(encoding="ascii")
    except (OSError, UnicodeDecodeError) as exc:
        raise UsageError(f"cannot read {path}: {exc}") from exc


def _read_graphs(path: str) -> list[Graph]:
    lines = [ln for ln in _read_text(path).splitlines() if ln.strip()]
    if not lines:
        raise UsageError(f"{path}: no graph6 lines")
    return [graph6.decode(ln) for ln in lines]


def _read_graph(path: str) -> Graph:
    graphs = _read_graphs(path)
    if len(graphs) != 1:
        raise UsageError(f"{path}: expected one graph, found {len(graphs)}")
    return graphs[0]


def _parse_ints(text: str, what: str) -> list[int]:
    try:
        return [int(tok) for tok in text.replace(",", " ").split()]
    except ValueError as exc:
        raise UsageError(f"malformed {what}: {text!r}") from exc


def _family_spec(text: str) -> Graph:
    fam, _, k = text.partition(":")
    if fam not in FAMILIES or not k:
        raise UsageError(f"expected FAMILY:K with FAMILY in {FAMILIES}, got {text!r}")
    return generate(fam, _parse_ints(k, "size")[0])


def _write(out: str | None, text: str) -> None:
    if not text.endswith("\n"):
        text += "\n"
    if out is None or out == "-":
        sys.stdout.write(text)
    else:
        Path(out).write_text(text, encoding="utf-8")


# -- subcommands -------------------------------------------------------------

def cmd_gen(args: argparse.Namespace) -> int:
    if args.times:
        if args.family:
            raise UsageError("use either --family/--k or --times")
        factors = [_family_spec(t) for t in args.times]
        g = factors[0]
        for h in factors[1:]:
            g = cartesian_product(g, h)
    else:
        if args.family is None or args.k is None:
            raise UsageError("gen needs --family and --k, or --times")
        g = generate(args.family, args.k)
    if args.complement:
        g = complement(g)
    _write(args.out, graph6.encode(g))
    return EXIT_OK


def cmd_embed(args: argparse.Namespace) -> int:
    g = _read_graph(args.graph)
    order = _parse_ints(_read_text(args.order), "ordering") if args.order else None
    layout = circular_layout(g, order)
    fmt = args.format or "svg"
    if fmt not in ("svg", "dot"):
        raise UsageError("embed supports --format svg or dot")
    _write(args.out, emit_svg(layout, g) if fmt == "svg" else emit_dot(layout, g))
    return EXIT_OK


def _class_report(g: Graph) -> dict:
    st = stats(g)
    report = {"graph6": graph6.encode(g), "n": g.n, "delta": st.min_degree,
              "max_degree": st.max_degree, "connected": st.connected,
              "complement_connected": st.complement_connected}
    try:
        cls = classify(g)
    except PreconditionError as exc:
        report.update(delta_class=None, reason=str(exc))
        return report
    report["delta_class"] = cls.kind
    for key, cert in (("certificate", cls.certificate),
                      ("complement_certificate", cls.complement_certificate)):
        report[key] = None if cert is None else {
            "order": list(cert.order), "first_three": cert.first_three_kind,
            "missed": list(cert.missed), "allowance": list(cert.budget)}
    return report


def cmd_classify(args: argparse.Namespace) -> int:
    lines = [json.dumps(_class_report(g)) for g in _read_graphs(args.graph)]
    _write(args.out, "\n".join(lines))
    return EXIT_OK


def _solver_config(args: argparse.Namespace) -> SolverConfig:
    kwargs = {}
    if args.max_backtracks is not None:
        kwargs["max_backtracks"] = args.max_backtracks
    if args.seed_pool is not None:
        kwargs["value_pool"] = tuple(_parse_ints(args.seed_pool, "seed pool"))
    if args.policy is not None:
        kwargs["seed_vector_policy"] = args.policy
    if args.no_fallback:
        kwargs["fallback_policy"] = None
    return SolverConfig(**kwargs)


def cmd_solve(args: argparse.Namespace) -> int:
    g = _read_graph(args.graph)
    if args.order == "auto":
        cert = find_delta_ordering(g) if g.n >= 4 else None
        order = list(cert.order) if cert is not None else list(g.vertices)
        if cert is None:
            print("no delta ordering found; using 1..n", file=sys.stderr)
    elif args.order == "paper-rowmajor":
        # row-major product labelling: vertex (u, v) of G x H is (u-1)|H| + v
        order = list(g.vertices)
    else:
        order = _parse_ints(_read_text(args.order), "ordering")
    if args.dim == "auto":
        d = g.n - stats(g).min_degree
    else:
        d = _parse_ints(args.dim, "dimension")[0]
    result = build_representation(g, order, d, _solver_config(args))
    if not result.success:
        last = result.trace[-1] if result.trace else None
        where = f" at position {last.rank} (vertex {last.vertex})" if last else ""
        print(f"solver failed in dimension {d}{where} after {result.backtracks} revisions",
              file=sys.stderr)
        return EXIT_FAIL
    print(f"placed {g.n} vectors in dimension {d} with {result.backtracks} revisions",
          file=sys.stderr)
    _write(args.out, result.representation.to_json())
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    rep = OrthogonalRepresentation.from_json(_read_text(args.rep))
    g = rep.graph
    if args.graph:
        g = _read_graph(args.graph)
        if g != rep.graph:
            print("representation was built for a different graph", file=sys.stderr)
            return EXIT_FAIL
    report = verify_representation(g, rep)
    out = {"ok": report.ok, "pattern_ok": report.pattern_ok, "pairwise_ok": report.pairwise_ok,
           "psd_ok": report.psd_ok, "rank": report.rank, "msr_upper_bound": report.bound,
           "failures": [{"pair": [i, j], "edge": e, "inner_product": ip}
                        for i, j, e, ip in report.failures],
           "dependent_pair": list(report.dependent_pair) if report.dependent_pair else None,
           "pivots": [str(p) for p in report.pivots]}
    if args.eigen:
        import numpy as np

        vecs = np.array(rep.vectors, dtype=float)
        eig = np.linalg.eigvalsh(vecs @ vecs.T)
        out["eigenvalues"] = sorted((float(x) for x in eig), reverse=True)
    _write(args.out, json.dumps(out, indent=1))
    return EXIT_OK if report.ok else EXIT_FAIL


def cmd_oracle(args: argparse.Namespace) -> int:
    lines = []
    for g in _read_graphs(args.graph):
        verdict = msr_known(g)
        rec = record_to_dict(check_delta_conjecture(g))
        lines.append(json.dumps({"graph6": graph6.encode(g), "msr": verdict.value,
                                 "method": verdict.method, "trace": list(verdict.trace),
                                 "conjecture": rec}))
    _write(args.out, "\n".join(lines))
    return EXIT_OK


def cmd_sweep(args: argparse.Namespace) -> int:
    records = []
    stream = open(args.out, "w", encoding="utf-8") if args.out else sys.stdout
    try:
        for rec in sweep(args.max_n, args.min_n, args.jobs, timing=args.timing):
            records.append(rec)
            stream.write(json.dumps(rec) + "\n")
    finally:
        if args.out:
            stream.close()
    summary = summarize(records)
    print(json.dumps(summary), file=sys.stderr)
    return EXIT_FAIL if summary["solver"]["failure"] or summary["refuted"] else EXIT_OK


# -- parser ------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="deltarep", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def add(name: str, help_: str, graph: bool = True) -> argparse.ArgumentParser:
        sp = sub.add_parser(name, help=help_)
        if graph:
            sp.add_argument("--graph", required=True, metavar="FILE",
                            help="graph6 file, one graph per line ('-' for stdin)")
        sp.add_argument("--out", metavar="FILE", help="output file (default stdout)")
        return sp

    sp = add("gen", "emit a named graph as graph6", graph=False)
    sp.add_argument("--family", choices=FAMILIES)
    sp.add_argument("--k", type=int)
    sp.add_argument("--times", nargs="+", metavar="FAMILY:K",
                    help="Cartesian product of the listed graphs, e.g. complete:3 path:4")
    sp.add_argument("--complement", action="store_true")
    sp.add_argument("--format", choices=["g6"], default="g6")
    sp.set_defaults(func=cmd_gen)

    sp = add("embed", "clockwise circular embedding as SVG or DOT")
    sp.add_argument("--format", choices=["svg", "dot"], default="svg")
    sp.add_argument("--order", metavar="FILE", help="vertex ordering file")
    sp.set_defaults(func=cmd_embed)

    sp = add("classify", "delta / C-delta report as JSON lines")
    sp.add_argument("--format", choices=["json"], default="json")
    sp.set_defaults(func=cmd_classify)

    sp = add("solve", "build an orthogonal representation, emit JSON")
    sp.add_argument("--order", default="auto", help="auto, paper-rowmajor or an ordering file")
    sp.add_argument("--dim", default="auto", help="auto (n - min degree) or an integer")
    sp.add_argument("--max-backtracks", type=int)
    sp.add_argument("--seed-pool", metavar="LIST", help="comma separated nonzero integers")
    sp.add_argument("--policy", choices=SEED_POLICIES)
    sp.add_argument("--no-fallback", action="store_true",
                    help="do not rerun with the generic policy after an abort")
    sp.add_argument("--format", choices=["json"], default="json")
    sp.set_defaults(func=cmd_solve)

    sp = add("verify", "certify a representation JSON", graph=False)
    sp.add_argument("--rep", required=True, metavar="FILE")
    sp.add_argument("--graph", metavar="FILE", help="graph6 file the representation must match")
    sp.add_argument("--eigen", action="store_true",
                    help="add floating-point Gram eigenvalues as a diagnostic")
    sp.add_argument("--format", choices=["json"], default="json")
    sp.set_defaults(func=cmd_verify)

    sp = add("oracle", "known msr value and conjecture record as JSON lines")
    sp.add_argument("--format", choices=["json"], default="json")
    sp.set_defaults(func=cmd_oracle)

    sp = add("sweep", "conjecture sweep over small doubly connected graphs", graph=False)
    sp.add_argument("--max-n", type=int, required=True)
    sp.add_argument("--min-n", type=int, default=4)
    sp.add_argument("--jobs", type=int, default=1)
    sp.add_argument("--timing", action="store_true", help="add runtime_ms to each record")
    sp.add_argument("--format", choices=["json"], default="json")
    sp.set_defaults(func=cmd_sweep)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args)
    except (UsageError, FormatError, ParameterError, PreconditionError,
            CapacityError) as exc:
        print(f"deltarep {args.command}: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
