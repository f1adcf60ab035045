"""Command-line front end.

Subcommands: construct, verify, certify, bounds, oracle, mine-suitable.
Exit codes: 0 success / verdict true, 1 verdict false, 2 usage or input
error, 3 budget exhausted.  Graph input is auto-detected (graph6 when the
first byte is at or above '?', plain edge list otherwise).
"""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path

from . import bounds as bounds_mod
from . import oracle as oracle_mod
from .codec import (
    EdgeListError,
    Graph6Error,
    detect_and_decode,
    edge_list_encode,
    graph6_encode,
    labels_decode,
    labels_encode,
)
from .cycles import SearchBudgetExceeded
from .families import (
    ConstructionParamError,
    ConstructionPostconditionError,
    LabeledGraph,
    UnsuitableCoreError,
    build_h1,
    build_h2,
    build_h3,
    build_wheel,
)
from .graphs import Graph, GraphError
from .saturation import TooFewVertices, is_ck_free, is_saturated, is_semisaturated
from .suitability import mine_suitable

EXIT_OK = 0
EXIT_FALSE = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3

BUDGET_ENV = "CYCLESAT_BUDGET_SECONDS"


class _UsageError(Exception):
    pass


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cyclesat",
        description="Cycle-saturated graph constructions, verifiers, bounds, and exact search.",
    )
    parser.add_argument(
        "--seed",
        type=int,
        default=0,
        help="seed governing any randomized workflow (fixed default; current subcommands are deterministic)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    c = sub.add_parser("construct", help="build a graph family member")
    c.add_argument("--family", required=True, choices=["h1", "h2", "h3", "wheel"])
    c.add_argument("--k", type=int, required=True)
    c.add_argument("--n", type=int, help="target order (h1)")
    c.add_argument("--t", type=int, help="number of path blocks (h2, h3)")
    c.add_argument("--r", type=int, default=0, help="spikes (wheel) or trimmed spikes (h3)")
    c.add_argument("--core", help="core graph file for h2/h3 (graph6 or edge list)")
    c.add_argument("--core-labels", help="label sidecar for --core")
    c.add_argument(
        "--core-r", type=int, default=0, help="spike count when the core is a built wheel"
    )
    c.add_argument("--unchecked", action="store_true", help="waive core suitability checks")
    c.add_argument("--format", choices=["graph6", "edges"], default="graph6")
    c.add_argument("--out", help="write the graph here instead of stdout")
    c.add_argument("--labels", help="write the role sidecar here")

    v = sub.add_parser("verify", help="verify a graph against a saturation mode")
    v.add_argument("--k", type=int, required=True)
    v.add_argument("--mode", required=True, choices=["saturated", "semisaturated", "free"])
    v.add_argument("--in", dest="infile", help="graph file (default: stdin)")
    v.add_argument("--certificate", help="write the certificate here on success")

    cert = sub.add_parser("certify", help="verify and always write a certificate")
    cert.add_argument("--k", type=int, required=True)
    cert.add_argument("--mode", required=True, choices=["saturated", "semisaturated"])
    cert.add_argument("--in", dest="infile", help="graph file (default: stdin)")
    cert.add_argument("--out", required=True, help="certificate output path")

    b = sub.add_parser("bounds", help="evaluate all closed-form bounds")
    b.add_argument("--k", type=int, required=True)
    b.add_argument("--n", type=int)
    b.add_argument("--range", dest="nrange", help="evaluate for n in A..B")
    b.add_argument("--csv", action="store_true", help="machine-readable output")

    o = sub.add_parser("oracle", help="exact minimum by exhaustive search")
    o.add_argument("--k", type=int, required=True)
    o.add_argument("--n", type=int, required=True)
    o.add_argument("--mode", required=True, choices=["sat", "ssat"])
    o.add_argument("--shards", type=int, default=1)
    o.add_argument("--max-seconds", type=float, default=None)
    o.add_argument("--ceiling", type=int, default=None)
    o.add_argument("--golden", default="oracle_values.csv", help="golden CSV to append to")
    o.add_argument("--no-golden", action="store_true", help="skip the golden file")

    m = sub.add_parser("mine-suitable", help="minimum-size suitable core search")
    m.add_argument("--k", type=int, required=True)
    m.add_argument("--plus", action="store_true", help="extended two-split suitability")
    m.add_argument("--max-seconds", type=float, default=None)
    m.add_argument("--ceiling", type=int, default=None)
    return parser


def _read_graph(path: str | None) -> Graph:
    if path is None:
        text = sys.stdin.read()
    else:
        p = Path(path)
        if not p.exists():
            raise _UsageError(f"input file not found: {path}")
        text = p.read_text()
    try:
        return detect_and_decode(text)
    except (Graph6Error, EdgeListError, GraphError) as exc:
        raise _UsageError(f"malformed graph input: {exc}") from exc


def _write(text: str, path: str | None) -> None:
    if path is None:
        sys.stdout.write(text)
    else:
        Path(path).write_text(text)


def _default_budget(flag_value: float | None) -> float | None:
    if flag_value is not None:
        return flag_value
    env = os.environ.get(BUDGET_ENV)
    return float(env) if env else None


def _cmd_construct(args: argparse.Namespace) -> int:
    if args.family == "h1":
        if args.n is None:
            raise _UsageError("construct --family h1 requires --n")
        built = build_h1(args.k, args.n)
    elif args.family == "wheel":
        built = build_wheel(args.k, args.r)
    else:
        if args.t is None:
            raise _UsageError(f"construct --family {args.family} requires --t")
        if args.core:
            graph = _read_graph(args.core)
            if not args.core_labels:
                raise _UsageError("--core requires --core-labels for (a1, a2)")
            p = Path(args.core_labels)
            if not p.exists():
                raise _UsageError(f"input file not found: {args.core_labels}")
            labels = labels_decode(p.read_text())
            core = LabeledGraph(graph, labels, graph.edge_count)
        else:
            core = build_wheel(args.k, args.core_r)
        if args.family == "h2":
            built = build_h2(core, args.k, args.t, unchecked=args.unchecked)
        else:
            built = build_h3(core, args.k, args.t, args.r, unchecked=args.unchecked)
    if args.format == "graph6":
        out = graph6_encode(built.graph) + "\n"
    else:
        out = edge_list_encode(built.graph)
    _write(out, args.out)
    if args.labels:
        _write(labels_encode(built.labels), args.labels)
    return EXIT_OK


def _cmd_verify(args: argparse.Namespace, always_certificate: bool = False) -> int:
    G = _read_graph(args.infile)
    cert_path = args.out if always_certificate else args.certificate
    if args.mode == "free":
        res = is_ck_free(G, args.k)
        if res.free:
            print("FREE")
            return EXIT_OK
        print("NOT FREE")
        print(f"cycle found: {' '.join(str(v) for v in res.cycle.vertices)}", file=sys.stderr)
        return EXIT_FALSE
    checker = is_saturated if args.mode == "saturated" else is_semisaturated
    verdict = checker(G, args.k, want_certificate=bool(cert_path))
    word = args.mode.upper()
    if verdict.holds:
        print(word)
        if cert_path:
            Path(cert_path).write_text(verdict.certificate.to_text())
        return EXIT_OK
    print(f"NOT {word}")
    if verdict.failing_nonedge is not None:
        u, v = verdict.failing_nonedge
        print(f"non-edge ({u}, {v}) creates no {args.k}-cycle", file=sys.stderr)
    if verdict.cycle is not None:
        vs = " ".join(str(x) for x in verdict.cycle.vertices)
        print(f"graph already contains a {args.k}-cycle: {vs}", file=sys.stderr)
    return EXIT_FALSE


def _cmd_bounds(args: argparse.Namespace) -> int:
    if (args.n is None) == (args.nrange is None):
        raise _UsageError("bounds needs exactly one of --n or --range A..B")
    if args.nrange is not None:
        lo, _, hi = args.nrange.partition("..")
        try:
            ns = range(int(lo), int(hi) + 1)
        except ValueError as exc:
            raise _UsageError(f"bad --range {args.nrange!r}; expected A..B") from exc
    else:
        ns = range(args.n, args.n + 1)
    multi = len(ns) > 1
    if args.csv:
        header = ("name", "kind", "numerator", "denominator", "applicable")
        print(",".join((("n",) + header) if multi else header))
        for n in ns:
            for e in bounds_mod.eval_bounds(n, args.k).entries:
                row = (
                    e.name,
                    e.kind,
                    str(e.value.numerator),
                    str(e.value.denominator),
                    "yes" if e.applicable else "no",
                )
                print(",".join(((str(n),) + row) if multi else row))
        return EXIT_OK
    for n in ns:
        table = bounds_mod.eval_bounds(n, args.k)
        print(f"bounds for n={n}, k={args.k}")
        widths = (22, 13, 16, 10)
        print(
            f"{'name':<{widths[0]}}{'kind':<{widths[1]}}"
            f"{'value':<{widths[2]}}{'~':<{widths[3]}}applicable"
        )
        for e in table.entries:
            approx = f"{float(e.value):.2f}"
            note = f"  ({e.note})" if e.note and e.applicable else ""
            print(
                f"{e.name:<{widths[0]}}{e.kind:<{widths[1]}}"
                f"{str(e.value):<{widths[2]}}{approx:<{widths[3]}}"
                f"{'yes' if e.applicable else 'no'}{note}"
            )
        if multi and n != ns[-1]:
            print()
    return EXIT_OK


def _cmd_oracle(args: argparse.Namespace) -> int:
    result = oracle_mod.exact_min(
        args.n,
        args.k,
        args.mode,
        shards=args.shards,
        ceiling=args.ceiling,
        budget_seconds=_default_budget(args.max_seconds),
    )
    if result.status == "lower-bound-only":
        print(f"{args.mode}({args.n}, C{args.k}) >= {result.value}  [budget exhausted]")
        return EXIT_BUDGET
    print(f"{args.mode}({args.n}, C{args.k}) = {result.value}")
    print(f"witness: {graph6_encode(result.witness)}")
    print(
        f"examined {result.stats.graphs_examined} graphs over "
        f"{result.stats.classes_seen} classes in {result.stats.elapsed:.1f}s"
    )
    if not args.no_golden:
        oracle_mod.append_golden(args.golden, result)
    return EXIT_OK


def _cmd_mine(args: argparse.Namespace) -> int:
    mode = "kk2-suitable" if args.plus else "k-suitable"
    kwargs = {}
    if args.ceiling is not None:
        kwargs["ceiling"] = args.ceiling
    result = mine_suitable(
        args.k, mode, budget_seconds=_default_budget(args.max_seconds), **kwargs
    )
    if result.status == "budget-exhausted":
        print(f"mining {mode} at k={args.k}: budget exhausted "
              f"after {result.classes_examined} classes")
        return EXIT_BUDGET
    if result.status == "not-found":
        print(f"no {mode} graph on {args.k} vertices")
        return EXIT_OK
    print(f"minimum size of a {args.k}-vertex {mode} core: {result.edge_count}")
    print(f"witness: {graph6_encode(result.witness.graph)}")
    sys.stdout.write(labels_encode(result.witness.labels))
    return EXIT_OK


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code else EXIT_OK
    try:
        if args.command == "construct":
            return _cmd_construct(args)
        if args.command == "verify":
            return _cmd_verify(args)
        if args.command == "certify":
            return _cmd_verify(args, always_certificate=True)
        if args.command == "bounds":
            return _cmd_bounds(args)
        if args.command == "oracle":
            return _cmd_oracle(args)
        if args.command == "mine-suitable":
            return _cmd_mine(args)
        raise _UsageError(f"unknown command {args.command!r}")
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (
        ConstructionParamError,
        UnsuitableCoreError,
        GraphError,
        TooFewVertices,
        oracle_mod.CeilingExceeded,
        ValueError,
    ) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ConstructionPostconditionError as exc:
        print(f"construction failed verification: {exc}", file=sys.stderr)
        return EXIT_FALSE
    except SearchBudgetExceeded as exc:
        print(f"budget exhausted: {exc}", file=sys.stderr)
        return EXIT_BUDGET


if __name__ == "__main__":
    sys.exit(main())
