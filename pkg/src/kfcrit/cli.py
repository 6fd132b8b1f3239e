"""Command-line front end.

Every subcommand reads graph6 lines (a file, or standard input by default)
and writes one JSON record per line.  Exit codes: 0 success, 1 violations
found, 2 usage or configuration error, 3 input parse errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from .criticality import brick_breaking_edge, is_k_factor_critical, is_minimal_k_factor_critical
from .graph import Edge, find_claw, vertex_connectivity
from .graph6 import read_graph6_lines
from .harness import CHECK_ORDER, FILTERS, ConfigError, StreamConfig, degree_partition, verify_stream
from .structure import StructuralViolation, classify_edge, find_witness

EXIT_OK, EXIT_VIOLATION, EXIT_USAGE, EXIT_PARSE = 0, 1, 2, 3
# when several outcomes occur in one run, the highest-ranked one sets the exit code
_RANK = {EXIT_OK: 0, EXIT_USAGE: 1, EXIT_PARSE: 2, EXIT_VIOLATION: 3}


def _worst(a: int, b: int) -> int:
    return a if _RANK[a] >= _RANK[b] else b


class UsageError(Exception):
    pass


def _emit(record: dict, out) -> None:
    out.write(json.dumps(record, sort_keys=True) + "\n")


def _open_lines(path: str):
    if path == "-":
        return sys.stdin.read().splitlines()
    try:
        with open(path, "rb") as fh:
            return fh.read().splitlines()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc}") from exc


def _graphs(path: str):
    """Yield (graph6 text, Graph or None, error text or None)."""
    for _, text, g in read_graph6_lines(_open_lines(path)):
        if isinstance(g, Exception):
            yield text, None, str(g)
        else:
            yield text, g, None


def _parse_edge(text: str) -> Edge:
    try:
        u, v = (int(x) for x in text.split(","))
        return Edge(u, v)
    except ValueError as exc:
        raise UsageError(f"bad edge {text!r}; expected 'u,v'") from exc


def _parse_list(text: str, convert=str) -> tuple:
    try:
        return tuple(convert(x.strip()) for x in text.split(",") if x.strip())
    except ValueError as exc:
        raise UsageError(f"bad list {text!r}") from exc


def _sorted(xs) -> list[int]:
    return sorted(xs)


def _kfc_record(g, k: int) -> dict:
    verdict = is_k_factor_critical(g, k)
    rec = {"holds": verdict.holds}
    if not verdict.holds:
        rec["failing_removal"] = _sorted(verdict.failing_removal)
        X, odd = verdict.certificate_in_original_ids()
        rec["certificate"] = {"X": _sorted(X), "odd_components": [_sorted(c) for c in odd]}
    return rec


def run_check(args, out) -> int:
    wants_k = args.minimal or not (args.brick or args.minimal_brick or args.claw_free)
    if args.k is None and wants_k:
        raise UsageError("--k is required unless only --brick/--minimal-brick are requested")
    status = EXIT_OK
    for text, g, err in _graphs(args.input):
        if err:
            _emit({"graph6": text, "error": err}, out)
            status = _worst(status, EXIT_PARSE)
            continue
        rec: dict = {"graph6": text, "n": g.n}
        if args.k is not None:
            rec["k"] = args.k
            if 0 <= args.k <= g.n:
                rec["k_factor_critical"] = _kfc_record(g, args.k)
            else:
                rec["k_factor_critical"] = {"error": f"k={args.k} out of range for n={g.n}"}
        if args.minimal:
            if 1 <= args.k < g.n:
                mv = is_minimal_k_factor_critical(g, args.k)
                rec["minimal"] = {"holds": mv.holds, "edge": list(mv.edge) if mv.edge else None}
            else:
                rec["minimal"] = {"error": f"minimality needs 1 <= k < n, got k={args.k}, n={g.n}"}
        if args.claw_free:
            claw = find_claw(g)
            rec["claw_free"] = {"holds": claw is None,
                                "claw": None if claw is None else [claw[0], list(claw[1])]}
        if args.brick or args.minimal_brick:
            kappa = vertex_connectivity(g) if g.n else 0
            bicritical = g.n >= 4 and is_k_factor_critical(g, 2).holds
            brick = kappa >= 3 and bicritical
            if args.brick:
                rec["brick"] = {"holds": brick, "vertex_connectivity": kappa, "bicritical": bicritical}
            if args.minimal_brick:
                edge = brick_breaking_edge(g) if brick else None
                rec["minimal_brick"] = {"holds": brick and edge is None,
                                        "edge": list(edge) if edge else None}
        _emit(rec, out)
    return status


def _witness_record(w) -> dict | None:
    if w is None:
        return None
    return {
        "S": _sorted(w.S),
        "size": w.size,
        "odd_components": [_sorted(c) for c in w.odd_components],
        "component_u": _sorted(w.partition.components[w.comp_u]),
        "component_v": _sorted(w.partition.components[w.comp_v]),
    }


def run_witness(args, out) -> int:
    edge = _parse_edge(args.edge)
    for text, g, err in _graphs(args.input):
        if err:
            _emit({"graph6": text, "error": err}, out)
            return EXIT_PARSE
        if not g.has_edge(edge.u, edge.v):
            raise UsageError(f"{edge.u},{edge.v} is not an edge of {text}")
        if not 1 <= args.k < g.n:
            raise UsageError(f"k={args.k} out of range for n={g.n}")
        w = find_witness(g, args.k, edge, minimize=args.minimize)
        _emit({"graph6": text, "k": args.k, "edge": list(edge), "found": w is not None,
               "witness": _witness_record(w)}, out)
        return EXIT_OK
    raise UsageError("no graph on input")


def run_classify(args, out) -> int:
    only = _parse_edge(args.edge) if args.edge else None
    status = EXIT_OK
    for text, g, err in _graphs(args.input):
        if err:
            _emit({"graph6": text, "error": err}, out)
            status = _worst(status, EXIT_PARSE)
            continue
        rec: dict = {"graph6": text, "k": args.k, "edges": []}
        edges = [only] if only else g.edges()
        try:
            for e in edges:
                c = classify_edge(g, args.k, e, verify_preconditions=args.verify_preconditions)
                rec["edges"].append({
                    "edge": list(c.edge),
                    "verdict": c.verdict.value,
                    "witness": _witness_record(c.witness),
                    "reason": c.reason or None,
                })
        except StructuralViolation as exc:
            rec["structural_violation"] = str(exc)
            status = _worst(status, EXIT_VIOLATION)
        except ValueError as exc:
            rec["error"] = str(exc)
            status = _worst(status, EXIT_USAGE)
        _emit(rec, out)
    return status


def run_partition(args, out) -> int:
    status = EXIT_OK
    for text, g, err in _graphs(args.input):
        if err:
            _emit({"graph6": text, "error": err}, out)
            status = _worst(status, EXIT_PARSE)
            continue
        try:
            rec = degree_partition(g, args.k).to_dict()
            rec["graph6"] = text
        except StructuralViolation as exc:
            rec = {"graph6": text, "k": args.k, "structural_violation": str(exc)}
            status = _worst(status, EXIT_VIOLATION)
        except ValueError as exc:
            rec = {"graph6": text, "k": args.k, "error": str(exc)}
            status = _worst(status, EXIT_USAGE)
        _emit(rec, out)
    return status


def run_verify(args, out) -> int:
    if (args.generate is None) == (args.input is None):
        raise UsageError("give exactly one of --generate N or --input FILE")
    cfg = StreamConfig(
        generate=args.generate,
        min_n=args.min_n,
        input=args.input,
        k_values=_parse_list(args.k, int),
        filters=_parse_list(args.filters),
        checks=_parse_list(args.checks),
        fail_fast=args.fail_fast,
        workers=args.workers,
    )
    try:
        report = verify_stream(cfg)
    except ConfigError as exc:
        raise UsageError(str(exc)) from exc
    out.write(report.to_json(include_timing=not args.no_timing) + "\n")
    if not args.quiet:
        sys.stderr.write(report.summary() + "\n")
    return report.exit_code()


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="kfcrit", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("check", help="k-factor-criticality, minimality, claw and brick verdicts")
    c.add_argument("--k", type=int)
    c.add_argument("--minimal", action="store_true")
    c.add_argument("--claw-free", action="store_true")
    c.add_argument("--brick", action="store_true")
    c.add_argument("--minimal-brick", action="store_true")
    c.add_argument("input", nargs="?", default="-")
    c.set_defaults(func=run_check)

    w = sub.add_parser("witness", help="witness set S_e for one edge")
    w.add_argument("--k", type=int, required=True)
    w.add_argument("--edge", required=True, help="u,v")
    w.add_argument("--minimize", action="store_true")
    w.add_argument("input", nargs="?", default="-")
    w.set_defaults(func=run_witness)

    k = sub.add_parser("classify", help="type-1 / type-2 edge classification")
    k.add_argument("--k", type=int, required=True)
    k.add_argument("--edge", help="classify only this edge (u,v)")
    k.add_argument("--verify-preconditions", action="store_true")
    k.add_argument("input", nargs="?", default="-")
    k.set_defaults(func=run_classify)

    d = sub.add_parser("partition", help="degree partition and counting inequality")
    d.add_argument("--k", type=int, required=True)
    d.add_argument("input", nargs="?", default="-")
    d.set_defaults(func=run_partition)

    v = sub.add_parser("verify", help="run the theorem checks over a graph stream")
    v.add_argument("--generate", type=int, metavar="N", help="all labelled graphs with n <= N (N <= 7)")
    v.add_argument("--min-n", type=int, default=1)
    v.add_argument("--input", metavar="FILE", help="graph6 file, '-' for standard input")
    v.add_argument("--k", default="1", help="comma-separated k values")
    v.add_argument("--checks", default=",".join(CHECK_ORDER), help=f"subset of {','.join(CHECK_ORDER)}")
    v.add_argument("--filters", default="", help=f"subset of {','.join(FILTERS)}")
    v.add_argument("--fail-fast", action="store_true")
    v.add_argument("--workers", type=int, default=1)
    v.add_argument("--no-timing", action="store_true", help="omit wall time for byte-stable output")
    v.add_argument("--quiet", action="store_true", help="no summary on standard error")
    v.set_defaults(func=run_verify)
    return p


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args, out)
    except UsageError as exc:
        sys.stderr.write(f"kfcrit: error: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
