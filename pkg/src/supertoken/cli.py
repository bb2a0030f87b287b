"""Command-line interface.

Exit codes: 0 success (all checks pass), 1 some check failed, 2 usage error.
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import analysis, formats, theorems
from .builder import TooLargeError, build
from .counting import count_report
from .graph import GraphError, is_bipartite, is_connected, make_complete, make_cycle, make_path, make_star
from .tokens import TokenSpec

FAMILIES = {"path": make_path, "cycle": make_cycle, "star": make_star, "complete": make_complete}


class UsageError(Exception):
    pass


def parse_graph_spec(text: str):
    kind, sep, arg = text.partition(":")
    if not sep:
        raise UsageError(f"graph spec {text!r} should look like cycle:4 or file:PATH")
    if kind == "file":
        path = Path(arg)
        try:
            content = path.read_text()
        except OSError as exc:
            raise UsageError(f"cannot read {arg}: {exc.strerror}") from None
        return formats.parse_edge_list(content, name=f"file:{path.name}")
    if kind not in FAMILIES:
        raise UsageError(f"unknown graph family {kind!r}")
    try:
        n = int(arg)
    except ValueError:
        raise UsageError(f"{arg!r} is not an integer") from None
    return FAMILIES[kind](n)


def _spec(args) -> TokenSpec:
    return TokenSpec(args.k, args.s, args.mode)


def _write(text: str | bytes, out: str | None):
    if out in (None, "-"):
        if isinstance(text, bytes):
            sys.stdout.buffer.write(text)
            sys.stdout.flush()
        else:
            sys.stdout.write(text)
        return
    mode = "wb" if isinstance(text, bytes) else "w"
    with open(out, mode) as fh:
        fh.write(text)


def _emit_graph(g, fmt: str, out: str | None):
    if fmt == "dot":
        _write(formats.to_dot(g), out)
    elif fmt == "graph6":
        _write(formats.to_graph6(g) + b"\n", out)
    elif fmt == "edges":
        _write(formats.to_edge_list(g), out)
    else:
        _write(formats.dumps(formats.graph_to_json(g)), out)


def cmd_count(args) -> int:
    g = parse_graph_spec(args.graph)
    report = count_report(g, _spec(args))
    print(f"order: {report.order_formula}")
    print(f"size: {report.size_formula}")
    print(f"per_edge_multiplier: {report.per_edge_multiplier}")
    return 0


def cmd_build(args) -> int:
    g = parse_graph_spec(args.graph)
    st = build(g, _spec(args), cap=args.max_order)
    _emit_graph(st, args.format, args.out)
    return 0


def analysis_report(g, spec: TokenSpec, enumerate_: bool, cap: int) -> dict:
    counts = count_report(g, spec)
    report = {
        "base": {"graph": str(g), "n": g.n, "m": g.size, "max_degree": g.max_degree},
        "spec": {"k": spec.k, "s": spec.s, "mode": spec.mode.value},
        "order": counts.order_formula,
        "size": counts.size_formula,
        "per_edge_multiplier": counts.per_edge_multiplier,
    }
    if counts.order_formula <= cap:
        st = build(g, spec, cap=cap)
        summary = analysis.component_summary(st)
        report.update({
            "connected": is_connected(st),
            "bipartite": bool(is_bipartite(st)),
            "cycle_space_dimension": analysis.cycle_space_dimension(st),
            "components": dict(sorted(summary.counts().items())),
        })
        if enumerate_:
            report["order_enumerated"] = st.order
            report["size_enumerated"] = st.size
            report["order_agrees"] = st.order == counts.order_formula
            report["size_agrees"] = st.size == counts.size_formula
    else:
        report["note"] = f"order above cap {cap}; structural fields omitted"
    return report


def cmd_analyze(args) -> int:
    g = parse_graph_spec(args.graph)
    report = analysis_report(g, _spec(args), args.enumerate, args.max_order)
    _write(formats.dumps(report), None)
    if args.enumerate and not (report.get("order_agrees", True) and report.get("size_agrees", True)):
        return 1
    return 0


def cmd_verify(args) -> int:
    suites = theorems.SUITES if args.suite == "all" else (args.suite,)
    grid = theorems.Grid(max_n=args.max_n, max_k=args.max_k)
    outcomes = theorems.run_suite(grid, suites, max_order=args.max_order)
    summary = theorems.summarize(outcomes)
    _write(formats.dumps({"summary": summary, "outcomes": [o.to_json() for o in outcomes]}), args.out)
    return 1 if summary[theorems.FAIL] else 0


def cmd_export(args) -> int:
    _emit_graph(parse_graph_spec(args.graph), args.format, args.out)
    return 0


def make_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="supertoken", description=__doc__.splitlines()[0])
    p.add_argument("--seed", type=int, default=0, help="seed for any sampling (default 0)")
    sub = p.add_subparsers(dest="command", required=True)

    def token_args(sp):
        sp.add_argument("--graph", required=True, help="path:N, cycle:N, star:N, complete:N or file:PATH")
        sp.add_argument("--k", type=int, required=True, help="number of tokens")
        sp.add_argument("--s", type=int, required=True, help="tokens allowed per vertex")
        sp.add_argument("--mode", choices=["indist", "dist"], required=True)

    sp = sub.add_parser("count", help="closed-form order and size")
    token_args(sp)
    sp.set_defaults(func=cmd_count)

    sp = sub.add_parser("build", help="materialise the supertoken graph")
    token_args(sp)
    sp.add_argument("--format", choices=["dot", "graph6", "edges", "json"], default="edges")
    sp.add_argument("--out", default=None)
    sp.add_argument("--max-order", type=int, default=1_000_000)
    sp.set_defaults(func=cmd_build)

    sp = sub.add_parser("analyze", help="structural report as JSON")
    token_args(sp)
    sp.add_argument("--enumerate", action="store_true", help="cross-check formulas by enumeration")
    sp.add_argument("--max-order", type=int, default=200_000)
    sp.set_defaults(func=cmd_analyze)

    sp = sub.add_parser("verify", help="run theorem checks over the default grid")
    sp.add_argument("--suite", choices=("all",) + theorems.SUITES, default="all")
    sp.add_argument("--max-order", type=int, default=5000)
    sp.add_argument("--max-n", type=int, default=6)
    sp.add_argument("--max-k", type=int, default=4)
    sp.add_argument("--out", default=None)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("export", help="emit a base graph without token expansion")
    sp.add_argument("--graph", required=True)
    sp.add_argument("--format", choices=["dot", "graph6", "edges", "json"], default="edges")
    sp.add_argument("--out", default=None)
    sp.set_defaults(func=cmd_export)
    return p


def main(argv=None) -> int:
    parser = make_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (UsageError, GraphError, formats.ParseError, TooLargeError, ValueError) as exc:
        print(f"supertoken: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
