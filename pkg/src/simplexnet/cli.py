"""Command-line entry point: generate, eval, verify, degrees."""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from pathlib import Path

from . import closed_form as cf
from .formats import FORMATS, render_graph
from .generator import (
    FamilyParams,
    SizeGuardError,
    build_corona,
    degree_census,
    edge_count,
    node_count,
)
from .oracles import OracleBudget
from .verify import CHECKS, run_grid, report_render

EVAL_INVARIANTS = (
    "nodes",
    "edges",
    "independence",
    "domination",
    "chromatic-number",
    "chromatic-polynomial",
    "tutte-x-axis",
    "acyclic",
    "root-connected-acyclic",
    "perfect-matchings",
    "matching-profile",
    "spanning-trees",
)
_EVEN_ONLY = {"perfect-matchings", "matching-profile"}


class CliError(Exception):
    pass


def parse_range(text: str) -> list[int]:
    """"3" -> [3]; "0..2" -> [0, 1, 2] (inclusive)."""
    try:
        if ".." in text:
            lo, hi = (int(x) for x in text.split("..", 1))
        else:
            lo = hi = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer or a range a..b, got {text!r}") from None
    if hi < lo:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return list(range(lo, hi + 1))


def _names(text: str, allowed: tuple[str, ...], what: str) -> list[str]:
    names = [s.strip() for s in text.split(",") if s.strip()]
    if names == ["all"]:
        return list(allowed)
    bad = [s for s in names if s not in allowed]
    if bad:
        raise CliError(f"unknown {what} {', '.join(bad)}; choose from {', '.join(allowed)}")
    return names


def _single(values: list[int], flag: str) -> int:
    if len(values) != 1:
        raise CliError(f"{flag} takes a single value for this command")
    return values[0]


def _params(q: int, g: int) -> FamilyParams:
    try:
        return FamilyParams(q, g)
    except ValueError as exc:
        raise CliError(str(exc)) from None


def _emit(data: bytes, out: str | None) -> None:
    if out is None:
        sys.stdout.buffer.write(data)
        sys.stdout.flush()
        return
    try:
        Path(out).write_bytes(data)
    except OSError as exc:
        raise CliError(f"cannot write {out}: {exc.strerror}") from None


def _budget(args) -> OracleBudget:
    kw = {}
    if args.max_nodes is not None:
        kw["max_nodes"] = args.max_nodes
    if args.max_edges is not None:
        kw["max_edges"] = args.max_edges
    if args.max_steps is not None:
        kw["max_steps"] = args.max_steps
    try:
        return OracleBudget(**kw)
    except ValueError as exc:
        raise CliError(str(exc)) from None


# ---------------------------------------------------------------- commands


def cmd_generate(args) -> int:
    p = _params(_single(args.q, "--q"), _single(args.g, "--g"))
    graph = build_corona(p, max_nodes=args.max_nodes)
    _emit(render_graph(graph, p, args.format).encode(), args.out)
    return 0


def _eval_value(p: FamilyParams, name: str) -> str:
    if name == "nodes":
        return str(node_count(p))
    if name == "edges":
        return str(edge_count(p))
    if name == "independence":
        return str(cf.independence_number(p))
    if name == "domination":
        return str(cf.domination_number(p))
    if name == "chromatic-number":
        return str(cf.chromatic_number(p))
    if name == "chromatic-polynomial":
        return cf.chromatic_polynomial(p).format("x")
    if name == "tutte-x-axis":
        return cf.tutte_x_axis(p).format("x")
    if name == "acyclic":
        return str(cf.acyclic_orientations(p))
    if name == "root-connected-acyclic":
        return str(cf.root_connected_acyclic(p))
    if name == "perfect-matchings":
        return str(cf.perfect_matchings(p))
    if name == "matching-profile":
        prof = cf.matching_profile_recursive(p)
        return f"A={prof.A} B={prof.B}"
    if name == "spanning-trees":
        return str(cf.spanning_trees(p))
    raise CliError(f"unknown invariant {name}")


def cmd_eval(args) -> int:
    explicit = args.invariants != "all"
    names = _names(args.invariants, EVAL_INVARIANTS, "invariant")
    rows = []
    for q in args.q:
        for g in args.g:
            p = _params(q, g)
            for name in names:
                if name in _EVEN_ONLY and q % 2:
                    if explicit:
                        raise CliError(f"{name} requires even q (q >= 2); got q={q}")
                    continue
                rows.append((q, g, name, _eval_value(p, name)))
    if args.format == "json":
        out = json.dumps({"values": [dict(zip(("q", "g", "invariant", "value"), r)) for r in rows]}, indent=2) + "\n"
    elif args.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["q", "g", "invariant", "value"])
        writer.writerows(rows)
        out = buf.getvalue()
    else:
        out = "".join(f"{q:>2} {g:>2}  {name:<24}{value}\n" for q, g, name, value in rows)
    _emit(out.encode(), args.out)
    return 0


def cmd_verify(args) -> int:
    checks = _names(args.checks, CHECKS, "check")
    q_range, g_range = args.q, args.g
    if q_range is None and g_range is None:
        report = run_grid(checks=checks, budget=_budget(args), workers=args.workers, timed=args.timings)
    else:
        report = run_grid(q_range or [1, 2, 3], g_range or [0, 1], checks, _budget(args),
                          workers=args.workers, timed=args.timings)
    _emit(report_render(report, args.format), args.out)
    if args.figures:
        from .plotting import plot_verify_status

        plot_verify_status(report, Path(args.figures) / "verify_status.png")
    return 0 if report.ok else 1


def cmd_degrees(args) -> int:
    p = _params(_single(args.q, "--q"), _single(args.g, "--g"))
    census = degree_census(p)
    total_nodes = sum(r.count for r in census)
    total_degree = sum(r.degree * r.count for r in census)
    if args.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["generation", "degree", "count"])
        writer.writerows((r.generation, r.degree, r.count) for r in census)
        writer.writerow(["total", total_degree, total_nodes])
        out = buf.getvalue()
    elif args.format == "json":
        out = json.dumps({
            "q": p.q, "g": p.g,
            "rows": [{"generation": r.generation, "degree": r.degree, "count": r.count} for r in census],
            "total_nodes": total_nodes, "total_degree": total_degree,
        }, indent=2) + "\n"
    else:
        lines = [f"{'g_v':>5}{'degree':>12}{'count':>12}"]
        lines += [f"{r.generation:>5}{r.degree:>12}{r.count:>12}" for r in census]
        lines.append(f"total: N={total_nodes} 2M={total_degree}")
        out = "\n".join(lines) + "\n"
    _emit(out.encode(), args.out)
    if args.figure:
        from .plotting import plot_degree_census

        plot_degree_census(p, census, Path(args.figure))
    return 0


# ---------------------------------------------------------------- parser


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="simplexnet", description="Simplicial network family G_q(g).")
    sub = parser.add_subparsers(dest="command", required=True)

    def family(sp, required=True):
        sp.add_argument("--q", type=parse_range, required=required, help="q, or a range a..b")
        sp.add_argument("--g", type=parse_range, required=required, help="g, or a range a..b")
        sp.add_argument("--out", help="write output here instead of standard output")

    gen = sub.add_parser("generate", help="write G_q(g) as an edge list, DOT or JSON")
    family(gen)
    gen.add_argument("--format", choices=FORMATS, default="edgelist")
    gen.add_argument("--max-nodes", type=int, help="size guard (default: $SIMPLEX_MAX_NODES or 200000)")
    gen.set_defaults(func=cmd_generate)

    ev = sub.add_parser("eval", help="print closed-form invariants")
    family(ev)
    ev.add_argument("--invariants", "--checks", dest="invariants", default="all",
                    help=f"comma-separated list from: {', '.join(EVAL_INVARIANTS)}")
    ev.add_argument("--format", choices=("table", "csv", "json"), default="table")
    ev.set_defaults(func=cmd_eval)

    ver = sub.add_parser("verify", help="compare closed forms with oracles over a grid")
    family(ver, required=False)
    ver.add_argument("--checks", default="all", help=f"comma-separated list from: {', '.join(CHECKS)}")
    ver.add_argument("--format", choices=("text", "json", "csv"), default="text")
    ver.add_argument("--max-nodes", type=int, help="oracle node budget")
    ver.add_argument("--max-edges", type=int, help="orientation/deletion-contraction edge budget")
    ver.add_argument("--max-steps", type=int, help="search step budget per oracle call")
    ver.add_argument("--workers", type=int, default=1)
    ver.add_argument("--timings", action="store_true", help="record wall-clock ms (otherwise 0)")
    ver.add_argument("--figures", help="directory for the status figure")
    ver.set_defaults(func=cmd_verify)

    deg = sub.add_parser("degrees", help="degree census table")
    family(deg)
    deg.add_argument("--format", choices=("table", "csv", "json"), default="table")
    deg.add_argument("--figure", help="write a log-log census plot here")
    deg.set_defaults(func=cmd_degrees)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (CliError, SizeGuardError, cf.PreconditionError, cf.IntegralityError) as exc:
        print(f"simplexnet: error: {exc}", file=sys.stderr)
        return 2
