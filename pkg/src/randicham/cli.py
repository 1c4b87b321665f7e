"""Command-line front end.

Exit codes: 0 success (or every graph GUARANTEED for the checking
commands), 1 some verdict not GUARANTEED, 2 usage or input error,
3 soundness violation found by ``search``.

Graphs are read from ``--g6``, ``--edges FILE`` (edge-list text), or
``--input FILE`` / standard input (one graph6 string per line).
The default comparison tolerance comes from ``RANDICHAM_TOL`` when set.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys
from dataclasses import dataclass
from typing import Optional, Sequence

from . import conditions, extremal, oracle, search, thresholds
from .errors import RandichamError
from .graph import Graph, emit_edge_list, emit_graph6, parse_edge_list, read_graph6_lines, parse_graph6
from .indices import zeroth_order_randic

EXIT_OK, EXIT_INCONCLUSIVE, EXIT_USAGE, EXIT_VIOLATION = 0, 1, 2, 3

_NAMED_ALPHAS = {"zagreb": 2.0, "forgotten": 3.0}
_GENERAL = {"2.3", "2.4", "general"}
_LARGE_N = {"2.6", "2.7", "large-n"}


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class RunConfig:
    subcommand: str
    g6: Optional[str] = None
    edges: Optional[str] = None
    input: Optional[str] = None
    alpha: Optional[float] = None
    k: int = 0
    fmt: str = "text"
    seed: int = 0
    tol: float = conditions.DEFAULT_REL_TOL

    def __post_init__(self) -> None:
        sources = [s for s in (self.g6, self.edges, self.input) if s is not None]
        if len(sources) > 1:
            raise UsageError("give at most one of --g6, --edges, --input")
        if not self.tol > 0:
            raise UsageError("tolerance must be positive")

    def graphs(self, stdin) -> list[Graph]:
        if self.g6 is not None:
            return [parse_graph6(self.g6)]
        if self.edges is not None:
            with open(self.edges) as fh:
                return [parse_edge_list(fh.read())]
        if self.input is not None and self.input != "-":
            with open(self.input) as fh:
                return list(read_graph6_lines(fh))
        return list(read_graph6_lines(stdin))


def _alpha(text: str) -> float:
    if text.lower() in _NAMED_ALPHAS:
        return _NAMED_ALPHAS[text.lower()]
    try:
        return float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number or index name: {text!r}") from None


def _default_tol() -> float:
    raw = os.environ.get("RANDICHAM_TOL")
    if raw is None:
        return conditions.DEFAULT_REL_TOL
    try:
        return float(raw)
    except ValueError:
        return conditions.DEFAULT_REL_TOL


def _add_graph_input(p: argparse.ArgumentParser) -> None:
    p.add_argument("--g6", help="graph in graph6 format")
    p.add_argument("--edges", metavar="FILE", help="edge-list file: 'n m' then m lines 'u v'")
    p.add_argument("--input", metavar="FILE", help="file of graph6 lines ('-' for stdin)")


def _add_format(p: argparse.ArgumentParser, choices=("text", "json")) -> None:
    p.add_argument("--format", choices=choices, default="text")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="randicham",
        description="Degree-power index conditions for Hamiltonicity.",
    )
    parser.add_argument("--tol", type=float, default=None,
                        help="relative tolerance for threshold equality (default: $RANDICHAM_TOL or 1e-9)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("index", help="print sum of degree**alpha")
    _add_graph_input(p)
    p.add_argument("--alpha", type=_alpha, required=True)
    _add_format(p)

    p = sub.add_parser("check", help="k-Hamiltonicity sufficient conditions")
    _add_graph_input(p)
    p.add_argument("--alpha", type=_alpha, required=True)
    p.add_argument("-k", type=int, default=0)
    p.add_argument("--theorem", default="auto",
                   choices=sorted(_GENERAL | _LARGE_N | {"auto"}))
    _add_format(p)

    p = sub.add_parser("check-bipartite", help="balanced bipartite Hamiltonicity condition")
    _add_graph_input(p)
    p.add_argument("--alpha", type=_alpha, required=True)
    _add_format(p)

    p = sub.add_parser("extremal", help="emit a graph attaining a bound")
    p.add_argument("--family", choices=("kite", "split", "bipartite"), required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, default=0)
    p.add_argument("--s", type=int, default=1)
    p.add_argument("--emit", choices=("g6", "edges"), default="g6")
    _add_format(p)

    p = sub.add_parser("oracle", help="exact (k-)Hamiltonicity with a witness cycle")
    _add_graph_input(p)
    p.add_argument("-k", type=int, default=0)
    _add_format(p)

    p = sub.add_parser("thresholds", help="f0, f1, x0, x1, n0, n1 for one alpha")
    p.add_argument("--alpha", type=_alpha, required=True)
    _add_format(p, ("text", "json", "csv"))

    p = sub.add_parser("table", help="threshold table for a list of alphas")
    p.add_argument("--alphas", default="2,3,5,10,20,50,100,500,1000,10000",
                   help="comma-separated alpha values")
    _add_format(p, ("text", "json", "csv"))

    p = sub.add_parser("search", help="randomised soundness search against the oracle")
    p.add_argument("--n", type=int, required=True, help="order (vertices per side with --bipartite)")
    p.add_argument("-k", type=int, default=0)
    p.add_argument("--alpha", type=_alpha, required=True)
    p.add_argument("--samples", type=int, default=1000)
    p.add_argument("--edge-prob", type=float, default=0.5)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--bipartite", action="store_true")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--violations-out", metavar="FILE", help="write violating graphs as graph6 lines")
    _add_format(p)
    return parser


def _emit(out, fmt: str, payload: dict, text: str) -> None:
    if fmt == "json":
        out.write(json.dumps(payload, sort_keys=False) + "\n")
    else:
        out.write(text + "\n")


def _report_text(g6: str, rep: conditions.ConditionReport) -> str:
    parts = [g6, rep.verdict.value, rep.theorem_tag, f"index={rep.index_value!r}", f"threshold={rep.threshold!r}"]
    if rep.tight:
        parts.append("tight")
    if rep.notes:
        parts.append(f"({rep.notes})")
    return " ".join(parts)


def _run_check(cfg: RunConfig, graphs, theorem: str, out, bipartite: bool = False) -> int:
    code = EXIT_OK
    for g in graphs:
        if bipartite:
            rep = conditions.check_bipartite(g, cfg.alpha, cfg.tol)
        elif theorem in _LARGE_N:
            rep = conditions.check_large_n(g, cfg.k, cfg.alpha, cfg.tol)
        elif theorem in _GENERAL:
            rep = conditions.check_k_hamiltonian(g, cfg.k, cfg.alpha, cfg.tol)
        else:
            gated = cfg.alpha >= 2 and g.n >= conditions.large_n_gate(cfg.k, cfg.alpha)
            rep = (conditions.check_large_n if gated else conditions.check_k_hamiltonian)(
                g, cfg.k, cfg.alpha, cfg.tol)
        g6 = emit_graph6(g)
        _emit(out, cfg.fmt, {"kind": "condition_report", "graph6": g6, **rep.to_dict()}, _report_text(g6, rep))
        if not rep.guaranteed:
            code = EXIT_INCONCLUSIVE
    return code


def _threshold_rows(alphas, fmt: str, out) -> None:
    rows = thresholds.threshold_table(alphas)
    if fmt == "csv":
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(thresholds.CSV_COLUMNS)
        for row in rows:
            writer.writerow(["" if v is None else v for v in row.to_dict().values()])
    elif fmt == "json":
        for row in rows:
            out.write(json.dumps({"kind": "threshold_row", **row.to_dict()}) + "\n")
    else:
        for row in rows:
            out.write(" ".join(f"{k}={v}" for k, v in row.to_dict().items()) + "\n")


def _dispatch(args, cfg: RunConfig, stdin, out) -> int:
    cmd = args.command
    if cmd == "index":
        for g in cfg.graphs(stdin):
            value = zeroth_order_randic(g, cfg.alpha)
            _emit(out, cfg.fmt, {"kind": "index", "graph6": emit_graph6(g), "alpha": cfg.alpha, "value": value},
                  repr(value))
        return EXIT_OK
    if cmd == "check":
        return _run_check(cfg, cfg.graphs(stdin), args.theorem, out)
    if cmd == "check-bipartite":
        return _run_check(cfg, cfg.graphs(stdin), "", out, bipartite=True)
    if cmd == "extremal":
        spec = extremal.ExtremalSpec(args.family, args.n, args.k, args.s)
        g = spec.build()
        text = emit_graph6(g) if args.emit == "g6" else emit_edge_list(g).rstrip("\n")
        _emit(out, cfg.fmt, {"kind": "graph", "family": args.family, "graph6": emit_graph6(g), "n": g.n,
                             "edges": [list(e) for e in g.edges()]}, text)
        return EXIT_OK
    if cmd == "oracle":
        for g in cfg.graphs(stdin):
            res = oracle.hamiltonian_cycle(g)
            payload = {"kind": "oracle_result", "graph6": emit_graph6(g), "k": cfg.k,
                       "hamiltonian": res.hamiltonian, "cycle": list(res.cycle) if res.cycle else None}
            if res.hamiltonian:
                text = "Hamiltonian: " + " ".join(map(str, res.cycle))
            else:
                text = "not Hamiltonian"
            if cfg.k > 0:
                kham = oracle.is_k_hamiltonian(g, cfg.k)
                payload["k_hamiltonian"] = kham
                text += f"; {'' if kham else 'not '}{cfg.k}-Hamiltonian"
            _emit(out, cfg.fmt, payload, text)
        return EXIT_OK
    if cmd == "thresholds":
        _threshold_rows([cfg.alpha], cfg.fmt, out)
        return EXIT_OK
    if cmd == "table":
        try:
            alphas = [float(a) for a in args.alphas.split(",") if a.strip()]
        except ValueError:
            raise UsageError(f"bad --alphas list {args.alphas!r}") from None
        _threshold_rows(alphas, cfg.fmt, out)
        return EXIT_OK
    if cmd == "search":
        params = search.SearchParams(n=args.n, k=args.k, alpha=cfg.alpha, samples=args.samples,
                                     edge_prob=args.edge_prob, seed=args.seed, bipartite=args.bipartite)
        report = search.soundness_search(params, workers=args.workers)
        search.write_violations(report, args.violations_out)
        d = report.to_dict()
        text = (f"samples={d['samples']} guaranteed={d['guaranteed']} confirmed={d['confirmed']} "
                f"violations={d['violations']} inconclusive={d['inconclusive']} "
                f"not_applicable={d['not_applicable']}")
        text += "".join(f"\nviolation {line}" for line in d["violation_graphs"])
        _emit(out, cfg.fmt, {"kind": "search_report", **d}, text)
        return EXIT_VIOLATION if report.violations else EXIT_OK
    raise UsageError(f"unknown command {cmd!r}")


def main(argv: Optional[Sequence[str]] = None, stdin=None, stdout=None, stderr=None) -> int:
    stdin = stdin if stdin is not None else sys.stdin
    out = stdout if stdout is not None else sys.stdout
    err = stderr if stderr is not None else sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    try:
        cfg = RunConfig(
            subcommand=args.command,
            g6=getattr(args, "g6", None),
            edges=getattr(args, "edges", None),
            input=getattr(args, "input", None),
            alpha=getattr(args, "alpha", None),
            k=getattr(args, "k", 0),
            fmt=args.format,
            seed=getattr(args, "seed", 0),
            tol=args.tol if args.tol is not None else _default_tol(),
        )
        return _dispatch(args, cfg, stdin, out)
    except (UsageError, RandichamError, OSError) as exc:
        err.write(f"randicham {args.command}: error: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
