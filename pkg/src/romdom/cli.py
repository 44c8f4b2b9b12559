"""Command-line interface.

Exit status: 0 on success, 2 when a consistency check fails (a bound is
violated, a classifier prediction is wrong, a labeling is invalid), 1 on errors.

Examples::

    romdom invariants P:5
    romdom direct-bounds K:2 C:5
    romdom rooted-classify P:5 Broom:4,2 --root 0 --sandwich
    romdom verify-labeling P:4 labels.txt
    romdom batch corpus.g6 --command rooted-classify --partner P:4 --root 0 --jobs 4
    romdom paper-tables --format csv --output tables.csv
"""

from __future__ import annotations

import argparse
import csv
import io as _io
import logging
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path
from typing import Any

from . import io as rio
from .analysis import direct_bounds_report, rooted_classify, rooted_sandwich_check
from .errors import BudgetExceeded, RomdomError
from .graph import Graph, complete, direct_product
from .labelings import is_trdf, parse_labeling, rdf_violations, trdf_violations, weight
from .solvers import SolverBudget, gamma_R, solve_all

log = logging.getLogger("romdom")

EXIT_OK, EXIT_ERROR, EXIT_INCONSISTENT = 0, 1, 2


def _budget(args: argparse.Namespace) -> SolverBudget:
    kw: dict[str, Any] = {}
    if args.budget_nodes is not None:
        kw["max_nodes"] = args.budget_nodes
    if args.budget_seconds is not None:
        kw["max_seconds"] = args.budget_seconds
    return SolverBudget.from_env(**kw)


def _instance(**graphs: Graph) -> dict[str, Any]:
    return {k: (g.name or rio.emit_graph6(g)) for k, g in graphs.items()} | {
        f"{k}_graph6": rio.emit_graph6(g) for k, g in graphs.items()
    }


def _write(args: argparse.Namespace, text: str) -> None:
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _csv(rows: list[dict[str, Any]]) -> str:
    if not rows:
        return ""
    buf = _io.StringIO()
    fields: list[str] = []
    for r in rows:
        fields += [k for k in r if k not in fields]
    w = csv.DictWriter(buf, fieldnames=fields)
    w.writeheader()
    w.writerows(rows)
    return buf.getvalue()


# --- subcommands ----------------------------------------------------------------


def cmd_invariants(args: argparse.Namespace) -> int:
    G = rio.load_graph(args.graph)
    results = solve_all(G, _budget(args))
    doc = rio.invariants_to_dict(results, _instance(G=G))
    if args.format == "json":
        _write(args, rio.dumps(doc))
    elif args.format == "csv":
        _write(args, _csv([{k: v for k, v in r.items() if k != "certificate"} for r in doc["results"]]))
    else:
        lines = [f"{G!r}"]
        for r in doc["results"]:
            lines.append(f"  {r['invariant']:<9} {r['value'] if r['value'] is not None else '-':>4}  {r.get('witness', r.get('note'))}")
        _write(args, "\n".join(lines))
    return EXIT_OK


def _bounds_doc(G: Graph, H: Graph, args: argparse.Namespace) -> dict[str, Any]:
    rep = direct_bounds_report(G, H, compute_exact=args.exact, budget=_budget(args))
    doc = rio.bounds_report_to_dict(rep)
    doc["instance"].update(_instance(G=G, H=H))
    return doc


def cmd_direct_bounds(args: argparse.Namespace) -> int:
    G, H = rio.load_graph(args.G), rio.load_graph(args.H)
    doc = _bounds_doc(G, H, args)
    if args.format == "json":
        _write(args, rio.dumps(doc))
    elif args.format == "csv":
        _write(args, _csv(doc["results"]))
    else:
        lines = [f"{doc['instance']['G']} x {doc['instance']['H']}: exact gamma_R = {doc['exact']}"]
        for e in doc["results"]:
            mark = "" if e["applicable"] else "  (n/a)"
            lines.append(f"  {e['bound_id']:<5} {e['side']:<6} {e['value']!s:>5}{mark}")
        lines.append("consistent" if doc["consistency"]["all_consistent"] else f"VIOLATIONS: {doc['consistency']['violations']}")
        _write(args, "\n".join(lines))
    return EXIT_OK if doc["consistency"]["all_consistent"] else EXIT_INCONSISTENT


def _rooted_doc(G: Graph, H: Graph, args: argparse.Namespace) -> dict[str, Any]:
    budget = _budget(args)
    if args.sandwich:
        sw = rooted_sandwich_check(G, H, args.root, budget)
        cls = sw.classification
    else:
        sw = None
        cls = rooted_classify(G, H, args.root, budget)
    inst = _instance(G=G, H=H) | {"root": args.root}
    return rio.classification_to_dict(cls, inst, sw)


def cmd_rooted_classify(args: argparse.Namespace) -> int:
    if args.root is None:
        raise SystemExit("rooted-classify requires --root")
    G, H = rio.load_graph(args.G), rio.load_graph(args.H)
    doc = _rooted_doc(G, H, args)
    if args.format == "json":
        _write(args, rio.dumps(doc))
    else:
        r = doc["results"][0]
        row = {"case": r["case"], "value": r["value"], "fallback": r["fallback"]} | r["certificates"]
        if "sandwich" in r:
            row |= {f"sandwich_{k}": v for k, v in r["sandwich"].items()}
        _write(args, _csv([row]) if args.format == "csv" else "\n".join(f"{k}: {v}" for k, v in row.items()))
    return EXIT_OK if doc["consistency"]["all_consistent"] else EXIT_INCONSISTENT


def cmd_verify_labeling(args: argparse.Namespace) -> int:
    G = rio.load_graph(args.graph)
    p = Path(args.labeling)
    f = parse_labeling(p.read_text() if p.is_file() else args.labeling, G.n)
    bad = trdf_violations(G, f) if args.total else rdf_violations(G, f)
    kind = "TRDF" if args.total else "RDF"
    ok = not bad
    doc = {
        "schema_version": rio.SCHEMA_VERSION,
        "kind": "verify-labeling",
        "instance": _instance(G=G),
        "results": [{"predicate": kind, "valid": ok, "weight": weight(f), "violations": bad}],
        "consistency": {"all_consistent": ok, "violations": [f"vertex {v}" for v in bad]},
    }
    if args.format == "json":
        _write(args, rio.dumps(doc))
    else:
        msg = f"valid {kind}, weight {weight(f)}" if ok else f"not a {kind}; violating vertices: {bad}"
        if ok and not args.total and is_trdf(G, f):
            msg += " (also total)"
        _write(args, msg)
    return EXIT_OK if ok else EXIT_INCONSISTENT


def _batch_one(job: tuple[int, str, str, str | None, argparse.Namespace]) -> dict[str, Any]:
    index, line, command, partner, args = job
    rec: dict[str, Any] = {"index": index, "graph6": line}
    try:
        G = rio.parse_graph6(line)
        if command == "invariants":
            rep = rio.invariants_to_dict(solve_all(G, _budget(args)), _instance(G=G))
        elif command == "direct-bounds":
            rep = _bounds_doc(G, rio.load_graph(partner), args)
        else:
            rep = _rooted_doc(G, rio.load_graph(partner), args)
        rec["status"] = "ok" if rep["consistency"]["all_consistent"] else "inconsistent"
        rec["report"] = rep
    except BudgetExceeded as exc:
        rec["status"] = "budget_exceeded"
        rec["error"] = str(exc)
    except RomdomError as exc:
        rec["status"] = "error"
        rec["error"] = f"{type(exc).__name__}: {exc}"
    return rec


def _batch_row(rec: dict[str, Any]) -> dict[str, Any]:
    row = {"index": rec["index"], "graph6": rec["graph6"], "status": rec["status"]}
    rep = rec.get("report")
    if rep is None:
        row["detail"] = rec.get("error", "")
    elif rep["kind"] == "direct-bounds":
        row["exact"] = rep["exact"]
        row |= {e["bound_id"]: e["value"] for e in rep["results"]}
    elif rep["kind"] == "rooted-classify":
        row["case"] = rep["results"][0]["case"]
        row["value"] = rep["results"][0]["value"]
    else:
        row |= {r["invariant"]: r["value"] for r in rep["results"]}
    return row


def run_batch(lines: list[str], command: str, partner: str | None, args: argparse.Namespace) -> list[dict[str, Any]]:
    jobs = [(i, ln, command, partner, args) for i, ln in enumerate(lines)]
    if args.jobs > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            return list(pool.map(_batch_one, jobs))
    return [_batch_one(j) for j in jobs]


def cmd_batch(args: argparse.Namespace) -> int:
    if args.command != "invariants" and not args.partner:
        raise SystemExit(f"batch {args.command} requires --partner")
    if args.command == "rooted-classify" and args.root is None:
        raise SystemExit("batch rooted-classify requires --root")
    text = Path(args.corpus).read_text()
    lines = [ln.strip() for ln in text.splitlines() if ln.strip() and not ln.startswith("#")]
    records = run_batch(lines, args.command, args.partner, args)
    if args.format == "json":
        _write(args, rio.dumps({"schema_version": rio.SCHEMA_VERSION, "kind": "batch", "results": records}))
    elif args.format == "csv":
        _write(args, _csv([_batch_row(r) for r in records]))
    else:
        _write(args, "\n".join(f"{r['index']:>4} {r['graph6']:<12} {r['status']}" for r in records))
    if any(r["status"] == "inconsistent" for r in records):
        return EXIT_INCONSISTENT
    return EXIT_OK


# sharp instances of the direct-product bounds: (G, H, bound_id)
SHARPNESS_EXAMPLES = [
    ("K:2", "C:5", "LB1"),
    ("K:2", "K:2", "LB2"),
    ("K:4", "K:5", "UB1"),
    ("P:4", "P:4", "UB2a"),
    ("P:4", "P:4", "UB3"),
    ("P:4", "P:8", "UB3"),
    ("K:4", "K:5", "UB3"),
    ("Star:3", "K:4", "UB4"),
    ("P:3", "K:4", "UB5"),
    ("K:3", "K:5", "UB5"),
    ("P:4", "P:6", "UB5"),
]


def cmd_paper_tables(args: argparse.Namespace) -> int:
    budget = _budget(args)
    rows: list[dict[str, Any]] = []
    ok = True
    for r in range(2, args.max_order + 1):
        for t in range(r, args.max_order + 1):
            P, _ = direct_product(complete(r), complete(t))
            exact = gamma_R(P, budget).value
            expected = 4 if r == 2 else 5 if r == 3 else 6
            ok &= exact == expected
            rows.append({"table": "complete", "G": f"K{r}", "H": f"K{t}", "bound_id": "CF", "bound": expected, "exact": exact})
    for g, h, bid in SHARPNESS_EXAMPLES:
        G, H = rio.load_graph(g), rio.load_graph(h)
        rep = direct_bounds_report(G, H, compute_exact=args.exact, budget=budget)
        e = rep.entry(bid)
        ok &= rep.all_consistent
        rows.append({"table": "sharpness", "G": G.name, "H": H.name, "bound_id": bid, "bound": e.value, "exact": rep.exact})
    if args.format == "json":
        _write(args, rio.dumps({"schema_version": rio.SCHEMA_VERSION, "kind": "paper-tables", "results": rows}))
    else:
        _write(args, _csv(rows))
    return EXIT_OK if ok else EXIT_INCONSISTENT


# --- parser -----------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--budget-nodes", type=int, default=None)
    common.add_argument("--budget-seconds", type=float, default=None)
    common.add_argument("--exact", dest="exact", action="store_true", default=None)
    common.add_argument("--no-exact", dest="exact", action="store_false")
    common.add_argument("--jobs", type=int, default=1)
    common.add_argument("--format", choices=("json", "csv", "text"), default=None)
    common.add_argument("--root", type=int, default=None)
    common.add_argument("--output", default=None)
    common.add_argument("-v", "--verbose", action="store_true")

    p = argparse.ArgumentParser(prog="romdom", description="Roman domination on direct and rooted product graphs")
    sub = p.add_subparsers(dest="cmd", required=True)

    s = sub.add_parser("invariants", parents=[common], help="all seven invariants of one graph")
    s.add_argument("graph")
    s.set_defaults(fn=cmd_invariants)

    s = sub.add_parser("direct-bounds", parents=[common], help="bound catalog for G x H")
    s.add_argument("G")
    s.add_argument("H")
    s.set_defaults(fn=cmd_direct_bounds)

    s = sub.add_parser("rooted-classify", parents=[common], help="classify G o_v H")
    s.add_argument("G")
    s.add_argument("H")
    s.add_argument("--sandwich", action="store_true", help="also solve the rooted product exactly")
    s.set_defaults(fn=cmd_rooted_classify)

    s = sub.add_parser("verify-labeling", parents=[common], help="check a labeling file against a graph")
    s.add_argument("graph")
    s.add_argument("labeling", help="file of whitespace-separated labels, or the labels inline")
    s.add_argument("--total", action="store_true", help="check the total Roman condition too")
    s.set_defaults(fn=cmd_verify_labeling)

    s = sub.add_parser("batch", parents=[common], help="run a command over a graph6 corpus")
    s.add_argument("corpus")
    s.add_argument("--command", choices=("invariants", "direct-bounds", "rooted-classify"), default="invariants")
    s.add_argument("--partner", default=None, help="fixed second factor")
    s.add_argument("--sandwich", action="store_true")
    s.set_defaults(fn=cmd_batch)

    s = sub.add_parser("paper-tables", parents=[common], help="complete-graph grid and sharp examples as CSV")
    s.add_argument("--max-order", type=int, default=6)
    s.set_defaults(fn=cmd_paper_tables)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if args.format is None:
        args.format = "csv" if args.cmd == "paper-tables" else "text"
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s %(message)s")
    try:
        return args.fn(args)
    except (RomdomError, OSError) as exc:
        log.error("%s: %s", type(exc).__name__, exc)
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
