"""Exploration: distribution of gamma_R(H - v) - gamma_R(H) over connected graphs.

The drop is never more than one.  This script only reports how far the value
can rise, and which graphs realise the largest rise for each order; it does not
attempt to characterise them.
"""

from __future__ import annotations

import argparse
import sys
from collections import Counter, defaultdict
from dataclasses import dataclass

import networkx as nx

from romdom.graph import build_from_edges
from romdom.io import emit_graph6
from romdom.solvers import gamma_R, gamma_R_minus_vertex


@dataclass
class GapConfig:
    min_n: int = 2
    max_n: int = 7
    examples: int = 3


def main(argv: list[str] | None = None) -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--min-n", type=int, default=2)
    ap.add_argument("--max-n", type=int, default=7)
    ap.add_argument("--examples", type=int, default=3)
    a = ap.parse_args(argv)
    cfg = GapConfig(a.min_n, a.max_n, a.examples)

    by_order: dict[int, Counter[int]] = defaultdict(Counter)
    extreme: dict[int, list[tuple[str, int]]] = defaultdict(list)
    for g in nx.graph_atlas_g():
        n = g.number_of_nodes()
        if not (cfg.min_n <= n <= cfg.max_n) or not nx.is_connected(g):
            continue
        H = build_from_edges(n, list(g.edges()))
        a_H = gamma_R(H).value
        for v in range(n):
            gap = gamma_R_minus_vertex(H, v).value - a_H
            by_order[n][gap] += 1
            extreme[n].append((emit_graph6(H), v, gap))
    for n in sorted(by_order):
        hist = " ".join(f"{d:+d}:{k}" for d, k in sorted(by_order[n].items()))
        top = max(by_order[n])
        shown = [f"{s}@{v}" for s, v, d in extreme[n] if d == top][: cfg.examples]
        print(f"n={n}  {hist}  max={top:+d}  e.g. {', '.join(shown)}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
