"""Survey the three-way classification of rooted products over small graphs.

For every connected G and H in the chosen order ranges and every root v of H,
classify G o_v H, solve it exactly, and tally how often each case occurs.
"""

from __future__ import annotations

import argparse
import sys
from collections import Counter
from dataclasses import dataclass

import networkx as nx

from romdom.analysis import rooted_sandwich_check
from romdom.graph import Graph, build_from_edges


@dataclass
class SurveyConfig:
    max_g: int = 3
    max_h: int = 5


def atlas(lo: int, hi: int) -> list[Graph]:
    out = []
    for g in nx.graph_atlas_g():
        if lo <= g.number_of_nodes() <= hi and nx.is_connected(g):
            out.append(build_from_edges(g.number_of_nodes(), list(g.edges())))
    return out


def main(argv: list[str] | None = None) -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-g", type=int, default=3)
    ap.add_argument("--max-h", type=int, default=5)
    a = ap.parse_args(argv)
    cfg = SurveyConfig(a.max_g, a.max_h)

    cases: Counter[str] = Counter()
    failures = 0
    fallbacks = 0
    for G in atlas(2, cfg.max_g):
        for H in atlas(2, cfg.max_h):
            for v in range(H.n):
                s = rooted_sandwich_check(G, H, v)
                cases[s.classification.case] += 1
                fallbacks += s.classification.fallback
                if not s.ok:
                    failures += 1
                    print(f"mismatch: G={G.edges()} H={H.edges()} v={v} exact={s.exact}", file=sys.stderr)
    total = sum(cases.values())
    for case, k in cases.most_common():
        print(f"{case:<13} {k:>6}  {k / total:6.1%}")
    print(f"triples={total} fallback={fallbacks} mismatches={failures}")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
