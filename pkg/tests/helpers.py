"""Graph strategies and random generators shared by the test modules."""

from __future__ import annotations

import random

import networkx as nx
from hypothesis import strategies as st

from romdom.graph import Graph, build_from_edges, path, structure_queries


def _fix_isolated(n: int, edges: list[tuple[int, int]]) -> list[tuple[int, int]]:
    deg = [0] * n
    for u, v in edges:
        deg[u] += 1
        deg[v] += 1
    out = list(edges)
    for v in range(n):
        if deg[v] == 0:
            w = (v + 1) % n
            out.append((v, w))
            deg[v] += 1
            deg[w] += 1
    return out


@st.composite
def graphs(draw, min_n: int = 1, max_n: int = 7, isolated_free: bool = False) -> Graph:
    n = draw(st.integers(max(min_n, 2 if isolated_free else 1), max_n))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    bits = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    edges = [p for p, b in zip(pairs, bits) if b]
    if isolated_free:
        edges = _fix_isolated(n, edges)
    return build_from_edges(n, edges)


def random_graph(rnd: random.Random, n: int, p: float | None = None, isolated_free: bool = False) -> Graph:
    p = rnd.uniform(0.2, 0.8) if p is None else p
    edges = [(i, j) for i in range(n) for j in range(i + 1, n) if rnd.random() < p]
    if isolated_free and n >= 2:
        edges = _fix_isolated(n, edges)
    return build_from_edges(n, edges)


def random_connected(rnd: random.Random, n: int) -> Graph:
    """Random connected graph: a random spanning tree plus random extra edges."""
    order = list(range(n))
    rnd.shuffle(order)
    edges = {tuple(sorted((order[i], order[rnd.randrange(i)]))) for i in range(1, n)}
    p = rnd.uniform(0.0, 0.7)
    edges |= {(i, j) for i in range(n) for j in range(i + 1, n) if rnd.random() < p}
    return build_from_edges(n, sorted(edges))


def from_nx(g: nx.Graph) -> Graph:
    nodes = sorted(g.nodes())
    pos = {v: i for i, v in enumerate(nodes)}
    return build_from_edges(len(nodes), [(pos[u], pos[v]) for u, v in g.edges()])


def connected_atlas(min_n: int = 2, max_n: int = 7) -> list[Graph]:
    """All connected graphs on min_n..max_n vertices, one per isomorphism class."""
    return [from_nx(g) for g in nx.graph_atlas_g() if min_n <= g.number_of_nodes() <= max_n and nx.is_connected(g)]


def figure_graph() -> tuple[Graph, int, int]:
    """The six-vertex tree v - a - b - w with two leaves on w; returns (H, v, w)."""
    from romdom.graph import broom

    return broom(4, 2), 0, 3


def no_isolated(G: Graph) -> bool:
    return not structure_queries(G).has_isolated_vertex


__all__ = ["graphs", "random_graph", "random_connected", "connected_atlas", "figure_graph", "no_isolated", "path"]
