"""Simple graphs stored as bitset adjacency rows, plus the two product constructions.

Vertices are the integers ``0..n-1``; a vertex set is an ``int`` whose bit ``v``
is set iff ``v`` belongs to it.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import permutations
from typing import Iterable, Iterator, Sequence

from .errors import InvalidFamilyParams, InvalidVertex, LoopRejected, WouldBeEmpty

MAX_ORDER = 128


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the indices of set bits in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[int, ...]
    name: str | None = field(default=None, compare=False)

    def __post_init__(self) -> None:
        if not 1 <= self.n <= MAX_ORDER:
            raise InvalidVertex(f"order {self.n} outside [1, {MAX_ORDER}]")
        if len(self.adj) != self.n:
            raise InvalidVertex(f"expected {self.n} adjacency rows, got {len(self.adj)}")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise InvalidVertex(f"row {v} addresses vertices >= n")
            if row >> v & 1:
                raise LoopRejected(f"loop at vertex {v}")
            for u in iter_bits(row):
                if not self.adj[u] >> v & 1:
                    raise InvalidVertex(f"asymmetric adjacency between {u} and {v}")

    def __repr__(self) -> str:
        label = self.name or "Graph"
        return f"<{label} n={self.n} m={self.num_edges}>"

    @property
    def full(self) -> int:
        return (1 << self.n) - 1

    @property
    def num_edges(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def neighbors(self, v: int) -> list[int]:
        return list(iter_bits(self.adj[v]))

    def closed(self, v: int) -> int:
        """Closed neighborhood N[v] as a bitset."""
        return self.adj[v] | (1 << v)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in iter_bits(self.adj[u] >> (u + 1) << (u + 1))]

    def open_nbhd(self, mask: int) -> int:
        out = 0
        for v in iter_bits(mask):
            out |= self.adj[v]
        return out

    def closed_nbhd(self, mask: int) -> int:
        return self.open_nbhd(mask) | mask

    def check_vertex(self, v: int) -> None:
        if not (isinstance(v, int) and 0 <= v < self.n):
            raise InvalidVertex(f"vertex {v!r} not in [0, {self.n})")

    def induced(self, vertices: Sequence[int]) -> Graph:
        """Subgraph induced on ``vertices``, relabeled in the given order."""
        pos = {v: i for i, v in enumerate(vertices)}
        edges = [(pos[u], pos[w]) for u in vertices for w in iter_bits(self.adj[u]) if w in pos and pos[u] < pos[w]]
        return build_from_edges(len(vertices), edges)


def build_from_edges(n: int, edges: Iterable[tuple[int, int]], name: str | None = None) -> Graph:
    if not isinstance(n, int) or n < 1:
        raise InvalidVertex(f"vertex count must be a positive integer, got {n!r}")
    rows = [0] * n
    for u, v in edges:
        for x in (u, v):
            if not (isinstance(x, int) and 0 <= x < n):
                raise InvalidVertex(f"endpoint {x!r} not in [0, {n})")
        if u == v:
            raise LoopRejected(f"loop pair ({u}, {v})")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, tuple(rows), name)


# --- named families --------------------------------------------------------


def path(n: int) -> Graph:
    if n < 1:
        raise InvalidFamilyParams("path needs n >= 1")
    return build_from_edges(n, [(i, i + 1) for i in range(n - 1)], f"P{n}")


def cycle(n: int) -> Graph:
    if n < 3:
        raise InvalidFamilyParams("cycle needs n >= 3")
    return build_from_edges(n, [(i, (i + 1) % n) for i in range(n)], f"C{n}")


def complete(n: int) -> Graph:
    if n < 1:
        raise InvalidFamilyParams("complete graph needs n >= 1")
    return build_from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)], f"K{n}")


def complete_bipartite(s: int, t: int) -> Graph:
    if s < 1 or t < 1:
        raise InvalidFamilyParams("complete bipartite graph needs both sides >= 1")
    return build_from_edges(s + t, [(i, s + j) for i in range(s) for j in range(t)], f"K{s},{t}")


def star(n: int) -> Graph:
    """K_{1,n}; the center is vertex 0."""
    if n < 1:
        raise InvalidFamilyParams("star needs n >= 1 leaves")
    g = complete_bipartite(1, n)
    return Graph(g.n, g.adj, f"K1,{n}")


def wheel(n: int) -> Graph:
    """Hub (vertex 0) joined to every vertex of a cycle C_n on vertices 1..n."""
    if n < 3:
        raise InvalidFamilyParams("wheel needs a rim of at least 3 vertices")
    rim = [(1 + i, 1 + (i + 1) % n) for i in range(n)]
    return build_from_edges(n + 1, rim + [(0, 1 + i) for i in range(n)], f"W{n}")


def broom(handle: int, bristles: int) -> Graph:
    """Path 0..handle-1 with ``bristles`` extra leaves attached to vertex handle-1."""
    if handle < 1 or bristles < 0 or handle + bristles < 2:
        raise InvalidFamilyParams("broom needs handle >= 1 and at least 2 vertices")
    edges = [(i, i + 1) for i in range(handle - 1)]
    edges += [(handle - 1, handle + j) for j in range(bristles)]
    return build_from_edges(handle + bristles, edges, f"Broom{handle},{bristles}")


FAMILIES = {
    "path": path,
    "cycle": cycle,
    "complete": complete,
    "complete_bipartite": complete_bipartite,
    "star": star,
    "wheel": wheel,
    "broom": broom,
}


def generate(family: str, *params: int) -> Graph:
    try:
        builder = FAMILIES[family]
    except KeyError:
        raise InvalidFamilyParams(f"unknown family {family!r}") from None
    try:
        return builder(*params)
    except TypeError as exc:
        raise InvalidFamilyParams(f"bad parameters for {family}: {params}") from exc


# --- products --------------------------------------------------------------


@dataclass(frozen=True)
class ProductIndexMap:
    """Row-major pairing (u, v) <-> u * nH + v."""

    nG: int
    nH: int

    def encode(self, u: int, v: int) -> int:
        if not (0 <= u < self.nG and 0 <= v < self.nH):
            raise InvalidVertex(f"pair ({u}, {v}) outside {self.nG}x{self.nH}")
        return u * self.nH + v

    def decode(self, p: int) -> tuple[int, int]:
        if not 0 <= p < self.nG * self.nH:
            raise InvalidVertex(f"product vertex {p} out of range")
        return divmod(p, self.nH)

    def pair_mask(self, us: int, vs: int) -> int:
        """Bitset of the rectangle ``us x vs`` given factor bitsets."""
        row = vs
        out = 0
        for u in iter_bits(us):
            out |= row << (u * self.nH)
        return out


def direct_product(G: Graph, H: Graph) -> tuple[Graph, ProductIndexMap]:
    idx = ProductIndexMap(G.n, H.n)
    rows = []
    for u in range(G.n):
        for v in range(H.n):
            rows.append(idx.pair_mask(G.adj[u], H.adj[v]))
    name = f"{G.name}x{H.name}" if G.name and H.name else None
    return Graph(G.n * H.n, tuple(rows), name), idx


@dataclass(frozen=True)
class RootedProduct:
    """G rooted-product H at ``root``: copy x of H occupies vertices x*nH .. x*nH+nH-1."""

    graph: Graph
    G: Graph
    H: Graph
    root: int

    @property
    def index(self) -> ProductIndexMap:
        return ProductIndexMap(self.G.n, self.H.n)

    def copy_of(self, p: int) -> tuple[int, int]:
        return self.index.decode(p)

    def copy_vertices(self, x: int) -> list[int]:
        base = x * self.H.n
        return list(range(base, base + self.H.n))

    def copy_mask(self, x: int) -> int:
        return ((1 << self.H.n) - 1) << (x * self.H.n)

    def spine_vertex(self, x: int) -> int:
        return x * self.H.n + self.root

    @property
    def spine(self) -> list[int]:
        return [self.spine_vertex(x) for x in range(self.G.n)]


def rooted_product(G: Graph, H: Graph, v: int) -> RootedProduct:
    H.check_vertex(v)
    nH = H.n
    edges = []
    for x in range(G.n):
        base = x * nH
        edges += [(base + a, base + b) for a, b in H.edges()]
    edges += [(x * nH + v, y * nH + v) for x, y in G.edges()]
    name = f"{G.name}o{H.name}" if G.name and H.name else None
    return RootedProduct(build_from_edges(G.n * nH, edges, name), G, H, v)


def delete_vertex(G: Graph, v: int) -> tuple[Graph, dict[int, int]]:
    """G - v, with the old->new index map of the surviving vertices."""
    G.check_vertex(v)
    if G.n == 1:
        raise WouldBeEmpty("cannot delete the only vertex")
    remap = {u: (u if u < v else u - 1) for u in range(G.n) if u != v}
    low = (1 << v) - 1
    rows = []
    for u in range(G.n):
        if u == v:
            continue
        row = G.adj[u]
        rows.append((row & low) | ((row >> (v + 1)) << v))
    return Graph(G.n - 1, tuple(rows)), remap


@dataclass(frozen=True)
class StructureInfo:
    has_isolated_vertex: bool
    universal_vertices: int
    is_union_of_K2: bool


def structure_queries(G: Graph) -> StructureInfo:
    full = G.full
    isolated = any(row == 0 for row in G.adj)
    universal = mask_of(v for v in range(G.n) if G.closed(v) == full)
    union_k2 = all(row.bit_count() == 1 for row in G.adj)
    return StructureInfo(isolated, universal, union_k2)


def is_isomorphic(G: Graph, H: Graph) -> bool:
    """Brute-force permutation search; only meant for test-sized graphs."""
    if G.n != H.n or G.num_edges != H.num_edges:
        return False
    if G.n > 8:
        raise ValueError("brute-force isomorphism is limited to n <= 8")
    if sorted(map(int.bit_count, G.adj)) != sorted(map(int.bit_count, H.adj)):
        return False
    edges = G.edges()
    for perm in permutations(range(G.n)):
        if all(H.has_edge(perm[u], perm[v]) for u, v in edges):
            return True
    return False
