"""{0,1,2} labelings, vertex sets, and the definitional predicates on them."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import DimensionMismatch, InvalidVertex, ParseError
from .graph import Graph, RootedProduct, iter_bits, mask_of


@dataclass(frozen=True)
class VertexSet:
    members: int
    host_n: int

    def __post_init__(self) -> None:
        if self.members < 0 or self.members >> self.host_n:
            raise InvalidVertex(f"members exceed host order {self.host_n}")

    @classmethod
    def of(cls, vertices: Iterable[int], host_n: int) -> VertexSet:
        return cls(mask_of(vertices), host_n)

    def __iter__(self):
        return iter_bits(self.members)

    def __len__(self) -> int:
        return self.members.bit_count()

    def __contains__(self, v: int) -> bool:
        return bool(self.members >> v & 1)

    def to_list(self) -> list[int]:
        return list(self)


@dataclass(frozen=True)
class RomanLabeling:
    labels: tuple[int, ...]

    def __post_init__(self) -> None:
        if any(x not in (0, 1, 2) for x in self.labels):
            raise ValueError(f"labels must lie in {{0,1,2}}: {self.labels}")

    @classmethod
    def from_sets(cls, n: int, ones: int = 0, twos: int = 0) -> RomanLabeling:
        if ones & twos:
            raise ValueError("V1 and V2 overlap")
        return cls(tuple(2 if twos >> v & 1 else 1 if ones >> v & 1 else 0 for v in range(n)))

    @classmethod
    def constant(cls, n: int, value: int) -> RomanLabeling:
        return cls((value,) * n)

    @property
    def host_n(self) -> int:
        return len(self.labels)

    def level(self, i: int) -> int:
        """Bitset V_i."""
        return mask_of(v for v, x in enumerate(self.labels) if x == i)

    @property
    def V0(self) -> int:
        return self.level(0)

    @property
    def V1(self) -> int:
        return self.level(1)

    @property
    def V2(self) -> int:
        return self.level(2)

    def key(self) -> int:
        """Base-3 integer with vertex i as digit i; the canonical tie-break order."""
        return sum(x * 3**i for i, x in enumerate(self.labels))

    def __str__(self) -> str:
        return format_labeling(self)


def weight(f: RomanLabeling) -> int:
    return sum(f.labels)


def _match(G: Graph, n: int) -> None:
    if n != G.n:
        raise DimensionMismatch(f"object addresses {n} vertices, graph has {G.n}")


def rdf_violations(G: Graph, f: RomanLabeling) -> list[int]:
    """Vertices labeled 0 that have no neighbor labeled 2."""
    _match(G, f.host_n)
    twos = f.V2
    return [v for v, x in enumerate(f.labels) if x == 0 and not G.adj[v] & twos]


def is_rdf(G: Graph, f: RomanLabeling) -> bool:
    return not rdf_violations(G, f)


def trdf_violations(G: Graph, f: RomanLabeling) -> list[int]:
    """RDF violations plus positive vertices isolated in G[V1 u V2]."""
    bad = rdf_violations(G, f)
    positive = f.V1 | f.V2
    bad += [v for v in iter_bits(positive) if not G.adj[v] & positive]
    return sorted(bad)


def is_trdf(G: Graph, f: RomanLabeling) -> bool:
    return not trdf_violations(G, f)


def is_dominating(G: Graph, S: int) -> bool:
    return G.closed_nbhd(S) == G.full


def is_total_dominating(G: Graph, S: int) -> bool:
    return G.open_nbhd(S) == G.full


def is_packing(G: Graph, S: int) -> bool:
    seen = 0
    for v in iter_bits(S):
        nb = G.closed(v)
        if seen & nb:
            return False
        seen |= nb
    return True


def is_open_packing(G: Graph, S: int) -> bool:
    seen = 0
    for v in iter_bits(S):
        if seen & G.adj[v]:
            return False
        seen |= G.adj[v]
    return True


@dataclass(frozen=True)
class SetPredicates:
    dominating: bool
    total_dominating: bool
    packing: bool
    open_packing: bool


def set_predicates(G: Graph, S: VertexSet) -> SetPredicates:
    _match(G, S.host_n)
    m = S.members
    return SetPredicates(is_dominating(G, m), is_total_dominating(G, m), is_packing(G, m), is_open_packing(G, m))


def restrict_to_copy(R: RootedProduct, f: RomanLabeling, x: int) -> tuple[RomanLabeling, int]:
    """Pull f back onto copy x of H; returns (f_x, weight(f_x))."""
    _match(R.graph, f.host_n)
    if not 0 <= x < R.G.n:
        raise InvalidVertex(f"copy index {x} not in [0, {R.G.n})")
    base = x * R.H.n
    fx = RomanLabeling(f.labels[base : base + R.H.n])
    return fx, weight(fx)


# --- labeling text format ----------------------------------------------------


def format_labeling(f: RomanLabeling) -> str:
    return " ".join(map(str, f.labels))


def parse_labeling(text: str, n: int | None = None) -> RomanLabeling:
    """Whitespace-separated digits in vertex order, e.g. ``"0 2 0 1"``."""
    labels = []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0]
        for tok in line.split():
            if tok not in ("0", "1", "2"):
                raise ParseError(f"bad label {tok!r}", line=lineno)
            labels.append(int(tok))
    if n is not None and len(labels) != n:
        raise DimensionMismatch(f"labeling has {len(labels)} entries, expected {n}")
    return RomanLabeling(tuple(labels))


def labeling_from_pairs(n: int, assignment: Sequence[tuple[int, int]]) -> RomanLabeling:
    """Build a labeling from (vertex, label) pairs; unspecified vertices get 0."""
    labels = [0] * n
    for v, x in assignment:
        labels[v] = x
    return RomanLabeling(tuple(labels))
