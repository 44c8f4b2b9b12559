"""Explicit Roman dominating functions on product graphs.

Each builder assembles an RDF on G x H (or on a rooted product) from optimal
objects of the factors and returns it with the upper bound it certifies.
Where a bound is a minimum over the two factor orientations, both labelings
are built and the lighter one is kept (ties go to the (G, H) orientation).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

from .errors import HypothesisFailed, InvalidWitness
from .graph import Graph, ProductIndexMap, RootedProduct, delete_vertex, direct_product, rooted_product
from .labelings import RomanLabeling, is_dominating, is_rdf, is_trdf, weight
from .solvers import (
    DEFAULT_BUDGET,
    SolverBudget,
    enumerate_gamma_tR_functions,
    gamma,
    gamma_R,
    gamma_R_forced,
    gamma_t,
    gamma_tR,
    kernel_number,
    min_total_dominating_superset,
)


@dataclass(frozen=True)
class ConstructedBound:
    bound_id: str
    labeling: RomanLabeling
    claimed_bound: int
    inputs_digest: dict[str, Any]
    graph: Graph = field(compare=False, repr=False)

    @property
    def weight(self) -> int:
        return weight(self.labeling)

    def is_valid(self) -> bool:
        return is_rdf(self.graph, self.labeling) and self.weight <= self.claimed_bound


def _product_labeling(idx: ProductIndexMap, ones: int = 0, twos: int = 0) -> RomanLabeling:
    return RomanLabeling.from_sets(idx.nG * idx.nH, ones & ~twos, twos)


def transpose_mask(mask: int, nA: int, nB: int) -> int:
    """Map a bitset on A x B (row-major) to the same pairs on B x A."""
    out = 0
    m = mask
    while m:
        low = m & -m
        a, b = divmod(low.bit_length() - 1, nB)
        out |= 1 << (b * nA + a)
        m ^= low
    return out


def _pick_lighter(options: list[tuple[RomanLabeling, dict[str, Any]]]) -> tuple[RomanLabeling, dict[str, Any]]:
    best = options[0]
    for opt in options[1:]:
        if weight(opt[0]) < weight(best[0]):
            best = opt
    return best


def _ub1_oriented(F: Graph, E: Graph, budget: SolverBudget | None) -> tuple[int, int, int, int, int, int]:
    """TRDF on F, gamma-set D of E, smallest total dominating W of E containing D."""
    f = gamma_tR(F, budget).witness
    D = gamma(E, budget).witness.members
    W = min_total_dominating_superset(E, D, budget)
    return f.V1, f.V2, D, W, weight(f), D.bit_count()


def ub_trdf_dom(G: Graph, H: Graph, budget: SolverBudget | None = None) -> ConstructedBound:
    """2 on (V2 x W) u (V1 x D); bound min{2 gamma(G) gamma_tR(H), 2 gamma(H) gamma_tR(G)}."""
    P, idx = direct_product(G, H)
    V1, V2, D, W, tR_G, g_H = _ub1_oriented(G, H, budget)
    lab_gh = _product_labeling(idx, twos=idx.pair_mask(V2, W) | idx.pair_mask(V1, D))
    U1, U2, DG, WG, tR_H, g_G = _ub1_oriented(H, G, budget)
    sw = ProductIndexMap(H.n, G.n)
    lab_hg = _product_labeling(
        idx, twos=transpose_mask(sw.pair_mask(U2, WG) | sw.pair_mask(U1, DG), H.n, G.n)
    )
    lab, digest = _pick_lighter(
        [
            (lab_gh, {"orientation": "GH", "W_size": W.bit_count(), "D_size": g_H}),
            (lab_hg, {"orientation": "HG", "W_size": WG.bit_count(), "D_size": g_G}),
        ]
    )
    digest.update(gamma_tR_G=tR_G, gamma_tR_H=tR_H, gamma_G=g_G, gamma_H=g_H)
    claimed = min(2 * g_G * tR_H, 2 * g_H * tR_G)
    return ConstructedBound("UB1", lab, claimed, digest, P)


def _best_trdf(G: Graph, budget: SolverBudget | None, want_dominating: bool) -> RomanLabeling | None:
    """A minimum TRDF with largest V2 (or, with ``want_dominating``, with dominating V2)."""
    cap = (budget or DEFAULT_BUDGET).max_n_bruteforce
    if G.n > cap:
        f = gamma_tR(G, budget).witness
        if want_dominating and not is_dominating(G, f.V2):
            return None
        return f
    optima = enumerate_gamma_tR_functions(G, budget)
    if want_dominating:
        optima = [f for f in optima if is_dominating(G, f.V2)]
        if not optima:
            return None
    return max(optima, key=lambda f: (f.V2.bit_count(), -f.key()))


def ub_equal_domination(
    G: Graph,
    H: Graph,
    f: RomanLabeling | None = None,
    *,
    variant: str = "a",
    budget: SolverBudget | None = None,
) -> ConstructedBound:
    """2 on (V1 u V2) x D for a minimum total dominating set D of H, when gamma_t(H) = gamma(H).

    Variant "a" claims 2 gamma(H)(gamma_tR(G) - |V2|); variant "b" needs a
    minimum TRDF whose V2 dominates G and claims 2 gamma(H)(gamma_tR(G) - gamma(G)).
    """
    if variant not in ("a", "b"):
        raise ValueError("variant must be 'a' or 'b'")
    tH = gamma_t(H, budget)
    gH = gamma(H, budget).value
    if tH.value != gH:
        raise HypothesisFailed(f"gamma_t(H) = {tH.value} != {gH} = gamma(H)")
    tR = gamma_tR(G, budget).value
    gG = gamma(G, budget).value
    if f is not None:
        if not is_trdf(G, f) or weight(f) != tR:
            raise InvalidWitness("supplied labeling is not a minimum TRDF of G")
        if variant == "b" and not is_dominating(G, f.V2):
            raise HypothesisFailed("supplied TRDF does not have a dominating V2")
    else:
        f = _best_trdf(G, budget, want_dominating=variant == "b")
        if f is None:
            raise HypothesisFailed("no minimum TRDF of G has a dominating V2")
    P, idx = direct_product(G, H)
    D = tH.witness.members
    lab = _product_labeling(idx, twos=idx.pair_mask(f.V1 | f.V2, D))
    v2 = f.V2.bit_count()
    claimed = 2 * gH * (tR - v2) if variant == "a" else 2 * gH * (tR - gG)
    digest = {"gamma_tR_G": tR, "V2_size": v2, "gamma_H": gH, "gamma_G": gG, "trdf": str(f)}
    return ConstructedBound("UB2" + variant, lab, claimed, digest, P)


def ub_kernel(G: Graph, H: Graph, budget: SolverBudget | None = None) -> ConstructedBound:
    """2 on (D_G x D_H) minus (K_G x K_H); bound 2 gamma_t(G) gamma_t(H) - 2 k(G) k(H)."""
    kG = kernel_number(G, budget)
    kH = kernel_number(H, budget)
    P, idx = direct_product(G, H)
    cG, cH = kG.certificate, kH.certificate
    twos = idx.pair_mask(cG["D"].members, cH["D"].members) & ~idx.pair_mask(
        cG["kernel"].members, cH["kernel"].members
    )
    claimed = 2 * cG["gamma_t"] * cH["gamma_t"] - 2 * kG.value * kH.value
    digest = {
        "D_G": cG["D"].to_list(),
        "D_prime_G": cG["D_prime"].to_list(),
        "D_H": cH["D"].to_list(),
        "D_prime_H": cH["D_prime"].to_list(),
        "k_G": kG.value,
        "k_H": kH.value,
        "gamma_t_G": cG["gamma_t"],
        "gamma_t_H": cH["gamma_t"],
    }
    return ConstructedBound("UB4", _product_labeling(idx, twos=twos), claimed, digest, P)


def ub_dom_total(G: Graph, H: Graph, budget: SolverBudget | None = None) -> ConstructedBound:
    """V2 = D x W, V1 = D x (V(H) - W); bound min{gamma(G)(n(H)+gamma_t(H)), gamma(H)(n(G)+gamma_t(G))}."""
    P, idx = direct_product(G, H)
    DG = gamma(G, budget).witness.members
    DH = gamma(H, budget).witness.members
    WG = gamma_t(G, budget).witness.members
    WH = gamma_t(H, budget).witness.members
    lab_gh = _product_labeling(idx, ones=idx.pair_mask(DG, H.full & ~WH), twos=idx.pair_mask(DG, WH))
    lab_hg = _product_labeling(idx, ones=idx.pair_mask(G.full & ~WG, DH), twos=idx.pair_mask(WG, DH))
    lab, digest = _pick_lighter([(lab_gh, {"orientation": "GH"}), (lab_hg, {"orientation": "HG"})])
    gG, gH, tG, tH = DG.bit_count(), DH.bit_count(), WG.bit_count(), WH.bit_count()
    claimed = min(gG * (H.n + tH), gH * (G.n + tG))
    digest.update(gamma_G=gG, gamma_H=gH, gamma_t_G=tG, gamma_t_H=tH)
    return ConstructedBound("UB5", lab, claimed, digest, P)


# --- rooted products ------------------------------------------------------------


def _minus_root_labels(H: Graph, v: int, budget: SolverBudget | None) -> tuple[list[int], int]:
    """A minimum RDF of H - v lifted to H's indices with 0 at v, and its weight."""
    Hv, remap = delete_vertex(H, v)
    g = gamma_R(Hv, budget).witness
    labels = [0] * H.n
    for old, new in remap.items():
        labels[old] = g.labels[new]
    return labels, weight(g)


def rooted_ub(G: Graph, H: Graph, v: int, mode: str, budget: SolverBudget | None = None) -> ConstructedBound:
    """Upper-bound RDF on G o_v H.

    ``root2``: copies over a minimum dominating set of G carry a minimum RDF of H
    with 2 at the root, the other copies a minimum RDF of H - v with 0 at the root.
    ``split``: every copy carries a minimum RDF of H - v and the spine carries a
    minimum RDF of G.  ``concat``: every copy carries one minimum RDF of H.
    """
    R: RootedProduct = rooted_product(G, H, v)
    nH = H.n
    a = gamma_R(H, budget)
    labels = [0] * R.graph.n

    def place(x: int, copy_labels: list[int] | tuple[int, ...]) -> None:
        labels[x * nH : (x + 1) * nH] = copy_labels

    if mode == "concat":
        for x in range(G.n):
            place(x, a.witness.labels)
        claimed = G.n * a.value
        digest: dict[str, Any] = {"gamma_R_H": a.value}
    elif mode == "root2":
        forced = gamma_R_forced(H, v, 2, budget)
        if forced.value != a.value:
            raise HypothesisFailed("no minimum RDF of H assigns 2 to the root")
        rest, b = _minus_root_labels(H, v, budget)
        D = gamma(G, budget).witness
        for x in range(G.n):
            place(x, forced.witness.labels if x in D else rest)
        g = len(D)
        claimed = g * a.value + (G.n - g) * b
        digest = {"gamma_R_H": a.value, "gamma_R_H_minus_v": b, "gamma_G": g, "D": D.to_list()}
    elif mode == "split":
        rest, b = _minus_root_labels(H, v, budget)
        if b != a.value - 1:
            raise HypothesisFailed(f"gamma_R(H - v) = {b} != gamma_R(H) - 1 = {a.value - 1}")
        phi = gamma_R(G, budget)
        for x in range(G.n):
            copy = list(rest)
            copy[v] = phi.witness.labels[x]
            place(x, copy)
        claimed = phi.value + G.n * b
        digest = {"gamma_R_H": a.value, "gamma_R_H_minus_v": b, "gamma_R_G": phi.value}
    else:
        raise ValueError(f"unknown mode {mode!r}")
    return ConstructedBound(f"rooted_{mode}", RomanLabeling(tuple(labels)), claimed, digest, R.graph)
