"""Brute-force reference values: 2^n subset and 3^n labeling enumeration.

These share no search code with :mod:`romdom.solvers`; they only use the
definitional predicates, so they can serve as independent oracles.
"""

from __future__ import annotations

from .errors import BudgetExceeded, Undefined
from .graph import Graph, structure_queries
from .labelings import RomanLabeling, VertexSet, is_dominating, is_open_packing, is_packing, is_total_dominating
from .solvers import DEFAULT_BUDGET, InvariantResult, SolverBudget

BF = "brute_force"


def _cap(G: Graph, budget: SolverBudget | None) -> None:
    cap = (budget or DEFAULT_BUDGET).max_n_bruteforce
    if G.n > cap:
        raise BudgetExceeded(f"n={G.n} exceeds brute-force cap {cap}")


def _no_isolated(G: Graph) -> None:
    if structure_queries(G).has_isolated_vertex:
        raise Undefined("undefined with isolated vertices")


def _best_subset(G: Graph, pred, maximize: bool, invariant: str) -> InvariantResult:
    best, witness = None, None
    for S in range(1 << G.n):
        if pred(G, S):
            c = S.bit_count()
            if best is None or (c > best if maximize else c < best):
                best, witness = c, S
    return InvariantResult(invariant, best, VertexSet(witness, G.n), 1 << G.n, BF)


def bf_gamma(G: Graph, budget: SolverBudget | None = None) -> InvariantResult:
    _cap(G, budget)
    return _best_subset(G, is_dominating, False, "gamma")


def bf_gamma_t(G: Graph, budget: SolverBudget | None = None) -> InvariantResult:
    _cap(G, budget)
    _no_isolated(G)
    return _best_subset(G, is_total_dominating, False, "gamma_t")


def bf_rho(G: Graph, budget: SolverBudget | None = None) -> InvariantResult:
    _cap(G, budget)
    return _best_subset(G, is_packing, True, "rho")


def bf_rho_o(G: Graph, budget: SolverBudget | None = None) -> InvariantResult:
    _cap(G, budget)
    _no_isolated(G)
    return _best_subset(G, is_open_packing, True, "rho_o")


def _labelings(G: Graph):
    """Yield (ones, twos) over all 3^n labelings."""
    full = G.full
    for twos in range(1 << G.n):
        rest = full & ~twos
        ones = rest
        while True:
            yield ones, twos
            if not ones:
                break
            ones = (ones - 1) & rest


def _rdf(G: Graph, ones: int, twos: int) -> bool:
    zeros = G.full & ~ones & ~twos
    return zeros & ~G.open_nbhd(twos) == 0


def _trdf(G: Graph, ones: int, twos: int) -> bool:
    if not _rdf(G, ones, twos):
        return False
    pos = ones | twos
    m = pos
    while m:
        low = m & -m
        if not G.adj[low.bit_length() - 1] & pos:
            return False
        m ^= low
    return True


def _all_optimal(G: Graph, pred) -> tuple[int, list[RomanLabeling]]:
    best = None
    found: list[tuple[int, int]] = []
    for ones, twos in _labelings(G):
        w = ones.bit_count() + 2 * twos.bit_count()
        if best is not None and w > best:
            continue
        if pred(G, ones, twos):
            if best is None or w < best:
                best, found = w, []
            found.append((ones, twos))
    fs = sorted((RomanLabeling.from_sets(G.n, o, t) for o, t in found), key=RomanLabeling.key)
    return best, fs


def bf_all_gamma_R_functions(G: Graph, budget: SolverBudget | None = None) -> list[RomanLabeling]:
    _cap(G, budget)
    return _all_optimal(G, _rdf)[1]


def bf_all_gamma_tR_functions(G: Graph, budget: SolverBudget | None = None) -> list[RomanLabeling]:
    _cap(G, budget)
    _no_isolated(G)
    return _all_optimal(G, _trdf)[1]


def bf_gamma_R(G: Graph, budget: SolverBudget | None = None) -> InvariantResult:
    _cap(G, budget)
    value, fs = _all_optimal(G, _rdf)
    return InvariantResult("gamma_R", value, fs[0], 3**G.n, BF)


def bf_gamma_tR(G: Graph, budget: SolverBudget | None = None) -> InvariantResult:
    _cap(G, budget)
    _no_isolated(G)
    value, fs = _all_optimal(G, _trdf)
    return InvariantResult("gamma_tR", value, fs[0], 3**G.n, BF)


def bf_gamma_R_forced(G: Graph, v: int, label: int, budget: SolverBudget | None = None) -> int:
    _cap(G, budget)
    best = None
    for ones, twos in _labelings(G):
        lab = 2 if twos >> v & 1 else 1 if ones >> v & 1 else 0
        if lab != label:
            continue
        w = ones.bit_count() + 2 * twos.bit_count()
        if (best is None or w < best) and _rdf(G, ones, twos):
            best = w
    if best is None:
        raise Undefined(f"no RDF has f({v}) = {label}")
    return best


def bf_root2_achievable(H: Graph, v: int, budget: SolverBudget | None = None) -> bool:
    """Enumerate every minimum RDF and look for one with f(v) = 2."""
    return any(f.labels[v] == 2 for f in bf_all_gamma_R_functions(H, budget))


def bf_gamma_R_by_subsets(G: Graph, budget: SolverBudget | None = None) -> int:
    """min over S of 2|S| + |V - N[S]|."""
    _cap(G, budget)
    return min(2 * S.bit_count() + (G.full & ~G.closed_nbhd(S)).bit_count() for S in range(1 << G.n))


def bf_kernel_number(G: Graph, budget: SolverBudget | None = None) -> int:
    _cap(G, budget)
    _no_isolated(G)
    tds = [S for S in range(1 << G.n) if is_total_dominating(G, S)]
    k_t = min(S.bit_count() for S in tds)
    best = 0
    for D in tds:
        if D.bit_count() != k_t:
            continue
        sub = D
        smallest = k_t
        while sub:
            if sub.bit_count() < smallest and is_dominating(G, sub):
                smallest = sub.bit_count()
            sub = (sub - 1) & D
        best = max(best, k_t - smallest)
    return best


def bf_min_total_dominating_superset(G: Graph, inside: int) -> int:
    """Size of the smallest total dominating set containing ``inside``."""
    return min(S.bit_count() for S in range(1 << G.n) if S & inside == inside and is_total_dominating(G, S))
