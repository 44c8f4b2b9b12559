"""Exact branch-and-bound solvers for the domination-type invariants.

Every solver returns an :class:`InvariantResult` whose witness can be checked
with :func:`verify_result`.  Independent brute-force counterparts live in
:mod:`romdom.oracles`.

Tie-breaking: set witnesses are the least optimal set read as a bitset
integer; labeling witnesses of ``gamma_tR`` are least by
:meth:`RomanLabeling.key`.  ``gamma_R`` witnesses are deterministic but come
from a branching order chosen for pruning strength, not canonical order.
"""

from __future__ import annotations

import os
import time
from dataclasses import dataclass, field, replace
from typing import Any, Callable

from .errors import BudgetExceeded, Undefined
from .graph import Graph, delete_vertex, iter_bits, structure_queries
from .labelings import RomanLabeling, VertexSet, is_dominating, is_open_packing, is_packing, is_rdf
from .labelings import is_total_dominating, is_trdf, weight

INF = float("inf")

INVARIANTS = ("gamma", "gamma_t", "rho", "rho_o", "gamma_R", "gamma_tR", "kernel_k")


@dataclass(frozen=True)
class SolverBudget:
    max_nodes: int = 10**8
    max_seconds: float = 60.0
    max_n_bruteforce: int = 12

    def __post_init__(self) -> None:
        if self.max_nodes <= 0 or self.max_seconds <= 0 or self.max_n_bruteforce <= 0:
            raise ValueError("budget limits must be positive")

    @classmethod
    def from_env(cls, **overrides: Any) -> SolverBudget:
        """Default budget, with ``ROMDOM_BUDGET_SECONDS`` overriding the time limit."""
        env = os.environ.get("ROMDOM_BUDGET_SECONDS")
        if env and "max_seconds" not in overrides:
            overrides["max_seconds"] = float(env)
        return cls(**overrides)


DEFAULT_BUDGET = SolverBudget()


@dataclass(frozen=True)
class InvariantResult:
    invariant: str
    value: int
    witness: VertexSet | RomanLabeling
    nodes_explored: int
    method: str = "branch_and_bound"
    certificate: dict[str, Any] | None = field(default=None, compare=False)


class _Meter:
    """Counts search nodes and enforces the budget."""

    def __init__(self, budget: SolverBudget | None):
        self.budget = budget or DEFAULT_BUDGET
        self.nodes = 0
        self.deadline = time.monotonic() + self.budget.max_seconds
        self.best: int | None = None

    def tick(self) -> None:
        self.nodes += 1
        if self.nodes > self.budget.max_nodes or (self.nodes & 1023 == 0 and time.monotonic() > self.deadline):
            raise BudgetExceeded(
                f"search budget exhausted after {self.nodes} nodes", best_bound=self.best, nodes=self.nodes
            )


def _require_no_isolated(G: Graph, what: str) -> None:
    if structure_queries(G).has_isolated_vertex:
        raise Undefined(f"{what} is undefined on graphs with isolated vertices")


# --- minimum set cover over vertex-indexed sets --------------------------------


def _min_cover(
    sets: list[int],
    universe: int,
    meter: _Meter,
    *,
    allowed: int | None = None,
    forced: int = 0,
    collect: int | None = None,
) -> tuple[int | float, list[int]]:
    """Least-cardinality S with ``forced <= S <= allowed`` whose sets cover ``universe``.

    Binary branching on vertices from the highest index down, exclusion first,
    so leaves are met in increasing bitset order and the first optimum is the
    least one.  With ``collect=k`` every cover of size ``k`` is returned, in
    increasing order.  Returns ``(size, covers)``; size is INF when infeasible.
    """
    n = len(sets)
    if allowed is None:
        allowed = (1 << n) - 1
    allowed &= ~forced
    coverers = [0] * n
    for w, s in enumerate(sets):
        for u in iter_bits(s):
            coverers[u] |= 1 << w
    start = universe
    for w in iter_bits(forced):
        start &= ~sets[w]

    best: list[Any] = [INF, []]
    if collect is not None:
        best[0] = collect

    def bound(uncovered: int, rem: int) -> int | float:
        for u in iter_bits(uncovered):
            if not coverers[u] & rem:
                return INF
        need = uncovered.bit_count()
        sizes = sorted(((sets[w] & uncovered).bit_count() for w in iter_bits(rem)), reverse=True)
        for k, c in enumerate(sizes, 1):
            need -= c
            if need <= 0:
                return k
        return INF

    def dfs(i: int, chosen: int, count: int, uncovered: int) -> None:
        meter.tick()
        if not uncovered:
            if collect is not None:
                if count == collect:
                    best[1].append(chosen)
            elif count < best[0]:
                best[0], best[1] = count, [chosen]
                meter.best = count
            return
        rem = allowed & ((1 << (i + 1)) - 1)
        lb = count + bound(uncovered, rem)
        if lb > best[0] or (collect is None and lb >= best[0]):
            return
        w = i
        while not (rem >> w & 1 and sets[w] & uncovered):
            w -= 1
        dfs(w - 1, chosen, count, uncovered)
        dfs(w - 1, chosen | 1 << w, count + 1, uncovered & ~sets[w])

    dfs(n - 1, forced, forced.bit_count(), start)
    if collect is not None:
        return (collect if best[1] else INF), best[1]
    return best[0], best[1]


def _max_independent(conflict: list[int], meter: _Meter) -> tuple[int, int]:
    """Maximum set with no two members in conflict; least bitset among maxima."""
    best = [-1, 0]

    def dfs(cands: int, chosen: int, count: int) -> None:
        meter.tick()
        if count + cands.bit_count() <= best[0]:
            return
        if not cands:
            best[0], best[1] = count, chosen
            meter.best = count
            return
        w = cands.bit_length() - 1
        rest = cands & ~(1 << w)
        dfs(rest, chosen, count)
        dfs(rest & ~conflict[w], chosen | 1 << w, count + 1)

    dfs((1 << len(conflict)) - 1, 0, 0)
    return best[0], best[1]


# --- Roman domination via V2-candidate search ---------------------------------


def _roman_bound(closed: list[int], U: int, A: int, M: int) -> int | float:
    """Lower bound on the cost of covering U.

    Each vertex of U is either labeled 1 (cost 1) or dominated by a member of
    A labeled 2 (cost 2, covers N[w] & U).  Vertices in M cannot take label 1.
    """
    for u in iter_bits(U & M):
        if not closed[u] & A:
            return INF
    need = U.bit_count()
    sizes = sorted((c for c in ((closed[w] & U).bit_count() for w in iter_bits(A)) if c > 2), reverse=True)
    cover = need
    k = 0
    for c in sizes:
        k += 1
        need -= c
        cover = min(cover, 2 * k + max(need, 0))
        if need <= 0:
            break
    # vertices of U with pairwise disjoint dominator options pay at least 1 each
    used = 0
    packing = 0
    for u in iter_bits(U):
        opts = closed[u] & A
        if not opts & used:
            used |= opts
            packing += 1
    return max(cover, packing)


def _roman_search(
    G: Graph,
    meter: _Meter,
    *,
    forced0: int = 0,
    forced1: int = 0,
    forced2: int = 0,
    incumbent: RomanLabeling | None = None,
    collect: int | None = None,
) -> tuple[int | float, list[RomanLabeling]]:
    """Minimum-weight RDF subject to forced labels.

    The search picks V2 only: for a fixed V2 the cheapest completion labels
    exactly the undominated vertices with 1.  Branching vertex is the
    undominated vertex with fewest remaining V2 candidates; it is covered by
    one of those candidates (earlier siblings' candidates excluded) or, last,
    by its own label 1, which also forbids its neighbourhood from V2.
    """
    n = G.n
    closed = [G.closed(v) for v in range(n)]
    full = G.full
    A0 = full & ~(forced0 | forced1 | forced2)
    U0 = full & ~G.closed_nbhd(forced2) & ~forced1
    cost0 = 2 * forced2.bit_count() + forced1.bit_count()
    M = forced0

    best: list[Any] = [INF, []]
    if collect is not None:
        best[0] = collect
    elif incumbent is not None:
        best[0], best[1] = weight(incumbent), [incumbent]
        meter.best = best[0]

    def emit(S: int) -> RomanLabeling:
        ones = (full & ~G.closed_nbhd(S)) | forced1
        return RomanLabeling.from_sets(n, ones & ~S, S)

    def dfs(S: int, cost: int, U: int, A: int) -> None:
        meter.tick()
        if not U:
            if collect is not None:
                if cost == collect:
                    best[1].append(emit(S))
            elif cost < best[0]:
                best[0], best[1] = cost, [emit(S)]
                meter.best = cost
            return
        lb = cost + _roman_bound(closed, U, A, M)
        if lb > best[0] or (collect is None and lb >= best[0]):
            return
        v = -1
        fewest = n + 1
        for u in iter_bits(U):
            c = (closed[u] & A).bit_count()
            if c < fewest:
                v, fewest = u, c
                if c == 0:
                    break
        cand = closed[v] & A
        vbit = 1 << v
        if not cand:
            dfs(S, cost + 1, U & ~vbit, A)
            return
        order = sorted(iter_bits(cand), key=lambda w: (-(closed[w] & U).bit_count(), w))
        excluded = 0
        for w in order:
            bit = 1 << w
            dfs(S | bit, cost + 2, U & ~closed[w], A & ~excluded & ~bit)
            excluded |= bit
        if not M & vbit:
            dfs(S, cost + 1, U & ~vbit, A & ~cand)

    dfs(forced2, cost0, U0, A0)
    if collect is not None:
        found = sorted(best[1], key=RomanLabeling.key)
        return (collect if found else INF), found
    return best[0], best[1]


# --- total Roman domination via ordered ternary search ------------------------


def _trdf_search(G: Graph, meter: _Meter, *, collect: int | None = None) -> tuple[int | float, list[RomanLabeling]]:
    """Minimum TRDF by labeling vertices n-1, ..., 0 with 0, 1, 2 in that order.

    A vertex's constraints are checked once its whole closed neighbourhood is
    labeled, which happens when the lowest index of N[u] is decided.
    """
    n = G.n
    adj = G.adj
    closed = [G.closed(v) for v in range(n)]
    complete_at: list[list[int]] = [[] for _ in range(n)]
    for u in range(n):
        low = closed[u] & -closed[u]
        complete_at[low.bit_length() - 1].append(u)

    best: list[Any] = [INF, []]
    if collect is not None:
        best[0] = collect

    def dfs(i: int, twos: int, pos: int, cost: int) -> None:
        meter.tick()
        if i < 0:
            f = RomanLabeling.from_sets(n, pos & ~twos, twos)
            if collect is not None:
                if cost == collect:
                    best[1].append(f)
            elif cost < best[0]:
                best[0], best[1] = cost, [f]
                meter.best = cost
            return
        undecided = (1 << (i + 1)) - 1
        decided_zero = ~undecided & ~pos & ((1 << n) - 1)
        unsat_zero = 0
        for u in iter_bits(decided_zero):
            if not adj[u] & twos:
                unsat_zero |= 1 << u
        U = (undecided & ~G.open_nbhd(twos)) | unsat_zero
        lb = cost + _roman_bound(closed, U, undecided, unsat_zero)
        if lb > best[0] or (collect is None and lb >= best[0]):
            return
        bit = 1 << i
        for x in (0, 1, 2):
            t = twos | bit if x == 2 else twos
            p = pos | bit if x else pos
            ok = True
            for u in complete_at[i]:
                if p >> u & 1:
                    if not adj[u] & p:
                        ok = False
                        break
                elif not adj[u] & t:
                    ok = False
                    break
            if ok:
                dfs(i - 1, t, p, cost + x)

    dfs(n - 1, 0, 0, 0)
    if collect is not None:
        return (collect if best[1] else INF), best[1]
    return best[0], best[1]


# --- public solvers -------------------------------------------------------------


def gamma(G: Graph, budget: SolverBudget | None = None) -> InvariantResult:
    meter = _Meter(budget)
    value, sets = _min_cover([G.closed(v) for v in range(G.n)], G.full, meter)
    return InvariantResult("gamma", int(value), VertexSet(sets[0], G.n), meter.nodes)


def gamma_t(G: Graph, budget: SolverBudget | None = None) -> InvariantResult:
    _require_no_isolated(G, "gamma_t")
    meter = _Meter(budget)
    value, sets = _min_cover(list(G.adj), G.full, meter)
    return InvariantResult("gamma_t", int(value), VertexSet(sets[0], G.n), meter.nodes)


def all_gamma_t_sets(G: Graph, budget: SolverBudget | None = None) -> list[int]:
    """Every minimum total dominating set, as bitsets in increasing order."""
    k = gamma_t(G, budget).value
    _, sets = _min_cover(list(G.adj), G.full, _Meter(budget), collect=k)
    return sets


def min_dominating_subset(G: Graph, within: int, budget: SolverBudget | None = None) -> int:
    """Least minimum-cardinality dominating set contained in ``within``."""
    value, sets = _min_cover([G.closed(v) for v in range(G.n)], G.full, _Meter(budget), allowed=within)
    if value == INF:
        raise Undefined("no dominating subset exists inside the given set")
    return sets[0]


def min_total_dominating_superset(G: Graph, inside: int, budget: SolverBudget | None = None) -> int:
    """Least minimum-cardinality total dominating set containing ``inside``."""
    _require_no_isolated(G, "total domination")
    value, sets = _min_cover(list(G.adj), G.full, _Meter(budget), forced=inside)
    return sets[0]


def _packing_conflicts(G: Graph, open_: bool) -> list[int]:
    rows = G.adj if open_ else [G.closed(v) for v in range(G.n)]
    out = []
    for v in range(G.n):
        reach = 0
        for u in iter_bits(rows[v]):
            reach |= rows[u]
        out.append(reach & ~(1 << v))
    return out


def rho(G: Graph, budget: SolverBudget | None = None) -> InvariantResult:
    meter = _Meter(budget)
    value, witness = _max_independent(_packing_conflicts(G, open_=False), meter)
    return InvariantResult("rho", value, VertexSet(witness, G.n), meter.nodes)


def rho_o(G: Graph, budget: SolverBudget | None = None) -> InvariantResult:
    _require_no_isolated(G, "rho_o")
    meter = _Meter(budget)
    value, witness = _max_independent(_packing_conflicts(G, open_=True), meter)
    return InvariantResult("rho_o", value, VertexSet(witness, G.n), meter.nodes)


def _least_witness(
    G: Graph, meter: _Meter, budget: SolverBudget | None, value: int | float, found: RomanLabeling, **forced: int
) -> RomanLabeling:
    """Least-key optimum on graphs within the enumeration cap; ``found`` otherwise."""
    if G.n > (budget or DEFAULT_BUDGET).max_n_bruteforce:
        return found
    return _roman_search(G, meter, collect=int(value), **forced)[1][0]


def gamma_R(
    G: Graph, budget: SolverBudget | None = None, *, incumbent: RomanLabeling | None = None
) -> InvariantResult:
    """Roman domination number.  ``incumbent`` is any known RDF used as the initial upper bound."""
    if incumbent is not None and not is_rdf(G, incumbent):
        raise ValueError("incumbent is not a Roman dominating function")
    meter = _Meter(budget)
    value, fs = _roman_search(G, meter, incumbent=incumbent)
    return InvariantResult("gamma_R", int(value), _least_witness(G, meter, budget, value, fs[0]), meter.nodes)


def gamma_R_forced(G: Graph, v: int, label: int, budget: SolverBudget | None = None) -> InvariantResult:
    """Minimum weight of an RDF with f(v) = label."""
    G.check_vertex(v)
    if label not in (0, 1, 2):
        raise ValueError(f"label must be 0, 1 or 2, got {label}")
    meter = _Meter(budget)
    kw = {f"forced{label}": 1 << v}
    value, fs = _roman_search(G, meter, **kw)
    if value == INF:
        # f(v) = 0 on an isolated vertex has no completion
        raise Undefined(f"no RDF has f({v}) = {label}")
    witness = _least_witness(G, meter, budget, value, fs[0], **kw)
    return InvariantResult("gamma_R", int(value), witness, meter.nodes, certificate={"vertex": v, "label": label})


def root2_achievable(H: Graph, v: int, budget: SolverBudget | None = None) -> bool:
    """Whether some minimum RDF of H assigns 2 to v."""
    return gamma_R_forced(H, v, 2, budget).value == gamma_R(H, budget).value


def enumerate_gamma_R_functions(G: Graph, budget: SolverBudget | None = None) -> list[RomanLabeling]:
    """All minimum RDFs, ordered by labeling key."""
    budget = budget or DEFAULT_BUDGET
    if G.n > budget.max_n_bruteforce:
        raise BudgetExceeded(f"n={G.n} exceeds enumeration cap {budget.max_n_bruteforce}")
    k = gamma_R(G, budget).value
    return _roman_search(G, _Meter(budget), collect=k)[1]


def gamma_tR(G: Graph, budget: SolverBudget | None = None) -> InvariantResult:
    _require_no_isolated(G, "gamma_tR")
    meter = _Meter(budget)
    value, fs = _trdf_search(G, meter)
    return InvariantResult("gamma_tR", int(value), fs[0], meter.nodes)


def enumerate_gamma_tR_functions(G: Graph, budget: SolverBudget | None = None) -> list[RomanLabeling]:
    """All minimum TRDFs, ordered by labeling key."""
    budget = budget or DEFAULT_BUDGET
    if G.n > budget.max_n_bruteforce:
        raise BudgetExceeded(f"n={G.n} exceeds enumeration cap {budget.max_n_bruteforce}")
    k = gamma_tR(G, budget).value
    return _trdf_search(G, _Meter(budget), collect=k)[1]


def kernel_number(G: Graph, budget: SolverBudget | None = None) -> InvariantResult:
    """k(G): largest |D \\ D'| over minimum total dominating sets D, D' a minimum dominating subset of D.

    The certificate holds the maximizing pair (first in bitset order) and the kernel.
    """
    _require_no_isolated(G, "kernel_number")
    meter = _Meter(budget)
    k_t = int(_min_cover(list(G.adj), G.full, meter)[0])
    _, tsets = _min_cover(list(G.adj), G.full, meter, collect=k_t)
    closed = [G.closed(v) for v in range(G.n)]
    best = (-1, 0, 0)
    for D in tsets:
        _, inner = _min_cover(closed, G.full, meter, allowed=D)
        Dp = inner[0]
        size = D.bit_count() - Dp.bit_count()
        if size > best[0]:
            best = (size, D, Dp)
    size, D, Dp = best
    cert = {"D": VertexSet(D, G.n), "D_prime": VertexSet(Dp, G.n), "kernel": VertexSet(D & ~Dp, G.n), "gamma_t": k_t}
    return InvariantResult("kernel_k", size, VertexSet(D & ~Dp, G.n), meter.nodes, certificate=cert)


SOLVERS: dict[str, Callable[..., InvariantResult]] = {
    "gamma": gamma,
    "gamma_t": gamma_t,
    "rho": rho,
    "rho_o": rho_o,
    "gamma_R": gamma_R,
    "gamma_tR": gamma_tR,
    "kernel_k": kernel_number,
}


def solve_all(G: Graph, budget: SolverBudget | None = None) -> dict[str, InvariantResult | str]:
    """Every invariant defined on G; undefined ones map to an explanatory string."""
    out: dict[str, InvariantResult | str] = {}
    for name, fn in SOLVERS.items():
        try:
            out[name] = fn(G, budget)
        except Undefined as exc:
            out[name] = f"undefined: {exc}"
    return out


def gamma_R_minus_vertex(H: Graph, v: int, budget: SolverBudget | None = None) -> InvariantResult:
    """gamma_R(H - v); the witness lives on H - v with shifted indices."""
    Hv, _ = delete_vertex(H, v)
    return gamma_R(Hv, budget)


def verify_result(G: Graph, r: InvariantResult) -> bool:
    """Check that the witness satisfies its predicate and reproduces ``value``."""
    w = r.witness
    if r.invariant in ("gamma_R", "gamma_tR"):
        if not isinstance(w, RomanLabeling) or w.host_n != G.n or weight(w) != r.value:
            return False
        if r.certificate and "vertex" in r.certificate:
            if w.labels[r.certificate["vertex"]] != r.certificate["label"]:
                return False
        return is_rdf(G, w) if r.invariant == "gamma_R" else is_trdf(G, w)
    if not isinstance(w, VertexSet) or w.host_n != G.n:
        return False
    m = w.members
    if r.invariant == "kernel_k":
        c = r.certificate or {}
        D, Dp = c["D"].members, c["D_prime"].members
        return (
            is_total_dominating(G, D)
            and D.bit_count() == c["gamma_t"]
            and Dp & ~D == 0
            and is_dominating(G, Dp)
            and m == D & ~Dp
            and m.bit_count() == r.value
        )
    check = {
        "gamma": is_dominating,
        "gamma_t": is_total_dominating,
        "rho": is_packing,
        "rho_o": is_open_packing,
    }[r.invariant]
    return check(G, m) and m.bit_count() == r.value


def with_method(r: InvariantResult, method: str) -> InvariantResult:
    return replace(r, method=method)


__all__ = [
    "SolverBudget",
    "InvariantResult",
    "DEFAULT_BUDGET",
    "INVARIANTS",
    "gamma",
    "gamma_t",
    "rho",
    "rho_o",
    "gamma_R",
    "gamma_R_forced",
    "gamma_tR",
    "root2_achievable",
    "enumerate_gamma_R_functions",
    "enumerate_gamma_tR_functions",
    "kernel_number",
    "all_gamma_t_sets",
    "min_dominating_subset",
    "min_total_dominating_superset",
    "gamma_R_minus_vertex",
    "solve_all",
    "verify_result",
]
