"""Bound catalogs for direct products and the three-way classification of rooted products."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

from .constructions import (
    ConstructedBound,
    ub_dom_total,
    ub_equal_domination,
    ub_kernel,
    ub_trdf_dom,
)
from .errors import BudgetExceeded, HypothesisFailed, InvalidVertex, InvalidWitness, Undefined
from .graph import Graph, direct_product, rooted_product, structure_queries
from .labelings import RomanLabeling, is_rdf, restrict_to_copy, weight
from .solvers import (
    SolverBudget,
    gamma,
    gamma_R,
    gamma_R_minus_vertex,
    gamma_t,
    gamma_tR,
    rho,
    rho_o,
    root2_achievable,
)

EXACT_PRODUCT_LIMIT = 36

N_TIMES = "N_TIMES"
GAMMA_R_PLUS = "GAMMA_R_PLUS"
GAMMA_PLUS = "GAMMA_PLUS"
CASES = (N_TIMES, GAMMA_R_PLUS, GAMMA_PLUS)


@dataclass(frozen=True)
class BoundEntry:
    bound_id: str
    side: str  # "lower", "upper" or "equal"
    value: int | None
    formula: str
    applicable: bool
    note: str = ""


@dataclass(frozen=True)
class BoundsReport:
    instance: dict[str, Any]
    entries: tuple[BoundEntry, ...]
    exact: int | None
    all_consistent: bool
    violations: tuple[str, ...] = ()
    constructions: tuple[ConstructedBound, ...] = field(default=(), compare=False, repr=False)

    def entry(self, bound_id: str) -> BoundEntry:
        for e in self.entries:
            if e.bound_id == bound_id:
                return e
        raise KeyError(bound_id)


def _describe(G: Graph) -> str:
    from .io import emit_graph6

    return G.name or emit_graph6(G)


def closed_form(G: Graph, H: Graph) -> int | None:
    """gamma_R(G x H) when both factors are complete, or both have a universal vertex and n >= 4."""
    sG, sH = structure_queries(G), structure_queries(H)
    if G.n < 2 or H.n < 2:
        return None
    if sG.universal_vertices == G.full and sH.universal_vertices == H.full:
        r = min(G.n, H.n)
        return 4 if r == 2 else 5 if r == 3 else 6
    if sG.universal_vertices and sH.universal_vertices and G.n >= 4 and H.n >= 4:
        return 6
    return None


def _consistency(entries: list[BoundEntry], exact: int | None) -> list[str]:
    bad = []
    lows = [e for e in entries if e.applicable and e.side in ("lower", "equal")]
    ups = [e for e in entries if e.applicable and e.side in ("upper", "equal")]
    for lo in lows:
        for up in ups:
            if lo.value > up.value:
                bad.append(f"{lo.bound_id}={lo.value} > {up.bound_id}={up.value}")
    if exact is not None:
        for lo in lows:
            if lo.value > exact:
                bad.append(f"{lo.bound_id}={lo.value} > exact={exact}")
        for up in ups:
            if up.value < exact:
                bad.append(f"{up.bound_id}={up.value} < exact={exact}")
    return bad


def direct_bounds_report(
    G: Graph,
    H: Graph,
    compute_exact: bool | None = None,
    budget: SolverBudget | None = None,
) -> BoundsReport:
    """Every bound on gamma_R(G x H), optionally checked against the exact value.

    ``compute_exact=None`` solves the product exactly when it has at most
    ``EXACT_PRODUCT_LIMIT`` vertices.
    """
    for F in (G, H):
        if structure_queries(F).has_isolated_vertex:
            raise Undefined("direct-product bounds need factors without isolated vertices")
    def val(fn, F: Graph) -> int:
        return fn(F, budget).value

    gG, gH = val(gamma, G), val(gamma, H)
    tG, tH = val(gamma_t, G), val(gamma_t, H)
    rG, rH = val(gamma_R, G), val(gamma_R, H)
    pG, pH = val(rho, G), val(rho, H)
    oG, oH = val(rho_o, G), val(rho_o, H)

    entries = [
        BoundEntry("LB1", "lower", max(pG * rH, pH * rG), "max{rho(G)gamma_R(H), rho(H)gamma_R(G)}", True),
        BoundEntry("LB2", "lower", min(oG * tH, oH * tG), "min{rho_o(G)gamma_t(H), rho_o(H)gamma_t(G)}", True),
    ]
    constructions: list[ConstructedBound] = []

    ub1 = ub_trdf_dom(G, H, budget)
    constructions.append(ub1)
    entries.append(
        BoundEntry("UB1", "upper", ub1.claimed_bound, "min{2gamma(G)gamma_tR(H), 2gamma(H)gamma_tR(G)}", True)
    )

    for variant, formula in (
        ("a", "2gamma(H)(gamma_tR(G)-|V2|), gamma_t(H)=gamma(H)"),
        ("b", "2gamma(H)(gamma_tR(G)-gamma(G)), gamma_t(H)=gamma(H), V2 dominating"),
    ):
        found: list[ConstructedBound] = []
        reasons = []
        for A, B, swap in ((G, H, False), (H, G, True)):
            try:
                c = ub_equal_domination(A, B, variant=variant, budget=budget)
            except HypothesisFailed as exc:
                reasons.append(f"{'HG' if swap else 'GH'}: {exc}")
                continue
            if swap:
                c = _transpose_bound(c, G, H)
            found.append(c)
        constructions.extend(found)
        bid = "UB2" + variant
        if found:
            best = min(found, key=lambda c: c.claimed_bound)
            entries.append(BoundEntry(bid, "upper", best.claimed_bound, formula, True))
        else:
            entries.append(BoundEntry(bid, "upper", None, formula, False, "; ".join(reasons)))

    entries.append(BoundEntry("UB3", "upper", min(2 * tG * tH, 6 * gG * gH), "min{2gamma_t(G)gamma_t(H), 6gamma(G)gamma(H)}", True))

    ub4 = ub_kernel(G, H, budget)
    constructions.append(ub4)
    entries.append(BoundEntry("UB4", "upper", ub4.claimed_bound, "2gamma_t(G)gamma_t(H)-2k(G)k(H)", True))

    ub5 = ub_dom_total(G, H, budget)
    constructions.append(ub5)
    entries.append(
        BoundEntry("UB5", "upper", ub5.claimed_bound, "min{gamma(G)(n(H)+gamma_t(H)), gamma(H)(n(G)+gamma_t(G))}", True)
    )

    cf = closed_form(G, H)
    entries.append(
        BoundEntry(
            "CF",
            "equal",
            cf,
            "complete factors: 4/5/6; universal vertices on >= 4 vertices: 6",
            cf is not None,
        )
    )

    P, _ = direct_product(G, H)
    if compute_exact is None:
        compute_exact = P.n <= EXACT_PRODUCT_LIMIT
    exact = None
    extra: list[str] = []
    if compute_exact:
        incumbent = min((c.labeling for c in constructions), key=weight)
        try:
            exact = gamma_R(P, budget, incumbent=incumbent).value
        except BudgetExceeded as exc:
            extra.append(f"exact: budget exceeded (best {exc.best_bound})")
    violations = _consistency(entries, exact)
    violations += [f"{c.bound_id}: invalid construction" for c in constructions if not c.is_valid()]
    instance = {"G": _describe(G), "H": _describe(H), "n_product": P.n}
    if extra:
        instance["notes"] = extra
    return BoundsReport(instance, tuple(entries), exact, not violations, tuple(violations), tuple(constructions))


def _transpose_bound(c: ConstructedBound, G: Graph, H: Graph) -> ConstructedBound:
    """Re-express a bound built on H x G as a labeling of G x H."""
    labels = [0] * (G.n * H.n)
    for p, x in enumerate(c.labeling.labels):
        h, g = divmod(p, G.n)
        labels[g * H.n + h] = x
    P, _ = direct_product(G, H)
    digest = dict(c.inputs_digest, orientation="HG")
    return ConstructedBound(c.bound_id, RomanLabeling(tuple(labels)), c.claimed_bound, digest, P)


# --- rooted products ------------------------------------------------------------


@dataclass(frozen=True)
class RootedClassification:
    case: str
    value: int
    certificates: dict[str, Any]
    fallback: bool = False


def case_values(c: dict[str, Any]) -> dict[str, int]:
    n, a = c["n_G"], c["gamma_R_H"]
    return {
        N_TIMES: n * a,
        GAMMA_R_PLUS: c["gamma_R_G"] + n * (a - 1),
        GAMMA_PLUS: c["gamma_G"] + n * (a - 1),
    }


def _rooted_inputs(G: Graph, H: Graph, v: int) -> None:
    if structure_queries(G).has_isolated_vertex:
        raise Undefined("rooted classification needs G without isolated vertices")
    if H.n < 2:
        raise InvalidVertex("H must be nontrivial")
    H.check_vertex(v)


def rooted_classify(G: Graph, H: Graph, v: int, budget: SolverBudget | None = None) -> RootedClassification:
    """Which of the three possible values gamma_R(G o_v H) takes.

    Decided from gamma_R(H), gamma_R(H - v) and whether a minimum RDF of H can
    put 2 on v.  When G is a disjoint union of K2's the two cases relying on
    that exclusion are confirmed by solving the rooted product exactly.
    """
    _rooted_inputs(G, H, v)
    a = gamma_R(H, budget).value
    b = gamma_R_minus_vertex(H, v, budget).value
    r2 = root2_achievable(H, v, budget)
    cert = {
        "gamma_R_H": a,
        "gamma_R_H_minus_v": b,
        "root2_achievable": r2,
        "gamma_G": gamma(G, budget).value,
        "gamma_R_G": gamma_R(G, budget).value,
        "n_G": G.n,
    }
    if b >= a:
        case = N_TIMES
    elif r2:
        case = GAMMA_PLUS
    else:
        case = GAMMA_R_PLUS
    values = case_values(cert)
    if case != GAMMA_PLUS and structure_queries(G).is_union_of_K2:
        exact = gamma_R(rooted_product(G, H, v).graph, budget).value
        cert["exact"] = exact
        if values[case] != exact:
            case = next(c for c in (GAMMA_PLUS, GAMMA_R_PLUS, N_TIMES) if values[c] == exact)
        return RootedClassification(case, values[case], cert, fallback=True)
    return RootedClassification(case, values[case], cert)


@dataclass(frozen=True)
class SandwichReport:
    lower: int
    upper: int
    exact: int
    in_bracket: bool
    in_trichotomy: bool
    classification: RootedClassification
    prediction_matches: bool

    @property
    def ok(self) -> bool:
        return self.in_bracket and self.in_trichotomy and self.prediction_matches


def rooted_sandwich_check(G: Graph, H: Graph, v: int, budget: SolverBudget | None = None) -> SandwichReport:
    """gamma(G) + n(G)(gamma_R(H)-1) <= gamma_R(G o_v H) <= n(G) gamma_R(H), against the exact value."""
    cls = rooted_classify(G, H, v, budget)
    c = cls.certificates
    lower = c["gamma_G"] + G.n * (c["gamma_R_H"] - 1)
    upper = G.n * c["gamma_R_H"]
    exact = gamma_R(rooted_product(G, H, v).graph, budget).value
    return SandwichReport(
        lower,
        upper,
        exact,
        lower <= exact <= upper,
        exact in case_values(c).values(),
        cls,
        cls.value == exact,
    )


@dataclass(frozen=True)
class RestrictionReport:
    copy_weights: tuple[int, ...]
    A: tuple[int, ...]
    B: tuple[int, ...]
    weights_at_least: bool
    tight_copies_ok: bool
    weights_sum_ok: bool
    B_implies_deletion_drop: bool | None

    @property
    def ok(self) -> bool:
        return self.weights_at_least and self.tight_copies_ok and self.weights_sum_ok and self.B_implies_deletion_drop is not False


def lemma_restriction_check(
    G: Graph, H: Graph, v: int, f: RomanLabeling, budget: SolverBudget | None = None
) -> RestrictionReport:
    """Check the per-copy weight structure of a minimum RDF of G o_v H.

    Every copy weighs at least gamma_R(H) - 1; copies of exactly that weight have
    0 at the spine vertex and total weight at most 1 on its in-copy neighbours.
    A nonempty set of such copies forces gamma_R(H - v) = gamma_R(H) - 1.
    """
    R = rooted_product(G, H, v)
    if not is_rdf(R.graph, f):
        raise InvalidWitness("labeling is not an RDF of the rooted product")
    total = gamma_R(R.graph, budget).value
    if weight(f) != total:
        raise InvalidWitness(f"labeling weight {weight(f)} is not gamma_R = {total}")
    a = gamma_R(H, budget).value
    ws = []
    A, B = [], []
    tight_ok = True
    for x in range(G.n):
        fx, w = restrict_to_copy(R, f, x)
        ws.append(w)
        if w >= a:
            A.append(x)
        elif w == a - 1:
            B.append(x)
            inner = sum(fx.labels[u] for u in H.neighbors(v))
            if fx.labels[v] != 0 or inner > 1:
                tight_ok = False
    implies = None
    if B:
        implies = gamma_R_minus_vertex(H, v, budget).value == a - 1
    return RestrictionReport(
        tuple(ws),
        tuple(A),
        tuple(B),
        all(w >= a - 1 for w in ws),
        tight_ok,
        sum(ws) == weight(f),
        implies,
    )


def rooted_formula_order(cls: RootedClassification) -> bool:
    """gamma + n(a-1) <= gamma_R + n(a-1) <= n a on the stored certificates."""
    vals = case_values(cls.certificates)
    return vals[GAMMA_PLUS] <= vals[GAMMA_R_PLUS] <= vals[N_TIMES]


# --- externally known inequalities ----------------------------------------------


@dataclass(frozen=True)
class Check:
    name: str
    lhs: int | None
    rhs: int | None
    holds: bool | None  # None when skipped
    note: str = ""


def known_bounds_suite(G: Graph, H: Graph, budget: SolverBudget | None = None) -> tuple[Check, ...]:
    """Numerically check the standard inequalities on both factors and on G x H.

    The product-level checks are skipped (``holds=None``) if the budget runs out.
    """
    for F in (G, H):
        if structure_queries(F).has_isolated_vertex:
            raise Undefined("known bounds need factors without isolated vertices")
    out = []
    for label, F in (("G", G), ("H", H)):
        r, tr, g, t = (fn(F, budget).value for fn in (gamma_R, gamma_tR, gamma, gamma_t))
        out.append(Check(f"{label}: gamma_R <= gamma_tR", r, tr, r <= tr))
        out.append(Check(f"{label}: gamma_tR <= 3 gamma", tr, 3 * g, tr <= 3 * g))
        out.append(Check(f"{label}: gamma_t <= gamma_R", t, r, t <= r))
    P, _ = direct_product(G, H)
    tG, tH = gamma_t(G, budget).value, gamma_t(H, budget).value
    oG, oH = rho_o(G, budget).value, rho_o(H, budget).value
    try:
        tr = gamma_tR(P, budget).value
        out.append(Check("gamma_tR(GxH) <= 2 gamma_t(G) gamma_t(H)", tr, 2 * tG * tH, tr <= 2 * tG * tH))
    except BudgetExceeded as exc:
        out.append(Check("gamma_tR(GxH) <= 2 gamma_t(G) gamma_t(H)", None, 2 * tG * tH, None, str(exc)))
    low = min(oG * tH, oH * tG)
    try:
        t = gamma_t(P, budget).value
        out.append(Check("gamma_t(GxH) >= min{rho_o gamma_t}", t, low, t >= low))
    except BudgetExceeded as exc:
        out.append(Check("gamma_t(GxH) >= min{rho_o gamma_t}", None, low, None, str(exc)))
    return tuple(out)
