import random

import pytest
from hypothesis import given, settings, strategies as st

from helpers import connected_atlas, graphs, no_isolated, random_graph
from romdom import oracles
from romdom.errors import BudgetExceeded, Undefined
from romdom.graph import build_from_edges, complete, cycle, direct_product, path, star, wheel
from romdom.labelings import RomanLabeling, is_rdf, weight
from romdom.solvers import (
    SolverBudget,
    all_gamma_t_sets,
    enumerate_gamma_R_functions,
    enumerate_gamma_tR_functions,
    gamma,
    gamma_R,
    gamma_R_forced,
    gamma_R_minus_vertex,
    gamma_t,
    gamma_tR,
    kernel_number,
    rho,
    rho_o,
    root2_achievable,
    solve_all,
    verify_result,
)

SET_PAIRS = [
    (gamma, oracles.bf_gamma),
    (gamma_t, oracles.bf_gamma_t),
    (rho, oracles.bf_rho),
    (rho_o, oracles.bf_rho_o),
]


@pytest.mark.parametrize(
    "G,expected",
    [(path(4), 2), (cycle(8), 3), (complete(6), 1), (star(4), 1), (path(1), 1)],
)
def test_gamma_examples(G, expected):
    r = gamma(G)
    assert r.value == expected and verify_result(G, r)


def test_gamma_t_examples():
    assert gamma_t(path(5)).witness.to_list() == [1, 2, 3]
    assert gamma_t(cycle(8)).value == 4
    assert gamma_t(path(8)).value == 4
    assert gamma_t(complete(2)).value == 2
    with pytest.raises(Undefined):
        gamma_t(build_from_edges(3, [(0, 1)]))


def test_packing_examples():
    assert rho(path(4)).witness.to_list() == [0, 3]
    assert rho(complete(5)).value == 1
    assert rho_o(path(4)).value == 2
    assert rho_o(cycle(8)).value == 4


@pytest.mark.parametrize(
    "G,expected",
    [(path(4), 3), (cycle(5), 4), (complete(5), 2), (star(3), 2), (path(1), 1), (build_from_edges(3, []), 3)],
)
def test_gamma_R_examples(G, expected):
    r = gamma_R(G)
    assert r.value == expected and is_rdf(G, r.witness) and weight(r.witness) == expected


def test_gamma_tR_examples():
    assert gamma_tR(path(4)).value == 4
    assert gamma_tR(complete(5)).value == 3
    assert gamma_tR(complete(2)).value == 2
    assert gamma_tR(direct_product(path(4), path(4))[0]).value == 8


def test_kernel_examples():
    k5 = kernel_number(path(5))
    assert k5.value == 1 and verify_result(path(5), k5)
    assert kernel_number(cycle(8)).value == 0
    assert kernel_number(path(5)).value == oracles.bf_kernel_number(path(5))
    assert kernel_number(cycle(8)).value == oracles.bf_kernel_number(cycle(8))


@given(graphs(max_n=7))
def test_set_invariants_match_oracles(G):
    for fast, slow in SET_PAIRS:
        try:
            expected = slow(G)
        except Undefined:
            with pytest.raises(Undefined):
                fast(G)
            continue
        got = fast(G)
        assert got.value == expected.value
        # both report the least witness in bitset order
        assert got.witness == expected.witness
        assert verify_result(G, got)


@given(graphs(max_n=7))
def test_roman_invariants_match_oracles(G):
    r = gamma_R(G)
    assert r.value == oracles.bf_gamma_R(G).value == oracles.bf_gamma_R_by_subsets(G)
    assert r.witness == oracles.bf_gamma_R(G).witness
    assert verify_result(G, r)
    if no_isolated(G):
        t = gamma_tR(G)
        bf = oracles.bf_gamma_tR(G)
        assert t.value == bf.value and t.witness == bf.witness
        assert verify_result(G, t)


@settings(max_examples=30)
@given(graphs(max_n=6))
def test_enumerations_match_oracles(G):
    assert enumerate_gamma_R_functions(G) == oracles.bf_all_gamma_R_functions(G)
    if no_isolated(G):
        assert enumerate_gamma_tR_functions(G) == oracles.bf_all_gamma_tR_functions(G)


@given(graphs(max_n=7), st.data())
def test_forced_labels_match_oracle(G, data):
    v = data.draw(st.integers(0, G.n - 1))
    label = data.draw(st.sampled_from((0, 1, 2)))
    try:
        expected = oracles.bf_gamma_R_forced(G, v, label)
    except Undefined:
        with pytest.raises(Undefined):
            gamma_R_forced(G, v, label)
        return
    r = gamma_R_forced(G, v, label)
    assert r.value == expected and verify_result(G, r)
    assert root2_achievable(G, v) == oracles.bf_root2_achievable(G, v)


@settings(max_examples=40)
@given(graphs(min_n=2, max_n=7, isolated_free=True))
def test_kernel_matches_oracle(G):
    r = kernel_number(G)
    assert r.value == oracles.bf_kernel_number(G)
    assert verify_result(G, r)


@given(graphs(min_n=2, max_n=7, isolated_free=True))
def test_invariant_chain(G):
    g, t, R, tR = gamma(G).value, gamma_t(G).value, gamma_R(G).value, gamma_tR(G).value
    assert g <= t <= R <= tR <= 3 * g
    assert g <= R <= 2 * g
    assert rho(G).value <= g
    assert rho_o(G).value <= t


@given(graphs(min_n=2, max_n=7), st.data())
def test_deletion_lowers_by_at_most_one(G, data):
    v = data.draw(st.integers(0, G.n - 1))
    assert gamma_R_minus_vertex(G, v).value >= gamma_R(G).value - 1


def test_deletion_drop_on_small_atlas():
    for H in connected_atlas(2, 5):
        a = gamma_R(H).value
        assert all(gamma_R_minus_vertex(H, v).value >= a - 1 for v in range(H.n))


@given(graphs(max_n=7))
def test_determinism(G):
    for fn in (gamma, gamma_R, rho):
        assert fn(G) == fn(G)


def test_set_witness_is_least_integer():
    # P5 has gamma-sets {0,3},{1,3},{1,4}; the least bitset is {0,3}
    assert gamma(path(5)).witness.to_list() == [0, 3]
    assert all_gamma_t_sets(path(4)) == [0b0110]


def test_budget_exceeded():
    P, _ = direct_product(path(4), path(6))
    with pytest.raises(BudgetExceeded) as exc:
        gamma_R(P, SolverBudget(max_nodes=5))
    assert exc.value.nodes >= 5
    with pytest.raises(BudgetExceeded):
        enumerate_gamma_R_functions(cycle(13))
    with pytest.raises(BudgetExceeded):
        oracles.bf_gamma(cycle(13))


def test_incumbent_is_checked():
    with pytest.raises(ValueError):
        gamma_R(path(3), incumbent=RomanLabeling((0, 0, 0)))
    r = gamma_R(path(3), incumbent=RomanLabeling((1, 1, 1)))
    assert r.value == 2


def test_solve_all_reports_undefined():
    out = solve_all(build_from_edges(3, [(0, 1)]))
    assert out["gamma"].value == 2
    for name in ("gamma_t", "rho_o", "gamma_tR", "kernel_k"):
        assert isinstance(out[name], str) and out[name].startswith("undefined")


def test_forced_zero_on_isolated_vertex_is_undefined():
    with pytest.raises(Undefined):
        gamma_R_forced(build_from_edges(2, []), 0, 0)


def test_random_medium_graphs_agree():
    rnd = random.Random(7)
    for _ in range(20):
        G = random_graph(rnd, rnd.randint(9, 10))
        assert gamma_R(G).value == oracles.bf_gamma_R_by_subsets(G)
        assert gamma(G).value == oracles.bf_gamma(G).value


def test_wheel_and_star_values():
    assert gamma_R(wheel(5)).value == 2
    assert gamma_R_forced(star(3), 1, 2).value == 4
