import pytest
from hypothesis import given, settings, strategies as st

from helpers import figure_graph, graphs
from romdom.constructions import (
    rooted_ub,
    transpose_mask,
    ub_dom_total,
    ub_equal_domination,
    ub_kernel,
    ub_trdf_dom,
)
from romdom.errors import HypothesisFailed, InvalidWitness
from romdom.graph import complete, cycle, direct_product, path, star
from romdom.labelings import RomanLabeling, is_rdf
from romdom.solvers import gamma_R, gamma_t, gamma_tR, kernel_number, root2_achievable

pairs = st.tuples(graphs(min_n=2, max_n=4, isolated_free=True), graphs(min_n=2, max_n=4, isolated_free=True))


def test_transpose_mask_roundtrip():
    for m in (0, 1, 0b101101, (1 << 12) - 1):
        assert transpose_mask(transpose_mask(m, 3, 4), 4, 3) == m


@settings(max_examples=40)
@given(pairs)
def test_product_constructions_are_valid(pair):
    G, H = pair
    for build in (ub_trdf_dom, ub_kernel, ub_dom_total):
        c = build(G, H)
        assert is_rdf(c.graph, c.labeling)
        assert c.weight <= c.claimed_bound
        assert c.is_valid()


@settings(max_examples=40)
@given(pairs)
def test_kernel_bound_below_total_bound(pair):
    G, H = pair
    c = ub_kernel(G, H)
    assert c.claimed_bound <= 2 * gamma_t(G).value * gamma_t(H).value
    assert c.inputs_digest["k_G"] == kernel_number(G).value


@settings(max_examples=40)
@given(pairs, st.sampled_from("ab"))
def test_equal_domination_construction(pair, variant):
    G, H = pair
    try:
        c = ub_equal_domination(G, H, variant=variant)
    except HypothesisFailed:
        return
    assert c.is_valid()
    assert c.bound_id == "UB2" + variant


def test_equal_domination_hypothesis():
    with pytest.raises(HypothesisFailed):
        ub_equal_domination(path(3), path(5))  # gamma_t(P5)=3 != 2
    c = ub_equal_domination(cycle(5), path(4))
    assert c.is_valid()
    with pytest.raises(InvalidWitness):
        ub_equal_domination(cycle(5), path(4), RomanLabeling.constant(5, 2))


def test_ub1_on_complete_factors():
    c = ub_trdf_dom(complete(3), complete(4))
    assert c.claimed_bound == 2 * 1 * gamma_tR(complete(4)).value
    assert c.is_valid()


def test_ub5_value():
    c = ub_dom_total(star(3), complete(4))
    assert c.claimed_bound == min(1 * (4 + 2), 1 * (4 + 2))
    assert c.is_valid()


@settings(max_examples=40)
@given(graphs(min_n=2, max_n=4, isolated_free=True), graphs(min_n=2, max_n=5), st.data())
def test_rooted_constructions(G, H, data):
    v = data.draw(st.integers(0, H.n - 1))
    for mode in ("root2", "split", "concat"):
        try:
            c = rooted_ub(G, H, v, mode)
        except HypothesisFailed:
            if mode == "root2":
                assert not root2_achievable(H, v)
            continue
        assert c.is_valid()


def test_rooted_modes_on_figure_graph():
    H, v, w = figure_graph()
    G = path(5)
    c = rooted_ub(G, H, v, "root2")
    assert c.is_valid() and c.claimed_bound == 2 * 4 + 3 * 3
    assert gamma_R(c.graph).value == 17
    concat = rooted_ub(G, H, w, "concat")
    assert concat.claimed_bound == 20 and concat.is_valid()
    with pytest.raises(ValueError):
        rooted_ub(G, H, v, "other")


def test_constructions_respect_product_layout():
    c = ub_trdf_dom(path(3), complete(3))
    P, _ = direct_product(path(3), complete(3))
    assert c.graph == P and c.labeling.host_n == 9
