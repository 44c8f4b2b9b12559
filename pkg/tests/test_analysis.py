import pytest
from hypothesis import given, settings, strategies as st

from helpers import figure_graph, graphs
from romdom.analysis import (
    CASES,
    GAMMA_PLUS,
    GAMMA_R_PLUS,
    N_TIMES,
    case_values,
    closed_form,
    direct_bounds_report,
    known_bounds_suite,
    lemma_restriction_check,
    rooted_classify,
    rooted_formula_order,
    rooted_sandwich_check,
)
from romdom.errors import InvalidWitness, Undefined
from romdom.graph import build_from_edges, complete, cycle, path, rooted_product, star, wheel
from romdom.labelings import RomanLabeling
from romdom.solvers import gamma_R

BOUND_IDS = ["LB1", "LB2", "UB1", "UB2a", "UB2b", "UB3", "UB4", "UB5", "CF"]


def test_report_lists_every_bound():
    r = direct_bounds_report(complete(2), cycle(5))
    assert [e.bound_id for e in r.entries] == BOUND_IDS
    assert r.exact == 7 and r.all_consistent
    assert r.entry("LB1").value == 4
    assert not r.entry("CF").applicable
    with pytest.raises(KeyError):
        r.entry("UB9")


def test_report_rejects_isolated_vertices():
    with pytest.raises(Undefined):
        direct_bounds_report(build_from_edges(3, [(0, 1)]), path(3))


def test_closed_form_values():
    assert closed_form(complete(2), complete(5)) == 4
    assert closed_form(complete(3), complete(3)) == 5
    assert closed_form(complete(4), complete(6)) == 6
    assert closed_form(star(3), complete(4)) == 6
    assert closed_form(wheel(4), complete(5)) == 6
    assert closed_form(path(3), complete(5)) is None
    assert closed_form(path(4), path(4)) is None


def test_exact_can_be_disabled():
    r = direct_bounds_report(path(3), path(3), compute_exact=False)
    assert r.exact is None and r.all_consistent


@settings(max_examples=25)
@given(graphs(min_n=2, max_n=4, isolated_free=True), graphs(min_n=2, max_n=4, isolated_free=True))
def test_report_is_consistent(G, H):
    r = direct_bounds_report(G, H)
    assert r.exact is not None
    assert r.all_consistent, r.violations
    assert all(c.is_valid() for c in r.constructions)


def test_figure_graph_classification():
    H, v, w = figure_graph()
    G = path(5)
    at_v = rooted_classify(G, H, v)
    assert at_v.case == GAMMA_PLUS and at_v.value == 2 + 5 * 3
    at_w = rooted_classify(G, H, w)
    assert at_w.case == N_TIMES and at_w.value == 20
    s = rooted_sandwich_check(G, H, v)
    assert s.ok and s.exact == 17
    assert gamma_R(rooted_product(G, H, w).graph).value == 20


def test_gamma_R_plus_case():
    c = rooted_classify(path(5), path(4), 0)
    assert c.case == GAMMA_R_PLUS and c.value == 14
    assert rooted_sandwich_check(path(5), path(4), 0).ok


def test_union_of_k2_uses_fallback():
    G = build_from_edges(4, [(0, 1), (2, 3)])
    c = rooted_classify(G, path(4), 0)
    assert c.fallback and c.value == c.certificates["exact"]


def test_classify_input_errors():
    with pytest.raises(Undefined):
        rooted_classify(build_from_edges(3, [(0, 1)]), path(3), 0)
    with pytest.raises(Exception):
        rooted_classify(path(3), path(1), 0)


@settings(max_examples=40)
@given(graphs(min_n=2, max_n=4, isolated_free=True), graphs(min_n=2, max_n=5), st.data())
def test_rooted_sandwich(G, H, data):
    v = data.draw(st.integers(0, H.n - 1))
    s = rooted_sandwich_check(G, H, v)
    assert s.in_bracket and s.in_trichotomy and s.prediction_matches
    assert rooted_formula_order(s.classification)
    assert s.classification.case in CASES


def test_case_values_order():
    vals = case_values({"n_G": 3, "gamma_R_H": 4, "gamma_G": 1, "gamma_R_G": 2})
    assert vals == {N_TIMES: 12, GAMMA_R_PLUS: 11, GAMMA_PLUS: 10}


@settings(max_examples=30)
@given(graphs(min_n=2, max_n=3, isolated_free=True), graphs(min_n=2, max_n=4), st.data())
def test_copy_weight_structure(G, H, data):
    v = data.draw(st.integers(0, H.n - 1))
    f = gamma_R(rooted_product(G, H, v).graph).witness
    r = lemma_restriction_check(G, H, v, f)
    assert r.ok


def test_restriction_rejects_non_optimal():
    G, H = path(2), path(3)
    with pytest.raises(InvalidWitness):
        lemma_restriction_check(G, H, 0, RomanLabeling.constant(6, 1))


def test_known_bounds_suite():
    checks = known_bounds_suite(path(4), cycle(5))
    assert checks and all(c.holds for c in checks)
