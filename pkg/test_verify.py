"""
Tests for the lemma checks, the dichotomy probe and the bounds table
"""

from fractions import Fraction

import pytest

from poscodeg.catalog import complete_graph, get
from poscodeg.constructions import k222_tripartite, one_way_bipartite_complete
from poscodeg.errors import HypergraphError, UndefinedError
from poscodeg.search import copex_exact
from poscodeg.verify import (
    check_against_bounds,
    dichotomy_probe,
    edge_bound_check,
    h6_congruence_check,
    independent_set_bound_check,
    lemma_corpus,
    lemma_suite,
    link_c4_free,
    link_c4_report,
    link_graph,
    smallest_complete_tripartite,
    supersaturation_check,
    t_statistic,
    t_statistic_general,
    table_emit,
    upper_bound,
    weyl_graph,
)


@pytest.mark.parametrize("name, lhs, rhs", [
    ("K2,2,2", 8, Fraction(4, 3)),
    ("edge", 1, Fraction(1, 6)),
    ("H6", 10, Fraction(4, 3)),
])
def test_edge_bound(name, lhs, rhs):
    report = edge_bound_check(get(name))
    assert report.lhs == lhs
    assert report.rhs == rhs
    assert report.holds


def test_edge_bound_complete_graph():
    report = edge_bound_check(complete_graph(6))
    assert report.c == Fraction(2, 3)
    assert report.rhs == Fraction(32, 3)
    assert report.to_dict()["rhs"] == "32/3"


def test_edge_bound_needs_edges():
    with pytest.raises(UndefinedError):
        edge_bound_check(complete_graph(2))


def test_independent_set_bound():
    report = independent_set_bound_check(get("K2,2,2"), [1, 0])
    assert report.independent_set == (0, 1)
    assert report.bound == 4 and report.holds
    assert independent_set_bound_check(get("H6"), []).bound == 6
    assert independent_set_bound_check(one_way_bipartite_complete(5, 5), range(5, 10)).holds
    with pytest.raises(HypergraphError):
        independent_set_bound_check(get("K2,2,2"), [0, 2, 4])


@pytest.mark.parametrize("n, epsilon, total", [
    (6, Fraction(1, 3), 60),
    (7, Fraction(8, 21), 140),
])
def test_supersaturation_complete_graphs(n, epsilon, total):
    report = supersaturation_check(complete_graph(n))
    assert report.epsilon == epsilon
    assert report.total_copies == total
    assert report.min_per_edge == 3 * (n - 3)
    assert report.holds


def test_supersaturation_values():
    report = supersaturation_check(complete_graph(6))
    assert report.per_edge_bound == 6
    assert report.bound == Fraction(8, 3)

    boundary = supersaturation_check(get("K2,2,2"))
    assert boundary.epsilon == 0
    assert boundary.total_copies == 0
    assert boundary.holds


def test_supersaturation_below_threshold():
    with pytest.raises(UndefinedError):
        supersaturation_check(get("edge").add_isolated(3))


@pytest.mark.parametrize("name, t", [
    ("H6", 15),
    ("edge", 0),
    ("K2,2,2", 12),
    ("K4", 6),
])
def test_t_statistic(name, t):
    result = t_statistic(get(name))
    assert result.t == t
    assert result.holds


def test_t_statistic_general():
    H = get("H6")
    assert t_statistic_general(H, 1).t == 3 * H.m
    assert t_statistic_general(H, 3).t == 0
    with pytest.raises(HypergraphError):
        t_statistic_general(H, 0)


def test_link_graphs():
    H = k222_tripartite(2, 3)
    assert link_graph(H, 0, 1).number_of_edges() == 21
    assert link_c4_free(H, 0, 1)
    assert link_c4_free(H, 0, 3)

    report = link_c4_report(get("K2,2,2"), 4, 5)
    assert report.link_edges == 4
    assert not report.holds
    assert link_c4_free(get("edge"), 0, 1)
    with pytest.raises(HypergraphError):
        link_graph(H, 2, 2)


@pytest.mark.parametrize("name, host", [
    ("K2,2,2", (2, 2, 2)),
    ("edge", (1, 1, 1)),
    ("K4-", None),
    ("F5", None),
    ("F3,2", None),
])
def test_smallest_complete_tripartite(name, host):
    assert smallest_complete_tripartite(get(name)) == host


def test_dichotomy_not_tripartite():
    report = dichotomy_probe(get("K4-"), [9, 12], "K4-")
    assert not report.tripartite
    assert [row.delta for row in report.rows] == [3, 4]
    assert all(row.certified for row in report.rows)
    assert report.holds


def test_dichotomy_tripartite():
    report = dichotomy_probe(get("K2,2,2"), [9], "K2,2,2")
    assert report.tripartite
    assert report.host == (2, 2, 2)
    assert [row.delta for row in report.rows] == [3, 4]
    assert all(row.f_free for row in report.rows)


@pytest.mark.parametrize("name, n, bound", [
    ("F3,2", 5, Fraction(2)),
    ("F3,2", 8, Fraction(4)),
    ("K4-", 7, Fraction(2)),
    ("J5", 12, Fraction(9)),
    ("k4minus", 9, Fraction(3)),
    ("F5", 5, None),
    ("H6", 6, None),
])
def test_upper_bound(name, n, bound):
    assert upper_bound(name, n) == bound


def test_table_at_thirty():
    report = table_emit(30)
    assert report.holds
    ratios = {row.name: row.ratio for row in report.rows}
    assert ratios["F3,2"] == Fraction(7, 15)
    assert ratios["Fano"] == Fraction(2, 3)
    assert ratios["F3,3"] == Fraction(3, 5)
    assert ratios["K4"] == Fraction(7, 15)
    assert ratios["K4-"] == Fraction(1, 3)


def test_table_skips_small_n():
    report = table_emit(4)
    assert "Fano" in report.skipped and "F3,3" in report.skipped
    assert "K4-" not in report.skipped


def test_check_against_bounds():
    check = check_against_bounds(copex_exact(5, get("F3,2"), names=["F3,2"]))
    assert check.lower == 2
    assert check.upper == 2
    assert check.holds


@pytest.mark.parametrize("n, expected", [
    (6, 2),
    (9, 2),
    (12, 4),
    (15, 4),
    (30, 10),
])
def test_h6_congruence(n, expected):
    report = h6_congruence_check(n)
    assert report.expected == expected
    assert report.holds


def test_h6_congruence_rejects_other_residues():
    with pytest.raises(HypergraphError):
        h6_congruence_check(8)


def test_weyl_graphs_are_deterministic():
    assert weyl_graph(7, 3) == weyl_graph(7, 3)
    assert weyl_graph(7, 3) != weyl_graph(7, 4)


def test_lemma_corpus_size():
    corpus = lemma_corpus()
    assert len(corpus) >= 500
    assert len({name for name, _ in corpus}) == len(corpus)


def test_lemma_suite_on_small_corpus():
    report = lemma_suite(lemma_corpus(max_n=9))
    assert report.holds, report.violations[:3]
    assert report.checks > report.graphs
