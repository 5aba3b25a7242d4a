"""
Tests for containment, copy counting and the span profile
"""

import pytest

from poscodeg.catalog import complete_graph, get, j_k
from poscodeg.constructions import balanced_complete_k_partite, circle_from_signs, h6_blow_up_balanced, k222_tripartite
from poscodeg.core import make_hypergraph
from poscodeg.embed import (
    automorphism_count,
    contains_any,
    contains_copy,
    count_copies,
    count_embeddings,
    iter_embeddings,
    per_edge_k4minus_count,
    search_order,
    span_profile_ok,
)
from poscodeg.errors import HypergraphError, InfeasibleError
from poscodeg.verify import weyl_graph


def test_contains_copy_returns_a_witness():
    K4 = get("K4")
    witness = contains_copy(get("K4-"), K4)
    assert witness is not None
    assert all(K4.has_edge(e) for e in witness.image_edges(get("K4-")))


@pytest.mark.parametrize("pattern, host", [
    ("K4-", "K2,2,2"),
    ("K4-", "H6"),
    ("K4", "H6"),
    ("Fano", "K2,2,2"),
])
def test_free_hosts(pattern, host):
    assert contains_copy(get(pattern), get(host)) is None


def test_fano_free_six_partite():
    assert contains_copy(get("Fano"), balanced_complete_k_partite(12, 6)) is None


def test_k222_free_tripartite_construction():
    assert contains_copy(get("K2,2,2"), k222_tripartite(2, 3)) is None
    assert contains_copy(get("K2,2,2"), get("K2,2,2")) is not None


def test_contains_any_reports_the_member():
    found = contains_any([get("Fano"), get("K4-")], get("K4"))
    assert found is not None
    assert found[0] == 1


def test_counts():
    assert count_embeddings(get("edge"), get("edge")) == 6
    assert count_copies(get("K4-"), complete_graph(6)) == 60
    assert count_copies(get("K4-"), complete_graph(7)) == 140
    assert count_copies(get("K4-"), get("H6")) == 0


@pytest.mark.parametrize("name, order", [
    ("K4-", 6),
    ("K4", 24),
    ("Fano", 168),
    ("K2,2,2", 48),
    ("edge", 6),
])
def test_automorphism_count(name, order):
    assert automorphism_count(get(name)) == order


def test_iter_embeddings_agrees_with_count():
    embeddings = list(iter_embeddings(get("K4-"), get("K4")))
    assert len(embeddings) == 24
    assert len({e.mapping for e in embeddings}) == 24


def test_parallel_count_matches_serial():
    K6 = complete_graph(6)
    assert count_embeddings(get("K4-"), K6, jobs=2) == count_embeddings(get("K4-"), K6) == 360


def test_pattern_caps():
    with pytest.raises(HypergraphError):
        contains_copy(make_hypergraph(3, 3, []), get("K4"))
    with pytest.raises(InfeasibleError):
        count_copies(j_k(7), complete_graph(9))


def test_search_order_starts_at_max_degree():
    assert search_order(get("K4")) == [0, 1, 2, 3]
    order = search_order(get("F3,2"))
    assert order[0] == 3
    assert sorted(order) == list(range(5))


def test_span_profile():
    assert span_profile_ok(get("H6"))
    assert not span_profile_ok(get("edge").add_isolated(1))
    result = span_profile_ok(get("K4"))
    assert not result
    assert result.violation == (0, 1, 2, 3)
    assert result.violation_edges == 4
    assert result.to_dict()["ok"] is False


def test_per_edge_k4minus_count():
    assert per_edge_k4minus_count(complete_graph(6), (0, 1, 2)) == 9
    assert per_edge_k4minus_count(get("H6"), (0, 1, 2)) == 0
    with pytest.raises(HypergraphError):
        per_edge_k4minus_count(get("H6"), (0, 1, 4))


def test_k4minus_count_examples():
    assert count_copies(get("K4-"), get("K4")) == 4
    assert per_edge_k4minus_count(get("K4"), (0, 1, 2)) == 3
    K5 = complete_graph(5)
    assert all(per_edge_k4minus_count(K5, e) == 6 for e in K5.edges)


HOSTS = (
    [(f"weyl n={n} #{i}", weyl_graph(n, i)) for n in (5, 6, 7, 8) for i in range(4)]
    + [(f"circle {signs}", circle_from_signs(signs)) for signs in ([0, 1, 0, 1, 1], [0, 0, 1, 1, 0, 1, 1])]
    + [("H6 blow-up n=9", h6_blow_up_balanced(9)), ("K2,2,2", get("K2,2,2")), ("K6", complete_graph(6))]
)


@pytest.mark.parametrize("label, H", HOSTS, ids=[label for label, _ in HOSTS])
def test_per_edge_counts_sum_to_three_copies(label, H):
    total = sum(per_edge_k4minus_count(H, e) for e in H.edges)
    assert total == 3 * count_copies(get("K4-"), H)


@pytest.mark.parametrize("label, H", HOSTS, ids=[label for label, _ in HOSTS])
def test_span_profile_excludes_k4minus_and_k4(label, H):
    if not span_profile_ok(H):
        pytest.skip("host has a 4-set spanning 1, 3 or 4 edges")
    assert count_copies(get("K4-"), H) == 0
    assert count_copies(get("K4"), H) == 0


@pytest.mark.parametrize("pattern", ["K4-", "F5", "K4", "F3,2"])
@pytest.mark.parametrize("label, H", HOSTS, ids=[label for label, _ in HOSTS])
def test_containment_is_monotone(pattern, label, H):
    F = get(pattern)
    for step in (2, 3):
        sub = make_hypergraph(H.n, 3, H.edges[::step])
        witness = contains_copy(F, sub)
        if witness is not None:
            assert contains_copy(F, H) is not None
            assert all(H.has_edge(e) for e in witness.image_edges(F))
