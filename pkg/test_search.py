"""
Tests for canonical forms and the exact co⁺ex search
"""

import pytest

from poscodeg.catalog import complete_graph, get
from poscodeg.constructions import blow_up
from poscodeg.core import make_hypergraph, min_positive_codegree
from poscodeg.embed import contains_copy
from poscodeg.errors import HypergraphError, InfeasibleError
from poscodeg.search import (
    canonical_form,
    copex_exact,
    exists_with_delta,
    extremal_uniqueness_check,
    ff_classification_check,
    is_isomorphic,
    reference_constructions,
)


def test_canonical_form_is_label_invariant():
    H = get("H6")
    assert canonical_form(H.relabel([5, 3, 1, 0, 2, 4])) == canonical_form(H)
    assert is_isomorphic(get("K2,2,2"), blow_up(get("edge"), [2, 2, 2]))
    assert is_isomorphic(get("F5").relabel([4, 3, 2, 1, 0]), get("F5"))


def test_canonical_form_separates_graphs():
    assert not is_isomorphic(get("C5-"), get("K4").add_isolated())
    assert canonical_form(get("F5")) != canonical_form(get("K4-").add_isolated())


def test_canonical_form_edge_cases():
    empty = canonical_form(make_hypergraph(4, 3, []))
    assert empty.edges == ()
    assert empty.digest
    with pytest.raises(InfeasibleError):
        canonical_form(complete_graph(11))


def test_exists_with_delta():
    assert exists_with_delta(5, get("K4-"), 2).refuted
    decision = exists_with_delta(4, get("F3,2"), 2)
    assert decision.witness is not None
    assert is_isomorphic(decision.witness, get("K4"))
    assert exists_with_delta(4, get("K4-"), 3).refuted
    with pytest.raises(HypergraphError):
        exists_with_delta(4, get("K4-"), 0)


@pytest.mark.parametrize("n, name, value", [
    (3, "K4-", 1),
    (4, "K4-", 1),
    (5, "K4-", 1),
    (4, "F3,2", 2),
    (5, "F3,2", 2),
    (4, "F5", 2),
    (5, "F5", 2),
])
def test_copex_small_n(n, name, value):
    report = copex_exact(n, get(name), names=[name])
    assert report.exhaustive
    assert report.exact_value == value
    for witness in report.witness_graphs():
        assert contains_copy(get(name), witness) is None
        assert min_positive_codegree(witness) >= value


def test_copex_k4minus_n4_witnesses():
    report = copex_exact(4, get("K4-"))
    assert report.witness_count == 2
    assert sorted(w.to_hypergraph().m for w in report.witnesses) == [1, 2]


def test_copex_below_three_vertices():
    report = copex_exact(2, get("K4-"))
    assert report.exact_value == 0
    assert report.witnesses == []
    assert report.annotations


def test_search_cap():
    with pytest.raises(InfeasibleError):
        copex_exact(8, get("K4-"))


def test_report_serialization():
    report = copex_exact(4, get("F3,2"), names=["F3,2"])
    data = report.to_dict()
    assert "wall_time" not in data
    assert data["forbidden"] == ["F3,2"]
    assert data["witnesses"][0]["isolated"] == 0
    assert "wall_time" in report.to_dict(include_timing=True)


def test_witness_limit_truncates():
    report = copex_exact(4, get("K4-"), witness_limit=1)
    assert len(report.witnesses) == 1
    assert report.witnesses_truncated == 1


def test_jobs_do_not_change_the_answer():
    serial = copex_exact(5, get("K4-"), jobs=1)
    parallel = copex_exact(5, get("K4-"), jobs=2)
    assert serial.to_dict() == parallel.to_dict()


def test_small_budget_is_not_exhaustive():
    decision = exists_with_delta(6, get("K4-"), 3, budget=1)
    assert decision.witness is None
    assert not decision.exhaustive


def test_reference_constructions():
    refs = reference_constructions(6)
    assert "balanced H6 blow-up" in refs
    assert all(H.n == 6 for H in refs.values())


@pytest.mark.parametrize("n", [4, 5])
def test_span_profile_classification(n):
    report = ff_classification_check(n)
    assert report.holds
    assert report.classes == report.circle_type + report.h6_type - report.both_types


@pytest.mark.slow
def test_k4minus_n6_extremal_graphs():
    report = copex_exact(6, get("K4-"))
    assert report.exhaustive
    assert report.exact_value == 2
    check = extremal_uniqueness_check(report, {"K2,2,2": get("K2,2,2"), "H6": get("H6")})
    assert check["missing"] == []


@pytest.mark.slow
def test_span_profile_classification_six_vertices():
    assert ff_classification_check(6).holds
