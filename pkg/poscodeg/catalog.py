"""
Named 3-graphs and parametric families

Edge lists are 0-based; the comment on each entry gives the 1-based labels.
"""

from dataclasses import dataclass
from itertools import combinations
from typing import Dict, List, Sequence

from .core import Hypergraph, make_hypergraph
from .errors import HypergraphError, UnknownGraphError


@dataclass(frozen=True)
class NamedGraph:
    """Catalog entry"""
    name: str
    graph: Hypergraph
    source: str


def j_k(k: int) -> Hypergraph:
    """J_k: vertex 0 in every edge, every other pair in exactly one edge"""
    if k < 2:
        raise HypergraphError(f"J_k needs k >= 2, got {k}")
    return make_hypergraph(k + 1, 3, [(0, i, j) for i, j in combinations(range(1, k + 1), 2)])


def complete_multipartite(sizes: Sequence[int]) -> Hypergraph:
    """
    Complete multipartite 3-graph: every triple meeting three distinct
    classes. Classes occupy consecutive vertex ranges in the given order.
    """
    if any(s <= 0 for s in sizes):
        raise HypergraphError(f"class sizes must be positive, got {list(sizes)}")
    if len(sizes) < 3:
        raise HypergraphError(f"need at least 3 nonempty classes, got {len(sizes)}")
    labels: List[int] = []
    for i, s in enumerate(sizes):
        labels.extend([i] * s)
    n = len(labels)
    edges = [
        (a, b, c)
        for a, b, c in combinations(range(n), 3)
        if labels[a] != labels[b] and labels[b] != labels[c] and labels[a] != labels[c]
    ]
    return make_hypergraph(n, 3, edges)


def complete_graph(n: int) -> Hypergraph:
    """K_n^(3), all triples"""
    return make_hypergraph(n, 3, combinations(range(n), 3))


def _entry(name: str, n: int, edges, source: str) -> NamedGraph:
    return NamedGraph(name, make_hypergraph(n, 3, edges), source)


CATALOG: Dict[str, NamedGraph] = {
    # 123, 124, 134
    "K4-": _entry("K4-", 4, [(0, 1, 2), (0, 1, 3), (0, 2, 3)], "K4- table"),
    # 123, 124, 345
    "F5": _entry("F5", 5, [(0, 1, 2), (0, 1, 3), (2, 3, 4)], "F5 table"),
    # 123, 145, 245, 345
    "F3,2": _entry("F3,2", 5, [(0, 1, 2), (0, 3, 4), (1, 3, 4), (2, 3, 4)], "F3,2 table"),
    # 123, 345, 156, 246, 147, 257, 367
    "Fano": _entry(
        "Fano", 7,
        [(0, 1, 2), (2, 3, 4), (0, 4, 5), (1, 3, 5), (0, 3, 6), (1, 4, 6), (2, 5, 6)],
        "Fano plane table",
    ),
    # 123, 124, 134, 234
    "K4": _entry("K4", 4, [(0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)], "K4 table"),
    # 123, 145, 146, 156, 245, 246, 256, 345, 346, 356
    "F3,3": _entry(
        "F3,3", 6,
        [(0, 1, 2), (0, 3, 4), (0, 3, 5), (0, 4, 5), (1, 3, 4),
         (1, 3, 5), (1, 4, 5), (2, 3, 4), (2, 3, 5), (2, 4, 5)],
        "F3,3 table",
    ),
    # 123, 234, 345, 145, 125
    "C5": _entry("C5", 5, [(0, 1, 2), (1, 2, 3), (2, 3, 4), (0, 3, 4), (0, 1, 4)], "C5 table"),
    # 123, 234, 345, 145
    "C5-": _entry("C5-", 5, [(0, 1, 2), (1, 2, 3), (2, 3, 4), (0, 3, 4)], "C5- table"),
    # 123, 124, 125, 134, 135, 145
    "J4": _entry("J4", 5, [(0, 1, 2), (0, 1, 3), (0, 1, 4), (0, 2, 3), (0, 2, 4), (0, 3, 4)], "J4 table"),
    # 123, 124, 345, 346, 561, 562, 135, 146, 236, 245
    "H6": _entry(
        "H6", 6,
        [(0, 1, 2), (0, 1, 3), (2, 3, 4), (2, 3, 5), (0, 4, 5),
         (1, 4, 5), (0, 2, 4), (0, 3, 5), (1, 2, 5), (1, 3, 4)],
        "Construction 2, the (6,3,2)-design",
    ),
    "K2,2,2": NamedGraph("K2,2,2", complete_multipartite((2, 2, 2)), "complete 3-partite, classes of size 2"),
    "edge": _entry("edge", 3, [(0, 1, 2)], "single 3-edge"),
}

ALIASES: Dict[str, str] = {
    "k4minus": "K4-",
    "k4-": "K4-",
    "f5": "F5",
    "f32": "F3,2",
    "f3,2": "F3,2",
    "fano": "Fano",
    "k4": "K4",
    "f33": "F3,3",
    "f3,3": "F3,3",
    "c5": "C5",
    "c5minus": "C5-",
    "c5-": "C5-",
    "j4": "J4",
    "h6": "H6",
    "k222": "K2,2,2",
    "k2,2,2": "K2,2,2",
    "edge": "edge",
    "k3": "edge",
}


def names() -> List[str]:
    return list(CATALOG.keys())


def resolve_name(name: str) -> str:
    if name in CATALOG:
        return name
    key = ALIASES.get(name.strip().lower())
    if key is None:
        raise UnknownGraphError(f"Unknown graph: {name}. Available: {names()}")
    return key


def get_named(name: str) -> NamedGraph:
    return CATALOG[resolve_name(name)]


def get(name: str) -> Hypergraph:
    """Catalog graph by name (aliases are case-insensitive)"""
    return get_named(name).graph
