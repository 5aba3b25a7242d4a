"""
Mechanical checkers for the quantitative co-degree inequalities, applied to
concrete graphs, plus the construction-versus-bounds table

All ratios are exact Fractions; they serialize as "p/q" strings.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import comb
from typing import Any, Callable, Dict, Iterable, List, Optional, Sequence, Tuple

import networkx as nx

from .catalog import CATALOG, get, j_k, resolve_name
from .constructions import (
    balanced_complete_k_partite,
    circle_from_signs,
    h6_blow_up_balanced,
    k222_tripartite,
    one_way_bipartite_balanced,
)
from .core import (
    Hypergraph,
    PARTITION_SEARCH_CAP,
    find_k_partition,
    is_independent,
    make_hypergraph,
    maximal_independent_sets_greedy,
    min_positive_codegree,
    positive_pairs,
    shadow_adjacency,
    vertices_of,
)
from .embed import contains_copy, count_copies, per_edge_k4minus_count
from .errors import HypergraphError, InfeasibleError, UndefinedError


def _ratio(value: Optional[Fraction]) -> Optional[str]:
    return None if value is None else str(value)


def _require_edges(H: Hypergraph, check: str) -> None:
    if H.r != 3:
        raise HypergraphError(f"{check} requires a 3-graph, got r={H.r}")
    if not H.edges:
        raise UndefinedError(f"{check} needs a graph with at least one edge")


# ---------------------------------------------------------------------------
# Single-graph lemmas

@dataclass
class EdgeBoundReport:
    """|E| >= c³n³/6 with c = δ⁺/n"""
    n: int
    delta: int
    c: Fraction
    lhs: int
    rhs: Fraction

    @property
    def holds(self) -> bool:
        return self.lhs >= self.rhs

    def to_dict(self) -> Dict[str, Any]:
        return {
            "check": "edge_bound",
            "n": self.n,
            "delta": self.delta,
            "c": _ratio(self.c),
            "lhs": self.lhs,
            "rhs": _ratio(self.rhs),
            "holds": self.holds,
        }


def edge_bound_check(H: Hypergraph) -> EdgeBoundReport:
    _require_edges(H, "edge_bound_check")
    delta = min_positive_codegree(H)
    c = Fraction(delta, H.n)
    return EdgeBoundReport(H.n, delta, c, H.m, c**3 * H.n**3 / 6)


@dataclass
class IndependentSetReport:
    """δ⁺ <= n - |S| for an independent set S"""
    n: int
    delta: int
    independent_set: Tuple[int, ...]
    bound: int

    @property
    def holds(self) -> bool:
        return self.delta <= self.bound

    def to_dict(self) -> Dict[str, Any]:
        return {
            "check": "independent_set_bound",
            "n": self.n,
            "delta": self.delta,
            "independent_set": list(self.independent_set),
            "size_ratio": _ratio(Fraction(len(self.independent_set), self.n)),
            "bound": self.bound,
            "holds": self.holds,
        }


def independent_set_bound_check(H: Hypergraph, S: Iterable[int]) -> IndependentSetReport:
    members = tuple(sorted(set(S)))
    _require_edges(H, "independent_set_bound_check")
    if not is_independent(H, members):
        raise HypergraphError(f"{list(members)} is not an independent set")
    return IndependentSetReport(H.n, min_positive_codegree(H), members, H.n - len(members))


@dataclass
class SupersaturationReport:
    """
    With ε = δ⁺/n - 1/3: every edge in at least 3εn copies of K4-, and at
    least εn⁴/162 copies overall
    """
    n: int
    delta: int
    epsilon: Fraction
    min_per_edge: int
    per_edge_bound: Fraction
    weakest_edge: Optional[Tuple[int, int, int]]
    total_copies: int
    bound: Fraction

    @property
    def per_edge_holds(self) -> bool:
        return self.min_per_edge >= self.per_edge_bound

    @property
    def total_holds(self) -> bool:
        return self.total_copies >= self.bound

    @property
    def holds(self) -> bool:
        return self.per_edge_holds and self.total_holds

    def to_dict(self) -> Dict[str, Any]:
        return {
            "check": "supersaturation",
            "n": self.n,
            "delta": self.delta,
            "epsilon": _ratio(self.epsilon),
            "min_per_edge": self.min_per_edge,
            "per_edge_bound": _ratio(self.per_edge_bound),
            "weakest_edge": list(self.weakest_edge) if self.weakest_edge else None,
            "total_copies": self.total_copies,
            "bound": _ratio(self.bound),
            "holds": self.holds,
        }


def supersaturation_check(H: Hypergraph, jobs: int = 1) -> SupersaturationReport:
    """
    Raises:
        UndefinedError: δ⁺ < n/3, the statement does not apply
    """
    _require_edges(H, "supersaturation_check")
    n = H.n
    delta = min_positive_codegree(H)
    epsilon = Fraction(delta, n) - Fraction(1, 3)
    if epsilon < 0:
        raise UndefinedError(f"supersaturation needs δ⁺ >= n/3; here δ⁺/n - 1/3 = {epsilon}")

    weakest, min_per_edge = None, None
    for e in H.edges:
        count = per_edge_k4minus_count(H, e)
        if min_per_edge is None or count < min_per_edge:
            weakest, min_per_edge = e, count

    return SupersaturationReport(
        n=n,
        delta=delta,
        epsilon=epsilon,
        min_per_edge=min_per_edge,
        per_edge_bound=3 * epsilon * n,
        weakest_edge=weakest,
        total_copies=count_copies(get("K4-"), H, jobs),
        bound=epsilon * n**4 / 162,
    )


@dataclass
class TStatistic:
    """T_l = Σ C(d(x,y), l) over positive pairs, against |E⁺|·C(δ⁺, l)"""
    l: int
    t: int
    lower: int
    positive_pairs: int

    @property
    def holds(self) -> bool:
        return self.lower <= self.t

    def to_dict(self) -> Dict[str, Any]:
        return {
            "check": "t_statistic",
            "l": self.l,
            "t": self.t,
            "lower": self.lower,
            "positive_pairs": self.positive_pairs,
            "holds": self.holds,
        }


def t_statistic_general(H: Hypergraph, l: int) -> TStatistic:
    if H.r != 3:
        raise HypergraphError(f"t_statistic requires a 3-graph, got r={H.r}")
    if l < 1:
        raise HypergraphError(f"l must be >= 1, got {l}")
    pairs = positive_pairs(H)
    t = sum(comb(d, l) for _, d in pairs)
    lower = len(pairs) * comb(min_positive_codegree(H), l) if H.edges else 0
    return TStatistic(l, t, lower, len(pairs))


def t_statistic(H: Hypergraph) -> TStatistic:
    """Ordered pairs ({x,y}, {z1,z2}) with xyz1 and xyz2 both edges"""
    return t_statistic_general(H, 2)


def link_graph(H: Hypergraph, z1: int, z2: int) -> nx.Graph:
    """2-graph of pairs {x, y} with both xyz1 and xyz2 in E(H)"""
    if z1 == z2:
        raise HypergraphError(f"link graph needs two distinct vertices, got {z1} twice")
    for z in (z1, z2):
        if not 0 <= z < H.n:
            raise HypergraphError(f"vertex {z} outside 0..{H.n - 1}")
    G = nx.Graph()
    G.add_nodes_from(v for v in range(H.n) if v not in (z1, z2))
    for e in H.incident(z1):
        x, y = (v for v in e if v != z1)
        if z2 not in (x, y) and H.has_edge((x, y, z2)):
            G.add_edge(x, y)
    return G


def link_c4_free(H: Hypergraph, z1: int, z2: int) -> bool:
    """True iff the (z1, z2) link graph has no two vertices with 2 common neighbours"""
    G = link_graph(H, z1, z2)
    for u, v in combinations(sorted(G.nodes), 2):
        if len(set(nx.common_neighbors(G, u, v))) >= 2:
            return False
    return True


@dataclass
class LinkReport:
    z1: int
    z2: int
    link_edges: int
    holds: bool

    def to_dict(self) -> Dict[str, Any]:
        return {"check": "link_c4_free", "z1": self.z1, "z2": self.z2, "link_edges": self.link_edges,
                "holds": self.holds}


def link_c4_report(H: Hypergraph, z1: int, z2: int) -> LinkReport:
    return LinkReport(z1, z2, link_graph(H, z1, z2).number_of_edges(), link_c4_free(H, z1, z2))


def _tripartitions(F: Hypergraph) -> Iterable[List[int]]:
    adj = shadow_adjacency(F)
    labels = [-1] * F.n

    def extend(v: int) -> Iterable[List[int]]:
        if v == F.n:
            yield list(labels)
            return
        blocked = {labels[u] for u in vertices_of(adj[v]) if labels[u] >= 0}
        for label in range(3):
            if label not in blocked:
                labels[v] = label
                yield from extend(v + 1)
        labels[v] = -1

    yield from extend(0)


def smallest_complete_tripartite(F: Hypergraph) -> Optional[Tuple[int, int, int]]:
    """
    Least (j <= k <= l), ordered by l then k then j, with F a subgraph of
    K_{j,k,l}; None when F is not 3-partite
    """
    if F.n > PARTITION_SEARCH_CAP:
        raise InfeasibleError(f"smallest_complete_tripartite is limited to n <= {PARTITION_SEARCH_CAP}, got n={F.n}")
    best = None
    for labels in _tripartitions(F):
        j, k, l = sorted(labels.count(c) for c in range(3))
        if best is None or (l, k, j) < (best[2], best[1], best[0]):
            best = (j, k, l)
    return best


# ---------------------------------------------------------------------------
# Dichotomy: 3-partite forbidden graphs against the rest

@dataclass
class DichotomyRow:
    n: int
    construction: str
    delta: int
    f_free: bool
    expected: Optional[int] = None

    @property
    def certified(self) -> bool:
        return self.f_free and (self.expected is None or self.delta == self.expected)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "n": self.n,
            "construction": self.construction,
            "delta": self.delta,
            "ratio": _ratio(Fraction(self.delta, self.n)),
            "f_free": self.f_free,
            "expected": self.expected,
            "certified": self.certified,
        }


@dataclass
class DichotomyReport:
    forbidden: str
    tripartite: bool
    partition: Optional[List[List[int]]]
    host: Optional[Tuple[int, int, int]]
    rows: List[DichotomyRow] = field(default_factory=list)

    @property
    def holds(self) -> bool:
        # 3-partite rows are lower-bound data only
        return self.tripartite or all(row.certified for row in self.rows)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "check": "dichotomy",
            "forbidden": self.forbidden,
            "tripartite": self.tripartite,
            "partition": self.partition,
            "host": list(self.host) if self.host else None,
            "rows": [row.to_dict() for row in self.rows],
            "holds": self.holds,
        }


K222_PROBES = ((2, 3), (3, 4))


def dichotomy_probe(F: Hypergraph, n_list: Sequence[int], name: str = "F") -> DichotomyReport:
    """
    Not 3-partite: certify δ⁺ = ⌊n/3⌋ and F-freeness of the balanced complete
    3-partite graph at every n. 3-partite: report the smallest complete
    3-partite host and the projective-plane constructions as lower-bound
    data only.
    """
    partition = find_k_partition(F, 3)
    if partition is None:
        rows = []
        for n in n_list:
            G = balanced_complete_k_partite(n, 3)
            rows.append(DichotomyRow(n, "balanced complete 3-partite", min_positive_codegree(G),
                                     contains_copy(F, G) is None, n // 3))
        return DichotomyReport(name, False, None, None, rows)

    rows = []
    for q, x in K222_PROBES:
        G = k222_tripartite(q, x)
        rows.append(DichotomyRow(G.n, f"projective-plane tripartite q={q} x={x}",
                                 min_positive_codegree(G), contains_copy(F, G) is None))
    return DichotomyReport(name, True, partition.to_list(), smallest_complete_tripartite(F), rows)


# ---------------------------------------------------------------------------
# Bounds table

def _j_k_bound(k: int) -> Callable[[int], Fraction]:
    return lambda n: Fraction((k - 2) * n, k - 1)


def _f32_bound(n: int) -> Fraction:
    if n % 4:
        return Fraction((n - 1) // 2)
    return Fraction(n, 2)


# Finite-n upper bounds on co⁺ex(n, F)
UPPER_BOUNDS: Dict[str, Callable[[int], Optional[Fraction]]] = {
    "K4-": lambda n: Fraction(n // 3),
    "F5": lambda n: Fraction(n // 3) if n >= 6 else None,
    "F3,2": _f32_bound,
    "Fano": lambda n: Fraction(2 * n, 3),
    "K4": lambda n: Fraction(2 * n, 3),
    "F3,3": lambda n: Fraction(3 * n, 4),
    "C5": lambda n: Fraction(2 * n, 3),
    "C5-": lambda n: Fraction(n, 2),
    "J4": _j_k_bound(4),
}


def upper_bound(name: str, n: int) -> Optional[Fraction]:
    """
    Known upper bound on co⁺ex(n, F) for a catalog F, or None

    Accepts "J<k>" for the J_k family as well as catalog names.
    """
    if name[:1] in ("J", "j") and name[1:].isdigit():
        return _j_k_bound(int(name[1:]))(n)
    key = resolve_name(name)
    bound = UPPER_BOUNDS.get(key)
    return bound(n) if bound else None


@dataclass(frozen=True)
class TableSpec:
    """Row definition: lower-bound construction and the published density range"""
    name: str
    construction: str
    build: Callable[[int], Hypergraph]
    min_n: int
    lower: Fraction
    upper: Fraction


TABLE_SPECS: List[TableSpec] = [
    TableSpec("K4-", "balanced complete 3-partite", lambda n: balanced_complete_k_partite(n, 3), 3,
              Fraction(1, 3), Fraction(1, 3)),
    TableSpec("F5", "balanced complete 3-partite", lambda n: balanced_complete_k_partite(n, 3), 3,
              Fraction(1, 3), Fraction(1, 3)),
    TableSpec("F3,2", "balanced complete 4-partite", lambda n: balanced_complete_k_partite(n, 4), 4,
              Fraction(1, 2), Fraction(1, 2)),
    TableSpec("Fano", "balanced complete 6-partite", lambda n: balanced_complete_k_partite(n, 6), 6,
              Fraction(2, 3), Fraction(2, 3)),
    TableSpec("K4", "balanced complete one-way bipartite", one_way_bipartite_balanced, 3,
              Fraction(1, 2), Fraction(2, 3)),
    TableSpec("F3,3", "balanced complete 5-partite", lambda n: balanced_complete_k_partite(n, 5), 5,
              Fraction(3, 5), Fraction(3, 4)),
    TableSpec("C5", "balanced complete 4-partite", lambda n: balanced_complete_k_partite(n, 4), 4,
              Fraction(1, 2), Fraction(2, 3)),
    TableSpec("C5-", "balanced complete 3-partite", lambda n: balanced_complete_k_partite(n, 3), 3,
              Fraction(1, 3), Fraction(1, 2)),
    TableSpec("J4", "balanced complete 4-partite", lambda n: balanced_complete_k_partite(n, 4), 4,
              Fraction(1, 2), Fraction(2, 3)),
]


@dataclass
class TableRow:
    name: str
    construction: str
    n: int
    delta: int
    f_free: bool
    density_lower: Fraction
    density_upper: Fraction
    finite_upper: Optional[Fraction]

    @property
    def ratio(self) -> Fraction:
        return Fraction(self.delta, self.n)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "forbidden": self.name,
            "construction": self.construction,
            "n": self.n,
            "delta": self.delta,
            "ratio": _ratio(self.ratio),
            "f_free": self.f_free,
            "density_lower": _ratio(self.density_lower),
            "density_upper": _ratio(self.density_upper),
            "finite_upper": _ratio(self.finite_upper),
        }


@dataclass
class TableReport:
    n: int
    rows: List[TableRow]
    skipped: List[str] = field(default_factory=list)

    @property
    def holds(self) -> bool:
        return all(row.f_free for row in self.rows)

    def to_dict(self) -> Dict[str, Any]:
        return {"n": self.n, "rows": [row.to_dict() for row in self.rows], "skipped": self.skipped}


def table_emit(n: int) -> TableReport:
    """Each construction at n vertices against the density bounds of its F"""
    rows, skipped = [], []
    for spec in TABLE_SPECS:
        if n < spec.min_n:
            skipped.append(spec.name)
            continue
        G = spec.build(n)
        F = get(spec.name)
        rows.append(TableRow(
            name=spec.name,
            construction=spec.construction,
            n=n,
            delta=min_positive_codegree(G),
            f_free=contains_copy(F, G) is None,
            density_lower=spec.lower,
            density_upper=spec.upper,
            finite_upper=upper_bound(spec.name, n),
        ))
    return TableReport(n, rows, skipped)


@dataclass
class BoundsCheck:
    """A search value against the construction below and the bound above it"""
    forbidden: str
    n: int
    value: int
    exhaustive: bool
    lower: Optional[int]
    upper: Optional[Fraction]

    @property
    def holds(self) -> bool:
        if self.upper is not None and self.value > self.upper:
            return False
        # a non-exhaustive value may undershoot the construction
        if self.exhaustive and self.lower is not None and self.value < self.lower:
            return False
        return True

    def to_dict(self) -> Dict[str, Any]:
        return {
            "forbidden": self.forbidden,
            "n": self.n,
            "value": self.value,
            "exhaustive": self.exhaustive,
            "lower": self.lower,
            "upper": _ratio(self.upper),
            "holds": self.holds,
        }


def check_against_bounds(report) -> BoundsCheck:
    """
    Compare a single-F SearchReport with the table construction at the
    same n (lower) and the finite-n upper bound
    """
    if len(report.forbidden) != 1:
        raise HypergraphError("bounds apply to a single forbidden graph")
    name = report.forbidden[0]
    if not (name[:1] in ("J", "j") and name[1:].isdigit()):
        name = resolve_name(name)
    lower = None
    for spec in TABLE_SPECS:
        if spec.name == name and report.n >= spec.min_n:
            lower = min_positive_codegree(spec.build(report.n))
    return BoundsCheck(name, report.n, report.exact_value, report.exhaustive, lower, upper_bound(name, report.n))


@dataclass
class CongruenceReport:
    n: int
    delta: int
    expected: int

    @property
    def holds(self) -> bool:
        return self.delta == self.expected

    def to_dict(self) -> Dict[str, Any]:
        return {"check": "h6_congruence", "n": self.n, "delta": self.delta, "expected": self.expected, "holds": self.holds}


def h6_congruence_check(n: int) -> CongruenceReport:
    """δ⁺ of the balanced H6 blow-up: n/3 when 6 | n, 2⌊n/6⌋ when n ≡ 3 (mod 6)"""
    if n % 6 == 0:
        expected = n // 3
    elif n % 6 == 3:
        expected = 2 * (n // 6)
    else:
        raise HypergraphError(f"the H6 blow-up law covers n ≡ 0 or 3 (mod 6), got n={n}")
    return CongruenceReport(n, min_positive_codegree(h6_blow_up_balanced(n)), expected)


# ---------------------------------------------------------------------------
# Property suite over a corpus of graphs

RANDOM_SIZES = range(4, 10)
RANDOM_PER_SIZE = 60
_GOLDEN = 0x9E3779B97F4A7C15
_MASK64 = (1 << 64) - 1


def weyl_graph(n: int, index: int) -> Hypergraph:
    """
    Deterministic pseudo-random 3-graph: triple t is kept when the Weyl
    sequence (t + offset)·φ mod 1 falls below a density in 1/5..4/5
    """
    density = (index % 4 + 1) * (1 << 64) // 5
    offset = index * comb(n, 3) + 1
    edges = [
        triple for t, triple in enumerate(combinations(range(n), 3))
        if ((t + offset) * _GOLDEN) & _MASK64 < density
    ]
    return make_hypergraph(n, 3, edges)


def lemma_corpus(max_n: int = 24) -> List[Tuple[str, Hypergraph]]:
    """Catalog graphs, constructions up to max_n vertices, and Weyl graphs"""
    corpus: List[Tuple[str, Hypergraph]] = [(name, entry.graph) for name, entry in CATALOG.items()]
    for k in (3, 4, 5, 6):
        corpus.extend((f"{k}-partite n={n}", balanced_complete_k_partite(n, k)) for n in range(k, max_n + 1))
    corpus.extend((f"one-way n={n}", one_way_bipartite_balanced(n)) for n in range(3, max_n + 1))
    corpus.extend((f"H6 blow-up n={n}", h6_blow_up_balanced(n)) for n in range(6, max_n + 1))
    corpus.extend(
        (f"circle n={n}", circle_from_signs([i % 2 for i in range(n)])) for n in range(3, min(max_n, 17) + 1)
    )
    corpus.extend((f"j_k k={k}", j_k(k)) for k in range(2, 9))
    corpus.extend((f"k222 q=2 x={x}", k222_tripartite(2, x)) for x in (1, 2, 3))
    for n in RANDOM_SIZES:
        corpus.extend((f"weyl n={n} #{i}", weyl_graph(n, i)) for i in range(RANDOM_PER_SIZE))
    return corpus


@dataclass
class LemmaSuiteReport:
    graphs: int
    checks: int
    violations: List[Dict[str, Any]] = field(default_factory=list)

    @property
    def holds(self) -> bool:
        return not self.violations

    def to_dict(self) -> Dict[str, Any]:
        return {
            "check": "lemma_suite",
            "graphs": self.graphs,
            "checks": self.checks,
            "violations": self.violations,
            "holds": self.holds,
        }


def lemma_suite(corpus: Sequence[Tuple[str, Hypergraph]]) -> LemmaSuiteReport:
    """
    Edge bound, independent-set bound over every greedy maximal independent
    set, T-statistic lower bound and Σ d(x,y) = 3|E| on every graph
    """
    report = LemmaSuiteReport(graphs=len(corpus), checks=0)

    def record(name: str, check: str, ok: bool, details: Any = None) -> None:
        report.checks += 1
        if not ok:
            report.violations.append({"graph": name, "check": check, "details": details})

    for name, H in corpus:
        pairs = positive_pairs(H)
        record(name, "codegree_sum", pairs.total() == 3 * H.m, pairs.total())
        t = t_statistic(H)
        record(name, "t_statistic", t.holds, t.to_dict())
        if not H.edges:
            continue
        edge = edge_bound_check(H)
        record(name, "edge_bound", edge.holds, edge.to_dict())
        for S in maximal_independent_sets_greedy(H):
            result = independent_set_bound_check(H, S)
            record(name, "independent_set_bound", result.holds, result.to_dict())
    return report
