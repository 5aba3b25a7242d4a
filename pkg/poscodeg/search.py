"""
Exact positive co-degree Turán numbers at small n, canonical forms, and the
n-vertex classification of 3-graphs whose 4-sets span 0 or 2 edges
"""

import hashlib
import time
from dataclasses import dataclass, field
from itertools import combinations, product
from math import ceil
from typing import Any, Dict, Iterable, List, Optional, Sequence, Tuple, Union

from joblib import Parallel, delayed
from rich.console import Console
from rich.progress import Progress

from .catalog import complete_graph, get
from .config import DEFAULT_NODE_BUDGET
from .constructions import (
    balanced_complete_k_partite,
    blow_up,
    circle_from_signs,
    h6_blow_up_balanced,
    one_way_bipartite_balanced,
)
from .core import Edge, Hypergraph, colex_triples, make_hypergraph, min_positive_codegree, twin_classes
from .embed import iter_embeddings
from .errors import HypergraphError, InfeasibleError

CANONICAL_CAP = 10
EXHAUSTIVE_CAP = 6
SEARCH_CAP = 7
SHARD_DEPTH = 4
WITNESS_LIMIT = 1000

console = Console(stderr=True)

Forbidden = Union[Hypergraph, Sequence[Hypergraph]]


# ---------------------------------------------------------------------------
# Canonical forms

@dataclass(frozen=True)
class CanonicalForm:
    """Lexicographically least edge list over the canonical labelings"""
    n: int
    edges: Tuple[Edge, ...]
    digest: str = field(compare=False, default="")

    def to_hypergraph(self) -> Hypergraph:
        return make_hypergraph(self.n, 3, self.edges)

    def to_dict(self) -> Dict[str, Any]:
        return {"n": self.n, "edges": [list(e) for e in self.edges], "digest": self.digest}


def _compress(values: Sequence) -> List[int]:
    ranks = {v: i for i, v in enumerate(sorted(set(values)))}
    return [ranks[v] for v in values]


def _refine(H: Hypergraph, colour: Sequence[int]) -> List[int]:
    """
    Iterated colour refinement: each vertex's new colour is its old colour
    plus the multiset of colour pairs over its edges and of (colour,
    co-degree) over all other vertices. Stops when the partition is stable.
    """
    colour = _compress(colour)
    incident = [H.incident(v) for v in range(H.n)]
    while True:
        signatures = []
        for v in range(H.n):
            edge_sig = sorted(
                tuple(sorted(colour[u] for u in e if u != v)) for e in incident[v]
            )
            pair_sig = sorted(
                (colour[w], bin(H.nbhd(v, w)).count("1")) for w in range(H.n) if w != v
            )
            signatures.append((colour[v], tuple(edge_sig), tuple(pair_sig)))
        refined = _compress(signatures)
        if len(set(refined)) == len(set(colour)):
            return refined
        colour = refined


def _leaf_labelings(H: Hypergraph, colour: List[int], twin_id: List[int]) -> Iterable[List[int]]:
    """
    Individualize-refine down to discrete colourings. Within the target
    cell only one vertex per twin class is individualized: swapping twins
    is an automorphism, so their subtrees give the same edge lists.
    """
    if len(set(colour)) == H.n:
        yield colour
        return
    cells: Dict[int, List[int]] = {}
    for v, c in enumerate(colour):
        cells.setdefault(c, []).append(v)
    target = min(c for c, members in cells.items() if len(members) > 1)
    tried = set()
    for v in cells[target]:
        if twin_id[v] in tried:
            continue
        tried.add(twin_id[v])
        split = [2 * c + 1 for c in colour]
        split[v] = 2 * colour[v]
        yield from _leaf_labelings(H, _refine(H, split), twin_id)


def canonical_form(H: Hypergraph) -> CanonicalForm:
    """
    Canonical form of a 3-graph on at most 10 vertices: the least sorted
    edge list over every labeling reached by individualization-refinement
    """
    if H.r != 3:
        raise HypergraphError("canonical_form requires a 3-graph")
    if H.n > CANONICAL_CAP:
        raise InfeasibleError(f"canonical_form is limited to n <= {CANONICAL_CAP}, got n={H.n}")
    twin_id = [0] * H.n
    for i, cls in enumerate(twin_classes(H)):
        for v in cls:
            twin_id[v] = i
    best: Optional[Tuple[Edge, ...]] = None
    for label in _leaf_labelings(H, _refine(H, list(H.degrees())), twin_id):
        edges = tuple(sorted(tuple(sorted(label[v] for v in e)) for e in H.edges))
        if best is None or edges < best:
            best = edges
    best = best if best is not None else ()
    digest = hashlib.sha256(f"{H.n}:{best}".encode()).hexdigest()
    return CanonicalForm(H.n, best, digest)


def is_isomorphic(G: Hypergraph, H: Hypergraph) -> bool:
    return G.n == H.n and G.m == H.m and canonical_form(G) == canonical_form(H)


# ---------------------------------------------------------------------------
# Branch-and-prune over labeled edge sets

@dataclass
class _SearchProblem:
    """
    Everything a shard worker needs, precomputed once.

    Triples are decided in colex order; position 0 (the triple {0,1,2}) is
    always included.
    """
    n: int
    k: int
    triples: List[Edge]
    triple_pairs: List[Tuple[int, int, int]]
    remaining: List[List[int]]
    forbidden_by_last: List[List[int]]
    span_by_last: List[List[int]]
    collect: bool
    shard_budget: int

    @classmethod
    def build(
        cls,
        n: int,
        family: Sequence[Hypergraph],
        k: int,
        collect: bool,
        budget: int,
        span_profile: bool = False,
    ) -> "_SearchProblem":
        triples = colex_triples(n)
        t = len(triples)
        pair_id = {}
        for v in range(n):
            for u in range(v):
                pair_id[(u, v)] = len(pair_id)
        triple_pairs = [(pair_id[(a, b)], pair_id[(a, c)], pair_id[(b, c)]) for a, b, c in triples]

        positions: List[List[int]] = [[] for _ in pair_id]
        for i, pairs in enumerate(triple_pairs):
            for p in pairs:
                positions[p].append(i)
        remaining = [[sum(1 for q in positions[p] if q > i) for i in range(t)] for p in range(len(pair_id))]

        index = {e: i for i, e in enumerate(triples)}
        forbidden_by_last: List[List[int]] = [[] for _ in range(t)]
        host = complete_graph(n)
        masks = set()
        for F in family:
            if F.n > n:
                continue
            for embedding in iter_embeddings(F, host):
                mask = 0
                for e in embedding.image_edges(F):
                    mask |= 1 << index[e]
                masks.add(mask)
        for mask in sorted(masks):
            forbidden_by_last[mask.bit_length() - 1].append(mask)

        span_by_last: List[List[int]] = [[] for _ in range(t)]
        if span_profile:
            for quad in combinations(range(n), 4):
                mask = 0
                for triple in combinations(quad, 3):
                    mask |= 1 << index[triple]
                span_by_last[mask.bit_length() - 1].append(mask)

        shards = 2 ** min(SHARD_DEPTH, max(t - 1, 0))
        return cls(
            n=n,
            k=k,
            triples=triples,
            triple_pairs=triple_pairs,
            remaining=remaining,
            forbidden_by_last=forbidden_by_last,
            span_by_last=span_by_last,
            collect=collect,
            shard_budget=ceil(budget / shards),
        )

    @property
    def shard_count(self) -> int:
        return 2 ** min(SHARD_DEPTH, max(len(self.triples) - 1, 0))

    @property
    def shard_depth(self) -> int:
        return min(SHARD_DEPTH, max(len(self.triples) - 1, 0))


@dataclass
class _ShardOutcome:
    nodes: int
    exhausted: bool
    masks: List[int]


class _BudgetExceeded(Exception):
    pass


class _ShardSearch:
    """Depth-first include/exclude search for one shard prefix"""

    def __init__(self, problem: _SearchProblem, shard: int):
        self.p = problem
        depth = problem.shard_depth
        self.forced = [1] + [(shard >> j) & 1 for j in range(depth)]
        self.codeg = [0] * (problem.n * (problem.n - 1) // 2)
        self.mask = 0
        self.nodes = 0
        self.found: List[int] = []

    def _pairs_alive(self, i: int) -> bool:
        k = self.p.k
        if k <= 0:
            return True
        for pid in self.p.triple_pairs[i]:
            c = self.codeg[pid]
            if c and c + self.p.remaining[pid][i] < k:
                return False
        return True

    def _spans_ok(self, i: int) -> bool:
        for quad in self.p.span_by_last[i]:
            if bin(self.mask & quad).count("1") not in (0, 2):
                return False
        return True

    def _include_ok(self, i: int) -> bool:
        current = self.mask
        for copy in self.p.forbidden_by_last[i]:
            if current & copy == copy:
                return False
        return True

    def run(self) -> _ShardOutcome:
        try:
            self._dfs(0)
            exhausted = True
        except _BudgetExceeded:
            exhausted = False
        return _ShardOutcome(self.nodes, exhausted, self.found)

    def _dfs(self, i: int) -> bool:
        """Returns True when the search should stop (first witness found)"""
        self.nodes += 1
        if self.nodes > self.p.shard_budget:
            raise _BudgetExceeded()
        if i == len(self.p.triples):
            self.found.append(self.mask)
            return not self.p.collect

        choices = (self.forced[i],) if i < len(self.forced) else (1, 0)
        for include in choices:
            if include:
                self.mask |= 1 << i
                if self._include_ok(i):
                    for pid in self.p.triple_pairs[i]:
                        self.codeg[pid] += 1
                    if self._pairs_alive(i) and self._spans_ok(i) and self._dfs(i + 1):
                        return True
                    for pid in self.p.triple_pairs[i]:
                        self.codeg[pid] -= 1
                self.mask &= ~(1 << i)
            else:
                if self._pairs_alive(i) and self._spans_ok(i) and self._dfs(i + 1):
                    return True
        return False


def _run_shard(problem: _SearchProblem, shard: int) -> _ShardOutcome:
    return _ShardSearch(problem, shard).run()


def _run_all_shards(problem: _SearchProblem, jobs: int, verbose: bool = False) -> List[_ShardOutcome]:
    shards = range(problem.shard_count)
    if jobs > 1:
        return Parallel(n_jobs=jobs)(delayed(_run_shard)(problem, s) for s in shards)
    if not verbose:
        return [_run_shard(problem, s) for s in shards]
    outcomes = []
    with Progress(console=console, transient=True) as progress:
        task = progress.add_task(f"n={problem.n} k={problem.k}", total=problem.shard_count)
        for s in shards:
            outcomes.append(_run_shard(problem, s))
            progress.advance(task)
    return outcomes


def _mask_to_graph(n: int, triples: List[Edge], mask: int) -> Hypergraph:
    return make_hypergraph(n, 3, [triples[i] for i in range(len(triples)) if mask >> i & 1])


def _as_family(F: Forbidden) -> List[Hypergraph]:
    family = [F] if isinstance(F, Hypergraph) else list(F)
    if not family:
        raise HypergraphError("forbidden family is empty")
    for member in family:
        if member.r != 3 or not member.edges:
            raise HypergraphError("forbidden graphs must be nonempty 3-graphs")
    return family


def _check_search_cap(n: int) -> None:
    if n < 0:
        raise HypergraphError(f"n must be >= 0, got {n}")
    if n > SEARCH_CAP:
        raise InfeasibleError(f"exact search is limited to n <= {SEARCH_CAP}, got n={n}")


@dataclass
class DeltaDecision:
    """Outcome of the decision version: witness, or refutation if exhaustive"""
    n: int
    k: int
    witness: Optional[Hypergraph]
    exhaustive: bool
    nodes_explored: int

    @property
    def refuted(self) -> bool:
        return self.witness is None and self.exhaustive


def exists_with_delta(
    n: int,
    F: Forbidden,
    k: int,
    budget: int = DEFAULT_NODE_BUDGET,
    jobs: int = 1,
    verbose: bool = False,
) -> DeltaDecision:
    """
    Decide whether some F-free 3-graph on n vertices has δ⁺₂ >= k

    Args:
        n: Vertex count (exhaustive up to 6, best effort at 7)
        F: Forbidden graph or family
        k: Target minimum positive co-degree (>= 1)
        budget: Node budget, split evenly over the fixed shards
        jobs: Worker processes; never changes the answer

    Returns:
        DeltaDecision; a missing witness is a refutation only if exhaustive
    """
    _check_search_cap(n)
    family = _as_family(F)
    if k < 1:
        raise HypergraphError(f"k must be >= 1, got {k}")
    if n < 3 or k > n - 2:
        return DeltaDecision(n, k, None, True, 0)

    problem = _SearchProblem.build(n, family, k, collect=False, budget=budget)
    outcomes = _run_all_shards(problem, jobs, verbose)
    nodes = sum(o.nodes for o in outcomes)
    for o in outcomes:
        if o.masks:
            witness = _mask_to_graph(n, problem.triples, o.masks[0])
            assert min_positive_codegree(witness) >= k
            return DeltaDecision(n, k, witness, True, nodes)
    return DeltaDecision(n, k, None, all(o.exhausted for o in outcomes), nodes)


@dataclass
class SearchReport:
    """Exact co⁺ex(n, F) with canonical witnesses"""
    n: int
    forbidden: List[str]
    exact_value: int
    witnesses: List[CanonicalForm]
    witness_count: int
    witnesses_truncated: int
    exhaustive: bool
    nodes_explored: int
    wall_time: float = 0.0
    annotations: List[str] = field(default_factory=list)

    def witness_graphs(self) -> List[Hypergraph]:
        return [w.to_hypergraph() for w in self.witnesses]

    def to_dict(self, include_timing: bool = False) -> Dict[str, Any]:
        """Convert to dictionary for serialization"""
        data = {
            "n": self.n,
            "forbidden": self.forbidden,
            "exact_value": self.exact_value,
            "exhaustive": self.exhaustive,
            "nodes_explored": self.nodes_explored,
            "witness_count": self.witness_count,
            "witnesses_truncated": self.witnesses_truncated,
            "witnesses": [
                {**w.to_dict(), "isolated": _isolated_count(w)} for w in self.witnesses
            ],
            "annotations": self.annotations,
        }
        if include_timing:
            data["wall_time"] = self.wall_time
        return data


def _isolated_count(form: CanonicalForm) -> int:
    touched = {v for e in form.edges for v in e}
    return form.n - len(touched)


def reference_constructions(n: int) -> Dict[str, Hypergraph]:
    """Named lower-bound constructions on exactly n vertices"""
    refs: Dict[str, Hypergraph] = {}
    for k in (3, 4, 5, 6):
        if n >= k:
            refs[f"balanced complete {k}-partite"] = balanced_complete_k_partite(n, k)
    if n >= 6:
        refs["balanced H6 blow-up"] = h6_blow_up_balanced(n)
    if n >= 3:
        refs["balanced one-way bipartite"] = one_way_bipartite_balanced(n)
        refs[f"K{n}^(3)"] = complete_graph(n)
    if n >= 5:
        refs[f"K{n - 1}^(3) plus an isolated vertex"] = complete_graph(n - 1).add_isolated()
    return refs


def _annotate(report: SearchReport) -> None:
    if not report.witnesses:
        report.annotations.append("no nonempty F-free graph: value reported as 0")
        return
    forms = set(report.witnesses)
    named = []
    for name, graph in reference_constructions(report.n).items():
        if graph.n <= CANONICAL_CAP and canonical_form(graph) in forms:
            named.append(name)
    for name in named:
        report.annotations.append(f"witness: {name}")
    others = report.witness_count - len(named)
    if others > 0:
        report.annotations.append(f"{others} further witness(es) not among the named constructions")
    isolated = [i for i, w in enumerate(report.witnesses) if _isolated_count(w)]
    if isolated:
        report.annotations.append(f"witnesses with isolated vertices: {isolated}")


def copex_exact(
    n: int,
    F: Forbidden,
    budget: int = DEFAULT_NODE_BUDGET,
    jobs: int = 1,
    witness_limit: int = WITNESS_LIMIT,
    names: Optional[List[str]] = None,
    verbose: bool = False,
) -> SearchReport:
    """
    co⁺ex(n, F) by descending k, then every extremal graph up to isomorphism

    Args:
        n: Vertex count
        F: Forbidden graph or family
        budget: Node budget per decision run
        jobs: Worker processes
        witness_limit: Maximum canonical witnesses kept in the report
        names: Labels for the forbidden graphs in the report

    Returns:
        SearchReport; exhaustive is False if any run hit its budget
    """
    _check_search_cap(n)
    family = _as_family(F)
    labels = names or [f"F{i}" for i in range(len(family))]
    start_time = time.time()

    nodes = 0
    exhaustive = True
    value = 0
    for k in range(n - 2, 0, -1):
        decision = exists_with_delta(n, family, k, budget, jobs, verbose)
        nodes += decision.nodes_explored
        if decision.witness is not None:
            value = k
            break
        if not decision.exhaustive:
            exhaustive = False
        if verbose:
            console.print(f"  k={k}: refuted ({decision.nodes_explored} nodes)")

    forms: List[CanonicalForm] = []
    if value > 0:
        problem = _SearchProblem.build(n, family, value, collect=True, budget=budget)
        outcomes = _run_all_shards(problem, jobs, verbose)
        nodes += sum(o.nodes for o in outcomes)
        if not all(o.exhausted for o in outcomes):
            exhaustive = False
        unique = {}
        for o in outcomes:
            for mask in o.masks:
                form = canonical_form(_mask_to_graph(n, problem.triples, mask))
                unique[form] = form
        forms = sorted(unique.values(), key=lambda f: f.edges)

    report = SearchReport(
        n=n,
        forbidden=labels,
        exact_value=value,
        witnesses=forms[:witness_limit],
        witness_count=len(forms),
        witnesses_truncated=max(0, len(forms) - witness_limit),
        exhaustive=exhaustive,
        nodes_explored=nodes,
        wall_time=time.time() - start_time,
    )
    _annotate(report)
    return report


def extremal_uniqueness_check(report: SearchReport, expected: Dict[str, Hypergraph]) -> Dict[str, Any]:
    """
    Compare a report's witnesses with expected extremal graphs

    Returns:
        present / missing expected names and the number of extra witnesses
    """
    forms = set(report.witnesses)
    present, missing = [], []
    matched = set()
    for name, graph in expected.items():
        form = canonical_form(graph)
        if form in forms:
            present.append(name)
            matched.add(form)
        else:
            missing.append(name)
    extras = [w for w in report.witnesses if w not in matched]
    return {
        "present": present,
        "missing": missing,
        "extra_count": len(extras),
        "extras": [w.to_dict() for w in extras],
        "unique": not missing and not extras,
    }


# ---------------------------------------------------------------------------
# Span-profile classification

@dataclass
class FFClassificationReport:
    """Every 0-or-2 span-profile 3-graph on n vertices, classified"""
    n: int
    labeled_explored: int
    classes: int
    circle_type: int
    h6_type: int
    both_types: int
    unclassified: List[CanonicalForm]
    nodes_explored: int

    @property
    def holds(self) -> bool:
        return not self.unclassified

    def to_dict(self) -> Dict[str, Any]:
        return {
            "n": self.n,
            "labeled_explored": self.labeled_explored,
            "classes": self.classes,
            "circle_type": self.circle_type,
            "h6_type": self.h6_type,
            "both_types": self.both_types,
            "unclassified": [u.to_dict() for u in self.unclassified],
            "nodes_explored": self.nodes_explored,
            "holds": self.holds,
        }


def _compositions(total: int, parts: int) -> Iterable[Tuple[int, ...]]:
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def circle_reference_forms(n: int) -> set:
    return {canonical_form(circle_from_signs(signs)) for signs in product((0, 1), repeat=n)}


def h6_reference_forms(n: int) -> set:
    h6 = get("H6")
    return {canonical_form(blow_up(h6, sizes)) for sizes in _compositions(n, 6)}


def ff_classification_check(n: int, jobs: int = 1, verbose: bool = False) -> FFClassificationReport:
    """
    Enumerate all 3-graphs on n <= 6 vertices in which every 4 vertices span
    0 or 2 edges and match each against circle constructions and H6
    blow-ups by canonical form
    """
    if n > EXHAUSTIVE_CAP:
        raise InfeasibleError(f"classification is limited to n <= {EXHAUSTIVE_CAP}, got n={n}")
    forms = {canonical_form(make_hypergraph(n, 3, []))}
    labeled = 1
    nodes = 0
    if n >= 3:
        problem = _SearchProblem.build(n, [], 0, collect=True, budget=DEFAULT_NODE_BUDGET, span_profile=True)
        outcomes = _run_all_shards(problem, jobs, verbose)
        nodes = sum(o.nodes for o in outcomes)
        for o in outcomes:
            labeled += len(o.masks)
            for mask in o.masks:
                forms.add(canonical_form(_mask_to_graph(n, problem.triples, mask)))

    circles = circle_reference_forms(n)
    blowups = h6_reference_forms(n)
    ordered = sorted(forms, key=lambda f: f.edges)
    return FFClassificationReport(
        n=n,
        labeled_explored=labeled,
        classes=len(ordered),
        circle_type=sum(1 for f in ordered if f in circles),
        h6_type=sum(1 for f in ordered if f in blowups),
        both_types=sum(1 for f in ordered if f in circles and f in blowups),
        unclassified=[f for f in ordered if f not in circles and f not in blowups],
        nodes_explored=nodes,
    )
