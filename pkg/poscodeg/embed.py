"""
Subhypergraph containment, copy counting, automorphisms and the
"every 4 vertices span 0 or 2 edges" span profile
"""

from dataclasses import dataclass
from itertools import combinations
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from joblib import Parallel, delayed

from .core import Edge, Hypergraph, shadow_adjacency, twin_classes, vertices_of
from .errors import HypergraphError, InfeasibleError

COUNT_PATTERN_CAP = 7
COUNT_HOST_CAP = 64
AUTOMORPHISM_CAP = 12


@dataclass(frozen=True)
class Embedding:
    """Injective vertex map V(F) -> V(H); mapping[i] is the image of i"""
    mapping: Tuple[int, ...]

    def image_edges(self, F: Hypergraph) -> List[Edge]:
        return [tuple(sorted(self.mapping[v] for v in e)) for e in F.edges]

    def to_dict(self) -> Dict[str, int]:
        return {str(i): v for i, v in enumerate(self.mapping)}


@dataclass(frozen=True)
class SpanProfileResult:
    """Outcome of the 0-or-2 span profile check"""
    ok: bool
    violation: Optional[Tuple[int, int, int, int]] = None
    violation_edges: Optional[int] = None

    def __bool__(self) -> bool:
        return self.ok

    def to_dict(self) -> Dict:
        return {
            "ok": self.ok,
            "violation": list(self.violation) if self.violation else None,
            "violation_edges": self.violation_edges,
        }


def _require_pattern(F: Hypergraph, H: Hypergraph) -> None:
    if F.r != 3 or H.r != 3:
        raise HypergraphError("embedding requires 3-graphs")
    if not F.edges:
        raise HypergraphError("forbidden graph must have at least one edge")


def search_order(F: Hypergraph) -> List[int]:
    """
    Static vertex order refining "descending degree, ties by index": the
    first vertex is the highest-degree one (lowest index on ties). After
    that, the next vertex is the one completing the most edges with placed
    vertices, then with the most shadow links to them, and only then the
    highest degree and lowest index. Without edges or links to break ties
    this is exactly the descending-degree order.
    """
    adj = shadow_adjacency(F)
    order: List[int] = []
    placed = 0
    remaining = set(range(F.n))
    while remaining:
        def key(x: int):
            completed = sum(1 for e in F.edges if x in e and all(u == x or placed >> u & 1 for u in e))
            links = bin(adj[x] & placed).count("1")
            return (completed, links, F.degree(x), -x)
        x = max(remaining, key=key)
        order.append(x)
        placed |= 1 << x
        remaining.remove(x)
    return order


class _Matcher:
    """Backtracking engine for edge-preserving injections F -> H"""

    def __init__(self, F: Hypergraph, H: Hypergraph, use_twins: bool = True):
        _require_pattern(F, H)
        self.F = F
        self.H = H
        self.order = search_order(F)
        position = {x: p for p, x in enumerate(self.order)}
        f_adj = shadow_adjacency(F)

        # Constraints per position, expressed in earlier positions
        self.edge_pairs: List[List[Tuple[int, int]]] = []
        self.adj_prev: List[List[int]] = []
        for p, x in enumerate(self.order):
            pairs = []
            for e in F.edges:
                if x in e:
                    others = [position[u] for u in e if u != x]
                    if all(q < p for q in others):
                        pairs.append((others[0], others[1]))
            self.edge_pairs.append(pairs)
            self.adj_prev.append([position[u] for u in vertices_of(f_adj[x]) if position[u] < p])

        self.h_adj = shadow_adjacency(H)
        self.degree_ok = []
        for x in self.order:
            need = F.degree(x)
            self.degree_ok.append(sum(1 << v for v in range(H.n) if H.degree(v) >= need))

        if use_twins:
            self.twin_id = [0] * H.n
            for i, cls in enumerate(twin_classes(H)):
                for v in cls:
                    self.twin_id[v] = i
        else:
            self.twin_id = list(range(H.n))

        self.full = (1 << H.n) - 1
        self.images = [0] * F.n
        self.used = 0

    def candidates(self, p: int) -> int:
        mask = self.full & ~self.used & self.degree_ok[p]
        images = self.images
        for a, b in self.edge_pairs[p]:
            mask &= self.H.nbhd(images[a], images[b])
            if not mask:
                return 0
        for a in self.adj_prev[p]:
            mask &= self.h_adj[images[a]]
        return mask

    def grouped(self, mask: int) -> List[Tuple[int, int]]:
        """(representative, multiplicity) per twin class inside mask"""
        groups: Dict[int, List[int]] = {}
        for v in vertices_of(mask):
            groups.setdefault(self.twin_id[v], []).append(v)
        return [(members[0], len(members)) for members in groups.values()]

    def _place(self, p: int, v: int) -> None:
        self.images[p] = v
        self.used |= 1 << v

    def _unplace(self, p: int, v: int) -> None:
        self.used &= ~(1 << v)

    def find(self, p: int = 0) -> bool:
        if p == len(self.order):
            return True
        for v, _ in self.grouped(self.candidates(p)):
            self._place(p, v)
            if self.find(p + 1):
                return True
            self._unplace(p, v)
        return False

    def count(self, p: int = 0) -> int:
        if p == len(self.order):
            return 1
        total = 0
        for v, multiplicity in self.grouped(self.candidates(p)):
            self._place(p, v)
            total += multiplicity * self.count(p + 1)
            self._unplace(p, v)
        return total

    def iterate(self, p: int = 0) -> Iterator[Tuple[int, ...]]:
        if p == len(self.order):
            yield self.mapping()
            return
        for v in vertices_of(self.candidates(p)):
            self._place(p, v)
            yield from self.iterate(p + 1)
            self._unplace(p, v)

    def mapping(self) -> Tuple[int, ...]:
        out = [0] * self.F.n
        for p, x in enumerate(self.order):
            out[x] = self.images[p]
        return tuple(out)

    def count_from(self, first: int) -> int:
        """Labeled embeddings whose first placed vertex maps to `first`"""
        if not (self.candidates(0) >> first & 1):
            return 0
        self._place(0, first)
        total = self.count(1)
        self._unplace(0, first)
        return total


def contains_copy(F: Hypergraph, H: Hypergraph) -> Optional[Embedding]:
    """
    Witness embedding of F into H (subgraph, not induced), or None
    """
    _require_pattern(F, H)
    if F.n > H.n or F.m > H.m:
        return None
    matcher = _Matcher(F, H)
    if matcher.find():
        return Embedding(matcher.mapping())
    return None


def contains_any(family: Sequence[Hypergraph], H: Hypergraph) -> Optional[Tuple[int, Embedding]]:
    """First member of a forbidden family with a copy in H, with the witness"""
    for index, F in enumerate(family):
        witness = contains_copy(F, H)
        if witness is not None:
            return index, witness
    return None


def iter_embeddings(F: Hypergraph, H: Hypergraph) -> Iterator[Embedding]:
    """Every labeled embedding of F into H"""
    _require_pattern(F, H)
    if F.n > H.n:
        return
    matcher = _Matcher(F, H, use_twins=False)
    for mapping in matcher.iterate():
        yield Embedding(mapping)


def _count_shard(F: Hypergraph, H: Hypergraph, first: int) -> int:
    return _Matcher(F, H).count_from(first)


def count_embeddings(F: Hypergraph, H: Hypergraph, jobs: int = 1) -> int:
    """
    Number of labeled edge-preserving injections F -> H

    With jobs > 1 the top-level twin-class representatives are counted in
    parallel and summed.
    """
    _require_pattern(F, H)
    if F.n > H.n:
        return 0
    matcher = _Matcher(F, H)
    if jobs <= 1:
        return matcher.count()
    shards = matcher.grouped(matcher.candidates(0))
    counts = Parallel(n_jobs=jobs)(delayed(_count_shard)(F, H, v) for v, _ in shards)
    return sum(multiplicity * c for (_, multiplicity), c in zip(shards, counts))


def automorphism_count(F: Hypergraph) -> int:
    """|Aut(F)|, counted as edge-preserving bijections of F onto itself"""
    if F.n > AUTOMORPHISM_CAP:
        raise InfeasibleError(f"automorphism_count is limited to {AUTOMORPHISM_CAP} vertices, got {F.n}")
    if not F.edges:
        raise HypergraphError("automorphism_count needs at least one edge")
    return count_embeddings(F, F)


def count_copies(F: Hypergraph, H: Hypergraph, jobs: int = 1) -> int:
    """Unlabeled copies of F in H: injections / |Aut(F)|"""
    _require_pattern(F, H)
    if F.n > COUNT_PATTERN_CAP:
        raise InfeasibleError(f"count_copies pattern cap is {COUNT_PATTERN_CAP} vertices, got {F.n}")
    if H.n > COUNT_HOST_CAP:
        raise InfeasibleError(f"count_copies host cap is {COUNT_HOST_CAP} vertices, got {H.n}")
    return count_embeddings(F, H, jobs) // automorphism_count(F)


def span_profile_ok(H: Hypergraph) -> SpanProfileResult:
    """True iff every 4 vertices span exactly 0 or 2 edges"""
    if H.r != 3:
        raise HypergraphError("span profile requires a 3-graph")
    for quad in combinations(range(H.n), 4):
        spanned = sum(1 for triple in combinations(quad, 3) if H.has_edge(triple))
        if spanned not in (0, 2):
            return SpanProfileResult(False, quad, spanned)
    return SpanProfileResult(True)


def per_edge_k4minus_count(H: Hypergraph, e: Sequence[int]) -> int:
    """|N(ab) ∩ N(bc)| + |N(ab) ∩ N(ac)| + |N(bc) ∩ N(ac)| for the edge abc"""
    if H.r != 3 or len(e) != 3 or not H.has_edge(e):
        raise HypergraphError(f"{tuple(e)} is not an edge")
    a, b, c = sorted(e)
    n_ab, n_bc, n_ac = H.nbhd(a, b), H.nbhd(b, c), H.nbhd(a, c)
    return bin(n_ab & n_bc).count("1") + bin(n_ab & n_ac).count("1") + bin(n_bc & n_ac).count("1")
