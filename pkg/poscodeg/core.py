"""
Immutable r-uniform hypergraphs with co-degree, neighborhood,
independence and partiteness machinery
"""

from collections import Counter
from dataclasses import dataclass, field
from itertools import combinations
from math import comb
from typing import Dict, FrozenSet, Iterable, Iterator, List, Optional, Sequence, Tuple

from .errors import HypergraphError, InfeasibleError, UndefinedError

MAX_VERTICES = 1024
PARTITION_SEARCH_CAP = 12

MODE_K_PARTITE = "k-partite"
MODE_ONE_WAY = "one-way-bipartite"

Edge = Tuple[int, ...]


def vertices_of(bitset: int) -> List[int]:
    """List the vertices whose bits are set"""
    out = []
    while bitset:
        low = bitset & -bitset
        out.append(low.bit_length() - 1)
        bitset ^= low
    return out


def bitset_of(vertices: Iterable[int]) -> int:
    bits = 0
    for v in vertices:
        bits |= 1 << v
    return bits


def colex_index(edge: Sequence[int]) -> int:
    """Position of a sorted r-set in colex order"""
    return sum(comb(v, i + 1) for i, v in enumerate(edge))


def colex_triples(n: int) -> List[Edge]:
    """All 3-subsets of range(n) in colex order"""
    return [(a, b, c) for c in range(n) for b in range(c) for a in range(b)]


@dataclass(frozen=True)
class Hypergraph:
    """
    An r-uniform hypergraph on vertices 0..n-1.

    Edges are stored as sorted tuples, deduplicated and sorted
    lexicographically. For r = 3 the common neighborhood N(u,v) of every
    pair is cached as an int bitset.
    """
    n: int
    r: int = 3
    edges: Tuple[Edge, ...] = ()
    _codegrees: Dict[Edge, int] = field(init=False, repr=False, compare=False, hash=False)
    _nbhd: Tuple[int, ...] = field(init=False, repr=False, compare=False, hash=False)
    _degrees: Tuple[int, ...] = field(init=False, repr=False, compare=False, hash=False)
    _edge_set: FrozenSet[Edge] = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        if self.n < 0:
            raise HypergraphError(f"vertex count must be >= 0, got {self.n}")
        if self.n > MAX_VERTICES:
            raise InfeasibleError(f"n={self.n} exceeds the vertex cap {MAX_VERTICES}")
        if self.r < 2:
            raise HypergraphError(f"uniformity must be >= 2, got {self.r}")

        normalized = set()
        for index, edge in enumerate(self.edges):
            vertices = tuple(sorted(edge))
            if len(vertices) != self.r:
                raise HypergraphError(f"expected {self.r} vertices, got {len(vertices)}", index)
            if len(set(vertices)) != self.r:
                raise HypergraphError(f"repeated vertex in {tuple(edge)}", index)
            for v in vertices:
                if not isinstance(v, int) or v < 0 or v >= self.n:
                    raise HypergraphError(f"vertex {v!r} outside 0..{self.n - 1}", index)
            normalized.add(vertices)
        object.__setattr__(self, "edges", tuple(sorted(normalized)))
        object.__setattr__(self, "_edge_set", frozenset(normalized))

        codegrees: Counter = Counter()
        degrees = [0] * self.n
        for edge in self.edges:
            for v in edge:
                degrees[v] += 1
            for sub in combinations(edge, self.r - 1):
                codegrees[sub] += 1
        object.__setattr__(self, "_codegrees", dict(codegrees))
        object.__setattr__(self, "_degrees", tuple(degrees))

        nbhd: List[int] = []
        if self.r == 3:
            n = self.n
            nbhd = [0] * (n * n)
            for a, b, c in self.edges:
                nbhd[a * n + b] |= 1 << c
                nbhd[a * n + c] |= 1 << b
                nbhd[b * n + c] |= 1 << a
            for u in range(n):
                for v in range(u + 1, n):
                    nbhd[v * n + u] = nbhd[u * n + v]
        object.__setattr__(self, "_nbhd", tuple(nbhd))

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return self._degrees[v]

    def degrees(self) -> Tuple[int, ...]:
        return self._degrees

    def nbhd(self, u: int, v: int) -> int:
        """Raw N(u,v) bitset lookup; no validation"""
        return self._nbhd[u * self.n + v]

    def has_edge(self, edge: Iterable[int]) -> bool:
        return tuple(sorted(edge)) in self._edge_set

    def incident(self, v: int) -> List[Edge]:
        return [e for e in self.edges if v in e]

    def relabel(self, mapping: Sequence[int], n: Optional[int] = None) -> "Hypergraph":
        """Image under the injective vertex map v -> mapping[v]"""
        target = self.n if n is None else n
        if len(set(mapping)) != len(mapping) or len(mapping) != self.n:
            raise HypergraphError("relabel map must be injective on all vertices")
        return Hypergraph(target, self.r, tuple(tuple(mapping[v] for v in e) for e in self.edges))

    def add_isolated(self, k: int = 1) -> "Hypergraph":
        return Hypergraph(self.n + k, self.r, self.edges)

    def remove_vertex(self, v: int) -> "Hypergraph":
        """Delete v and its edges; later vertices shift down by one"""
        if not 0 <= v < self.n:
            raise HypergraphError(f"vertex {v} outside 0..{self.n - 1}")
        shift = lambda u: u - 1 if u > v else u
        kept = tuple(tuple(shift(u) for u in e) for e in self.edges if v not in e)
        return Hypergraph(self.n - 1, self.r, kept)

    def induced(self, vertices: Iterable[int]) -> "Hypergraph":
        keep = sorted(set(vertices))
        position = {v: i for i, v in enumerate(keep)}
        kept = tuple(tuple(position[u] for u in e) for e in self.edges if all(u in position for u in e))
        return Hypergraph(len(keep), self.r, kept)

    def edge_bitmask(self) -> int:
        """Bitset over colex positions of the edges (r = 3)"""
        bits = 0
        for e in self.edges:
            bits |= 1 << colex_index(e)
        return bits

    def __str__(self) -> str:
        return f"Hypergraph(n={self.n}, r={self.r}, m={self.m})"


@dataclass(frozen=True)
class PairSet:
    """Every (r-1)-set with positive co-degree, with its co-degree (E⁺)"""
    pairs: Tuple[Tuple[Edge, int], ...]

    def __len__(self) -> int:
        return len(self.pairs)

    def __iter__(self) -> Iterator[Tuple[Edge, int]]:
        return iter(self.pairs)

    def total(self) -> int:
        return sum(d for _, d in self.pairs)

    def as_dict(self) -> Dict[Edge, int]:
        return dict(self.pairs)


@dataclass(frozen=True)
class Partition:
    """Labeled vertex classes; class order is significant for one-way mode"""
    classes: Tuple[FrozenSet[int], ...]

    @classmethod
    def of(cls, classes: Iterable[Iterable[int]]) -> "Partition":
        return cls(tuple(frozenset(c) for c in classes))

    @classmethod
    def from_labels(cls, labels: Sequence[int], k: Optional[int] = None) -> "Partition":
        count = k if k is not None else (max(labels) + 1 if labels else 0)
        buckets: List[set] = [set() for _ in range(count)]
        for v, label in enumerate(labels):
            buckets[label].add(v)
        return cls.of(buckets)

    @property
    def sizes(self) -> Tuple[int, ...]:
        return tuple(len(c) for c in self.classes)

    def labels(self, n: int) -> List[int]:
        out = [-1] * n
        for i, cls in enumerate(self.classes):
            for v in cls:
                out[v] = i
        return out

    def validate(self, n: int, allow_empty: bool = False) -> None:
        seen: set = set()
        for i, cls in enumerate(self.classes):
            if not cls and not allow_empty:
                raise HypergraphError(f"partition class {i} is empty")
            if seen & cls:
                raise HypergraphError(f"partition class {i} overlaps an earlier class")
            seen |= cls
        if seen != set(range(n)):
            missing = sorted(set(range(n)) - seen)
            extra = sorted(seen - set(range(n)))
            raise HypergraphError(f"partition does not cover 0..{n - 1} (missing {missing}, extra {extra})")

    def to_list(self) -> List[List[int]]:
        return [sorted(c) for c in self.classes]


def make_hypergraph(n: int, r: int = 3, edges: Iterable[Iterable[int]] = ()) -> Hypergraph:
    """
    Build a normalized hypergraph

    Args:
        n: Vertex count (vertices are 0..n-1)
        r: Uniformity
        edges: Iterable of r-sets of vertices

    Returns:
        Hypergraph with sorted, deduplicated edges and caches built
    """
    return Hypergraph(n, r, tuple(tuple(e) for e in edges))


def _require_r3(H: Hypergraph, op: str) -> None:
    if H.r != 3:
        raise HypergraphError(f"{op} requires a 3-graph, got r={H.r}")


def _check_set(H: Hypergraph, S: Iterable[int], size: Optional[int] = None) -> Edge:
    vertices = tuple(sorted(S))
    if len(set(vertices)) != len(vertices):
        raise HypergraphError(f"repeated vertex in {vertices}")
    if size is not None and len(vertices) != size:
        raise HypergraphError(f"expected {size} vertices, got {len(vertices)}")
    for v in vertices:
        if not 0 <= v < H.n:
            raise HypergraphError(f"vertex {v} outside 0..{H.n - 1}")
    return vertices


def codegree(H: Hypergraph, S: Iterable[int]) -> int:
    """Number of edges containing the (r-1)-set S"""
    key = _check_set(H, S, H.r - 1)
    return H._codegrees.get(key, 0)


def min_positive_codegree(H: Hypergraph) -> int:
    """δ⁺_{r-1}(H): minimum co-degree over (r-1)-sets lying in some edge"""
    if not H.edges:
        raise UndefinedError("minimum positive co-degree is undefined for a graph with no edges")
    return min(H._codegrees.values())


def min_codegree(H: Hypergraph) -> int:
    """δ_{r-1}(H): minimum co-degree over all (r-1)-sets"""
    if H.n < H.r - 1:
        raise HypergraphError(f"need n >= {H.r - 1} for (r-1)-sets, got n={H.n}")
    if len(H._codegrees) < comb(H.n, H.r - 1):
        return 0
    return min(H._codegrees.values())


def max_codegree(H: Hypergraph) -> int:
    return max(H._codegrees.values(), default=0)


def neighborhood(H: Hypergraph, u: int, v: int) -> int:
    """Bitset of w with {u,v,w} an edge"""
    _require_r3(H, "neighborhood")
    if u == v:
        raise HypergraphError(f"neighborhood needs two distinct vertices, got {u} twice")
    _check_set(H, (u, v))
    return H.nbhd(u, v)


def positive_pairs(H: Hypergraph) -> PairSet:
    """E⁺ with co-degrees, sorted by pair"""
    _require_r3(H, "positive_pairs")
    return PairSet(tuple(sorted(H._codegrees.items())))


def is_independent(H: Hypergraph, S: Iterable[int]) -> bool:
    """True iff no edge lies entirely inside S"""
    members = set(_check_set(H, S))
    return not any(all(v in members for v in e) for e in H.edges)


def is_strongly_independent(H: Hypergraph, S: Iterable[int]) -> bool:
    """True iff every (r-1)-subset of S has co-degree 0"""
    members = set(_check_set(H, S))
    return not any(all(v in members for v in sub) for sub in H._codegrees)


def shadow_adjacency(H: Hypergraph) -> List[int]:
    """Per vertex, the bitset of vertices sharing at least one edge with it"""
    adj = [0] * H.n
    for e in H.edges:
        bits = bitset_of(e)
        for v in e:
            adj[v] |= bits
    return [adj[v] & ~(1 << v) for v in range(H.n)]


def check_partition(H: Hypergraph, P: Partition, mode: str = MODE_K_PARTITE) -> bool:
    """
    Check that H is k-partite / one-way bipartite with respect to P

    Args:
        H: Hypergraph
        P: Partition of V(H); in one-way mode classes are (X, Y)
        mode: "k-partite" or "one-way-bipartite"
    """
    P.validate(H.n, allow_empty=(mode == MODE_K_PARTITE))
    labels = P.labels(H.n)
    if mode == MODE_K_PARTITE:
        return all(len({labels[v] for v in e}) == H.r for e in H.edges)
    if mode == MODE_ONE_WAY:
        if len(P.classes) != 2:
            raise HypergraphError(f"one-way bipartite mode needs exactly 2 classes, got {len(P.classes)}")
        _require_r3(H, "one-way bipartite check")
        return all(sum(1 for v in e if labels[v] == 0) == 2 for e in H.edges)
    raise HypergraphError(f"unknown partition mode {mode!r}")


def find_k_partition(H: Hypergraph, k: int, cap: int = PARTITION_SEARCH_CAP) -> Optional[Partition]:
    """
    Exhaustive search for a k-partition making every edge transversal.

    An edge is transversal iff its vertices are pairwise in distinct
    classes, so this is a proper k-colouring of the shadow graph. Vertex i
    may only open the next unused class (first-class symmetry pruning).
    Classes may come back empty when fewer than k are needed.
    """
    if H.n > cap:
        raise InfeasibleError(f"find_k_partition is limited to n <= {cap}, got n={H.n}")
    if k < 1:
        return None
    adj = shadow_adjacency(H)
    labels = [-1] * H.n

    def extend(v: int, used: int) -> bool:
        if v == H.n:
            return True
        blocked = {labels[u] for u in vertices_of(adj[v]) if labels[u] >= 0}
        for label in range(min(used + 1, k)):
            if label in blocked:
                continue
            labels[v] = label
            if extend(v + 1, max(used, label + 1)):
                return True
        labels[v] = -1
        return False

    if not extend(0, 0):
        return None
    return Partition.from_labels(labels, k)


def twin_classes(H: Hypergraph) -> List[List[int]]:
    """
    Group vertices whose transposition is an automorphism of H (r = 3).

    u and v are twins iff for every other w, N(u,w) equals N(v,w) once the
    bits of u and v are swapped. The relation is an equivalence.
    """
    _require_r3(H, "twin_classes")
    n = H.n
    classes: List[List[int]] = []
    for v in range(n):
        for cls in classes:
            if _are_twins(H, cls[0], v):
                cls.append(v)
                break
        else:
            classes.append([v])
    return classes


def _swap_bits(bits: int, u: int, v: int) -> int:
    if (bits >> u & 1) != (bits >> v & 1):
        bits ^= (1 << u) | (1 << v)
    return bits


def _are_twins(H: Hypergraph, u: int, v: int) -> bool:
    if H.degree(u) != H.degree(v):
        return False
    for w in range(H.n):
        if w == u or w == v:
            continue
        if _swap_bits(H.nbhd(u, w), u, v) != H.nbhd(v, w):
            return False
    return True


def maximal_independent_sets_greedy(H: Hypergraph) -> List[FrozenSet[int]]:
    """One greedy maximal independent set per start vertex, deduplicated"""
    found = []
    seen = set()
    for start in range(H.n):
        members: set = set()
        for step in range(H.n):
            v = (start + step) % H.n
            if all(not all(u in members or u == v for u in e) for e in H.incident(v)):
                members.add(v)
        key = frozenset(members)
        if key not in seen:
            seen.add(key)
            found.append(key)
    return found
