"""
Lower-bound constructions, parameterized by size
"""

from decimal import Decimal, InvalidOperation
from fractions import Fraction
from itertools import combinations, product
from typing import Any, Callable, Dict, Iterable, List, Sequence, Tuple, Union

from .catalog import get, j_k, complete_graph, complete_multipartite
from .core import Hypergraph, make_hypergraph
from .errors import CircleConfigurationError, HypergraphError, UnknownGraphError

MICRO = 10**6
FULL_TURN = 360 * MICRO
HALF_TURN = 180 * MICRO

Angle = Union[int, float, str, Fraction, Decimal]


def blow_up(H: Hypergraph, sizes: Sequence[int]) -> Hypergraph:
    """
    Replace vertex i by a class of sizes[i] vertices (consecutive ranges);
    edges are all transversal r-sets of edges of H. Size 0 deletes a vertex.
    """
    if len(sizes) != H.n:
        raise HypergraphError(f"need one class size per vertex ({H.n}), got {len(sizes)}")
    if any(s < 0 for s in sizes):
        raise HypergraphError(f"class sizes must be >= 0, got {list(sizes)}")
    offsets = []
    total = 0
    for s in sizes:
        offsets.append(total)
        total += s
    classes = [range(offsets[i], offsets[i] + sizes[i]) for i in range(H.n)]
    edges = [pick for e in H.edges for pick in product(*(classes[v] for v in e))]
    return make_hypergraph(total, H.r, edges)


def balanced_sizes(n: int, k: int) -> List[int]:
    """k sizes summing to n, differing by at most 1, larger classes first"""
    base, extra = divmod(n, k)
    return [base + 1 if i < extra else base for i in range(k)]


def balanced_complete_k_partite(n: int, k: int) -> Hypergraph:
    if k < 3:
        raise HypergraphError(f"need k >= 3 classes, got {k}")
    if n < k:
        raise HypergraphError(f"need n >= k, got n={n}, k={k}")
    return complete_multipartite(balanced_sizes(n, k))


def _micro_degrees(angle: Angle) -> int:
    if isinstance(angle, Fraction):
        value = angle
    else:
        try:
            value = Fraction(Decimal(str(angle)))
        except (InvalidOperation, ValueError, OverflowError):
            raise HypergraphError(f"not an angle: {angle!r}")
    scaled = value * MICRO
    if scaled.denominator != 1:
        raise HypergraphError(f"angle not on the 10^-6 degree grid: {angle!r}")
    return scaled.numerator % FULL_TURN


def circle_construction(angles: Sequence[Angle]) -> Hypergraph:
    """
    Points on the unit circle at the given angles (degrees); a triple is an
    edge iff its triangle contains the origin, i.e. all three circular gaps
    between its points are below 180 degrees. Angles must be exact multiples
    of 10^-6 degrees and are compared as integers.
    """
    positions = [_micro_degrees(a) for a in angles]
    for i, j in combinations(range(len(positions)), 2):
        diff = (positions[i] - positions[j]) % FULL_TURN
        if diff == 0:
            raise CircleConfigurationError("duplicate points", (i, j))
        if diff == HALF_TURN:
            raise CircleConfigurationError("antipodal points", (i, j))

    edges = []
    for triple in combinations(range(len(positions)), 3):
        p1, p2, p3 = sorted(positions[v] for v in triple)
        gaps = (p2 - p1, p3 - p2, FULL_TURN - (p3 - p1))
        if all(g < HALF_TURN for g in gaps):
            edges.append(triple)
    return make_hypergraph(len(positions), 3, edges)


def circle_from_signs(signs: Sequence[int]) -> Hypergraph:
    """
    Circle construction with point i at direction 10i+1 degrees, flipped to
    the antipode when signs[i] is set. Every combinatorial type of circle
    construction on len(signs) points arises this way up to relabeling.
    """
    if len(signs) > 17:
        raise HypergraphError("sign patterns are limited to 17 points")
    return circle_construction([10 * i + 1 + (180 if s else 0) for i, s in enumerate(signs)])


def regular_polygon_angles(count: int, offset: Angle = 0) -> List[Fraction]:
    """count equally spaced directions, each rounded down to the 10^-6 degree grid"""
    base = _micro_degrees(offset)
    return [Fraction(base + FULL_TURN * i // count, MICRO) for i in range(count)]


def one_way_bipartite_complete(x_size: int, y_size: int) -> Hypergraph:
    """All {x1, x2, y} with X = 0..x_size-1 and Y the remaining vertices"""
    if x_size < 2 or y_size < 1:
        raise HypergraphError(f"need |X| >= 2 and |Y| >= 1, got ({x_size}, {y_size})")
    n = x_size + y_size
    edges = [(a, b, y) for a, b in combinations(range(x_size), 2) for y in range(x_size, n)]
    return make_hypergraph(n, 3, edges)


def one_way_bipartite_balanced(n: int) -> Hypergraph:
    """Complete one-way bipartite with |X| = ceil(n/2), |Y| = floor(n/2)"""
    if n < 3:
        raise HypergraphError(f"need n >= 3, got {n}")
    return one_way_bipartite_complete((n + 1) // 2, n // 2)


def h6_blow_up_balanced(n: int) -> Hypergraph:
    """Blow-up of H6 with six class sizes as equal as possible"""
    if n < 3:
        raise HypergraphError(f"need n >= 3, got {n}")
    return blow_up(get("H6"), balanced_sizes(n, 6))


def is_prime(q: int) -> bool:
    if q < 2:
        return False
    d = 2
    while d * d <= q:
        if q % d == 0:
            return False
        d += 1
    return True


def _projective_points(q: int) -> List[Tuple[int, int, int]]:
    """Nonzero vectors of GF(q)^3 whose first nonzero coordinate is 1"""
    points = []
    for vec in product(range(q), repeat=3):
        nonzero = [c for c in vec if c]
        if nonzero and nonzero[0] == 1:
            points.append(vec)
    return points


def projective_plane_incidence(q: int) -> List[Tuple[int, int]]:
    """
    Point-line incidences (point index, line index) of PG(2, q) over the
    prime field; q^2+q+1 points and lines, each of degree q+1, and the
    incidence graph is C4-free.
    """
    if not is_prime(q):
        raise HypergraphError(f"q must be prime (extension fields unsupported), got {q}")
    points = _projective_points(q)
    return [
        (i, j)
        for i, p in enumerate(points)
        for j, line in enumerate(points)
        if (p[0] * line[0] + p[1] * line[1] + p[2] * line[2]) % q == 0
    ]


def tripartite_from_bipartite(
    x_size: int, y_size: int, z_size: int, pairs: Iterable[Tuple[int, int]]
) -> Hypergraph:
    """
    X = 0..x_size-1, Y and Z follow; edge {x, y, z} for every x and every
    bipartite edge (y, z) of G given as local indices.
    """
    if x_size < 1:
        raise HypergraphError(f"need |X| >= 1, got {x_size}")
    y0 = x_size
    z0 = x_size + y_size
    edges = []
    for y, z in pairs:
        if not (0 <= y < y_size and 0 <= z < z_size):
            raise HypergraphError(f"bipartite edge ({y}, {z}) outside {y_size}x{z_size}")
        edges.extend((x, y0 + y, z0 + z) for x in range(x_size))
    return make_hypergraph(x_size + y_size + z_size, 3, edges)


def k222_tripartite(q: int, x_size: int) -> Hypergraph:
    """K2,2,2-free tripartite 3-graph from the PG(2, q) incidence graph"""
    side = q * q + q + 1
    return tripartite_from_bipartite(x_size, side, side, projective_plane_incidence(q))


def _sizes_param(sizes: Any) -> List[int]:
    if isinstance(sizes, str):
        return [int(tok) for tok in sizes.replace(",", " ").split()]
    return [int(s) for s in sizes]


# Registry of constructions available by name (CLI `gen`, suites, table);
# perturbation generators are not part of it
CONSTRUCTION_REGISTRY: Dict[str, Callable[..., Hypergraph]] = {
    "k-partite": lambda n, k, **_: balanced_complete_k_partite(n, k),
    "multipartite": lambda sizes, **_: complete_multipartite(_sizes_param(sizes)),
    "h6-blow-up": lambda n=None, sizes=None, **_: (
        blow_up(get("H6"), _sizes_param(sizes)) if sizes is not None else h6_blow_up_balanced(n)
    ),
    "circle": lambda angles=None, n=None, **_: circle_construction(
        [a for a in str(angles).replace(",", " ").split()] if angles is not None else regular_polygon_angles(n)
    ),
    "one-way-bipartite": lambda x=None, y=None, n=None, **_: (
        one_way_bipartite_complete(x, y) if x is not None else one_way_bipartite_balanced(n)
    ),
    "k222": lambda q, x, **_: k222_tripartite(q, x),
    "j_k": lambda k, **_: j_k(k),
    "complete": lambda n, **_: complete_graph(n),
}


def build_construction(name: str, **params) -> Hypergraph:
    """
    Factory for named constructions

    Args:
        name: Registry key ("k-partite", "circle", "k222", ...)
        **params: Construction parameters (None values are dropped)

    Returns:
        The generated hypergraph
    """
    if name not in CONSTRUCTION_REGISTRY:
        raise UnknownGraphError(
            f"Unknown construction: {name}. Available: {list(CONSTRUCTION_REGISTRY.keys())}"
        )
    given = {k: v for k, v in params.items() if v is not None}
    try:
        return CONSTRUCTION_REGISTRY[name](**given)
    except TypeError as e:
        raise HypergraphError(f"bad parameters for {name}: {e}")
