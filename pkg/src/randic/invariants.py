"""Randić index, the diameter-coupled functional f = R - D/2, and closed-form
bounds on them.  Every value is an exact :class:`RadicalSum`."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import DomainError, NotAnEdgeError
from .graph import (
    Graph,
    delete_edge,
    delete_vertex,
    diameter,
    is_connected,
    iter_bits,
)
from .radical import RadicalSum, sqrt_int, sum_inv_sqrt, sum_sqrt

SQRT2_MINUS_1 = sqrt_int(2) - 1


def degree_pair_key(g: Graph) -> tuple[tuple[int, int], ...]:
    """Sorted ``(d_u * d_v, count)`` pairs over all edges.

    R(G) depends on nothing else, so this is a sound cache key.
    """
    adj = g.adj
    deg = [row.bit_count() for row in adj]
    products: dict[int, int] = {}
    for v in range(g.n):
        dv = deg[v]
        lower = adj[v] & ((1 << v) - 1)
        while lower:
            low = lower & -lower
            key = dv * deg[low.bit_length() - 1]
            products[key] = products.get(key, 0) + 1
            lower ^= low
    return tuple(sorted(products.items()))


@lru_cache(maxsize=1 << 17)
def randic_from_key(key: tuple[tuple[int, int], ...]) -> RadicalSum:
    return sum_inv_sqrt(dict(key))


def randic_index(g: Graph) -> RadicalSum:
    """Sum of 1/sqrt(d_u d_v) over the edges of ``g``."""
    return randic_from_key(degree_pair_key(g))


def _local_weights(adj, touched: int, sign: int, acc: Counter) -> None:
    """Add ``sign`` under key d_u*d_v for every edge with an endpoint in
    ``touched``."""
    for v in iter_bits(touched):
        dv = adj[v].bit_count()
        for u in iter_bits(adj[v]):
            # an edge between two touched vertices is counted from its larger end
            if touched >> u & 1 and u < v:
                continue
            acc[dv * adj[u].bit_count()] += sign


def local_randic(g: Graph, touched: int) -> RadicalSum:
    """Randić weight of the edges of ``g`` meeting the vertex mask ``touched``."""
    acc: Counter[int] = Counter()
    _local_weights(g.adj, touched, 1, acc)
    return sum_inv_sqrt(acc)


def local_change(before: Graph, touched_before: int, after: Graph, touched_after: int) -> RadicalSum:
    """R(before) - R(after) when the two graphs agree (up to a fixed
    relabelling) on every edge that misses the touched vertex masks."""
    acc: Counter[int] = Counter()
    _local_weights(before.adj, touched_before, 1, acc)
    _local_weights(after.adj, touched_after, -1, acc)
    return sum_inv_sqrt(acc)


def _drop_bit(mask: int, v: int) -> int:
    return (mask & ((1 << v) - 1)) | (mask >> (v + 1) << v)


def vertex_deletion_delta(g: Graph, v: int) -> RadicalSum:
    """R(G) - R(G - v); only edges at N[v] change weight."""
    h = delete_vertex(g, v)
    nbrs = g.adj[v]
    return local_change(g, nbrs | 1 << v, h, _drop_bit(nbrs, v))


def edge_deletion_delta(g: Graph, u: int, v: int) -> RadicalSum:
    """R(G) - R(G - uv); only edges at u and v change weight."""
    h = delete_edge(g, u, v)
    touched = 1 << u | 1 << v
    return local_change(g, touched, h, touched)


def subdivision_delta(g: Graph, u: int, v: int) -> RadicalSum:
    """R(G_{u.v}) - R(G) where the new vertex sits between u and v.

    The ends keep their degrees, so only the edge uv itself is replaced.
    """
    if not g.has_edge(u, v):
        raise NotAnEdgeError(f"({u}, {v}) is not an edge")
    du, dv = g.degree(u), g.degree(v)
    weights: Counter[int] = Counter({2 * du: 1})
    weights[2 * dv] += 1
    weights[du * dv] -= 1
    return sum_inv_sqrt(weights)


def _require_connected(g: Graph, what: str) -> None:
    if g.n < 1 or not is_connected(g):
        raise DomainError(f"{what} needs a connected graph")


def degree_sum_lower_bound(g: Graph) -> RadicalSum:
    """(sum_i sqrt(d_i)) / (2 sqrt(Delta)) for a connected graph with an edge."""
    _require_connected(g, "degree_sum_lower_bound")
    if g.m == 0:
        raise DomainError("degree_sum_lower_bound needs at least one edge")
    top = g.max_degree()
    # sqrt(d)/sqrt(D) = sqrt(d*D)/D
    counts = Counter(d * top for d in g.degrees())
    return sum_sqrt(counts).scale(Fraction(1, 2 * top))


def f_value(g: Graph) -> RadicalSum:
    """R(G) - D(G)/2 for connected ``g``."""
    _require_connected(g, "f_value")
    return randic_index(g) - Fraction(diameter(g), 2)


def corollary_gaps(g: Graph) -> tuple[RadicalSum, RadicalSum]:
    """Slack in both conjectured bounds, each nonnegative iff the bound holds.

    ``gap1 = R - D - (sqrt2 - (n+1)/2)`` and, for the ratio bound cleared of
    denominators, ``gap2 = (2n-2) R - (n - 3 + 2 sqrt2) D``.
    """
    _require_connected(g, "corollary_gaps")
    if g.n < 3:
        raise DomainError("corollary_gaps needs at least three vertices")
    return _gaps(g.n, randic_index(g), diameter(g))


def _gaps(n: int, r: RadicalSum, d: int) -> tuple[RadicalSum, RadicalSum]:
    gap1 = r - d - sqrt_int(2) + Fraction(n + 1, 2)
    gap2 = r.scale(2 * n - 2) - (n - 3) * d - sqrt_int(2).scale(2 * d)
    return gap1, gap2


def star_bound_gap(g: Graph) -> RadicalSum:
    """R(G) - sqrt(n - 1); nonnegative on connected graphs, zero on stars."""
    return randic_index(g) - sqrt_int(max(g.n - 1, 0))


def is_path_graph(g: Graph) -> bool:
    """Structural path test: connected with degrees {1, 1, 2, ..., 2}."""
    if g.n <= 1:
        return g.n == 1
    if g.m != g.n - 1:
        return False
    degs = g.degrees()
    if degs.count(1) != 2 or degs.count(2) != g.n - 2:
        return False
    return is_connected(g)


@dataclass(frozen=True)
class InvariantBundle:
    R: RadicalSum
    D: int
    f: RadicalSum
    n: int
    m: int
    max_degree: int
    min_degree: int


def invariant_bundle(g: Graph) -> InvariantBundle:
    _require_connected(g, "invariant_bundle")
    r = randic_index(g)
    d = diameter(g)
    return InvariantBundle(
        R=r,
        D=d,
        f=r - Fraction(d, 2),
        n=g.n,
        m=g.m,
        max_degree=g.max_degree(),
        min_degree=g.min_degree(),
    )
