"""Vertex-deletion calculus for the Randić index.

The deletion condition compares, for every non-leaf neighbour ``u`` of ``v``,

    1/(d_u - 1) * sum_{x in N(u) - v} 1/sqrt(d_x - eps(u, x))  <=  2/sqrt(d_v)

where ``eps(u, x)`` is 1 when the neighbourhood edge ``ux`` is oriented
``u -> x``.  Replacing ``d_x - eps`` by the reduced degree gives the weak
condition, which no orientation can violate more.  Either one forces
R(G) > R(G - v).  All comparisons here are exact.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from fractions import Fraction
from typing import Iterable, MutableMapping

from .errors import DomainError, NotAnEdgeError
from .graph import (
    Graph,
    components,
    delete_vertex,
    diameter,
    diameter_in,
    is_connected,
    iter_bits,
)
from .invariants import (
    edge_deletion_delta,
    randic_index,
    subdivision_delta,
)
from .radical import RadicalSum, inv_sqrt, sign, sum_inv_sqrt
from .structure import essential_mask

MAX_SEARCH_EDGES = 20
RULE_SMALL_DEGREE = "deg<=4"
RULE_WEAK = "weak-condition"
RULE_ORIENTED = "oriented-condition"


def reduced_degree(g: Graph, x: int) -> int:
    d = g.degree(x)
    return d - 1 if d >= 2 else d


@dataclass(frozen=True)
class Orientation:
    """Directed copies ``(tail, head)`` of the edges inside N(v)."""

    arcs: frozenset[tuple[int, int]]

    def eps(self, u: int, x: int) -> int:
        return 1 if (u, x) in self.arcs else 0

    @classmethod
    def from_arcs(cls, arcs: Iterable[tuple[int, int]]) -> Orientation:
        return cls(frozenset(arcs))


def neighborhood_edges(g: Graph, v: int) -> list[tuple[int, int]]:
    """Edges of the subgraph induced on the neighbours of ``v``."""
    adj = g.adj
    nbrs = adj[v]
    out = []
    for a in iter_bits(nbrs):
        for b in iter_bits(adj[a] & nbrs & ~((1 << (a + 1)) - 1)):
            out.append((a, b))
    return out


def _neighbor_holds(g: Graph, v: int, u: int, denominators: Counter) -> bool:
    """One neighbour's inequality, with ``denominators`` holding the
    multiset of d_x - eps over x in N(u) - v."""
    du = g.degree(u)
    # 2(d_u - 1)/sqrt(d_v) - sum 1/sqrt(den) >= 0
    weights = Counter({g.degree(v): 2 * (du - 1)})
    for den, count in denominators.items():
        weights[den] -= count
    return sign(sum_inv_sqrt(weights)) >= 0


def weak_deletion_holds(g: Graph, v: int) -> bool:
    if not 0 <= v < g.n:
        raise DomainError(f"vertex {v} outside the graph")
    adj = g.adj
    for u in g.nonleaf_neighbors(v):
        dens = Counter()
        for x in iter_bits(adj[u] & ~(1 << v)):
            dx = adj[x].bit_count()
            dens[dx - 1 if dx >= 2 else dx] += 1
        if not _neighbor_holds(g, v, u, dens):
            return False
    return True


def _check_orientation(g: Graph, v: int, o: Orientation) -> None:
    expected = set(neighborhood_edges(g, v))
    seen = set()
    for tail, head in o.arcs:
        key = (min(tail, head), max(tail, head))
        if key not in expected:
            raise DomainError(f"arc {tail}->{head} is not an edge inside N({v})")
        if key in seen:
            raise DomainError(f"edge {key} is oriented both ways")
        seen.add(key)
    if seen != expected:
        missing = sorted(expected - seen)
        raise DomainError(f"orientation leaves edges unoriented: {missing}")


def deletion_holds(g: Graph, v: int, o: Orientation) -> bool:
    if not 0 <= v < g.n:
        raise DomainError(f"vertex {v} outside the graph")
    _check_orientation(g, v, o)
    adj = g.adj
    for u in g.nonleaf_neighbors(v):
        dens = Counter()
        for x in iter_bits(adj[u] & ~(1 << v)):
            dens[adj[x].bit_count() - o.eps(u, x)] += 1
        if not _neighbor_holds(g, v, u, dens):
            return False
    return True


def heuristic_orientation(g: Graph, v: int) -> Orientation:
    """Every neighbourhood edge leaves its lower-degree end (lower index on ties)."""
    arcs = []
    for a, b in neighborhood_edges(g, v):
        da, db = g.degree(a), g.degree(b)
        arcs.append((a, b) if (da, a) < (db, b) else (b, a))
    return Orientation.from_arcs(arcs)


@dataclass(frozen=True)
class OrientationSearch:
    status: str  # "found", "none" or "unsearched"
    orientation: Orientation | None = None

    @property
    def found(self) -> bool:
        return self.status == "found"


def search_orientation(g: Graph, v: int) -> OrientationSearch:
    """Find an orientation satisfying the deletion condition at ``v``.

    Tries the heuristic orientation first, then a complete backtracking
    search over all 2^E orientations.  Orienting ``u -> x`` only ever tightens
    the inequality at ``u``, so a branch is cut as soon as some tail's
    inequality fails; the search is still exhaustive.
    """
    heur = heuristic_orientation(g, v)
    if weak_deletion_holds(g, v):
        return OrientationSearch("found", heur)
    if deletion_holds(g, v, heur):
        return OrientationSearch("found", heur)
    edges = neighborhood_edges(g, v)
    if len(edges) > MAX_SEARCH_EDGES:
        return OrientationSearch("unsearched")

    adj = g.adj
    dv = g.degree(v)
    slack: dict[int, RadicalSum] = {}
    for u in g.nonleaf_neighbors(v):
        du = adj[u].bit_count()
        weights = Counter({dv: 2 * (du - 1)})
        for x in iter_bits(adj[u] & ~(1 << v)):
            weights[adj[x].bit_count()] -= 1
        s = sum_inv_sqrt(weights)
        if sign(s) < 0:
            return OrientationSearch("none")
        slack[u] = s
    # cost charged to the tail when an edge points at ``head``
    cost = {}
    for a, b in edges:
        for head in (a, b):
            d = adj[head].bit_count()
            cost[head] = inv_sqrt(d - 1) - inv_sqrt(d)
    preferred = {(min(t, h), max(t, h)): t for t, h in heur.arcs}

    chosen: list[tuple[int, int]] = []

    def extend(i: int) -> bool:
        if i == len(edges):
            return True
        a, b = edges[i]
        first = preferred[(a, b)]
        for tail in (first, b if first == a else a):
            head = b if tail == a else a
            before = slack[tail]
            after = before - cost[head]
            if sign(after) < 0:
                continue
            slack[tail] = after
            chosen.append((tail, head))
            if extend(i + 1):
                return True
            chosen.pop()
            slack[tail] = before
        return False

    if not extend(0):
        return OrientationSearch("none")
    found = Orientation.from_arcs(chosen)
    if not deletion_holds(g, v, found):
        raise AssertionError(f"orientation search returned a failing orientation at {v}")
    return OrientationSearch("found", found)


# -- reduction loop ------------------------------------------------------------


class ReductionAborted(RuntimeError):
    """A deletion broke the R-decrease / D-monotonicity contract."""


@dataclass(frozen=True)
class ReductionStep:
    label: int
    rule: str
    r_before: RadicalSum
    r_after: RadicalSum
    d_before: int
    d_after: int
    # vertices discarded because they fell into a smaller component
    dropped: tuple[int, ...] = ()

    def relabel(self, labels) -> ReductionStep:
        return ReductionStep(
            labels[self.label],
            self.rule,
            self.r_before,
            self.r_after,
            self.d_before,
            self.d_after,
            tuple(labels[x] for x in self.dropped),
        )


@dataclass(frozen=True)
class ReductionTrace:
    steps: tuple[ReductionStep, ...]
    labels: tuple[int, ...] = field(default=())  # original names of surviving vertices

    def render(self, digits: int = 6) -> str:
        from .radical import decimal

        lines = []
        for i, s in enumerate(self.steps):
            drop = f" dropped={list(s.dropped)}" if s.dropped else ""
            delta = s.r_before - s.r_after
            lines.append(
                f"step {i}: delete {s.label} rule={s.rule} "
                f"R: {s.r_before} -> {s.r_after} (dR = {delta} ~ {decimal(delta, digits)}) "
                f"D: {s.d_before} -> {s.d_after}{drop}"
            )
        return "\n".join(lines)


def _pick(g: Graph) -> tuple[int, str] | None:
    if g.n < 2:
        return None
    ess = essential_mask(g)
    deg = g.degrees()
    # smallest degree first, then smallest label; labels keep their order
    candidates = sorted((deg[v], v) for v in range(g.n) if not ess >> v & 1 and deg[v] <= 8)
    for d, v in candidates:
        if d <= 4:
            return v, RULE_SMALL_DEGREE
        if weak_deletion_holds(g, v):
            return v, RULE_WEAK
        if search_orientation(g, v).found:
            return v, RULE_ORIENTED
    return None


@lru_cache(maxsize=1 << 16)
def _stats(n: int, adj: tuple[int, ...]) -> tuple[RadicalSum, int]:
    g = Graph(n, adj, check=False)
    return randic_index(g), diameter(g)


def _step(g: Graph, v: int, rule: str):
    h = delete_vertex(g, v)
    kept = [w for w in range(g.n) if w != v]
    dropped: list[int] = []
    if not is_connected(h):
        comps = components(h)
        full = (1 << h.n) - 1
        best = max(comps, key=lambda c: (diameter_in(h.adj, c), -(c & -c)))
        for c in comps:
            if c != best:
                dropped.extend(kept[i] for i in iter_bits(c))
        keep_idx = list(iter_bits(best & full))
        h = h.induced(keep_idx)
        kept = [kept[i] for i in keep_idx]
    r_before, d_before = _stats(g.n, g.adj)
    r_after, d_after = _stats(h.n, h.adj)
    if sign(r_before - r_after) != 1 or d_after < d_before:
        raise ReductionAborted(
            f"deleting vertex {v} ({rule}) gave R {r_before} -> {r_after}, D {d_before} -> {d_after}"
        )
    step = ReductionStep(v, rule, r_before, r_after, d_before, d_after, tuple(sorted(dropped)))
    return h, kept, step


def _reduce(g: Graph, memo, memo_limit: int):
    key = (g.n, g.adj)
    if memo is not None:
        hit = memo.get(key)
        if hit is not None:
            return hit
    choice = _pick(g)
    if choice is None:
        result = (g, (), tuple(range(g.n)))
    else:
        h, kept, first = _step(g, *choice)
        final, tail, survivors = _reduce(h, memo, memo_limit)
        result = (
            final,
            (first,) + tuple(s.relabel(kept) for s in tail),
            tuple(kept[i] for i in survivors),
        )
    if memo is not None and g.n <= memo_limit:
        memo[key] = result
    return result


def reduce_to_core(
    g: Graph,
    memo: MutableMapping | None = None,
    memo_limit: int = 6,
) -> tuple[Graph, ReductionTrace]:
    """Delete qualifying non-essential vertices until none is left.

    A non-essential vertex qualifies when its degree is at most 4, or at most
    8 and it passes the weak or an oriented deletion condition.  Candidates
    are tried by (degree, label).  If a deletion disconnects the graph, the
    component of largest diameter is kept (lowest label on ties).  Each step
    re-verifies R strictly drops and D does not, and raises
    :class:`ReductionAborted` otherwise.

    ``memo`` caches results per labelled graph on at most ``memo_limit``
    vertices; the process is label-order deterministic, so the cache is exact.
    """
    if g.n < 1 or not is_connected(g):
        raise DomainError("reduce_to_core needs a connected graph")
    final, steps, survivors = _reduce(g, memo, memo_limit)
    return final, ReductionTrace(steps, survivors)


def low_degree_nonessential(g: Graph, bound: int = 8) -> list[int]:
    """Non-essential vertices of degree at most ``bound``."""
    if g.n < 2:
        return []
    ess = essential_mask(g)
    return [v for v in range(g.n) if not ess >> v & 1 and g.degree(v) <= bound]


# -- edge calculus -------------------------------------------------------------


def edge_deletion_gap(g: Graph, u: int, v: int) -> RadicalSum:
    """R(G) - R(G - uv) for a non-leaf edge (both ends of degree >= 2)."""
    if not g.has_edge(u, v):
        raise NotAnEdgeError(f"({u}, {v}) is not an edge")
    if g.degree(u) < 2 or g.degree(v) < 2:
        raise DomainError(f"({u}, {v}) is a leaf edge")
    return edge_deletion_delta(g, u, v)


@dataclass(frozen=True)
class SubdivisionVerdict:
    case: str  # "equal", "less", "greater" or "uncovered"
    delta: RadicalSum  # R(G_{u.v}) - R(G) - 1/2

    @property
    def consistent(self) -> bool:
        expected = {"equal": 0, "less": -1, "greater": 1}.get(self.case)
        return expected is None or sign(self.delta) == expected


def subdivision_case(g: Graph, u: int, v: int) -> SubdivisionVerdict:
    """Classify the edge by its end degrees and measure the exact change of
    R under subdivision, offset by 1/2."""
    if not g.has_edge(u, v):
        raise NotAnEdgeError(f"({u}, {v}) is not an edge")
    du, dv = g.degree(u), g.degree(v)
    if du == 2 or dv == 2:
        case = "equal"
    elif du > 2 and dv > 2:
        case = "less"
    elif (du == 1 and dv > 2) or (du > 2 and dv == 1):
        case = "greater"
    else:
        case = "uncovered"  # both ends are leaves: an isolated K2
    delta = subdivision_delta(g, u, v) - Fraction(1, 2)
    return SubdivisionVerdict(case, delta)


# -- gluing at a cut vertex ------------------------------------------------------


@dataclass(frozen=True)
class AttachResult:
    premise_failures: tuple[str, ...]
    glued: Graph | None = None
    margin: RadicalSum | None = None  # R(G) - R(G1)

    @property
    def verdict(self) -> int | None:
        return None if self.margin is None else sign(self.margin)


def glue(g1: Graph, g2: Graph, u1: int, u2: int) -> Graph:
    """Identify vertex ``u1`` of ``g1`` with vertex ``u2`` of ``g2``.

    ``g1`` keeps its labels; the other vertices of ``g2`` follow in order.
    """
    others = [w for w in range(g2.n) if w != u2]
    index = {w: g1.n + i for i, w in enumerate(others)}
    index[u2] = u1
    edges = list(g1.edges())
    edges.extend((index[a], index[b]) for a, b in g2.edges())
    return Graph.from_edges(g1.n + len(others), edges)


def attach_check(g1: Graph, g2: Graph, u1: int, u2: int) -> AttachResult:
    """Glue ``g1`` and ``g2`` at one vertex and report sign(R(G) - R(G1)).

    Premises: ``|G2| >= 8``, the shared vertex has exactly two neighbours in
    ``g1`` and attains the minimum degree of ``g2``.
    """
    failures = []
    if not (0 <= u1 < g1.n and 0 <= u2 < g2.n):
        failures.append("vertex-range")
    else:
        if g2.n < 8:
            failures.append("size")
        if g1.degree(u1) != 2:
            failures.append("two-neighbours")
        if g2.degree(u2) != g2.min_degree():
            failures.append("minimum-degree")
        if g1.n + g2.n - 1 > 62:
            failures.append("vertex-cap")
    if failures:
        return AttachResult(tuple(failures))
    glued = glue(g1, g2, u1, u2)
    return AttachResult((), glued, randic_index(glued) - randic_index(g1))
