"""Simple undirected graphs on at most 62 vertices, stored as bitset rows.

Vertex ``v`` owns the integer ``adj[v]`` whose bit ``u`` is set exactly when
``uv`` is an edge.  Graphs are immutable; every surgery returns a new graph.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import (
    GraphFormatError,
    NotAnEdgeError,
    UnsupportedSizeError,
    VertexRangeError,
)

MAX_VERTICES = 62
UNREACHABLE = -1


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the indices of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Graph:
    __slots__ = ("n", "adj", "m")

    def __init__(self, n: int, adj: Sequence[int], m: int | None = None, *, check: bool = True):
        adj = tuple(adj)
        if check:
            if not 0 <= n <= MAX_VERTICES:
                raise UnsupportedSizeError(f"{n} vertices (limit is {MAX_VERTICES})")
            if len(adj) != n:
                raise ValueError(f"expected {n} adjacency rows, got {len(adj)}")
            full = (1 << n) - 1
            for v, row in enumerate(adj):
                if row & ~full or row < 0:
                    raise VertexRangeError(f"row {v} names a vertex outside 0..{n - 1}")
                if row >> v & 1:
                    raise ValueError(f"self-loop at vertex {v}")
                for u in iter_bits(row):
                    if not adj[u] >> v & 1:
                        raise ValueError(f"adjacency is not symmetric at ({v}, {u})")
        if m is None:
            m = sum(row.bit_count() for row in adj) // 2
        self.n = n
        self.adj = adj
        self.m = m

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        if not 0 <= n <= MAX_VERTICES:
            raise UnsupportedSizeError(f"{n} vertices (limit is {MAX_VERTICES})")
        rows = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise VertexRangeError(f"edge ({u}, {v}) outside 0..{n - 1}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, rows, check=False)

    # -- accessors ---------------------------------------------------------

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.adj]

    def neighbors(self, v: int) -> list[int]:
        """Gamma(v): the neighbours of ``v``."""
        return list(iter_bits(self.adj[v]))

    def nonleaf_neighbors(self, v: int) -> list[int]:
        """Gamma*(v): neighbours of ``v`` whose degree is at least 2."""
        adj = self.adj
        return [u for u in iter_bits(adj[v]) if adj[u].bit_count() >= 2]

    def closed_neighborhood(self, v: int) -> list[int]:
        return list(iter_bits(self.adj[v] | 1 << v))

    def has_edge(self, u: int, v: int) -> bool:
        return 0 <= u < self.n and 0 <= v < self.n and bool(self.adj[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        """All edges as ``(u, v)`` with ``u < v``, sorted."""
        out = []
        for v, row in enumerate(self.adj):
            for u in iter_bits(row & ((1 << v) - 1)):
                out.append((u, v))
        out.sort()
        return out

    def max_degree(self) -> int:
        return max((row.bit_count() for row in self.adj), default=0)

    def min_degree(self) -> int:
        return min((row.bit_count() for row in self.adj), default=0)

    def relabel(self, perm: Sequence[int]) -> Graph:
        """Graph with vertex ``v`` renamed to ``perm[v]``."""
        rows = [0] * self.n
        for v, row in enumerate(self.adj):
            new = 0
            for u in iter_bits(row):
                new |= 1 << perm[u]
            rows[perm[v]] = new
        return Graph(self.n, rows, self.m, check=False)

    def induced(self, vertices: Iterable[int]) -> Graph:
        """Induced subgraph on ``vertices``, renumbered in increasing order."""
        keep = sorted(set(vertices))
        index = {v: i for i, v in enumerate(keep)}
        rows = []
        for v in keep:
            row = 0
            for u in iter_bits(self.adj[v]):
                i = index.get(u)
                if i is not None:
                    row |= 1 << i
            rows.append(row)
        return Graph(len(keep), rows, check=False)

    # -- dunder ------------------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.adj == other.adj

    def __hash__(self):
        return hash((self.n, self.adj))

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m}, graph6={to_graph6(self)!r})"


@dataclass(frozen=True)
class DistanceTable:
    """All-pairs hop counts; ``UNREACHABLE`` marks pairs in different components."""

    dist: tuple[tuple[int, ...], ...]

    def __call__(self, u: int, v: int) -> int:
        return self.dist[u][v]

    @property
    def n(self) -> int:
        return len(self.dist)


# -- breadth-first search on bitsets --------------------------------------


def eccentricity_in(adj: Sequence[int], src: int, alive: int) -> tuple[int, int]:
    """BFS from ``src`` restricted to vertices in ``alive``.

    Returns ``(eccentricity, reached_mask)``.
    """
    seen = 1 << src
    frontier = seen
    ecc = -1
    while frontier:
        ecc += 1
        nxt = 0
        while frontier:
            low = frontier & -frontier
            nxt |= adj[low.bit_length() - 1]
            frontier ^= low
        frontier = nxt & alive & ~seen
        seen |= frontier
    return ecc, seen


def diameter_in(adj: Sequence[int], alive: int) -> int:
    """Largest component diameter of the subgraph induced on ``alive``.

    Returns -1 for an empty vertex set.
    """
    best = -1
    rest = alive
    while rest:
        low = rest & -rest
        ecc, _ = eccentricity_in(adj, low.bit_length() - 1, alive)
        if ecc > best:
            best = ecc
        rest ^= low
    return best


def _full(n: int) -> int:
    return (1 << n) - 1


def distances(g: Graph) -> DistanceTable:
    adj = g.adj
    n = g.n
    rows = []
    for src in range(n):
        row = [UNREACHABLE] * n
        row[src] = 0
        seen = 1 << src
        frontier = seen
        level = 0
        while frontier:
            level += 1
            nxt = 0
            while frontier:
                low = frontier & -frontier
                nxt |= adj[low.bit_length() - 1]
                frontier ^= low
            frontier = nxt & ~seen
            seen |= frontier
            fresh = frontier
            while fresh:
                low = fresh & -fresh
                row[low.bit_length() - 1] = level
                fresh ^= low
        rows.append(tuple(row))
    return DistanceTable(tuple(rows))


def diameter(g: Graph) -> int:
    """Diameter, taken as the largest component diameter when disconnected."""
    if g.n < 1:
        raise ValueError("diameter of the empty graph is undefined")
    return diameter_in(g.adj, _full(g.n))


def components(g: Graph) -> list[int]:
    """Connected components as vertex bitmasks, ordered by smallest vertex."""
    full = _full(g.n)
    rest = full
    out = []
    while rest:
        low = rest & -rest
        _, reached = eccentricity_in(g.adj, low.bit_length() - 1, full)
        out.append(reached)
        rest &= ~reached
    return out


def is_connected(g: Graph) -> bool:
    if g.n <= 1:
        return True
    full = _full(g.n)
    _, reached = eccentricity_in(g.adj, 0, full)
    return reached == full


def _require_edge(g: Graph, u: int, v: int) -> None:
    if not g.has_edge(u, v):
        raise NotAnEdgeError(f"({u}, {v}) is not an edge")


def is_cut_edge(g: Graph, u: int, v: int) -> bool:
    _require_edge(g, u, v)
    adj = list(g.adj)
    adj[u] &= ~(1 << v)
    adj[v] &= ~(1 << u)
    _, reached = eccentricity_in(adj, u, _full(g.n))
    return not reached >> v & 1


# -- surgeries -------------------------------------------------------------


def _drop_bit(row: int, v: int) -> int:
    return (row & ((1 << v) - 1)) | (row >> (v + 1) << v)


def delete_vertex(g: Graph, v: int) -> Graph:
    """G - v, with vertices above ``v`` shifted down by one."""
    if not 0 <= v < g.n:
        raise VertexRangeError(f"vertex {v} outside 0..{g.n - 1}")
    rows = [_drop_bit(row, v) for w, row in enumerate(g.adj) if w != v]
    return Graph(g.n - 1, rows, g.m - g.degree(v), check=False)


def delete_edge(g: Graph, u: int, v: int) -> Graph:
    _require_edge(g, u, v)
    adj = list(g.adj)
    adj[u] &= ~(1 << v)
    adj[v] &= ~(1 << u)
    return Graph(g.n, adj, g.m - 1, check=False)


def subdivide_edge(g: Graph, u: int, v: int) -> Graph:
    """Replace edge ``uv`` by the path ``u - w - v`` where ``w`` is vertex ``n``."""
    _require_edge(g, u, v)
    if g.n >= MAX_VERTICES:
        raise UnsupportedSizeError(f"subdividing would need {g.n + 1} vertices")
    w = g.n
    adj = list(g.adj)
    adj[u] = (adj[u] & ~(1 << v)) | 1 << w
    adj[v] = (adj[v] & ~(1 << u)) | 1 << w
    adj.append(1 << u | 1 << v)
    return Graph(g.n + 1, adj, g.m + 1, check=False)


def disjoint_union(g: Graph, h: Graph) -> Graph:
    if g.n + h.n > MAX_VERTICES:
        raise UnsupportedSizeError(f"{g.n + h.n} vertices (limit is {MAX_VERTICES})")
    shift = g.n
    return Graph(g.n + h.n, g.adj + tuple(row << shift for row in h.adj), g.m + h.m, check=False)


# -- graph6 ----------------------------------------------------------------


def parse_graph6(text: str) -> Graph:
    """Decode one graph6 line (single-byte size form, n <= 62)."""
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise GraphFormatError("empty graph6 string")
    data = s.encode("ascii", errors="replace")
    for pos, byte in enumerate(data):
        if not 63 <= byte <= 126:
            raise GraphFormatError(f"byte {byte!r} at offset {pos} is outside 63..126")
    n = data[0] - 63
    if n > MAX_VERTICES:
        raise UnsupportedSizeError(f"graph6 size field {n} exceeds {MAX_VERTICES}")
    nbits = n * (n - 1) // 2
    ngroups = (nbits + 5) // 6
    if len(data) != 1 + ngroups:
        raise GraphFormatError(f"expected {1 + ngroups} bytes for n={n}, got {len(data)}")
    bits = 0
    for byte in data[1:]:
        bits = bits << 6 | (byte - 63)
    pad = 6 * ngroups - nbits
    if bits & ((1 << pad) - 1):
        raise GraphFormatError("nonzero padding bits")
    bits >>= pad
    rows = [0] * n
    k = nbits - 1
    for j in range(1, n):
        for i in range(j):
            if bits >> k & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k -= 1
    return Graph(n, rows, check=False)


def to_graph6(g: Graph) -> str:
    adj = g.adj
    bits = 0
    nbits = 0
    for j in range(1, g.n):
        col = adj[j]
        for i in range(j):
            bits = bits << 1 | (col >> i & 1)
        nbits += j
    pad = -nbits % 6
    bits <<= pad
    ngroups = (nbits + pad) // 6
    chars = [chr(63 + g.n)]
    for k in range(ngroups - 1, -1, -1):
        chars.append(chr(63 + (bits >> (6 * k) & 63)))
    return "".join(chars)


# -- edge lists ------------------------------------------------------------


def parse_edge_list(text: str) -> Graph:
    """Decode ``"n <count>"`` followed by one ``"u v"`` line per edge."""
    lines = [(i, ln.strip()) for i, ln in enumerate(text.splitlines(), 1)]
    lines = [(i, ln) for i, ln in lines if ln and not ln.startswith("#")]
    if not lines:
        raise GraphFormatError("missing 'n <count>' header")
    lineno, header = lines[0]
    parts = header.split()
    if len(parts) != 2 or parts[0] != "n" or not parts[1].isdigit():
        raise GraphFormatError(f"expected 'n <count>' header, got {header!r}", lineno)
    n = int(parts[1])
    if n > MAX_VERTICES:
        raise UnsupportedSizeError(f"{n} vertices (limit is {MAX_VERTICES})")
    rows = [0] * n
    for lineno, ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 2 or not all(p.isdigit() for p in parts):
            raise GraphFormatError(f"expected 'u v', got {ln!r}", lineno)
        u, v = int(parts[0]), int(parts[1])
        if u == v:
            raise GraphFormatError(f"self-loop at vertex {u}", lineno)
        if u >= n or v >= n:
            raise VertexRangeError(f"line {lineno}: edge ({u}, {v}) outside 0..{n - 1}")
        if rows[u] >> v & 1:
            raise GraphFormatError(f"duplicate edge ({u}, {v})", lineno)
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, rows, check=False)


def to_edge_list(g: Graph) -> str:
    lines = [f"n {g.n}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


# -- small named graphs, used by tests and the CLI -------------------------


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, j) for j in range(n) for i in range(j)])


def star_graph(leaves: int) -> Graph:
    """K_{1,leaves} with the centre at vertex 0."""
    return Graph.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, outer + spokes + inner)
