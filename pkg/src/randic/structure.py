"""Essential vertices and edges, the block / essential-path decomposition,
local-minimum vertices and layer profiles of a block."""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .errors import DomainError
from .graph import (
    Graph,
    diameter_in,
    distances,
    eccentricity_in,
    is_connected,
    is_cut_edge,
    iter_bits,
)


def _require_connected(g: Graph, what: str) -> None:
    if g.n < 1 or not is_connected(g):
        raise DomainError(f"{what} needs a connected graph")


def essential_mask(g: Graph) -> int:
    """Bitmask of the vertices v with D(G - v) < D(G).

    A diametral pair that avoids v and stays connected in G - v keeps a
    distance of at least D, which settles v as non-essential; every other
    vertex is decided by recomputing the diameter of G - v.
    """
    n = g.n
    if n <= 1:
        return 0
    adj = g.adj
    full = (1 << n) - 1
    dist = distances(g).dist
    big = max(max(row) for row in dist)
    pairs = [(a, b) for a in range(n) for b in range(a + 1, n) if dist[a][b] == big]
    mask = 0
    for v in range(n):
        dv = dist[v]
        witness = None
        bypassed = False
        for a, b in pairs:
            if a != v and b != v:
                if dv[a] + dv[b] > big:
                    bypassed = True
                    break
                if witness is None:
                    witness = (a, b)
        if bypassed:
            continue
        alive = full & ~(1 << v)
        if witness is not None:
            # a pair still joined in G - v is at least as far apart as before
            a, b = witness
            if eccentricity_in(adj, a, alive)[1] >> b & 1:
                continue
        if diameter_in(adj, alive) < big:
            mask |= 1 << v
    return mask


def essential_vertices(g: Graph) -> frozenset[int]:
    """Vertices whose deletion strictly lowers the diameter.

    The diameter of a disconnected G - v is its largest component diameter.
    A single vertex has no essential vertex.
    """
    _require_connected(g, "essential_vertices")
    return frozenset(iter_bits(essential_mask(g)))


def essential_edges(g: Graph) -> tuple[tuple[int, int], ...]:
    """Edges whose two endpoints are both essential."""
    _require_connected(g, "essential_edges")
    ess = essential_mask(g)
    return tuple((u, v) for u, v in g.edges() if ess >> u & 1 and ess >> v & 1)


@dataclass(frozen=True)
class EssentialProfile:
    essential_vertices: frozenset[int]
    essential_edges: tuple[tuple[int, int], ...]
    blocks: tuple[frozenset[int], ...]
    essential_paths: tuple[tuple[int, ...], ...]
    path_lengths: tuple[int, ...] = field(default=())

    def to_dict(self) -> dict:
        return {
            "essential_vertices": sorted(self.essential_vertices),
            "essential_edges": [list(e) for e in self.essential_edges],
            "blocks": [sorted(b) for b in self.blocks],
            "essential_paths": [list(p) for p in self.essential_paths],
            "path_lengths": list(self.path_lengths),
        }


def _chains(rows: list[int]) -> list[tuple[int, ...]]:
    """Split a graph given by ``rows`` into maximal chains whose interior
    vertices have degree exactly 2.  Pure cycles come back closed
    (first vertex repeated at the end)."""
    n = len(rows)
    seen_edges: set[tuple[int, int]] = set()
    chains = []

    def walk(start: int, nxt: int) -> tuple[int, ...]:
        chain = [start, nxt]
        seen_edges.add((min(start, nxt), max(start, nxt)))
        prev, cur = start, nxt
        while rows[cur].bit_count() == 2 and cur != start:
            (a, b) = iter_bits(rows[cur])
            step = b if a == prev else a
            edge = (min(cur, step), max(cur, step))
            if edge in seen_edges:
                break
            seen_edges.add(edge)
            chain.append(step)
            prev, cur = cur, step
        return tuple(chain)

    for v in range(n):
        if rows[v] and rows[v].bit_count() != 2:
            for u in iter_bits(rows[v]):
                if (min(u, v), max(u, v)) not in seen_edges:
                    chains.append(walk(v, u))
    for v in range(n):
        for u in iter_bits(rows[v]):
            if (min(u, v), max(u, v)) not in seen_edges:
                chains.append(walk(v, u))
    return chains


def block_decomposition(g: Graph) -> EssentialProfile:
    """Blocks are the components with at least two vertices of the spanning
    subgraph on non-essential edges; essential paths are the maximal chains
    of essential edges."""
    _require_connected(g, "block_decomposition")
    ess = essential_mask(g)
    adj = g.adj
    n = g.n
    plain_rows = [adj[v] & ~ess if ess >> v & 1 else adj[v] for v in range(n)]
    ess_rows = [adj[v] & ess if ess >> v & 1 else 0 for v in range(n)]

    full = (1 << n) - 1
    blocks = []
    rest = full
    while rest:
        low = rest & -rest
        _, reached = eccentricity_in(plain_rows, low.bit_length() - 1, full)
        rest &= ~reached
        if reached.bit_count() >= 2:
            blocks.append(frozenset(iter_bits(reached)))

    paths = _chains(ess_rows)
    edges = tuple((u, v) for u, v in g.edges() if ess >> u & 1 and ess >> v & 1)
    return EssentialProfile(
        essential_vertices=frozenset(iter_bits(ess)),
        essential_edges=edges,
        blocks=tuple(blocks),
        essential_paths=tuple(paths),
        path_lengths=tuple(len(p) - 1 for p in paths),
    )


def local_minimum_vertices(g: Graph) -> frozenset[int]:
    """Non-essential vertices v such that every non-essential u within
    distance 2 has degree at least d_v."""
    _require_connected(g, "local_minimum_vertices")
    ess = essential_mask(g)
    dist = distances(g).dist
    deg = g.degrees()
    out = set()
    for v in range(g.n):
        if ess >> v & 1:
            continue
        ok = True
        for u in range(g.n):
            if u != v and not ess >> u & 1 and 0 <= dist[v][u] <= 2 and deg[u] < deg[v]:
                ok = False
                break
        if ok:
            out.add(v)
    return frozenset(out)


def non_cut_essential_edges(g: Graph) -> tuple[tuple[int, int], ...]:
    """Essential edges that are not cut edges.

    Reduced extremal graphs have none; general graphs may, so this is a
    diagnostic rather than an assertion.
    """
    return tuple(e for e in essential_edges(g) if not is_cut_edge(g, *e))


@dataclass(frozen=True)
class LayerProfile:
    z: int
    layers: tuple[frozenset[int], ...]
    a: tuple[float, ...]  # math.inf where a layer has no non-essential vertex
    k: int


def layer_profile(g: Graph, block, z: int, essential: frozenset[int] | None = None) -> LayerProfile:
    """Distance layers A_0, A_1, ... from ``z`` inside the block, with a_i the
    least G-degree of a non-essential member of A_i."""
    block = frozenset(block)
    if z not in block:
        raise DomainError(f"root {z} is not in the block")
    if not block <= set(range(g.n)):
        raise DomainError("block names vertices outside the graph")
    if essential is None:
        essential = essential_vertices(g)
    inside = 0
    for v in block:
        inside |= 1 << v
    rows = [row & inside for row in g.adj]
    layers = []
    seen = 1 << z
    frontier = seen
    while frontier:
        layers.append(frozenset(iter_bits(frontier)))
        nxt = 0
        for u in iter_bits(frontier):
            nxt |= rows[u]
        frontier = nxt & ~seen
        seen |= frontier
    a = []
    for layer in layers:
        degs = [g.degree(v) for v in layer if v not in essential]
        a.append(min(degs) if degs else math.inf)
    return LayerProfile(z=z, layers=tuple(layers), a=tuple(a), k=len(layers) - 1)
