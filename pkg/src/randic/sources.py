"""Graph sources: exhaustive labelled enumeration, graph6 files and seeded
random generators.

Random graphs use SplitMix64 (Steele, Lea and Flood, 2014): state advances by
``GAMMA = 0x9E3779B97F4A7C15`` and each output is the state passed through
the mixing function ``mix64`` below.  Graph ``i`` of a stream seeded with
``s`` draws from a fresh generator seeded with output ``i`` of the generator
seeded with ``s``, i.e. ``mix64(s + (i + 1) * GAMMA)``, so any slice of a
stream can be produced independently of the rest.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Iterator

from .errors import DomainError, GraphError, GraphFormatError
from .graph import MAX_VERTICES, Graph, eccentricity_in, parse_graph6

MASK64 = (1 << 64) - 1
GAMMA = 0x9E3779B97F4A7C15


def mix64(z: int) -> int:
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
    return z ^ (z >> 31)


class SplitMix64:
    __slots__ = ("state",)

    def __init__(self, seed: int):
        self.state = seed & MASK64

    def next(self) -> int:
        self.state = (self.state + GAMMA) & MASK64
        return mix64(self.state)

    def below(self, bound: int) -> int:
        """Uniform integer in ``[0, bound)`` by rejection sampling."""
        if bound <= 0:
            raise ValueError("bound must be positive")
        threshold = (1 << 64) % bound
        while True:
            r = self.next()
            if r >= threshold:
                return r % bound

    def split(self) -> SplitMix64:
        return SplitMix64(self.next())


def stream_seed(seed: int, index: int) -> int:
    """Seed of graph ``index`` within a stream seeded with ``seed``."""
    return mix64((seed + (index + 1) * GAMMA) & MASK64)


# -- exhaustive enumeration ------------------------------------------------------

MAX_EXHAUSTIVE = 7


def pair_order(n: int) -> list[tuple[int, int]]:
    """Vertex pairs in graph6 bit order: (0,1), (0,2), (1,2), (0,3), ..."""
    return [(i, j) for j in range(1, n) for i in range(j)]


def _chunk_tables(n: int) -> list[list[int]]:
    # Each vertex row fits in one byte (n <= 7), so rows are packed
    # little-endian into one integer and tables for 7-bit slices of the
    # edge mask are OR-ed together.
    pairs = pair_order(n)
    tables = []
    for start in range(0, len(pairs), 7):
        chunk = pairs[start:start + 7]
        table = []
        for val in range(1 << len(chunk)):
            packed = 0
            for bit, (i, j) in enumerate(chunk):
                if val >> bit & 1:
                    packed |= 1 << (8 * i + j) | 1 << (8 * j + i)
            table.append(packed)
        tables.append(table)
    return tables


def labeled_graphs(n: int, start: int = 0, stop: int | None = None) -> Iterator[tuple[int, Graph]]:
    """Every labelled graph on ``n`` vertices as ``(mask, graph)``.

    Bit ``k`` of ``mask`` is the ``k``-th pair of :func:`pair_order`.
    """
    if not 1 <= n <= MAX_EXHAUSTIVE:
        raise DomainError(f"exhaustive enumeration supports 1 <= n <= {MAX_EXHAUSTIVE}")
    total = 1 << (n * (n - 1) // 2)
    stop = total if stop is None else min(stop, total)
    tables = _chunk_tables(n)
    t0 = tables[0] if tables else [0]
    t1 = tables[1] if len(tables) > 1 else [0]
    t2 = tables[2] if len(tables) > 2 else [0]
    for mask in range(start, stop):
        packed = t0[mask & 127] | t1[(mask >> 7) & 127] | t2[mask >> 14]
        rows = tuple(packed.to_bytes(8, "little")[:n])
        yield mask, Graph(n, rows, mask.bit_count(), check=False)


def enumerate_connected(n: int, start: int = 0, stop: int | None = None) -> Iterator[Graph]:
    """All connected labelled graphs on ``n`` vertices, 2 <= n <= 7, in
    edge-mask order."""
    if not 2 <= n <= MAX_EXHAUSTIVE:
        raise DomainError(f"exhaustive enumeration supports 2 <= n <= {MAX_EXHAUSTIVE}")
    full = (1 << n) - 1
    for mask, g in labeled_graphs(n, start, stop):
        if g.m >= n - 1 and eccentricity_in(g.adj, 0, full)[1] == full:
            yield g


# -- random graphs ---------------------------------------------------------------


def random_gnp(n: int, p: float, seed: int) -> Graph:
    """G(n, p): each pair, in graph6 order, is an edge when the next 64-bit
    output falls below ``floor(p * 2**64)``."""
    if not 2 <= n <= MAX_VERTICES:
        raise DomainError(f"random_gnp needs 2 <= n <= {MAX_VERTICES}")
    if not 0 < p < 1:
        raise DomainError("random_gnp needs 0 < p < 1")
    threshold = int(Fraction(p) * (1 << 64))
    rng = SplitMix64(seed)
    rows = [0] * n
    for i, j in pair_order(n):
        if rng.next() < threshold:
            rows[i] |= 1 << j
            rows[j] |= 1 << i
    return Graph(n, rows, check=False)


def random_prufer(n: int, seed: int) -> list[int]:
    rng = SplitMix64(seed)
    return [rng.below(n) for _ in range(n - 2)]


def prufer_decode(seq: list[int], n: int) -> Graph:
    """The labelled tree on ``n`` vertices with Prüfer sequence ``seq``."""
    if len(seq) != n - 2:
        raise ValueError(f"a tree on {n} vertices needs a sequence of length {n - 2}")
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for x in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, x))
        degree[x] -= 1
        if degree[x] == 1:
            heapq.heappush(leaves, x)
    edges.append((heapq.heappop(leaves), heapq.heappop(leaves)))
    return Graph.from_edges(n, edges)


def random_tree(n: int, seed: int) -> Graph:
    """Uniform random labelled tree via a uniform Prüfer sequence."""
    if not 2 <= n <= MAX_VERTICES:
        raise DomainError(f"random_tree needs 2 <= n <= {MAX_VERTICES}")
    return prufer_decode(random_prufer(n, seed), n)


# -- graph6 files ------------------------------------------------------------------


@dataclass(frozen=True)
class SourceItem:
    graph: Graph | None
    origin: str  # "line 12", "#345", ...
    error: str | None = None


def ingest_graph6(path: str, skip_bad: bool = False, start: int = 0, stop: int | None = None) -> Iterator[SourceItem]:
    """Stream graphs from a file with one graph6 line per graph.

    Lines are numbered from 1; blank lines are ignored.  A malformed line
    raises :class:`GraphFormatError` naming its line number, unless
    ``skip_bad`` is set, in which case it is yielded as an error item.
    """
    with open(path, encoding="ascii", errors="replace") as fh:
        for lineno, line in enumerate(fh, 1):
            if lineno <= start:
                continue
            if stop is not None and lineno > stop:
                break
            text = line.strip()
            if not text:
                continue
            try:
                g = parse_graph6(text)
            except GraphError as exc:
                if not skip_bad:
                    raise GraphFormatError(str(exc), lineno) from exc
                yield SourceItem(None, f"line {lineno}", str(exc))
                continue
            yield SourceItem(g, f"line {lineno}")


def _count_lines(path: str) -> int:
    with open(path, "rb") as fh:
        return sum(1 for _ in fh)


@dataclass(frozen=True)
class GraphSource:
    """A finite, deterministic, splittable stream of graphs.

    ``kind`` is one of ``exhaustive`` (all connected labelled graphs on
    ``n`` vertices), ``graph6`` (file at ``path``), ``gnp`` (``count``
    graphs G(n, p)), ``tree`` (``count`` uniform trees) or ``list``
    (inline graph6 strings).  ``lo``/``hi`` restrict the stream to a slice
    of its index space, which is how parallel scans divide work.
    """

    kind: str
    n: int = 0
    p: float = 0.0
    seed: int = 0
    count: int = 0
    path: str | None = None
    skip_bad: bool = False
    graphs: tuple[str, ...] = ()
    lo: int = 0
    hi: int | None = None

    def __post_init__(self):
        if self.kind == "exhaustive" and not 2 <= self.n <= MAX_EXHAUSTIVE:
            raise DomainError(f"exhaustive sources need 2 <= n <= {MAX_EXHAUSTIVE}")
        if self.kind == "gnp" and not 0 < self.p < 1:
            raise DomainError("gnp sources need 0 < p < 1")
        if self.kind in ("gnp", "tree"):
            if self.count < 1:
                raise DomainError("random sources need count >= 1")
            if not 2 <= self.n <= MAX_VERTICES:
                raise DomainError(f"random sources need 2 <= n <= {MAX_VERTICES}")
        if self.kind not in ("exhaustive", "graph6", "gnp", "tree", "list"):
            raise DomainError(f"unknown source kind {self.kind!r}")

    @classmethod
    def exhaustive(cls, n: int) -> GraphSource:
        return cls("exhaustive", n=n)

    @classmethod
    def graph6_file(cls, path: str, skip_bad: bool = False) -> GraphSource:
        return cls("graph6", path=path, skip_bad=skip_bad)

    @classmethod
    def gnp(cls, n: int, p: float, seed: int, count: int) -> GraphSource:
        return cls("gnp", n=n, p=p, seed=seed, count=count)

    @classmethod
    def trees(cls, n: int, seed: int, count: int) -> GraphSource:
        return cls("tree", n=n, seed=seed, count=count)

    @classmethod
    def inline(cls, graph6: list[str]) -> GraphSource:
        return cls("list", graphs=tuple(graph6))

    def extent(self) -> int:
        """Size of the index space that ``lo``/``hi`` slice."""
        if self.kind == "exhaustive":
            return 1 << (self.n * (self.n - 1) // 2)
        if self.kind == "graph6":
            return _count_lines(self.path)
        if self.kind == "list":
            return len(self.graphs)
        return self.count

    def split(self, parts: int) -> list[GraphSource]:
        total = self.extent()
        lo = self.lo
        hi = total if self.hi is None else min(self.hi, total)
        parts = max(1, min(parts, max(hi - lo, 1)))
        step, extra = divmod(hi - lo, parts)
        out = []
        cur = lo
        for i in range(parts):
            nxt = cur + step + (1 if i < extra else 0)
            out.append(replace(self, lo=cur, hi=nxt))
            cur = nxt
        return out

    def items(self) -> Iterator[SourceItem]:
        hi = self.hi
        if self.kind == "exhaustive":
            for g in enumerate_connected(self.n, self.lo, hi):
                yield SourceItem(g, "")
        elif self.kind == "graph6":
            yield from ingest_graph6(self.path, self.skip_bad, self.lo, hi)
        elif self.kind == "list":
            stop = len(self.graphs) if hi is None else hi
            for i in range(self.lo, stop):
                try:
                    yield SourceItem(parse_graph6(self.graphs[i]), f"#{i}")
                except GraphError as exc:
                    if not self.skip_bad:
                        raise GraphFormatError(str(exc), i + 1) from exc
                    yield SourceItem(None, f"#{i}", str(exc))
        else:
            make = random_gnp if self.kind == "gnp" else random_tree
            stop = self.count if hi is None else min(hi, self.count)
            for i in range(self.lo, stop):
                s = stream_seed(self.seed, i)
                g = random_gnp(self.n, self.p, s) if make is random_gnp else random_tree(self.n, s)
                yield SourceItem(g, f"#{i}")

    def describe(self) -> str:
        if self.kind == "exhaustive":
            return f"exhaustive(n={self.n})"
        if self.kind == "graph6":
            return f"graph6({self.path})"
        if self.kind == "gnp":
            return f"gnp(n={self.n}, p={self.p}, seed={self.seed}, count={self.count})"
        if self.kind == "tree":
            return f"tree(n={self.n}, seed={self.seed}, count={self.count})"
        return f"list({len(self.graphs)})"
