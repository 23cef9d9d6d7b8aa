"""Instance verification: the lower bound on f = R - D/2 and its two
corollary forms, the per-vertex and per-edge property suites, and the
certified numeric constants.

Every verdict is an exact sign.  A scan is a map over the graphs of one or
more :class:`GraphSource` objects followed by an associative, order-keeping
merge, so splitting the work across processes gives the same report.
"""

from __future__ import annotations

from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

from . import constants as C
from .graph import (
    Graph,
    cycle_graph,
    delete_edge,
    diameter,
    distances,
    complete_graph,
    is_connected,
    is_cut_edge,
    iter_bits,
    path_graph,
    to_graph6,
)
from .interval import Interval
from .invariants import (
    SQRT2_MINUS_1,
    _gaps,
    degree_pair_key,
    degree_sum_lower_bound,
    edge_deletion_delta,
    is_path_graph,
    randic_from_key,
    star_bound_gap,
    vertex_deletion_delta,
)
from .radical import RadicalSum, sign
from .reduction import (
    attach_check,
    deletion_holds,
    heuristic_orientation,
    subdivision_case,
    weak_deletion_holds,
)
from .sources import GraphSource
from .structure import essential_mask

SUITE_CONJECTURE = "conjecture"
SUITE_LEMMAS = "lemmas"
SUITE_CONSTANTS = "constants"

# conjecture checks
CHECK_BOUND = "functional-bound"
CHECK_EQUALITY = "functional-equality"
CHECK_DIFFERENCE = "difference-bound"
CHECK_RATIO = "ratio-bound"

# hard property checks
CHECK_DEGREE_SUM = "degree-sum-bound"
CHECK_SMALL_DEGREE = "small-degree-deletion"
CHECK_WEAK = "weak-condition-deletion"
CHECK_ORIENTED = "oriented-condition-deletion"
CHECK_EDGE_GAP = "non-leaf-edge-deletion"
CHECK_ESSENTIAL_EDGE = "essential-edge-deletion"
CHECK_SUBDIVISION = "subdivision-classification"
CHECK_STAR = "star-bound"
HARD_CHECKS = (
    CHECK_DEGREE_SUM,
    CHECK_SMALL_DEGREE,
    CHECK_WEAK,
    CHECK_ORIENTED,
    CHECK_EDGE_GAP,
    CHECK_ESSENTIAL_EDGE,
    CHECK_SUBDIVISION,
    CHECK_STAR,
)

# report-only checks: they are claimed only for extremal graphs
CHECK_LOCAL_MINIMUM = "local-minimum-structure"
CHECK_ATTACH = "cut-vertex-attach"
CONTEXTUAL_CHECKS = (CHECK_LOCAL_MINIMUM, CHECK_ATTACH)

LEMMA_CHECKS = HARD_CHECKS + CONTEXTUAL_CHECKS

# constants checks (all hard)
CHECK_H_NINE = "h-at-nine"
CHECK_H_SMALL_DIAMETER = "h-nine-small-diameter"
CHECK_B_CLOSED_FORM = "degree-sequence-closed-form"
CHECK_FINAL_GAP = "final-gap"
CHECK_TAIL_STEP = "final-gap-tail-step"
CHECK_PHI_THRESHOLD = "growth-threshold"
CHECK_PHI_DECREASING = "growth-function-decreasing"
CHECK_H_INCREASING = "h-increasing"
CONSTANT_CHECKS = (
    CHECK_H_NINE,
    CHECK_H_SMALL_DIAMETER,
    CHECK_B_CLOSED_FORM,
    CHECK_FINAL_GAP,
    CHECK_TAIL_STEP,
    CHECK_PHI_THRESHOLD,
    CHECK_PHI_DECREASING,
    CHECK_H_INCREASING,
)

SUITE_GROUPS = {
    "all": LEMMA_CHECKS,
    "hard": HARD_CHECKS,
    "contextual": CONTEXTUAL_CHECKS,
}


def resolve_checks(names: Iterable[str] | None) -> tuple[str, ...]:
    """Expand group names and validate check ids, keeping canonical order."""
    if names is None:
        return LEMMA_CHECKS
    chosen = set()
    for name in names:
        name = name.strip()
        if not name:
            continue
        if name in SUITE_GROUPS:
            chosen.update(SUITE_GROUPS[name])
        elif name in LEMMA_CHECKS:
            chosen.add(name)
        else:
            raise ValueError(f"unknown suite {name!r}")
    return tuple(c for c in LEMMA_CHECKS if c in chosen)


# -- report ------------------------------------------------------------------


@dataclass(frozen=True)
class Violation:
    graph6: str  # or the parameter that failed, for constants
    check: str
    margin: RadicalSum | Interval
    hard: bool = True
    origin: str = ""
    detail: str = ""


@dataclass(frozen=True)
class Extreme:
    witness: str
    value: RadicalSum | Interval


def _below(a, b) -> bool:
    """Strictly smaller, exactly for radical sums, by lower end for intervals."""
    if isinstance(a, RadicalSum):
        return sign(a - b) < 0
    return a.lo < b.lo


@dataclass
class VerifyReport:
    suite: str
    scanned: int = 0
    skipped: int = 0
    bad_inputs: int = 0
    violations: list[Violation] = field(default_factory=list)
    applied: Counter = field(default_factory=Counter)
    uncovered: Counter = field(default_factory=Counter)
    extremes: dict[str, Extreme] = field(default_factory=dict)
    equality_witnesses: list[str] = field(default_factory=list)
    equality_classes: set[str] = field(default_factory=set)
    sources: list[str] = field(default_factory=list)

    def merge(self, other: VerifyReport) -> VerifyReport:
        """Combine with a report over graphs that come after this one's."""
        out = VerifyReport(self.suite)
        out.scanned = self.scanned + other.scanned
        out.skipped = self.skipped + other.skipped
        out.bad_inputs = self.bad_inputs + other.bad_inputs
        out.violations = self.violations + other.violations
        out.applied = self.applied + other.applied
        out.uncovered = self.uncovered + other.uncovered
        out.extremes = dict(self.extremes)
        for key, ext in other.extremes.items():
            mine = out.extremes.get(key)
            if mine is None or _below(ext.value, mine.value):
                out.extremes[key] = ext
        out.equality_witnesses = self.equality_witnesses + other.equality_witnesses
        out.equality_classes = self.equality_classes | other.equality_classes
        out.sources = self.sources + [s for s in other.sources if s not in self.sources]
        return out

    @property
    def hard_violations(self) -> list[Violation]:
        return [v for v in self.violations if v.hard]

    @property
    def passed(self) -> bool:
        return not self.hard_violations

    def violation_set(self) -> set[tuple[str, str, str]]:
        return {(v.graph6, v.check, str(v.margin)) for v in self.violations}

    def check_tally(self) -> dict[str, tuple[int, int]]:
        """check id -> (applications, violations)."""
        bad = Counter(v.check for v in self.violations)
        return {c: (self.applied[c], bad[c]) for c in sorted(set(self.applied) | set(bad))}


# -- conjecture suite ----------------------------------------------------------


@lru_cache(maxsize=1 << 16)
def _conjecture_verdict(n: int, d: int, key) -> tuple:
    r = randic_from_key(key)
    f = r - Fraction(d, 2)
    margin = f - SQRT2_MINUS_1
    if n < 3:
        return f, margin, sign(margin), None, None, 0, 0
    gap1, gap2 = _gaps(n, r, d)
    return f, margin, sign(margin), gap1, gap2, sign(gap1), sign(gap2)


def _check_conjecture(g: Graph, origin: str, rep: VerifyReport) -> None:
    if g.n < 2 or not is_connected(g):
        rep.skipped += 1
        return
    rep.scanned += 1
    d = diameter(g)
    f, margin, s, gap1, gap2, s1, s2 = _conjecture_verdict(g.n, d, degree_pair_key(g))
    code = None

    def flag(check, value, detail=""):
        nonlocal code
        if code is None:
            code = to_graph6(g)
        rep.violations.append(Violation(code, check, value, True, origin, detail))

    low = rep.extremes.get("min-f")
    if low is None or _below(f, low.value):
        rep.extremes["min-f"] = Extreme(to_graph6(g), f)

    rep.applied[CHECK_BOUND] += 1
    if g.n == 2:
        # outside the theorem's range; f = 1/2 is kept as a strict data point
        if s <= 0:
            flag(CHECK_BOUND, margin, "n = 2 must be strict")
        return
    if s < 0:
        flag(CHECK_BOUND, margin)
    path = is_path_graph(g)
    rep.applied[CHECK_EQUALITY] += 1
    if (s == 0) != path:
        flag(CHECK_EQUALITY, margin, "path" if path else "not a path")
    if s == 0 and path:
        rep.equality_witnesses.append(to_graph6(g))
        rep.equality_classes.add(f"P{g.n}")
    for check, gap, sg in ((CHECK_DIFFERENCE, gap1, s1), (CHECK_RATIO, gap2, s2)):
        rep.applied[check] += 1
        if sg < 0 or (sg == 0) != path:
            flag(check, gap, "path" if path else "")


# -- property suites ---------------------------------------------------------


_ATTACH_PARTNERS = ((path_graph(3), 1), (cycle_graph(5), 0), (complete_graph(3), 0))


def _check_lemmas(g: Graph, origin: str, rep: VerifyReport, checks: frozenset[str]) -> None:
    rep.scanned += 1
    code = None

    def flag(check, value, detail=""):
        nonlocal code
        if code is None:
            code = to_graph6(g)
        rep.violations.append(Violation(code, check, value, check in HARD_CHECKS, origin, detail))

    n = g.n
    deg = g.degrees()
    connected = n >= 1 and is_connected(g)
    deletion_sign: dict[int, int] = {}

    def deletion(v):
        if v not in deletion_sign:
            delta = vertex_deletion_delta(g, v)
            deletion_sign[v] = (sign(delta), delta)
        return deletion_sign[v]

    if CHECK_DEGREE_SUM in checks and connected and g.m > 0:
        rep.applied[CHECK_DEGREE_SUM] += 1
        margin = randic_from_key(degree_pair_key(g)) - degree_sum_lower_bound(g)
        s = sign(margin)
        regular = min(deg) == max(deg)
        if s < 0 or (regular and s != 0):
            flag(CHECK_DEGREE_SUM, margin, "regular" if regular else "")

    if CHECK_STAR in checks and connected:
        rep.applied[CHECK_STAR] += 1
        margin = star_bound_gap(g)
        s = sign(margin)
        star = n <= 2 or (g.m == n - 1 and max(deg) == n - 1)
        if s < 0 or (s == 0) != star:
            flag(CHECK_STAR, margin, "star" if star else "")

    for v in range(n):
        dv = deg[v]
        if dv == 0:
            continue
        if CHECK_SMALL_DEGREE in checks and dv <= 4:
            rep.applied[CHECK_SMALL_DEGREE] += 1
            s, delta = deletion(v)
            if s != 1:
                flag(CHECK_SMALL_DEGREE, delta, f"v={v}")
        if CHECK_WEAK in checks and weak_deletion_holds(g, v):
            rep.applied[CHECK_WEAK] += 1
            s, delta = deletion(v)
            if s != 1:
                flag(CHECK_WEAK, delta, f"v={v}")
        if CHECK_ORIENTED in checks:
            o = heuristic_orientation(g, v)
            if deletion_holds(g, v, o):
                rep.applied[CHECK_ORIENTED] += 1
                s, delta = deletion(v)
                if s != 1:
                    flag(CHECK_ORIENTED, delta, f"v={v}")

    edges = g.edges()
    for u, v in edges:
        if CHECK_EDGE_GAP in checks and deg[u] >= 2 and deg[v] >= 2:
            rep.applied[CHECK_EDGE_GAP] += 1
            margin = edge_deletion_delta(g, u, v) + Fraction(1, 2)
            if sign(margin) != 1:
                flag(CHECK_EDGE_GAP, margin, f"edge=({u},{v})")
        if CHECK_SUBDIVISION in checks and n < 62:
            verdict = subdivision_case(g, u, v)
            if verdict.case == "uncovered":
                rep.uncovered[CHECK_SUBDIVISION] += 1
            else:
                rep.applied[CHECK_SUBDIVISION] += 1
                if not verdict.consistent:
                    flag(CHECK_SUBDIVISION, verdict.delta, f"edge=({u},{v}) case={verdict.case}")

    need_essential = checks & {CHECK_ESSENTIAL_EDGE, CHECK_LOCAL_MINIMUM}
    if connected and n >= 2 and need_essential:
        ess = essential_mask(g)
        if CHECK_ESSENTIAL_EDGE in checks:
            d = diameter(g)
            for u, v in edges:
                if ess >> u & 1 and ess >> v & 1 and not is_cut_edge(g, u, v):
                    rep.applied[CHECK_ESSENTIAL_EDGE] += 1
                    h = delete_edge(g, u, v)
                    # f(G) - f(G - uv)
                    margin = edge_deletion_delta(g, u, v) - Fraction(d - diameter(h), 2)
                    if sign(margin) != 1:
                        flag(CHECK_ESSENTIAL_EDGE, margin, f"edge=({u},{v})")
        if CHECK_LOCAL_MINIMUM in checks:
            _local_minimum_check(g, ess, deg, deletion, rep, flag)

    if CHECK_ATTACH in checks and connected and 8 <= n <= 59:
        u2 = deg.index(min(deg))
        for g1, u1 in _ATTACH_PARTNERS:
            res = attach_check(g1, g, u1, u2)
            if res.premise_failures:
                rep.uncovered[CHECK_ATTACH] += 1
                continue
            rep.applied[CHECK_ATTACH] += 1
            if res.verdict != 1:
                flag(CHECK_ATTACH, res.margin, f"partner={to_graph6(g1)} u={u2}")


def _local_minimum_check(g: Graph, ess: int, deg, deletion, rep, flag) -> None:
    dist = distances(g).dist
    adj = g.adj
    for v in range(g.n):
        dv = deg[v]
        if ess >> v & 1 or dv < 3:
            continue
        if any(
            u != v and not ess >> u & 1 and 0 <= dist[v][u] <= 2 and deg[u] < dv
            for u in range(g.n)
        ):
            continue
        s, delta = deletion(v)
        if s > 0:
            continue
        rep.applied[CHECK_LOCAL_MINIMUM] += 1
        found = any(
            deg[w] < dv and deg[y] < dv and ess >> w & 1 and ess >> y & 1
            for w in iter_bits(adj[v])
            for y in iter_bits(adj[w])
            if y != v
        )
        if not found:
            flag(CHECK_LOCAL_MINIMUM, delta, f"v={v}")


# -- scanning ----------------------------------------------------------------


def _scan(task) -> VerifyReport:
    suite, src, checks = task
    rep = VerifyReport(suite, sources=[src.describe()])
    for item in src.items():
        if item.graph is None:
            rep.bad_inputs += 1
            rep.skipped += 1
            continue
        if suite == SUITE_CONJECTURE:
            _check_conjecture(item.graph, item.origin, rep)
        else:
            _check_lemmas(item.graph, item.origin, rep, checks)
    return rep


def _run(suite: str, sources, checks: frozenset[str], workers: int, chunks_per_worker: int = 4) -> VerifyReport:
    if isinstance(sources, GraphSource):
        sources = [sources]
    sources = list(sources)
    if workers < 1:
        raise ValueError("workers must be >= 1")
    if workers == 1:
        tasks = [(suite, s, checks) for s in sources]
        parts = map(_scan, tasks)
        result = VerifyReport(suite)
        for part in parts:
            result = result.merge(part)
        return result
    tasks = [(suite, piece, checks) for s in sources for piece in s.split(workers * chunks_per_worker)]
    result = VerifyReport(suite)
    with ProcessPoolExecutor(max_workers=workers) as pool:
        for part in pool.map(_scan, tasks):
            result = result.merge(part)
    # sources were split; report each once, in order
    result.sources = [s.describe() for s in sources]
    return result


def verify_conjecture(sources: GraphSource | Sequence[GraphSource], workers: int = 1) -> VerifyReport:
    """Check f >= sqrt2 - 1 with equality exactly on paths, together with
    the difference and ratio forms, on every connected graph of ``sources``.
    Disconnected graphs are skipped and counted."""
    return _run(SUITE_CONJECTURE, sources, frozenset(), workers)


def verify_lemmas(
    sources: GraphSource | Sequence[GraphSource],
    suites: Iterable[str] | None = None,
    workers: int = 1,
) -> VerifyReport:
    """Run the selected property checks (default: all) on every graph."""
    return _run(SUITE_LEMMAS, sources, frozenset(resolve_checks(suites)), workers)


# -- constants ---------------------------------------------------------------


def verify_constants(
    k_max: int = 500,
    d_max: int = 10**4,
    b_max: int = 30,
    grid: int = 1000,
) -> VerifyReport:
    """Certify the numeric claims behind the large-diameter case."""
    rep = VerifyReport(SUITE_CONSTANTS)

    def record(check, witness, value, ok):
        rep.scanned += 1
        rep.applied[check] += 1
        if not ok:
            rep.violations.append(Violation(witness, check, value))
        low = rep.extremes.get(check)
        if isinstance(value, (RadicalSum, Interval)) and (low is None or _below(value, low.value)):
            rep.extremes[check] = Extreme(witness, value)

    h9 = C.h(9)
    expected = RadicalSum({1: 4, 2: Fraction(1, 3)})
    record(CHECK_H_NINE, "x=9", h9 - expected, h9 == expected)
    small = C.small_diameter_margin()
    record(CHECK_H_SMALL_DIAMETER, "D<=8", small, sign(small) == 1)

    for i in range(b_max + 1):
        diff = C.b_seq(i) - C.b_closed_form(i)
        record(CHECK_B_CLOSED_FORM, f"i={i}", RadicalSum.rational(diff), diff == 0)

    for k in range(7, k_max + 1):
        gap = C.final_gap(k)
        record(CHECK_FINAL_GAP, f"k={k}", gap, gap.lo > 0)
    for k in range(7, k_max + 1):
        step = C.tail_step_margin(k)
        record(CHECK_TAIL_STEP, f"k={k}", step, step.lo > 0)

    for d in range(9, d_max + 1):
        margin = C.phi_threshold_margin(d)
        record(CHECK_PHI_THRESHOLD, f"d={d}", margin, margin.lo > 0)

    # decreasing on (2.5, 200]: 400 points of spacing 1/2 starting at 3
    xs = [Fraction(5, 2) + Fraction(i, 2) for i in range(1, 396)]
    values = [C.phi(x) for x in xs]
    for x0, x1, a, b in zip(xs, xs[1:], values, values[1:]):
        record(CHECK_PHI_DECREASING, f"x={x0}..{x1}", a - b, b.precedes(a))

    points = C.h_grid(grid)
    hs = [C.h_interval(x) for x in points]
    for x0, x1, a, b in zip(points, points[1:], hs, hs[1:]):
        record(CHECK_H_INCREASING, f"x={x0}..{x1}", b - a, a.precedes(b))
    return rep
