from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from randic.errors import DomainError
from randic.graph import (
    Graph,
    complete_graph,
    cycle_graph,
    delete_edge,
    delete_vertex,
    disjoint_union,
    path_graph,
    star_graph,
    subdivide_edge,
)
from randic.invariants import (
    SQRT2_MINUS_1,
    corollary_gaps,
    degree_sum_lower_bound,
    edge_deletion_delta,
    f_value,
    invariant_bundle,
    is_path_graph,
    local_randic,
    randic_index,
    star_bound_gap,
    subdivision_delta,
    vertex_deletion_delta,
)
from randic.radical import RadicalSum, inv_sqrt, sign, sqrt_int

from .oracles import graphs, naive_randic, radical_to_decimal, to_nb

SQ2 = sqrt_int(2)


def test_randic_examples():
    assert randic_index(path_graph(3)) == SQ2
    assert randic_index(complete_graph(4)) == 2
    assert randic_index(star_graph(8)) == SQ2.scale(2)
    assert randic_index(Graph(3, [0, 0, 0])).is_zero()


def test_degree_sum_bound_examples():
    assert degree_sum_lower_bound(complete_graph(4)) == 2
    # (2 + sqrt2) / (2 sqrt2) = 1/2 + sqrt2/2
    assert degree_sum_lower_bound(path_graph(3)) == RadicalSum({1: Fraction(1, 2), 2: Fraction(1, 2)})
    # (3 + sqrt3) / (2 sqrt3) = 1/2 + sqrt3/2
    assert degree_sum_lower_bound(star_graph(3)) == RadicalSum({1: Fraction(1, 2), 3: Fraction(1, 2)})
    with pytest.raises(DomainError):
        degree_sum_lower_bound(disjoint_union(path_graph(2), path_graph(2)))
    with pytest.raises(DomainError):
        degree_sum_lower_bound(Graph(1, [0]))


def test_f_value_examples():
    assert f_value(path_graph(5)) == SQRT2_MINUS_1
    assert f_value(complete_graph(3)) == 1
    assert f_value(cycle_graph(4)) == 1
    with pytest.raises(DomainError):
        f_value(Graph(2, [0, 0]))


def test_corollary_gap_examples():
    assert corollary_gaps(path_graph(4)) == (0, 0)
    five_half_minus_sqrt2 = RadicalSum({1: Fraction(5, 2), 2: -1})
    assert corollary_gaps(complete_graph(3))[0] == five_half_minus_sqrt2
    assert corollary_gaps(cycle_graph(4))[0] == five_half_minus_sqrt2
    with pytest.raises(DomainError):
        corollary_gaps(path_graph(2))


def test_bundle_consistency():
    b = invariant_bundle(cycle_graph(5))
    assert b.f == b.R - Fraction(b.D, 2)
    assert (b.n, b.m, b.max_degree, b.min_degree, b.D) == (5, 5, 2, 2, 2)


def test_path_detection():
    assert is_path_graph(path_graph(1)) and is_path_graph(path_graph(2)) and is_path_graph(path_graph(7))
    assert not is_path_graph(cycle_graph(5))
    # degrees {1,1,2,2,2,2} but a triangle plus an edge-disjoint path component
    assert not is_path_graph(disjoint_union(cycle_graph(3), path_graph(3)))
    assert is_path_graph(path_graph(4).relabel([2, 0, 3, 1]))


def test_star_bound_on_stars():
    for k in range(1, 10):
        assert star_bound_gap(star_graph(k)).is_zero()


@given(graphs(min_n=1, max_n=14))
def test_randic_matches_decimal_oracle(g):
    got = radical_to_decimal(randic_index(g))
    assert abs(got - naive_randic(to_nb(g))) < 1e-40


@given(graphs(min_n=2, max_n=12), st.data())
def test_local_deltas_match_full_recomputation(g, data):
    v = data.draw(st.integers(0, g.n - 1))
    assert vertex_deletion_delta(g, v) == randic_index(g) - randic_index(delete_vertex(g, v))
    full = (1 << g.n) - 1
    assert local_randic(g, full) == randic_index(g)
    if g.m:
        u, x = data.draw(st.sampled_from(g.edges()))
        assert edge_deletion_delta(g, u, x) == randic_index(g) - randic_index(delete_edge(g, u, x))
        assert subdivision_delta(g, u, x) == randic_index(subdivide_edge(g, u, x)) - randic_index(g)


@given(graphs(min_n=3, max_n=12, connected=True))
def test_functional_bound_and_equality(g):
    margin = f_value(g) - SQRT2_MINUS_1
    s = sign(margin)
    assert s >= 0
    assert (s == 0) == is_path_graph(g)
    for gap in corollary_gaps(g):
        assert sign(gap) >= 0
        assert (sign(gap) == 0) == is_path_graph(g)


@given(graphs(min_n=2, max_n=12, connected=True))
def test_degree_sum_bound(g):
    margin = randic_index(g) - degree_sum_lower_bound(g)
    assert sign(margin) >= 0
    if min(g.degrees()) == max(g.degrees()):
        assert margin.is_zero()


def test_regular_graph_value():
    for n in range(3, 9):
        assert randic_index(cycle_graph(n)) == Fraction(n, 2)
        assert randic_index(complete_graph(n)) == Fraction(n, 2)
    assert inv_sqrt(9) == Fraction(1, 3)
