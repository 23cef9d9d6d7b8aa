import math

import pytest
from hypothesis import given

from randic.errors import DomainError
from randic.graph import (
    Graph,
    complete_graph,
    cycle_graph,
    delete_vertex,
    diameter,
    disjoint_union,
    path_graph,
    star_graph,
)
from randic.structure import (
    block_decomposition,
    essential_edges,
    essential_vertices,
    layer_profile,
    local_minimum_vertices,
)

from .oracles import bfs_dist, graphs, naive_essential, to_nb


def k4_with_tail():
    return Graph.from_edges(6, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (0, 4), (4, 5)])


def test_essential_vertex_examples():
    assert essential_vertices(path_graph(4)) == {0, 1, 2, 3}
    assert essential_vertices(cycle_graph(4)) == set()
    assert essential_vertices(star_graph(4)) == {0}
    assert essential_vertices(Graph(1, [0])) == set()
    with pytest.raises(DomainError):
        essential_vertices(disjoint_union(path_graph(2), path_graph(2)))


def test_essential_edge_examples():
    assert set(essential_edges(path_graph(4))) == {(0, 1), (1, 2), (2, 3)}
    assert essential_edges(star_graph(4)) == ()
    assert essential_edges(cycle_graph(6)) == ()


@given(graphs(min_n=1, max_n=10, connected=True))
def test_essential_matches_brute_force(g):
    assert essential_vertices(g) == naive_essential(to_nb(g))


@given(graphs(min_n=2, max_n=10, connected=True))
def test_nonessential_deletion_keeps_diameter(g):
    ess = essential_vertices(g)
    d = diameter(g)
    for v in range(g.n):
        if v not in ess:
            assert diameter(delete_vertex(g, v)) >= d


def test_block_decomposition_examples():
    prof = block_decomposition(k4_with_tail())
    assert prof.blocks == (frozenset({0, 1, 2, 3}),)
    assert [sorted(p) for p in prof.essential_paths] == [[0, 4, 5]]
    assert prof.path_lengths == (2,)

    p6 = block_decomposition(path_graph(6))
    assert p6.blocks == ()
    assert p6.path_lengths == (5,)

    c5 = block_decomposition(cycle_graph(5))
    assert c5.blocks == (frozenset(range(5)),)
    assert c5.essential_paths == ()
    assert c5.to_dict()["blocks"] == [[0, 1, 2, 3, 4]]


@given(graphs(min_n=2, max_n=10, connected=True))
def test_profile_invariants(g):
    prof = block_decomposition(g)
    ess = prof.essential_vertices
    for u, v in prof.essential_edges:
        assert u in ess and v in ess
    # every essential edge lies on exactly one essential path
    path_edges = []
    for p in prof.essential_paths:
        path_edges.extend(tuple(sorted(e)) for e in zip(p, p[1:]))
    assert sorted(path_edges) == sorted(prof.essential_edges)
    # blocks are disjoint
    seen = set()
    for b in prof.blocks:
        assert len(b) >= 2 and not (seen & b)
        seen |= b


def test_local_minimum_examples():
    assert local_minimum_vertices(cycle_graph(4)) == {0, 1, 2, 3}
    assert local_minimum_vertices(path_graph(4)) == set()
    assert local_minimum_vertices(star_graph(4)) == {1, 2, 3, 4}


@given(graphs(min_n=2, max_n=9, connected=True))
def test_local_minimum_definition(g):
    nb = to_nb(g)
    ess = naive_essential(nb)
    expected = set()
    for v in range(g.n):
        if v in ess:
            continue
        dist = bfs_dist(nb, v)
        if all(len(nb[u]) >= len(nb[v]) for u in range(g.n) if u not in ess and u != v and dist.get(u, 99) <= 2):
            expected.add(v)
    assert local_minimum_vertices(g) == expected


def test_layer_profile_examples():
    c5 = cycle_graph(5)
    lp = layer_profile(c5, range(5), 0)
    assert [len(a) for a in lp.layers] == [1, 2, 2]
    assert lp.a == (2, 2, 2) and lp.k == 2

    k4 = complete_graph(4)
    lp = layer_profile(k4, range(4), 2)
    assert [len(a) for a in lp.layers] == [1, 3]
    assert lp.a == (3, 3)

    # the tail vertex 4 is essential and alone in its layer inside block {0, 4}
    g = k4_with_tail()
    lp = layer_profile(g, {0, 4}, 0)
    assert 4 in essential_vertices(g)
    assert lp.a[1] == math.inf

    with pytest.raises(DomainError):
        layer_profile(c5, {0, 1}, 3)


@given(graphs(min_n=2, max_n=10, connected=True))
def test_layers_partition_blocks(g):
    for block in block_decomposition(g).blocks:
        z = min(block)
        lp = layer_profile(g, block, z)
        assert lp.layers[0] == {z}
        assert all(lp.layers)
        assert sum(len(a) for a in lp.layers) == len(block)
