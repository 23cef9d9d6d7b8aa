import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from randic.errors import GraphFormatError, NotAnEdgeError, UnsupportedSizeError, VertexRangeError
from randic.graph import (
    MAX_VERTICES,
    UNREACHABLE,
    Graph,
    complete_graph,
    cycle_graph,
    delete_edge,
    delete_vertex,
    diameter,
    disjoint_union,
    distances,
    is_connected,
    is_cut_edge,
    parse_edge_list,
    parse_graph6,
    path_graph,
    star_graph,
    subdivide_edge,
    to_edge_list,
    to_graph6,
)

from .oracles import bfs_dist, graphs, naive_connected, naive_diameter, to_nb


def test_graph6_hand_decoded_examples():
    assert parse_graph6("Bw") == complete_graph(3)
    assert parse_graph6("BW") == Graph.from_edges(3, [(0, 2), (2, 1)])
    assert parse_graph6("C~") == complete_graph(4)
    assert to_graph6(complete_graph(3)) == "Bw"
    assert to_graph6(complete_graph(4)) == "C~"
    assert to_graph6(Graph(1, [0])) == "@"


def test_graph6_header_and_bytes():
    assert parse_graph6(">>graph6<<Bw") == complete_graph(3)
    with pytest.raises(GraphFormatError):
        parse_graph6("B\x20")
    with pytest.raises(GraphFormatError):
        parse_graph6("B\x7f")
    with pytest.raises(UnsupportedSizeError):
        parse_graph6("~" + "?" * 10)
    with pytest.raises(GraphFormatError):
        parse_graph6("Bx")  # padding bits set
    with pytest.raises(GraphFormatError):
        parse_graph6("Bww")  # wrong length


def test_graph6_known_large_example():
    # Petersen graph in its usual graph6 form
    g = parse_graph6("IheA@GUAo")
    assert g.n == 10 and g.m == 15 and set(g.degrees()) == {3}
    assert diameter(g) == 2


@given(graphs(min_n=1, max_n=20))
def test_graph6_round_trip(g):
    assert parse_graph6(to_graph6(g)) == g


@given(graphs(min_n=1, max_n=15))
def test_edge_list_round_trip(g):
    assert parse_edge_list(to_edge_list(g)) == g


def test_edge_list_examples_and_errors():
    assert parse_edge_list("n 3\n0 1\n1 2") == path_graph(3)
    assert parse_edge_list("n 2\n0 1") == complete_graph(2)
    assert parse_edge_list("# comment\nn 2\n\n0 1\n") == complete_graph(2)
    with pytest.raises(GraphFormatError, match="line 2"):
        parse_edge_list("n 3\n0 0")
    with pytest.raises(GraphFormatError):
        parse_edge_list("n 3\n0 1\n1 0")
    with pytest.raises(VertexRangeError):
        parse_edge_list("n 3\n0 3")
    with pytest.raises(GraphFormatError):
        parse_edge_list("0 1")


def test_constructor_rejects_bad_rows():
    with pytest.raises(Exception):
        Graph(2, [0b10, 0])  # asymmetric
    with pytest.raises(Exception):
        Graph(1, [0b1])  # self-loop
    with pytest.raises(UnsupportedSizeError):
        Graph(MAX_VERTICES + 1, [0] * (MAX_VERTICES + 1))


def test_distances_and_diameter_examples():
    assert distances(path_graph(4))(0, 3) == 3
    k4 = distances(complete_graph(4))
    assert all(k4(u, v) == (0 if u == v else 1) for u in range(4) for v in range(4))
    two = disjoint_union(complete_graph(3), path_graph(3))
    assert distances(two)(0, 3) == UNREACHABLE
    assert diameter(path_graph(4)) == 3
    assert diameter(complete_graph(4)) == 1
    assert diameter(two) == 2


@given(graphs(min_n=1, max_n=12))
def test_distances_match_naive_bfs(g):
    nb = to_nb(g)
    table = distances(g)
    for s in range(g.n):
        ref = bfs_dist(nb, s)
        for t in range(g.n):
            assert table(s, t) == ref.get(t, UNREACHABLE)
    assert diameter(g) == naive_diameter(nb)
    assert is_connected(g) == naive_connected(nb)


def test_connectivity_and_cut_edges():
    assert is_connected(path_graph(5))
    assert not is_connected(disjoint_union(complete_graph(3), complete_graph(2)))
    assert is_connected(Graph(1, [0]))
    assert is_cut_edge(path_graph(3), 0, 1)
    assert not any(is_cut_edge(cycle_graph(4), *e) for e in cycle_graph(4).edges())
    assert not any(is_cut_edge(complete_graph(4), *e) for e in complete_graph(4).edges())
    with pytest.raises(NotAnEdgeError):
        is_cut_edge(path_graph(3), 0, 2)


def test_surgery_examples():
    for v in range(4):
        assert delete_vertex(complete_graph(4), v) == complete_graph(3)
    assert delete_vertex(path_graph(3), 1) == Graph(2, [0, 0])
    assert delete_vertex(path_graph(3), 0) == complete_graph(2)
    with pytest.raises(VertexRangeError):
        delete_vertex(path_graph(3), 3)
    assert delete_edge(complete_graph(3), 0, 2) == path_graph(3)
    c4 = cycle_graph(4)
    p = delete_edge(c4, 0, 3)
    assert p.m == 3 and diameter(p) == 3 and is_connected(p)
    assert delete_edge(complete_graph(2), 0, 1) == Graph(2, [0, 0])
    with pytest.raises(NotAnEdgeError):
        delete_edge(path_graph(3), 0, 2)
    assert subdivide_edge(complete_graph(2), 0, 1) == Graph.from_edges(3, [(0, 2), (2, 1)])
    c = subdivide_edge(complete_graph(3), 0, 1)
    assert c.m == 4 and set(c.degrees()) == {2} and is_connected(c)
    p4 = subdivide_edge(path_graph(3), 0, 1)
    assert sorted(p4.degrees()) == [1, 1, 2, 2] and is_connected(p4)
    big = Graph.from_edges(MAX_VERTICES, [(0, 1)])
    with pytest.raises(UnsupportedSizeError):
        subdivide_edge(big, 0, 1)


@given(graphs(min_n=2, max_n=12), st.data())
def test_surgery_properties(g, data):
    v = data.draw(st.integers(0, g.n - 1))
    h = delete_vertex(g, v)
    nbrs = set(g.neighbors(v))
    shift = [w if w < v else w - 1 for w in range(g.n)]
    for w in range(g.n):
        if w == v:
            continue
        expected = g.degree(w) - (1 if w in nbrs else 0)
        assert h.degree(shift[w]) == expected
    if g.m:
        u, x = data.draw(st.sampled_from(g.edges()))
        s = subdivide_edge(g, u, x)
        assert s.m == g.m + 1
        assert s.degree(u) == g.degree(u) and s.degree(x) == g.degree(x)
        assert s.degree(g.n) == 2 and not s.has_edge(u, x)
        e = delete_edge(g, u, x)
        if not is_cut_edge(g, u, x):
            assert diameter(e) >= diameter(g)


def test_named_graphs():
    assert star_graph(4).degree(0) == 4
    assert cycle_graph(5).m == 5
    assert path_graph(1) == Graph(1, [0])


@settings(max_examples=50)
@given(graphs(min_n=1, max_n=10), st.randoms())
def test_relabel_preserves_degree_multiset(g, rnd):
    perm = list(range(g.n))
    rnd.shuffle(perm)
    h = g.relabel(perm)
    assert sorted(h.degrees()) == sorted(g.degrees())
    assert diameter(h) == diameter(g)
