import networkx as nx
import pytest
from hypothesis import given
from hypothesis import strategies as st

from pentacovers.construct import family, six_cycle_vertices
from pentacovers.graph import (
    Graph,
    bfs_distances,
    complete_graph,
    contains_cycle,
    cycle_graph,
    girth,
    is_bipartite,
    is_connected,
    regular_valency,
)


@st.composite
def graphs(draw, max_n=30):
    n = draw(st.integers(1, max_n))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True, max_size=3 * n)) if pairs else []
    return Graph.from_edges(n, chosen)


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def test_construction_rejects_bad_input():
    with pytest.raises(ValueError, match="loop"):
        Graph.from_edges(3, [(1, 1)])
    with pytest.raises(ValueError, match="asymmetric"):
        Graph(2, [0b10, 0])
    with pytest.raises(ValueError):
        Graph(2, [0b100, 0])


def test_basic_examples():
    k6 = complete_graph(6)
    assert regular_valency(k6) == 5 and k6.edge_count == 15 and girth(k6) == 3
    assert is_bipartite(k6) is None
    c12 = cycle_graph(12)
    assert is_bipartite(c12) == [i % 2 for i in range(12)]
    assert girth(c12) == 12
    assert not is_connected(Graph.from_edges(4, [(0, 1), (2, 3)]))
    assert bfs_distances(c12, 0)[6] == 6
    assert regular_valency(Graph.from_edges(3, [(0, 1)])) is None


def test_girth_of_forest_is_an_error():
    with pytest.raises(ValueError, match="forest"):
        girth(Graph.from_edges(4, [(0, 1), (1, 2), (1, 3)]))


def test_contains_cycle_examples():
    c6 = cycle_graph(6)
    assert contains_cycle(c6, [0, 1, 2, 3, 4, 5])
    assert not contains_cycle(c6, [0, 1, 2, 3, 4, 4])
    assert not contains_cycle(c6, [0, 2, 1, 3, 4, 5])
    with pytest.raises(ValueError):
        contains_cycle(c6, [0, 1])


@given(graphs())
def test_connectivity_and_bipartiteness_match_networkx(g):
    h = to_nx(g)
    assert is_connected(g) == nx.is_connected(h)
    colouring = is_bipartite(g)
    assert (colouring is not None) == nx.is_bipartite(h)
    if colouring is not None:
        assert all(colouring[u] != colouring[v] for u, v in g.edges())


@given(graphs())
def test_girth_matches_networkx(g):
    h = to_nx(g)
    if nx.is_forest(h):
        with pytest.raises(ValueError):
            girth(g)
    else:
        assert girth(g) == nx.girth(h)


@given(graphs(), st.randoms())
def test_relabel_preserves_structure(g, rnd):
    perm = list(range(g.n))
    rnd.shuffle(perm)
    r = g.relabel(perm)
    assert r.edge_count == g.edge_count
    assert all(r.has_edge(perm[u], perm[v]) for u, v in g.edges())


def test_bicayley_graphs_split_into_the_two_copies():
    inst = family("cgd4", 1, 5, 1)
    colour = is_bipartite(inst.graph)
    half = inst.graph.n // 2
    assert colour is not None
    assert set(colour[:half]) == {0} and set(colour[half:]) == {1}


@pytest.mark.parametrize("name, params", [("cgd1", (1, 11, 2)), ("cgd4", (1, 11, 1)), ("cgd5", (1, 11, 1)),
                                          ("cgd3", (1, 11, 2))])
def test_family_members_contain_a_six_cycle(name, params):
    inst = family(name, *params)
    assert girth(inst.graph) <= 6
    assert contains_cycle(inst.graph, six_cycle_vertices(inst))
