import networkx as nx
import pytest
from hypothesis import given
from hypothesis import strategies as st
from importlib.resources import files

from pentacovers.graph import Graph, complete_graph
from pentacovers.graphio import (
    from_graph6,
    from_sparse6,
    parse_graph,
    read_graph,
    to_graph6,
    to_sparse6,
    write_graph,
)


@st.composite
def graphs(draw, max_n=80):
    n = draw(st.integers(0, max_n))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True, max_size=4 * n)) if pairs else []
    return Graph.from_edges(n, chosen)


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def same(g: Graph, h: nx.Graph) -> bool:
    return g.n == h.number_of_nodes() and set(g.edges()) == {tuple(sorted(e)) for e in h.edges()}


def test_known_encodings():
    assert to_graph6(complete_graph(6)) == b"E~~w"
    assert to_graph6(Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)])) == b"Dhc"
    assert from_graph6(b"E~~w") == complete_graph(6)


@given(graphs())
def test_graph6_matches_networkx_bytes(g):
    ours = to_graph6(g)
    assert ours == nx.to_graph6_bytes(to_nx(g), header=False).strip()
    assert from_graph6(ours) == g


@given(graphs())
def test_sparse6_roundtrip_and_networkx_agreement(g):
    ours = to_sparse6(g)
    assert from_sparse6(ours) == g
    assert same(g, nx.from_sparse6_bytes(ours))
    theirs = nx.to_sparse6_bytes(to_nx(g), header=False).strip()
    assert from_sparse6(theirs) == g


def test_large_vertex_counts_use_long_headers():
    g = Graph.from_edges(2662, [(i, i + 1) for i in range(2661)])
    assert to_graph6(g)[:1] == b"~"
    assert parse_graph(to_sparse6(g)) == g
    assert parse_graph(to_graph6(g)) == g


def test_headers_are_accepted():
    g = complete_graph(4)
    assert parse_graph(b">>graph6<<" + to_graph6(g)) == g
    assert parse_graph(b">>sparse6<<" + to_sparse6(g)) == g


def test_malformed_input_is_rejected():
    with pytest.raises(ValueError):
        from_graph6(b"E~")


def test_file_roundtrip(tmp_path):
    g = complete_graph(6)
    for fmt in ("graph6", "sparse6"):
        path = tmp_path / f"k6.{fmt}"
        written = write_graph(g, path, fmt)
        assert path.read_bytes() == written + b"\n"
        assert read_graph(path) == g
    two = tmp_path / "two.g6"
    two.write_bytes(b"E~~w\nE~~w\n")
    with pytest.raises(ValueError, match="exactly one graph"):
        read_graph(two)


def test_shipped_small_graph_list_matches_the_atlas():
    shipped = [ln for ln in files("pentacovers").joinpath("small_connected.g6").read_bytes().splitlines() if ln]
    atlas = [h for h in nx.graph_atlas_g() if h.number_of_nodes() >= 1 and nx.is_connected(h)]
    assert len(shipped) == len(atlas) == 996
    for line, h in zip(shipped, atlas):
        assert same(from_graph6(line), nx.convert_node_labels_to_integers(h))
