import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from pentacovers.acceptance import brute_force_automorphism_count, brute_force_isomorphic
from pentacovers.construct import canonical_arc_group, complete_bipartite, family
from pentacovers.graph import Graph, complete_graph, cycle_graph
from pentacovers.groups import AbelianGroup, identify_group, right_regular
from pentacovers.symmetry import (
    SearchBudgetExceeded,
    are_isomorphic,
    automorphism_group,
    automorphism_group_any,
    bicayley_F,
    group_is_arc_transitive,
    invariant_screen,
    is_arc_transitive,
    s_transitivity,
)


@st.composite
def small_graphs(draw, max_n=8):
    n = draw(st.integers(1, max_n))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph.from_edges(n, chosen)


def is_automorphism(g: Graph, images) -> bool:
    return all(g.has_edge(images[u], images[v]) for u, v in g.edges())


def double_edge_swap(g: Graph, rng: random.Random) -> Graph:
    edges = g.edges()
    if len(edges) < 2:
        return g
    (a, b), (c, d) = rng.sample(edges, 2)
    if len({a, b, c, d}) < 4 or g.has_edge(a, d) or g.has_edge(c, b):
        return g
    rest = [e for e in edges if e not in ((a, b), (c, d))]
    return Graph.from_edges(g.n, rest + [(a, d), (c, b)])


@pytest.mark.parametrize("graph, order", [
    (complete_graph(6), 720), (cycle_graph(9), 18), (complete_bipartite(5), 28800),
    (family("i12").graph, 120), (family("k66m").graph, 1440), (family("g48").graph, 960),
    (family("cgd125").graph, 30000), (family("cd", 11).graph, 1320),
])
def test_known_orders(graph, order):
    aut = automorphism_group(graph)
    assert aut.order == order
    assert all(is_automorphism(graph, g.images) for g in aut.generators)


def test_stabilizers_are_identified():
    assert identify_group(automorphism_group(family("g48").graph).stabilizer()) == "F_20"
    assert identify_group(automorphism_group(family("k6").graph).stabilizer()) == "S_5"
    assert identify_group(automorphism_group(family("g60").graph).stabilizer()) == "D_5"


def test_disconnected_input_needs_the_general_entry_point():
    g = Graph.from_edges(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)])
    with pytest.raises(ValueError, match="connected"):
        automorphism_group(g)
    assert automorphism_group_any(g).order == 72


@given(small_graphs())
def test_order_matches_brute_force(g):
    assert automorphism_group_any(g).order == brute_force_automorphism_count(g)


@given(small_graphs(), st.randoms(use_true_random=False))
def test_isomorphism_matches_brute_force(g, rnd):
    h = g
    for _ in range(rnd.randint(0, 4)):
        h = double_edge_swap(h, rnd)
    perm = list(range(g.n))
    rnd.shuffle(perm)
    h = h.relabel(perm)
    iso = are_isomorphic(g, h)
    assert (iso is not None) == brute_force_isomorphic(g, h)
    if iso is not None:
        assert all(h.has_edge(iso[u], iso[v]) for u, v in g.edges())


@pytest.mark.parametrize("name, params", [("i12_2", ()), ("g60", ()), ("cgd4", (1, 5)), ("cd", (31,)),
                                          ("cgd4", (1, 11))])
def test_order_is_invariant_under_relabelling(name, params):
    g = family(name, *params).graph
    rng = random.Random(g.n)
    for _ in range(2):
        perm = list(range(g.n))
        rng.shuffle(perm)
        h = g.relabel(perm)
        assert automorphism_group(h).order == automorphism_group(g).order
        iso = are_isomorphic(g, h)
        assert iso is not None and all(h.has_edge(iso[u], iso[v]) for u, v in g.edges())


def test_orbit_stabilizer():
    for name in ("k66m", "i12_2", "g120"):
        g = family(name).graph
        aut = automorphism_group(g)
        assert aut.order == g.n * aut.stabilizer_order
        assert aut.group().order() == aut.order


def test_distinct_family_members_are_not_isomorphic():
    a = family("cgd1", 1, 11, 2).graph
    b = family("cgd2", 1, 11, 2).graph
    assert are_isomorphic(a, b) is None
    assert invariant_screen(a)["degrees"] == invariant_screen(b)["degrees"]


@given(small_graphs(), st.randoms(use_true_random=False))
def test_screen_is_an_invariant(g, rnd):
    perm = list(range(g.n))
    rnd.shuffle(perm)
    assert invariant_screen(g) == invariant_screen(g.relabel(perm))


def test_budget_is_enforced():
    with pytest.raises(SearchBudgetExceeded):
        automorphism_group(family("g120").graph, budget=3)


def test_arc_transitivity():
    star = Graph.from_edges(6, [(0, i) for i in range(1, 6)])
    assert not is_arc_transitive(star, automorphism_group(star))
    g = family("g60").graph
    assert is_arc_transitive(g, automorphism_group(g))
    # translations are regular on vertices, so they cannot reach all 5n arcs
    inst = family("cd", 11)
    R = right_regular(inst.group)
    assert R.is_transitive()
    assert not group_is_arc_transitive(inst.graph, list(R.generators))
    assert group_is_arc_transitive(inst.graph, list(canonical_arc_group(inst).generators))


@pytest.mark.parametrize("name, params, s", [
    ("k6", (), 2), ("k55", (), 3), ("g48", (), 2), ("g60", (), 1), ("cd", (11,), 2), ("cd", (31,), 1),
    ("cgd4", (1, 5), 3), ("cgd1", (1, 11, 2), 1),
])
def test_s_transitivity(name, params, s):
    g = family(name, *params).graph
    assert s_transitivity(g, automorphism_group(g)) == s


@pytest.mark.parametrize("moduli, S, size", [
    ((5,), [(k,) for k in range(5)], 20),
    ((1, 11, 11), None, 10),
])
def test_bicayley_fixer(moduli, S, size):
    H = AbelianGroup(moduli)
    if S is None:
        S = [tuple(v) for v in family("cgd4", 1, 11).bicayley_form[1]]
    res = bicayley_F(H, S)
    assert len(res.F) == size
    assert all(f[0] == 0 for f in res.F)
    assert res.verified
