import json

import networkx as nx
import numpy as np
import pytest
from hypothesis import given, strategies as st

from conftest import SMALL_BUILDERS, small_group
from orbitgraph import constructors as C
from orbitgraph.action import ActionSpec, conjugation_map, full_aut, identity_action, orbit_partition
from orbitgraph.catalog import catalog_entry
from orbitgraph.errors import AbelianGroup, NotFGraph
from orbitgraph.graph import (
    CommutingGraph,
    Vertex,
    _from_edges,
    build_graph,
    build_graph_from_reps,
    classic_commuting_graph,
    classify_shape,
    export_dot,
    export_json,
    has_induced_clique4,
    import_json,
    is_connected,
    is_fgraph,
    is_triangle_free,
    max_degree_census,
    simple_cycles,
    singular_vertex,
    triangles,
)

group_names = st.sampled_from(sorted(SMALL_BUILDERS))


def graph_of(name, action):
    E = catalog_entry(name)
    G = E.group
    return G, build_graph(G, orbit_partition(G, E.actions[action]))


def make_graph(n, edges):
    return _from_edges([Vertex(i, i, 1) for i in range(1, n + 1)], edges, {})


def test_abelian_transitive_gives_single_vertex():
    G = C.cyclic(5)
    g = build_graph(G, orbit_partition(G, full_aut(G)))
    assert len(g) == 1 and g.edges == []
    assert classify_shape(g).kind == "Path"


def test_e2_two_triangles_and_a_tail():
    G, g = graph_of("E2", "Aut")
    assert len(g) == 6
    shape = classify_shape(g)
    assert shape.kind == "FGraphWithSingular"
    assert shape.params["triangles"] == 2 and shape.params["tails"] == [1]
    s = g.vertex(singular_vertex(g))
    assert s.size == 1
    (pendant,) = [v for v in g.ids if g.degree(v) == 1]
    assert g.vertex(pendant).size == 30 and G.element_orders[g.vertex(pendant).rep] == 4
    assert len(triangles(g)) == 2


def test_e1_one_triangle_two_tails():
    _, g = graph_of("E1", "A")
    shape = classify_shape(g)
    assert len(g) == 5 and len(triangles(g)) == 1
    assert shape.params["tails"] == [1, 1]


def test_shapes_of_catalog_examples():
    assert str(classify_shape(graph_of("E6", "A1")[1])) == "Path(3)"
    assert str(classify_shape(graph_of("E6", "A2")[1])) == "Star(4)"
    _, g4 = graph_of("E4", "MSB")
    assert str(classify_shape(g4)) == "Friendship(2)"
    assert g4.vertex(singular_vertex(g4)).size == 90


def test_singular_vertex_absent_and_errors():
    c3 = make_graph(3, [(1, 2), (2, 3), (1, 3)])
    assert singular_vertex(c3) is None
    assert str(classify_shape(c3)) == "Cycle(3)"
    k4 = make_graph(4, [(a, b) for a in range(1, 5) for b in range(a + 1, 5)])
    with pytest.raises(NotFGraph):
        singular_vertex(k4)
    assert has_induced_clique4(k4) == (1, 2, 3, 4)
    assert classify_shape(make_graph(2, [])).kind == "NotConnected"


def test_triangle_queries():
    p3 = make_graph(3, [(1, 2), (2, 3)])
    assert triangles(p3) == [] and is_triangle_free(p3)
    assert max_degree_census(p3) == {1: 2, 2: 1}


def test_sl27_full_aut_graph_has_clique4():
    G = C.sl2(7)
    g = build_graph(G, orbit_partition(G, full_aut(G)))
    assert has_induced_clique4(g) is not None
    assert not is_fgraph(g)


def test_classic_commuting_graphs():
    s3 = classic_commuting_graph(C.sym(3))
    assert len(s3) == 5 and not is_connected(s3) and len(s3.edges) == 1
    q8 = classic_commuting_graph(C.quaternion8())
    assert len(q8) == 6 and len(q8.edges) == 3 and max_degree_census(q8) == {1: 6}
    d8 = classic_commuting_graph(C.dihedral(8))
    assert len(d8) == 6 and len(d8.edges) == 3
    with pytest.raises(AbelianGroup):
        classic_commuting_graph(C.cyclic(4))


def test_dot_export():
    one = make_graph(1, [])
    assert export_dot(one).count("[label=") == 1
    _, g = graph_of("E1", "A")
    dot = export_dot(g)
    assert dot.count("[label=") == 5 and dot.count(" -- ") == 5
    assert export_dot(g) == dot


def test_json_roundtrip_and_stability():
    _, g = graph_of("E2", "Aut")
    text = export_json(g)
    back = import_json(text)
    assert back.adjacency == g.adjacency
    assert export_json(back) == text
    data = json.loads(text)
    assert set(data) == {"vertices", "edges", "source"}


@given(group_names, st.data())
def test_two_graph_routes_agree(name, data):
    G = small_group(name)
    gs = data.draw(st.lists(st.integers(0, G.order - 1), min_size=1, max_size=2))
    A = ActionSpec([conjugation_map(G, g) for g in gs])
    P = orbit_partition(G, A)
    a, b = build_graph(G, P), build_graph_from_reps(G, P)
    assert a.edges == b.edges
    assert sum(v.size for v in a.vertices) == G.order - 1


def test_two_graph_routes_agree_on_catalog():
    for name in ("E1", "E2", "E3", "E5", "E6", "E7a", "GF(3,2,5,1)"):
        E = catalog_entry(name)
        for A in E.actions.values():
            P = orbit_partition(E.group, A)
            assert build_graph(E.group, P).edges == build_graph_from_reps(E.group, P).edges


@st.composite
def random_graphs(draw):
    n = draw(st.integers(1, 9))
    pairs = [(a, b) for a in range(1, n + 1) for b in range(a + 1, n + 1)]
    edges = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return make_graph(n, edges)


@st.composite
def friendship_like(draw):
    k = draw(st.integers(1, 4))
    tails = draw(st.lists(st.integers(1, 3), max_size=3))
    edges, nxt = [], 2
    for _ in range(k):
        edges += [(1, nxt), (1, nxt + 1), (nxt, nxt + 1)]
        nxt += 2
    for t in tails:
        prev = 1
        for _ in range(t):
            edges.append((prev, nxt))
            prev, nxt = nxt, nxt + 1
    return make_graph(nxt - 1, edges), k, tails


@given(random_graphs())
def test_shape_consistency(g):
    shape = classify_shape(g)
    assert shape.is_fgraph == is_fgraph(g)
    if shape.kind == "Friendship":
        k = shape.params["k"]
        assert len(g) == 2 * k + 1 and len(g.edges) == 3 * k
    if shape.kind == "Star":
        assert len(g.edges) == len(g) - 1
    if shape.is_fgraph and not any(g.degree(v) >= 3 for v in g.ids):
        assert shape.kind in ("Path", "Cycle")
    if shape.is_fgraph and is_triangle_free(g) and nx.is_forest(g.nx):
        assert shape.kind in ("Path", "Star")


@given(friendship_like())
def test_triangles_with_tails(data):
    g, k, tails = data
    shape = classify_shape(g)
    if not tails and k >= 2:
        assert str(shape) == f"Friendship({k})"
    elif k + len(tails) >= 2 or (k == 1 and tails):
        assert shape.kind in ("FGraphWithSingular", "Friendship")
        if shape.kind == "FGraphWithSingular":
            assert shape.params["triangles"] == k
            assert shape.params["tails"] == sorted(tails)
    assert all(1 in c for c in simple_cycles(g))
