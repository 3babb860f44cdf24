import pytest

from orbitgraph.action import orbit_partition
from orbitgraph.catalog import (
    E7_INN_TRIANGLES,
    E7_SYL2_TRIANGLES,
    GF_PAIRS,
    catalog_entry,
    catalog_names,
    gf_frobenius_pair,
)
from orbitgraph.errors import CoprimalityViolated, OutOfRange
from orbitgraph.graph import build_graph, classify_shape, triangles
from orbitgraph.structure import center


def graph(name, action):
    E = catalog_entry(name)
    P = orbit_partition(E.group, E.actions[action])
    return E, P, build_graph(E.group, P)


def test_registry():
    names = catalog_names()
    assert names[:9] == ["E1", "E2", "E3", "E3-A5", "E4", "E5", "E6", "E7a", "E7b"]
    assert len(names) == 9 + len(GF_PAIRS)
    with pytest.raises(KeyError):
        catalog_entry("nope")
    assert catalog_entry("E1") is catalog_entry("E1")


def test_every_entry_has_expectations_for_each_action():
    for name in catalog_names():
        E = catalog_entry(name)
        assert set(E.expected) == set(E.actions)


def test_e2_orbit_sizes():
    _, P, _ = graph("E2", "Aut")
    assert sorted(P.sizes[1:]) == sorted([1, 20, 20, 30, 24, 24])


def test_e4_named_representatives():
    E, P, g = graph("E4", "MSB")
    reps = E.data["reps"]
    sizes = {k: P.sizes[P.orbit_of[x]] for k, x in reps.items()}
    assert sizes == {"v": 80, "u": 81, "beta": 90, "vbeta": 720, "delta": 1620}
    assert sum(P.sizes[1:]) == 2591
    assert E.data["B_order"] == 40


def test_e5_orbits_and_order():
    E, P, g = graph("E5", "MT")
    assert E.group.order == 72
    assert sorted(P.sizes[1:]) == [8, 9, 12, 18, 24]


def test_e3_friendship_counts():
    assert str(classify_shape(graph("E3", "U1xU2")[2])) == "Friendship(3)"
    assert str(classify_shape(graph("E3", "B")[2])) == "Friendship(5)"
    _, P, g = graph("E3-A5", "S4")
    assert sorted(P.sizes[1:]) == [3, 8, 12, 12, 24] and g.edges == []


def test_e6_shapes():
    assert str(classify_shape(graph("E6", "A1")[2])) == "Path(3)"
    assert str(classify_shape(graph("E6", "A2")[2])) == "Star(4)"


@pytest.mark.parametrize("name", ["E7a", "E7b"])
def test_e7_friendship_counts(name):
    E, _, g = graph(name, "Syl2Inn")
    assert len(triangles(g)) == E7_SYL2_TRIANGLES == 3
    _, _, g = graph(name, "Inn")
    assert len(triangles(g)) == E7_INN_TRIANGLES == 2
    G = E.group
    assert G.order == 12 and center(G).order == 2


@pytest.mark.parametrize("pair", GF_PAIRS)
def test_gf_pairs_give_triangle(pair):
    E = gf_frobenius_pair(*pair)
    P = orbit_partition(E.group, E.actions["A"])
    assert str(classify_shape(build_graph(E.group, P))) == "Cycle(3)"
    assert E.data["coprime"]
    p, n, q, m = pair
    assert sorted(P.sizes) == sorted([1, p**n - 1, q**m - 1, (p**n - 1) * (q**m - 1)])


def test_gf_pair_range_errors():
    with pytest.raises(OutOfRange):
        gf_frobenius_pair(4, 1, 3, 1)
    with pytest.raises(OutOfRange):
        gf_frobenius_pair(3, 3, 5, 1)
    with pytest.raises(CoprimalityViolated):
        gf_frobenius_pair(2, 2, 3, 1)
