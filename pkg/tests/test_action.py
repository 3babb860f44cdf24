import numpy as np
import pytest
from hypothesis import given, strategies as st

from conftest import SMALL_BUILDERS, small_group
from orbitgraph import constructors as C
from orbitgraph.action import (
    ActionSpec,
    Automorphism,
    automorphism_from_images,
    conjugation_map,
    extend_homomorphism,
    find_isomorphism,
    full_aut,
    generated_permutation_group,
    generating_sequence,
    identity_action,
    induced_group_order,
    inner_action,
    is_isomorphic,
    orbit_partition,
    overgroup_action,
)
from orbitgraph.catalog import catalog_entry
from orbitgraph.errors import BudgetExceeded, InvalidAutomorphism, NotNormal
from orbitgraph.fields import field
from orbitgraph.group import center, closure

group_names = st.sampled_from(sorted(SMALL_BUILDERS))


def naive_orbits(G, perms):
    """Oracle: grow each orbit by applying generators until stable."""
    seen, out = set(), []
    for x in range(G.order):
        if x in seen:
            continue
        orb, frontier = {x}, [x]
        while frontier:
            y = frontier.pop()
            for p in perms:
                z = int(p[y])
                if z not in orb:
                    orb.add(z)
                    frontier.append(z)
        seen |= orb
        out.append(frozenset(orb))
    return set(out)


@pytest.mark.parametrize(
    "build,order",
    [(lambda: C.cyclic(5), 4), (lambda: C.sl2(5), 120), (C.quaternion8, 24), (lambda: C.sym(3), 6),
     (lambda: C.elementary_abelian(2, 3), 168), (lambda: C.dihedral(8), 8), (lambda: C.sl2(3), 24)],
)
def test_full_aut_orders(build, order):
    G = build()
    A = full_aut(G)
    assert A.note["order"] == order
    assert induced_group_order(G, A) == order
    A.validate(G)


def test_full_aut_budget_is_explicit():
    with pytest.raises(BudgetExceeded):
        full_aut(C.sl2(5), budget=3)


def _frobenius_map(G, F):
    fr = np.array([F.frobenius(x) for x in range(F.q)])
    return Automorphism(G.lookup_forms(fr[G.elements]))


def test_aut_sl29_matches_projective_semilinear_maps():
    G = C.sl2(9)
    F = field(9)
    w = F.primitive_element()
    diag = overgroup_action([np.array([[w, 0], [0, 1]])], G).generators
    frob = _frobenius_map(G, F)
    frob.validate(G)
    route = ActionSpec(inner_action(G).generators + diag + [frob])
    assert induced_group_order(G, route) == 1440
    A = full_aut(G)
    assert A.note["order"] == 1440
    assert np.array_equal(orbit_partition(G, A).orbit_of, orbit_partition(G, route).orbit_of)


def test_sl29_order3_classes_fuse_under_diagonal_automorphism():
    G = C.sl2(9)
    F = field(9)
    w = F.primitive_element()
    u = G.index_of(np.array([[1, 1], [0, 1]]))
    inner = orbit_partition(G, inner_action(G))
    assert inner.sizes[inner.orbit_of[u]] == 40
    d = overgroup_action([np.array([[w, 0], [0, 1]])], G)
    fused = orbit_partition(G, ActionSpec(inner_action(G).generators + d.generators))
    assert fused.sizes[fused.orbit_of[u]] == 80


def test_trivial_action_orbits():
    G = C.cyclic(3)
    P = orbit_partition(G, identity_action(G))
    assert P.sizes == (1, 1, 1)


def test_orbit_sizes_sl25_full_aut():
    G = C.sl2(5)
    P = orbit_partition(G, full_aut(G))
    assert sorted(P.nontrivial_sizes()) == sorted([1, 20, 20, 30, 24, 24])


def test_overgroup_orbits_e4_e5():
    E = catalog_entry("E4")
    P = orbit_partition(E.group, E.actions["MSB"])
    assert sorted(P.nontrivial_sizes()) == [80, 81, 90, 720, 1620]
    want = {"v": 80, "u": 81, "beta": 90, "vbeta": 720, "delta": 1620}
    assert {k: P.sizes[P.orbit_of[x]] for k, x in E.data["reps"].items()} == want
    E5 = catalog_entry("E5")
    P5 = orbit_partition(E5.group, E5.actions["MT"])
    assert sorted(P5.nontrivial_sizes()) == [8, 9, 12, 18, 24]


def test_s4_action_on_a5():
    P = orbit_partition(catalog_entry("E3-A5").group, catalog_entry("E3-A5").actions["S4"])
    assert sorted(P.nontrivial_sizes()) == [3, 8, 12, 12, 24]


def test_overgroup_must_normalize():
    G = C.matrix_group(field(5), [np.array([[1, 1], [0, 1]])])
    with pytest.raises(NotNormal):
        overgroup_action([np.array([[0, 1], [1, 0]])], G)


def test_invalid_automorphisms():
    G = C.cyclic(4)
    with pytest.raises(InvalidAutomorphism):
        Automorphism(np.array([0, 2, 1, 3])).validate(G)
    with pytest.raises(InvalidAutomorphism):
        Automorphism(np.array([1, 0, 2, 3])).validate(G)
    with pytest.raises(InvalidAutomorphism):
        automorphism_from_images(G, [1], [2])


def test_isomorphism_search():
    assert is_isomorphic(C.psl2(4), C.alt(5))
    assert is_isomorphic(C.psl2(5), C.alt(5))
    assert not is_isomorphic(C.quaternion8(), C.dihedral(8))
    phi = find_isomorphism(C.sym(3), C.dihedral(6))
    S3, D6 = C.sym(3), C.dihedral(6)
    assert np.array_equal(phi[S3.table], D6.table[phi[:, None], phi[None, :]])


def test_extend_homomorphism_onto_quotient():
    G = C.cyclic(6)
    img = extend_homomorphism(G, [1], [1], C.cyclic(3))
    assert img.tolist() == [0, 1, 2, 0, 1, 2]
    assert extend_homomorphism(G, [1], [1], C.cyclic(4)) is None


@given(group_names)
def test_generating_sequence_generates(name):
    G = small_group(name)
    gens = generating_sequence(G)
    assert len(closure(G, gens)) == G.order


@given(group_names, st.data())
def test_orbit_partition_matches_naive_closure(name, data):
    G = small_group(name)
    pool = [conjugation_map(G, g) for g in range(G.order)]
    if G.order <= 60:
        pool += list(full_aut(G).generators)
    chosen = data.draw(st.lists(st.sampled_from(pool), min_size=1, max_size=3))
    A = ActionSpec(chosen)
    P = orbit_partition(G, A)
    assert {frozenset(o.tolist()) for o in P.orbits} == naive_orbits(G, [a.image for a in chosen])
    assert sum(P.sizes) == G.order
    assert P.sizes[0] == 1 and P.reps[0] == 0
    assert list(P.reps) == sorted(P.reps)
    assert all(int(o.min()) == r for o, r in zip(P.orbits, P.reps))


@given(group_names)
def test_automorphisms_preserve_element_order_and_centre(name):
    G = small_group(name)
    if G.order > 60:
        return
    Z = center(G)
    for a in full_aut(G).generators:
        assert np.array_equal(G.element_orders[a.image], G.element_orders)
        assert set(a.image[list(Z.members)].tolist()) == set(Z.members)


def test_generated_permutation_group_composes_left_to_right():
    a = np.array([1, 0, 2])
    b = np.array([0, 2, 1])
    H = generated_permutation_group([a, b])
    assert H.order == 6
