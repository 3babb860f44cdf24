import numpy as np
import pytest
from hypothesis import given, strategies as st

from conftest import SMALL_BUILDERS, small_group
from orbitgraph import constructors as C
from orbitgraph.catalog import E1_SIGMA, E1_TAU, order12_group
from orbitgraph.errors import BadAction, BadIdentification, NotNormal
from orbitgraph.group import (
    FiniteGroup,
    audit,
    center,
    central_product,
    centralizer,
    closure,
    conjugacy_classes,
    derived_subgroup,
    direct_product,
    is_normal,
    lagrange_ok,
    normal_closure,
    normal_subgroups,
    normalizer,
    quotient,
    semidirect_product,
    subgroup_as_group,
    trivial,
    whole,
)
from orbitgraph.structure import is_extraspecial, is_frobenius_with_kernel, is_simple, o_p, sylow

group_names = st.sampled_from(sorted(SMALL_BUILDERS))


def naive_closure(G, gens):
    """Oracle: keep multiplying until nothing new appears."""
    seen = {0} | set(gens)
    while True:
        new = {int(G.table[a, b]) for a in seen for b in seen} - seen
        if not new:
            return seen
        seen |= new


def test_closure_examples():
    S3 = C.sym(3)
    assert len(closure(S3, [0])) == 1
    D8 = C.dihedral(8)
    r = next(x for x in range(8) if D8.element_orders[x] == 4)
    s = next(x for x in range(8) if D8.element_orders[x] == 2 and not D8.commuting[r, x])
    assert len(closure(D8, [r, s])) == 8


def test_closure_of_order4_element_in_sl25_is_cyclic():
    G = C.sl2(5)
    t = int(np.nonzero(G.element_orders == 4)[0][0])
    H = closure(G, [t])
    powers, y = {0}, t
    while y != 0:
        powers.add(y)
        y = G.mul(y, t)
    assert set(H.members) == powers and len(H) == 4


def test_element_orders():
    G = C.sl2(5)
    minus_i = G.index_of(np.array([[4, 0], [0, 4]]))
    assert G.element_orders[0] == 1
    assert G.element_orders[minus_i] == 2
    E1 = order12_group()
    assert E1.element_orders[E1_TAU] == 4
    assert E1.element_orders[E1_SIGMA] == 3


def test_conjugacy_classes_s3():
    assert sorted(len(c) for c in conjugacy_classes(C.sym(3))) == [1, 2, 3]


def test_quotients():
    G = C.sl2(5)
    assert quotient(G, whole(G)).quotient.order == 1
    P = quotient(G, center(G)).quotient
    assert P.order == 60 and is_simple(P)
    E1 = order12_group()
    q = quotient(E1, o_p(E1, 2))
    assert q.quotient.order == 6
    K = subgroup_as_group(sylow(E1, 3))[1]
    image = closure(q.quotient, np.unique(q.coset_of[K]).tolist())
    assert is_frobenius_with_kernel(q.quotient, image)


def test_quotient_by_non_normal_subgroup_raises():
    S3 = C.sym(3)
    t = next(x for x in range(6) if S3.element_orders[x] == 2)
    with pytest.raises(NotNormal):
        quotient(S3, closure(S3, [t]))


def test_direct_product_z2_z3_is_cyclic():
    G = direct_product(C.cyclic(2), C.cyclic(3))
    assert G.order == 6 and G.element_orders.max() == 6


def test_semidirect_order12():
    G = order12_group()
    assert G.order == 12
    s, t = E1_SIGMA, E1_TAU
    assert G.mul(G.mul(G.inv[t], s), t) == G.inv[s]
    assert audit(G)


def test_semidirect_rejects_non_homomorphism():
    N, H = C.cyclic(3), C.cyclic(2)
    bad = [np.array([0, 2, 1]), np.array([0, 2, 1])]  # identity of H must act trivially
    with pytest.raises(BadAction):
        semidirect_product(N, H, bad)


def test_central_product_q8_d8():
    Q, D = C.quaternion8(), C.dihedral(8)
    zq, zd = center(Q).members[1], center(D).members[1]
    G = central_product(Q, D, [(zq, zd)])
    assert G.order == 32
    assert is_extraspecial(G)
    assert int(np.sum(G.element_orders == 4)) == 20
    assert audit(G)


def test_central_product_rejects_noncentral():
    Q, D = C.quaternion8(), C.dihedral(8)
    r = next(x for x in range(8) if D.element_orders[x] == 4)
    with pytest.raises(BadIdentification):
        central_product(Q, D, [(center(Q).members[1], r)])


def test_table_must_put_identity_first():
    with pytest.raises(ValueError):
        FiniteGroup(np.array([[1, 0], [0, 1]]))


@given(group_names, st.data())
def test_closure_matches_naive_oracle(name, data):
    G = small_group(name)
    gens = data.draw(st.lists(st.integers(0, G.order - 1), max_size=3))
    H = closure(G, gens)
    assert set(H.members) == naive_closure(G, gens)
    assert lagrange_ok(H)


@given(group_names)
def test_axioms_and_class_equation(name):
    G = small_group(name)
    assert audit(G)
    classes = conjugacy_classes(G)
    assert sum(len(c) for c in classes) == G.order
    assert all(G.order % len(c) == 0 for c in classes)
    assert len(center(G)) == sum(1 for c in classes if len(c) == 1)


@given(group_names, st.data())
def test_centralizer_and_normalizer(name, data):
    G = small_group(name)
    x = data.draw(st.integers(0, G.order - 1))
    C_ = centralizer(G, [x])
    assert all(G.commuting[x, y] for y in C_.members)
    assert len(C_) * len(next(c for c in conjugacy_classes(G) if x in c)) == G.order
    H = closure(G, [x])
    N = normalizer(G, H)
    assert H.is_subgroup_of(N) and is_normal(subgroup_as_group(N)[0], _restrict(H, N))


def _restrict(H, N):
    from orbitgraph.group import Subgroup
    local = {int(g): i for i, g in enumerate(N.array)}
    Ng = subgroup_as_group(N)[0]
    return Subgroup(tuple(sorted(local[g] for g in H.members)), Ng)


@given(group_names)
def test_normal_subgroups_are_normal(name):
    G = small_group(name)
    subs = normal_subgroups(G)
    assert subs[0] == trivial(G) and subs[-1] == whole(G)
    for N in subs:
        assert is_normal(G, N)
        assert normal_closure(G, N.members) == N
    assert is_normal(G, derived_subgroup(G))
