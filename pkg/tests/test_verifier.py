import json

import numpy as np
import pytest

from conftest import small_group
from orbitgraph import constructors as C
from orbitgraph.action import full_aut, inner_action, orbit_partition
from orbitgraph.catalog import catalog_entry, catalog_names
from orbitgraph.fields import field
from orbitgraph.graph import build_graph
from orbitgraph.structure import fitting, pi
from orbitgraph.verifier import (
    UNWITNESSED,
    _case2,
    analyze,
    analyze_entry,
    classify_theorem_case,
    commuting_quadruple,
    corollary_scans,
    hbar_data,
    inner_candidates,
    invariant_subgroups,
    is_frobenius,
    perm_order,
    prop2_checklist,
    refute_by_aut_clique,
)

ENTRY_ACTIONS = [(n, a) for n in catalog_names() for a in catalog_entry(n).actions]


@pytest.fixture(scope="module")
def reports():
    return {(n, a): analyze_entry(catalog_entry(n), a) for n, a in ENTRY_ACTIONS}


@pytest.mark.parametrize("name,action", ENTRY_ACTIONS)
def test_catalog_case_and_expectations(reports, name, action):
    r = reports[(name, action)]
    exp = catalog_entry(name).expected[action]
    assert r.theorem_case["tag"] == exp.theorem_case
    assert r.theorem_case["tag"] != "NoBranchMatches"
    assert all(v["match"] for v in r.expected.values()), r.expected
    assert sum(r.orbit_sizes) == r.group["order"]
    assert r.passed


@pytest.mark.parametrize("name,action", ENTRY_ACTIONS)
def test_checklist_on_singular_instances(reports, name, action):
    r = reports[(name, action)]
    statuses = {v["status"] for v in r.checklist.values()}
    assert "fail" not in statuses
    if r.singular is None or len(pi(catalog_entry(name).group)) < 2:
        assert statuses == {"n/a"}
    else:
        assert r.checklist["a"]["status"] == "pass"


def test_case_witnesses(reports):
    w4 = reports[("E4", "MSB")].theorem_case["witnesses"]
    assert w4["fitting_order"] == 81 and w4["frobenius_quotient_order"] == 20
    w5 = reports[("E5", "MT")].theorem_case["witnesses"]
    assert (w5["q"], w5["fitting_order"], w5["hbar_over_gbar"]) == (3, 9, 2)
    assert reports[("E2", "Aut")].theorem_case["witnesses"]["name"] == "SL(2,5)"


def test_hbar_recomputed_from_scratch():
    E = catalog_entry("E5")
    G = E.group
    F = fitting(G)
    hb = hbar_data(G, E.actions["MT"], F)
    assert hb["index"] == 2 and hb["hbar_order"] == 2 * hb["gbar_order"]


def test_sl23_full_aut_is_case2a():
    G = C.sl2(3)
    A = full_aut(G)
    r = analyze(G, A, action_name="Aut")
    assert sorted(r.orbit_sizes) == [1, 1, 6, 8, 8]
    assert r.theorem_case["tag"] == "Case2a"
    assert r.theorem_case["witnesses"]["prime"] == 3
    assert r.theorem_case["witnesses"]["complement_order"] == 1
    assert all(v["status"] != "fail" for v in r.checklist.values())


def _affine_sl24():
    F = field(4)
    w = F.primitive_element()
    winv = next(y for y in range(4) if F.mul_table[w][y] == 1)
    gens = [
        C.translation(F, np.array([1, 0])),
        C.affine(F, np.array([[1, 1], [0, 1]])),
        C.affine(F, np.array([[0, 1], [1, 0]])),
        C.affine(F, np.array([[w, 0], [0, winv]])),
    ]
    G = C.matrix_group(F, gens, name="AGL-SL(2,4)")
    return G, G.index_of(gens[0])


def test_unwitnessed_branches_reject_affine_sl24():
    G, t = _affine_sl24()
    assert G.order == 960
    orbits = orbit_partition(G, inner_action(G))
    F = fitting(G)
    base = {"p": 2}
    case = _case2(G, inner_action(G), orbits, 2, F, orbits.orbit(t), base)
    assert case.tag == "NoBranchMatches"
    assert UNWITNESSED not in case.flags


def test_not_applicable_cases():
    G = small_group("3^(1+2)")
    A = inner_action(G)
    g = build_graph(G, orbit_partition(G, A))
    assert classify_theorem_case(G, A, g).tag == "NotApplicable"
    S = small_group("S4")
    A = inner_action(S)
    g = build_graph(S, orbit_partition(S, A))
    assert classify_theorem_case(S, A, g).tag == "NotApplicable"


def test_refute_sl27_witness():
    G = C.sl2(7)
    w = refute_by_aut_clique(G)
    assert w is not None and w["aut_order"] == 336
    xs = w["elements"]
    assert len(set(w["orbits"])) == 4
    assert all(G.commuting[a, b] for a in xs for b in xs)
    assert 0 not in xs


def test_refute_z6_has_no_witness():
    assert refute_by_aut_clique(C.cyclic(6)) is None


def test_sl29_aut_orbits_form_fgraph_with_no_listed_case():
    # measured: under the full automorphism group (order 1440) the orbit graph
    # has no four-clique and is an F-graph outside the listed quasisimple case
    G = C.sl2(9)
    assert refute_by_aut_clique(G) is None
    r = analyze(G, full_aut(G), action_name="Aut")
    assert r.shape["text"] == "Friendship(3)"
    assert r.theorem_case["tag"] == "NoBranchMatches"


def test_commuting_quadruple_on_inner_pgl_orbits():
    # with Inn(G) alone the orbits are finer and a clique exists
    G = C.sl2(9)
    assert commuting_quadruple(G, orbit_partition(G, inner_action(G))) is not None


def test_corollary_scans_pass():
    scans = corollary_scans([catalog_entry(n) for n in catalog_names()])
    assert scans["ok"]
    assert any(r["entry"] == "E7a" for r in scans["C1"])
    assert {r["entry"] for r in scans["C5"]} >= {n for n in catalog_names() if n.startswith("GF")}
    assert all(not r["fgraph"] for r in scans["C2"])


def test_classic_s3_in_c2():
    from orbitgraph.catalog import CatalogEntry

    S3 = small_group("S3")
    scans = corollary_scans([CatalogEntry("S3", S3, {"Inn": inner_action(S3)})])
    assert scans["C2"] == [{"entry": "S3", "fgraph": False, "ok": True}]


def test_inner_candidates_cover_inn_and_sylows():
    G = small_group("S3")
    names = [n for n, _ in inner_candidates(G)]
    assert "Inn" in names and "Syl2(Inn)" in names and "Syl3(Inn)" in names


def test_invariant_subgroups_sampling():
    G = small_group("S4")
    orb = orbit_partition(G, inner_action(G))
    subs, sampled = invariant_subgroups(G, orb)
    assert not sampled
    assert sorted(len(H) for H in subs) == [1, 4, 12, 24]
    _, sampled = invariant_subgroups(G, orb, cap=2)
    assert sampled


def test_is_frobenius_and_perm_order():
    assert is_frobenius(small_group("S3")) and is_frobenius(small_group("A4"))
    assert not is_frobenius(small_group("Z6")) and not is_frobenius(small_group("Q8"))
    assert perm_order(np.array([1, 2, 0, 4, 3])) == 6


def test_checklist_not_applicable_without_singular():
    E = catalog_entry("GF(3,1,5,1)")
    G, A = E.group, E.actions["A"]
    g = build_graph(G, orbit_partition(G, A))
    assert {v["status"] for v in prop2_checklist(G, A, g).values()} == {"n/a"}


def test_reports_are_deterministic():
    E = catalog_entry("E1")
    a = analyze_entry(E, "A").to_json()
    b = analyze_entry(E, "A").to_json()
    assert a == b
    assert json.loads(a)["orbit_sizes"][0] == 1
