"""Theorem-case classification, the singular-vertex checklist, refutation
witnesses and corollary scans."""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from math import gcd

import networkx as nx
import numpy as np

from .action import (
    ActionSpec,
    OrbitPartition,
    conjugation_map,
    find_isomorphism,
    full_aut,
    generated_permutation_group,
    generating_sequence,
    inner_action,
    orbit_partition,
)
from .constructors import alt, dihedral, sl2
from .errors import AbelianGroup
from .graph import (
    CommutingGraph,
    GraphShape,
    build_graph,
    classic_commuting_graph,
    classify_shape,
    components_without,
    graph_to_dict,
    is_fgraph,
    simple_cycles,
    triangles,
)
from .group import (
    FiniteGroup,
    Subgroup,
    center,
    centralizer,
    closure,
    conjugacy_classes,
    derived_subgroup,
    exponent,
    is_normal,
    normal_subgroups,
    quotient,
    subgroup_as_group,
    subgroup_from_mask,
)
from .structure import (
    fitting,
    gk_graph,
    is_elementary_abelian,
    is_eppo,
    is_extraspecial,
    is_frobenius_with_kernel,
    is_prime_power,
    is_quasisimple,
    is_simple,
    is_special_p,
    layer,
    o_p,
    o_p_prime,
    omega1,
    pi,
    structure_report,
    sylow,
    upper_central_series,
)
from .fields import is_prime, prime_factors

SUBSET_CAP = 12
UNWITNESSED = "unwitnessed branch"


@dataclass
class TheoremCase:
    tag: str
    witnesses: dict = field(default_factory=dict)
    flags: list[str] = field(default_factory=list)

    @property
    def counterexample_candidate(self) -> bool:
        return self.tag == "NoBranchMatches"

    def to_dict(self) -> dict:
        return {"tag": self.tag, "witnesses": _plain(self.witnesses), "flags": list(self.flags)}


def _plain(obj):
    if isinstance(obj, dict):
        return {str(k): _plain(v) for k, v in sorted(obj.items(), key=lambda kv: str(kv[0]))}
    if isinstance(obj, (list, tuple)):
        return [_plain(v) for v in obj]
    if isinstance(obj, (np.integer,)):
        return int(obj)
    if isinstance(obj, (np.bool_,)):
        return bool(obj)
    if isinstance(obj, Subgroup):
        return {"order": len(obj)}
    return obj


# -- helpers --------------------------------------------------------------------------

def is_frobenius(G: FiniteGroup) -> bool:
    """Frobenius group test with the Fitting subgroup as the candidate kernel."""
    F = fitting(G)
    if not 1 < len(F) < G.order:
        return False
    return is_frobenius_with_kernel(G, F)


def restricted_group(G: FiniteGroup, H: Subgroup, perms: list[np.ndarray]) -> FiniteGroup:
    """Permutation group on the members of H generated by maps of G preserving H."""
    local = np.full(G.order, -1, dtype=np.int64)
    local[H.array] = np.arange(len(H))
    gens = [local[np.asarray(p)[H.array]] for p in perms]
    if any((g < 0).any() for g in gens):
        raise ValueError("map does not preserve the subgroup")
    return generated_permutation_group(gens, dense=True)


def hbar_data(G: FiniteGroup, action: ActionSpec, F: Subgroup) -> dict:
    """H = GA acting on F(G): returns |Hbar|, |Gbar| and the quotient Hbar/Gbar."""
    inner = [conjugation_map(G, g).image for g in generating_sequence(G)] or [np.arange(G.order)]
    outer = [np.asarray(a.image) for a in action.generators]
    Hbar = restricted_group(G, F, inner + outer)
    local = np.full(G.order, -1, dtype=np.int64)
    local[F.array] = np.arange(len(F))
    inner_idx = [Hbar.index_of(local[p[F.array]]) for p in inner]
    Gbar = closure(Hbar, inner_idx)
    out = {"hbar_order": Hbar.order, "gbar_order": len(Gbar), "index": Hbar.order // len(Gbar)}
    if is_normal(Hbar, Gbar):
        Q = quotient(Hbar, Gbar).quotient
        out["quotient"] = Q
        out["quotient_frobenius"] = is_frobenius(Q) if Q.order > 1 else False
    return out


def _count_order(G: FiniteGroup, H: Subgroup, k: int) -> int:
    return int(np.sum(G.element_orders[H.array] == k))


def _iso(G: FiniteGroup, H: FiniteGroup) -> bool:
    return find_isomorphism(G, H) is not None


# -- classification ------------------------------------------------------------------------

def classify_theorem_case(G: FiniteGroup, action: ActionSpec, graph: CommutingGraph, orbits: OrbitPartition | None = None) -> TheoremCase:
    orbits = orbits if orbits is not None else orbit_partition(G, action)
    primes = pi(G)
    if len(primes) < 2:
        return TheoremCase("NotApplicable", {"reason": f"|pi(G)| = {len(primes)}"})
    if not is_fgraph(graph):
        return TheoremCase("NotApplicable", {"reason": "graph is not an F-graph"})
    high = [v for v in graph.ids if graph.degree(v) >= 3]
    if not high:
        return _no_singular(G, orbits, primes)
    s = graph.vertex(high[0])
    z = s.rep
    p = int(G.element_orders[z])
    if not is_prime(p):
        return TheoremCase("NoBranchMatches", {"reason": f"singular representative has order {p}"})
    zA = orbits.orbit(z)
    P = o_p(G, p)
    F = fitting(G)
    base = {"p": p, "singular_size": s.size, "o_p_order": len(P), "fitting_order": len(F)}
    if len(P) == 1:
        return _case1(G, action, p, F, base)
    if P == F:
        C = centralizer(G, F.members)
        if C.is_subgroup_of(F):
            return _case2(G, action, orbits, p, F, zA, base)
        return _case3(G, p, P, zA, base)
    return _case4(G, orbits, p, P, F, base)


def _no_singular(G, orbits, primes) -> TheoremCase:
    if len(primes) != 2:
        return TheoremCase("NoBranchMatches", {"reason": "no singular vertex but |pi(G)| != 2"})
    p, q = primes
    P, Q = sylow(G, p), sylow(G, q)
    ok = (
        is_normal(G, P) and is_normal(G, Q)
        and is_elementary_abelian(G, P) and is_elementary_abelian(G, Q)
        and bool(G.commuting[np.ix_(P.array, Q.array)].all())
    )
    rest = np.ones(G.order, dtype=bool)
    rest[P.array] = rest[Q.array] = False
    single = lambda arr: len(np.unique(orbits.orbit_of[arr])) == 1  # noqa: E731
    ok = ok and single(P.array[1:]) and single(Q.array[1:]) and single(np.nonzero(rest)[0]) and len(orbits) == 4
    w = {"p": p, "q": q, "P_order": len(P), "Q_order": len(Q)}
    return TheoremCase("NoSingular_PxQ" if ok else "NoBranchMatches", w)


def _case1(G, action, p, F, base) -> TheoremCase:
    w = dict(base)
    S = sylow(G, 2)
    if p != 2 or not is_elementary_abelian(G, F) or len(F) * len(S) != G.order:
        w["reason"] = "case (1) structure fails"
        return TheoremCase("NoBranchMatches", w)
    q = prime_factors(len(F))[0] if len(F) > 1 else None
    w.update(q=q, sylow2_order=len(S))
    hb = hbar_data(G, action, F)
    w.update(hbar_order=hb["hbar_order"], gbar_order=hb["gbar_order"], hbar_over_gbar=hb["index"])
    Sg = subgroup_as_group(S)[0]
    if len(S) == 8 and q in (3, 7) and len(F) == q * q and _iso(Sg, dihedral(8)) and hb["index"] == q - 1:
        return TheoremCase("Case1a_D8", w)
    if len(S) == 32 and is_extraspecial(Sg) and _count_order(G, S, 4) == 20 and len(F) == 81:
        w["frobenius_quotient_order"] = hb["index"]
        if hb["index"] in (10, 20) and hb.get("quotient_frobenius"):
            return TheoremCase("Case1b_Q8D8", w)
    w["reason"] = "neither D8 nor Q8*D8 conditions hold"
    return TheoremCase("NoBranchMatches", w)


def _case2(G, action, orbits, p, F, zA, base) -> TheoremCase:
    w = dict(base)
    qg = quotient(G, F)
    Gb = qg.quotient
    w["gbar_order"] = Gb.order
    for N in normal_subgroups(Gb):
        r = len(N)
        if not is_prime(r):
            continue
        k = Gb.order // r
        if k not in (1, p, p * p):
            continue
        if k > 1:
            C = sylow(Gb, p)
            if gcd(r, p) != 1 or not np.any(Gb.element_orders[C.array] == k):
                continue
            if not is_frobenius_with_kernel(Gb, N):
                continue
        w.update(prime=r, complement_order=k)
        flags = []
        if k == p * p:
            flags.append("complement of order p^2: allowed by the theorem wording, not by the order-p wording")
        return TheoremCase("Case2a", w, flags)
    if Gb.order == 60 and is_simple(Gb):
        Z = center(G)
        zset = set(zA.tolist()) | {0}
        if set(Z.members) == zset and len(F) > len(Z):
            return TheoremCase("Case2b_SL24", w, [UNWITNESSED, "module and non-splitting clauses not checked"])
        if p == 5 and is_elementary_abelian(G, F) and len(np.unique(orbits.orbit_of[F.array[1:]])) == 2:
            return TheoremCase("Case2c_SL24_p5", w, [UNWITNESSED, "A/C_A(Gbar) clause not checked"])
    w["reason"] = "no case (2) branch applies"
    return TheoremCase("NoBranchMatches", w)


def _case3(G, p, P, zA, base) -> TheoremCase:
    w = dict(base)
    if is_quasisimple(G):
        w["order"] = G.order
        if G.order == 120 and _iso(G, sl2(5)):
            return TheoremCase("Case3_Quasisimple", {**w, "name": "SL(2,5)"})
        w["reason"] = f"quasisimple group of order {G.order} is not in the list"
        return TheoremCase("NoBranchMatches", w)
    E = layer(G)
    source = "layer"
    if E is None:
        from .structure import derived_series
        E = derived_series(G)[-1]
        source = "solvable residual"
    w.update(layer_order=len(E), layer_source=source)
    zclos = closure(G, zA.tolist())
    ok = (
        zclos == P
        and len(P) * len(E) == G.order
        and bool(G.commuting[np.ix_(P.array, E.array)].all())
        and len(E) == 60
        and is_simple(subgroup_as_group(E)[0])
    )
    if ok:
        return TheoremCase("Case3_Product", w)
    w["reason"] = "G is not O_p(G) x PSL(2,5) with O_p(G) = <z^A>"
    return TheoremCase("NoBranchMatches", w)


def _case4(G, orbits, p, P, F, base) -> TheoremCase:
    w = dict(base)
    Q = o_p_prime(G, F, p)
    qs = prime_factors(len(Q)) if len(Q) > 1 else []
    fail = lambda why: TheoremCase("NoBranchMatches", {**w, "reason": why})  # noqa: E731
    if not is_elementary_abelian(G, P):
        return fail("O_p(G) not elementary abelian")
    if len(qs) != 1:
        return fail("O_p'(F(G)) is not a q-group")
    q = qs[0]
    w["q"] = q
    if len(Q) != len(sylow(G, q)) or not is_elementary_abelian(G, Q):
        return fail("Q is not an elementary abelian Sylow subgroup")
    qp = quotient(G, P)
    Gp = qp.quotient
    K = subgroup_from_mask(Gp, np.isin(np.arange(Gp.order), np.unique(qp.coset_of[F.array])))
    if not is_frobenius_with_kernel(Gp, K):
        return fail("G/P is not Frobenius with kernel F(G)/P")
    c = G.order // len(F)
    w["complement_order"] = c
    if not is_prime(c):
        if not (is_prime_power(c) and c % p == 0):
            return fail("complement is neither of prime order nor a p-group")
        Cq = sylow(Gp, p)
        if _count_order(Gp, Cq, p) != p - 1:
            return fail("p-complement has more than one subgroup of order p")
    single = lambda H: len(np.unique(orbits.orbit_of[H.array[1:]])) == 1  # noqa: E731
    if not (single(P) and single(Q)):
        return fail("P\\{1} or Q\\{1} is not a single orbit")
    return TheoremCase("Case4_Frobenius", w)


# -- checklist -------------------------------------------------------------------------------

def _item(status: str, witness=None) -> dict:
    out = {"status": status}
    if witness is not None:
        out["witness"] = _plain(witness)
    return out


def invariant_subgroups(G: FiniteGroup, orbits: OrbitPartition, cap: int = SUBSET_CAP, seed: int = 0) -> tuple[list[Subgroup], bool]:
    """A-invariant subgroups as closures of orbit unions; second value says if sampled."""
    ids = list(range(1, len(orbits)))
    sampled = len(ids) > cap
    if sampled:
        rng = np.random.default_rng(seed)
        bits = rng.integers(0, 2, size=(2**cap, len(ids))).astype(bool)
        subsets = [tuple(np.asarray(ids)[row].tolist()) for row in bits]
    else:
        subsets = [s for r in range(len(ids) + 1) for s in itertools.combinations(ids, r)]
    found: dict[tuple, Subgroup] = {}
    for s in subsets:
        gens = [x for i in s for x in orbits.orbits[i].tolist()]
        H = closure(G, gens)
        found.setdefault(H.members, H)
    return sorted(found.values(), key=lambda H: (len(H), H.members)), sampled


def prop2_checklist(G: FiniteGroup, action: ActionSpec, graph: CommutingGraph, orbits: OrbitPartition | None = None) -> dict:
    orbits = orbits if orbits is not None else orbit_partition(G, action)
    high = [v for v in graph.ids if graph.degree(v) >= 3]
    if len(pi(G)) < 2 or not is_fgraph(graph) or not high:
        return {k: _item("n/a") for k in "abcfghijklm"}
    s = high[0]
    z = graph.vertex(s).rep
    p = int(G.element_orders[z])
    orders = G.element_orders
    rep_order = {v: int(orders[graph.vertex(v).rep]) for v in graph.ids}
    zA = orbits.orbit(z)
    out: dict[str, dict] = {}

    out["a"] = _item("pass" if is_prime(p) else "fail", {"order": p})

    bad = []
    tri = [t for t in triangles(graph) if s in t]
    for comp in components_without(graph, s):
        h = graph.nx.subgraph(comp)
        is_path = nx.is_connected(h) and h.number_of_edges() == len(comp) - 1 and max(dict(h.degree).values(), default=0) <= 2
        touching = [v for v in comp if graph.adjacent(v, s)]
        pendant = [v for v in comp if h.degree(v) <= 1]
        if not is_path or not touching or not set(touching) <= set(pendant):
            bad.append(comp)
    out["b"] = _item("pass" if not bad else "fail", bad or None)

    bad = []
    for u, v in graph.edges:
        if gcd(rep_order[u], rep_order[v]) == 1:
            if not (is_prime(rep_order[u]) and is_prime(rep_order[v]) and s in (u, v)):
                bad.append((u, v))
    for v in graph.ids:
        x = graph.vertex(v).rep
        o = rep_order[v]
        cent = len(centralizer(G, [x]))
        qs = prime_factors(o)
        if len(qs) == 1 and qs[0] != p and not set(prime_factors(cent)) <= {p, qs[0]}:
            bad.append(("centralizer", v))
        if len(qs) == 1 and qs[0] == p and v != s and len(prime_factors(cent)) > 1:
            bad.append(("centralizer", v))
    out["c"] = _item("pass" if not bad else "fail", bad or None)

    bad = []
    for comp in components_without(graph, s):
        if any(set(comp) <= set(t) for t in tri):
            continue
        bad.extend(v for v in comp if (p * p) % rep_order[v] != 0)
    Sp = sylow(G, p)
    e = exponent(subgroup_as_group(Sp)[0])
    if (p**3) % e != 0:
        bad.append(("sylow exponent", e))
    out["f"] = _item("pass" if not bad else "fail", bad or None)

    bad = []
    for q in pi(G):
        if q == p:
            continue
        Q = sylow(G, q)
        Qg, emb = subgroup_as_group(Q)
        zq = center(Qg)
        om = [int(emb[x]) for x in zq.members if Qg.element_orders[x] == q]
        x = om[0]
        xo = int(orbits.orbit_of[x])
        okx = graph.adjacent(xo, s) and len(np.unique(orbits.orbit_of[Q.array[1:]])) == 1 and exponent(Qg) == q
        if not okx:
            bad.append(q)
    out["g"] = _item("pass" if not bad else "fail", bad or None)

    subs, sampled = invariant_subgroups(G, orbits)
    bad = []
    sylows = {q: _sylow_conjugates(G, sylow(G, q)) for q in pi(G) if q != p}
    for H in subs:
        g = gcd(len(H), G.order // len(H))
        if g != 1 and prime_factors(g) != [p]:
            bad.append(("gcd", len(H)))
        for q, conjs in sylows.items():
            for Qm in conjs:
                inter = int(H.mask[Qm].sum())
                if inter not in (1, len(Qm)):
                    bad.append(("sylow", len(H), q))
                    break
    status = "fail" if bad else ("sampled" if sampled else "pass")
    out["h"] = _item(status, bad[:5] or {"subgroups": len(subs)})

    primes, edges = gk_graph(G)
    star = set(edges) == {tuple(sorted((p, q))) for q in primes if q != p}
    out["i"] = _item("pass" if star else "fail", {"edges": edges})

    zmask = np.zeros(G.order, dtype=bool)
    zmask[zA] = True
    normal_subset = all(zmask[G.conj_many(zA, g)].all() for g in generating_sequence(G))
    out["j"] = _item("pass" if normal_subset else "fail")

    P0 = sylow(G, p)
    ZP = center(subgroup_as_group(P0)[0])
    zp_members = subgroup_as_group(P0)[1][list(ZP.members)]
    if zmask[zp_members].any():
        complete = graph.degree(s) == len(graph) - 1
        inside = bool(o_p(G, p).mask[zA].all())
        out["k"] = _item("pass" if complete and inside else "fail", {"complete": complete, "in_O_p": inside})
    else:
        out["k"] = _item("n/a")

    dist = nx.single_source_shortest_path_length(graph.nx, s)
    far = [v for v in graph.ids if graph.degree(v) == 1 and dist.get(v, 99) > 2]
    out["l"] = _item("pass" if not far else "fail", far or None)

    bad = [c for c in simple_cycles(graph) if s not in c or len(c) > 4]
    out["m"] = _item("pass" if not bad else "fail", bad[:5] or None)
    return out


def _sylow_conjugates(G: FiniteGroup, Q: Subgroup) -> list[np.ndarray]:
    seen = {}
    for g in range(G.order):
        members = np.unique(G.conj_many(Q.array, g))
        seen.setdefault(members.tobytes(), members)
    return list(seen.values())


# -- analysis ---------------------------------------------------------------------------------

@dataclass
class AnalysisReport:
    group: dict
    action: dict
    orbit_sizes: list[int]
    orbit_reps: list[int]
    rep_orders: list[int]
    graph: dict
    shape: dict
    singular: dict | None
    structure: dict
    theorem_case: dict
    checklist: dict
    expected: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return _plain({
            "group": self.group,
            "action": self.action,
            "orbit_sizes": self.orbit_sizes,
            "orbit_reps": self.orbit_reps,
            "rep_orders": self.rep_orders,
            "graph": self.graph,
            "shape": self.shape,
            "singular": self.singular,
            "structure": self.structure,
            "theorem_case": self.theorem_case,
            "checklist": self.checklist,
            "expected": self.expected,
        })

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True) + "\n"

    @property
    def passed(self) -> bool:
        checks_ok = all(v["status"] in ("pass", "n/a", "sampled") for v in self.checklist.values())
        exp_ok = all(v.get("match", True) for v in self.expected.values())
        return checks_ok and exp_ok and self.theorem_case["tag"] != "NoBranchMatches"


def analyze(G: FiniteGroup, action: ActionSpec, expected=None, *, action_name: str | None = None,
            named: dict[str, int] | None = None) -> AnalysisReport:
    """Orbits, graph, shape, theorem case and checklist; `named` maps labels to elements."""
    orbits = orbit_partition(G, action)
    name = action_name or action.name
    graph = build_graph(G, orbits, {"group": G.name, "action": name})
    shape = classify_shape(graph)
    sing = None
    high = [v for v in graph.ids if graph.degree(v) >= 3]
    if shape.is_fgraph and high:
        v = graph.vertex(high[0])
        sing = {"id": v.id, "rep": v.rep, "size": v.size, "order": int(G.element_orders[v.rep])}
    case = classify_theorem_case(G, action, graph, orbits)
    checklist = prop2_checklist(G, action, graph, orbits)
    report = AnalysisReport(
        group={"name": G.name, "order": G.order},
        action={"name": name, "provenance": action.provenance, "generators": len(action.generators)},
        orbit_sizes=list(orbits.sizes),
        orbit_reps=list(orbits.reps),
        rep_orders=[int(G.element_orders[r]) for r in orbits.reps],
        graph=graph_to_dict(graph),
        shape=shape.to_dict(),
        singular=sing,
        structure=structure_report(G).summary(),
        theorem_case=case.to_dict(),
        checklist=checklist,
    )
    if expected is not None:
        sizes = {k: int(orbits.sizes[orbits.orbit_of[x]]) for k, x in (named or {}).items()}
        report.expected = compare_expected(report, expected, shape, graph, sizes)
    return report


def compare_expected(report: AnalysisReport, exp, shape: GraphShape, graph: CommutingGraph,
                     named_sizes: dict | None = None) -> dict:
    out = {}
    if exp.orbit_sizes is not None:
        out["orbit_sizes"] = {"expected": sorted(exp.orbit_sizes), "actual": sorted(report.orbit_sizes),
                              "match": sorted(exp.orbit_sizes) == sorted(report.orbit_sizes)}
    if exp.shape is not None:
        actual = str(shape)
        out["shape"] = {"expected": exp.shape, "actual": actual, "match": exp.shape == actual}
    if exp.singular_size is not None:
        actual = report.singular["size"] if report.singular else None
        out["singular_size"] = {"expected": exp.singular_size, "actual": actual, "match": exp.singular_size == actual}
    if exp.theorem_case is not None:
        actual = report.theorem_case["tag"]
        out["theorem_case"] = {"expected": exp.theorem_case, "actual": actual, "match": exp.theorem_case == actual}
    extra = exp.extra or {}
    measured = {
        "vertices": len(graph),
        "edges": len(graph.edges),
        "triangles": len(triangles(graph)),
        "tails": shape.params.get("tails"),
        "rep_orders": sorted(report.rep_orders[1:]),
        "pendant_order": [report.rep_orders[v] for v in graph.ids if graph.degree(v) == 1],
        "rep_sizes": named_sizes or None,
    }
    for key, want in extra.items():
        if key == "rep_orders":
            want = sorted(want)
        if key == "pendant_order":
            want = [want]
        if key in measured:
            out[key] = {"expected": want, "actual": measured[key], "match": want == measured[key]}
        elif key in report.theorem_case["witnesses"]:
            got = report.theorem_case["witnesses"][key]
            out[key] = {"expected": want, "actual": got, "match": want == got}
    for k in out:
        out[k]["citation"] = exp.citation
    return out


def analyze_entry(entry, action_name: str) -> AnalysisReport:
    return analyze(entry.group, entry.actions[action_name], entry.expected.get(action_name),
                   action_name=action_name, named=entry.data.get("reps"))


def verify_catalog(entries) -> list[tuple[str, str, AnalysisReport]]:
    return [(E.name, an, analyze_entry(E, an)) for E in entries for an in E.actions]


# -- refutation ---------------------------------------------------------------------------------

def commuting_quadruple(G: FiniteGroup, orbits: OrbitPartition) -> tuple[int, int, int, int] | None:
    """Four pairwise-commuting nonidentity elements in four distinct orbits.

    The first element is taken among orbit representatives (any witness can
    be moved there by the acting group).
    """
    oid = orbits.orbit_of
    C = G.commuting

    def extend(chosen: list[int], pool: np.ndarray):
        if len(chosen) == 4:
            return tuple(chosen)
        used = {int(oid[c]) for c in chosen}
        for y in pool.tolist():
            if y == 0 or int(oid[y]) in used or y <= chosen[-1] and len(chosen) > 1:
                continue
            res = extend(chosen + [y], pool[C[y, pool]])
            if res:
                return res
        return None

    for x in orbits.reps[1:]:
        pool = np.nonzero(C[x])[0]
        res = extend([x], pool)
        if res:
            return res
    return None


def refute_by_aut_clique(G: FiniteGroup, budget: int | None = None):
    """Witness that no A <= Aut(G) makes the orbit graph an F-graph, or None."""
    A = full_aut(G) if budget is None else full_aut(G, budget)
    orbits = orbit_partition(G, A)
    quad = commuting_quadruple(G, orbits)
    if quad is None:
        return None
    return {
        "elements": list(quad),
        "labels": [G.label(x) for x in quad],
        "orders": [int(G.element_orders[x]) for x in quad],
        "orbits": [int(orbits.orbit_of[x]) for x in quad],
        "aut_order": A.note.get("order"),
    }


# -- corollary scans ------------------------------------------------------------------------------

def inner_candidates(G: FiniteGroup) -> list[tuple[str, ActionSpec]]:
    """Cyclic subgroups of Inn(G) (one per class of generators), Inn(G), and its Sylow subgroups."""
    out = []
    seen = set()
    for c in conjugacy_classes(G)[1:]:
        img = conjugation_map(G, c[0]).image
        key = img.tobytes()
        if key in seen or np.array_equal(img, np.arange(G.order)):
            continue
        seen.add(key)
        out.append((f"<inn {c[0]}>", ActionSpec([conjugation_map(G, c[0])], provenance="inner")))
    out.append(("Inn", inner_action(G)))
    for p in pi(G):
        S = sylow(G, p)
        gens = generating_sequence(subgroup_as_group(S)[0])
        emb = S.array
        maps = [conjugation_map(G, int(emb[g])) for g in gens] or [conjugation_map(G, 0)]
        out.append((f"Syl{p}(Inn)", ActionSpec(maps, provenance="inner")))
    return out


def perm_order(perm: np.ndarray) -> int:
    perm = np.asarray(perm)
    seen = np.zeros(len(perm), dtype=bool)
    out = 1
    for i in range(len(perm)):
        if seen[i]:
            continue
        n, j = 0, i
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            n += 1
        out = out * n // gcd(out, n)
    return out


def acts_coprimely(G: FiniteGroup, action: ActionSpec) -> bool:
    """(|A/C_A(G)|, |G|) = 1; generator orders decide most cases without building A."""
    if any(gcd(perm_order(a.image), G.order) != 1 for a in action.generators):
        return False
    return gcd(generated_permutation_group(list(action.images)).order, G.order) == 1


def _star_like(graph: CommutingGraph) -> bool:
    n = len(graph)
    return n == 1 or (len(graph.edges) == n - 1 and any(graph.degree(v) == n - 1 for v in graph.ids))


def corollary3_structure(G: FiniteGroup, orbits: OrbitPartition) -> dict:
    special = is_special_p(G) if is_prime_power(G.order) else False
    Zs = upper_central_series(G)
    Z = Zs[0]
    Z2 = Zs[1] if len(Zs) > 1 else Zs[0]
    D = derived_subgroup(G)
    Zg = subgroup_as_group(Z)[0]
    alt_ok = False
    if is_prime_power(G.order):
        D2 = derived_subgroup(G, D)
        outside = np.nonzero(~Z2.mask)[0]
        cz = all(
            subgroup_from_mask(G, G.commuting[y] & Z2.mask) == Z for y in outside.tolist()
        )
        alt_ok = (
            len(omega1(Zg)) == len(Z) and len(Z) < len(D) and D == Z2 and len(D2) == 1 and cz
        )
    z2_orbits = len(np.unique(orbits.orbit_of[Z2.array[1:]]))
    # the two-orbit clause is only forced on the non-special branch; for a
    # special group Z_2(G) = G and the leaves are separate orbits
    return {"special": special, "alternative": alt_ok, "z2_orbits": z2_orbits,
            "ok": special or (alt_ok and z2_orbits == 2)}


def corollary_scans(entries, analyses: dict | None = None) -> dict:
    """Run the C1/C2/C3/C5 scans over catalog entries."""
    results = {"C1": [], "C2": [], "C3": [], "C4": [], "C5": []}
    for E in entries:
        G = E.group
        nonabelian = not G.is_abelian
        if len(pi(G)) >= 2:
            for name, A in inner_candidates(G):
                orb = orbit_partition(G, A)
                g = build_graph(G, orb)
                if is_fgraph(g):
                    Z = center(G)
                    GZ = quotient(G, Z).quotient
                    ok = len(Z) == 2 and GZ.order == 6 and not GZ.is_abelian
                    # a subgroup of Inn(G) = S3 contains a Sylow 2-subgroup iff its order is even
                    ok = ok and generated_permutation_group(list(A.images)).order % 2 == 0
                    results["C1"].append({"entry": E.name, "action": name, "shape": str(classify_shape(g)), "ok": ok})
        if nonabelian and len(pi(G)) >= 2:
            g = classic_commuting_graph(G)
            results["C2"].append({"entry": E.name, "fgraph": is_fgraph(g), "ok": not is_fgraph(g)})
        for an, A in E.actions.items():
            orb = orbit_partition(G, A)
            g = build_graph(G, orb)
            if not is_fgraph(g):
                continue
            shape = classify_shape(g)
            acyclic = nx.is_forest(g.nx)
            if acyclic:
                rec = {"entry": E.name, "action": an, "shape": str(shape), "star": _star_like(g)}
                rec["ok"] = rec["star"]
                if len(g) >= 3:
                    st = corollary3_structure(G, orb)
                    rec["structure"] = st
                    rec["ok"] = rec["ok"] and is_prime_power(G.order) and st["ok"]
                results["C3"].append(rec)
            if not triangles(g):
                results["C4"].append({"entry": E.name, "action": an, "shape": str(shape), "ok": _star_like(g)})
            if acts_coprimely(G, A):
                ok = is_prime_power(G.order) or str(shape) == "Cycle(3)"
                results["C5"].append({"entry": E.name, "action": an, "shape": str(shape), "ok": ok})
    results["ok"] = all(r["ok"] for k in ("C1", "C2", "C3", "C4", "C5") for r in results[k])
    return results


__all__ = [
    "AbelianGroup",
    "AnalysisReport",
    "TheoremCase",
    "alt",
    "analyze",
    "analyze_entry",
    "verify_catalog",
    "classify_theorem_case",
    "commuting_quadruple",
    "corollary_scans",
    "hbar_data",
    "inner_candidates",
    "is_eppo",
    "prop2_checklist",
    "refute_by_aut_clique",
]
