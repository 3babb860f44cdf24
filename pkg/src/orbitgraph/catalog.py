"""Named instances (G, A) with their expected orbit data, shapes and cases."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from .action import (
    ActionSpec,
    Automorphism,
    automorphism_from_images,
    conjugation_map,
    full_aut,
    inner_action,
    overgroup_action,
)
from .constructors import (
    _cycle,
    affine,
    alt,
    cyclic,
    elementary_abelian,
    extraspecial_p3_exp_p,
    matrix_group,
    sl2,
    sym,
    translation,
)
from .errors import CoprimalityViolated, OutOfRange
from .fields import field as gf
from .fields import is_prime
from .group import FiniteGroup, direct_product, semidirect_product
from .reps import MatrixRep


@dataclass
class Expected:
    orbit_sizes: list[int] | None = None
    shape: str | None = None
    singular_size: int | None = None
    theorem_case: str | None = None
    citation: str = ""
    extra: dict = field(default_factory=dict)


@dataclass
class CatalogEntry:
    name: str
    group: FiniteGroup
    actions: dict[str, ActionSpec]
    expected: dict[str, Expected] = field(default_factory=dict)
    description: str = ""
    data: dict = field(default_factory=dict)


# -- E1: Z3 x| Z4 with tau inverting sigma -----------------------------------------

def order12_group() -> FiniteGroup:
    N, H = cyclic(3), cyclic(4)
    inv = np.array([0, 2, 1])
    action = [np.arange(3) if h % 2 == 0 else inv for h in range(4)]
    G = semidirect_product(N, H, action, name="Z3:Z4")
    return G


E1_SIGMA, E1_TAU = 4, 1  # (1,0) and (0,1) at index n*4 + h


def e1() -> CatalogEntry:
    G = order12_group()
    t = conjugation_map(G, E1_TAU)
    alpha = automorphism_from_images(G, [E1_SIGMA, E1_TAU], [E1_SIGMA, int(G.inv[E1_TAU])])
    A = ActionSpec([t, alpha], provenance="explicit", name="<t,alpha>")
    exp = Expected(
        orbit_sizes=None,
        shape="FGraphWithSingular",
        theorem_case="Case4_Frobenius",
        citation="F-graph with 5 vertices, one triangle and two P2's",
        extra={"vertices": 5, "triangles": 1, "tails": [1, 1]},
    )
    return CatalogEntry("E1", G, {"A": A}, {"A": exp}, "Z3 x| Z4, A = <inner tau, alpha>",
                        data={"sigma": E1_SIGMA, "tau": E1_TAU})


# -- E2: SL(2,5) under Aut -------------------------------------------------------------

def e2() -> CatalogEntry:
    G = sl2(5)
    A = full_aut(G)
    exp = Expected(
        # identity orbit first, as in every entry
        orbit_sizes=[1, 1, 20, 20, 30, 24, 24],
        shape="FGraphWithSingular",
        singular_size=1,
        theorem_case="Case3_Quasisimple",
        citation="orbits of lengths 1,20,20,30,24,24; 2 triangles and a tail P2",
        extra={"triangles": 2, "tails": [1], "rep_orders": [2, 3, 6, 4, 5, 10], "pendant_order": 4},
    )
    return CatalogEntry("E2", G, {"Aut": A}, {"Aut": exp}, "SL(2,5) with its full automorphism group")


# -- E3: Z_p^k x A5 ----------------------------------------------------------------------

def _s5_on_a5() -> tuple[FiniteGroup, list[np.ndarray], list[np.ndarray]]:
    H = alt(5)
    s5 = [_cycle(5, 0, 1), _cycle(5, 0, 1, 2, 3, 4)]
    s4 = [_cycle(5, 0, 1), _cycle(5, 0, 1, 2, 3)]  # stabilizer of the fifth point
    return H, s5, s4


def z_times_a5(p: int = 7, k: int = 1) -> CatalogEntry:
    if not is_prime(p) or k not in (1, 2) or p**k > 49:
        raise OutOfRange("z_times_a5 supports Z_p^k with k <= 2 and p^k <= 49")
    Z = elementary_abelian(p, k)
    H, s5, s4 = _s5_on_a5()
    G = direct_product(Z, H, name=f"{Z.name}xA5")
    m = H.order
    F = gf(p**k)
    prim = F.primitive_element()
    zimg = F.mul_table[prim]  # field codes match the base-p digit indices
    idx = np.arange(G.order)
    zi, hi = idx // m, idx % m
    u1 = Automorphism(zimg[zi] * m + hi)

    def lift(spec: ActionSpec) -> list[Automorphism]:
        return [Automorphism(zi * m + a.image[hi]) for a in spec.generators]

    U2 = overgroup_action(s5, H, name="S5")
    U3 = overgroup_action(s4, H, name="S4")
    actions = {
        "U1xU2": ActionSpec([u1] + lift(U2), provenance="explicit", name="U1xU2"),
        "B": ActionSpec([u1] + lift(U3), provenance="explicit", name="U1xU3"),
    }
    expected = {
        "U1xU2": Expected(shape="Friendship(3)", singular_size=p**k - 1, theorem_case="Case3_Product",
                          citation="friendship graph with 3 triangles"),
        "B": Expected(shape="Friendship(5)", singular_size=p**k - 1, theorem_case="Case3_Product",
                      citation="friendship graph with 5 triangles"),
    }
    return CatalogEntry("E3", G, actions, expected, f"Z{p}^{k} x A5 with U1xU2 and B")


def e3_a5() -> CatalogEntry:
    H, _, s4 = _s5_on_a5()
    A = overgroup_action(s4, H, name="S4")
    exp = Expected(orbit_sizes=[1, 3, 8, 24, 12, 12], shape="NotConnected", theorem_case="NotApplicable",
                   citation="orbits of lengths 3,8,24,12,12; 5 vertices and no edges",
                   extra={"vertices": 5, "edges": 0})
    return CatalogEntry("E3-A5", H, {"S4": A}, {"S4": exp}, "A5 under the point stabilizer S4 of S5")


# -- E4: the GL(4,3) example -------------------------------------------------------------

def _blocks(a, b, c, d) -> np.ndarray:
    return np.block([[np.asarray(a), np.asarray(b)], [np.asarray(c), np.asarray(d)]])


def e4_matrices() -> dict[str, np.ndarray]:
    """The 4x4 matrices over GF(3) of the example, reduced mod 3."""
    O = np.zeros((2, 2), dtype=np.int64)
    I2 = np.eye(2, dtype=np.int64)
    N1 = np.array([[0, 1], [-1, 0]])
    N2 = np.array([[1, 0], [0, -1]])
    mats = {
        "alpha": _blocks(N1, O, O, N1),
        "beta": _blocks(N2, O, O, N2),
        "gamma": _blocks(I2, I2, I2, -I2),
        "delta": _blocks(O, -I2, I2, O),
        "f": np.array([[1, 1, -1, -1], [0, 0, -1, 1], [0, 0, -1, -1], [-1, 1, 1, -1]]),
        "g": np.array([[0, 1, 0, -1], [0, 0, 1, 0], [0, 1, 0, 1], [1, 0, 0, 0]]),
    }
    return {k: v % 3 for k, v in mats.items()}


def e4() -> CatalogEntry:
    F = gf(3)
    mats = e4_matrices()
    basis = np.eye(4, dtype=np.int64)
    translations = [translation(F, basis[i]) for i in range(4)]
    s_gens = [affine(F, mats[k]) for k in ("alpha", "beta", "gamma", "delta")]
    G = matrix_group(F, translations + s_gens, name="MS")
    over = translations + s_gens + [affine(F, mats["f"]), affine(F, mats["g"])]
    A = overgroup_action(over, G, name="MSB")
    reps = {
        "v": G.index_of(translation(F, basis[0])),
        "u": G.index_of(affine(F, (-np.eye(4, dtype=np.int64)) % 3)),
        "beta": G.index_of(affine(F, mats["beta"])),
        "delta": G.index_of(affine(F, mats["delta"])),
    }
    reps["vbeta"] = G.mul(reps["v"], reps["beta"])
    exp = Expected(
        orbit_sizes=[1, 80, 81, 90, 720, 1620],
        shape="Friendship(2)",
        singular_size=90,
        theorem_case="Case1b_Q8D8",
        citation="orbits of lengths 3^4-1, 3^4, 3^2*10, 3^2(3^2-1)*10, 3^4*20; friendship graph with two triangles joined at beta^A",
        extra={"fitting_order": 81, "frobenius_quotient_order": 20,
               "rep_sizes": {"v": 80, "u": 81, "beta": 90, "vbeta": 720, "delta": 1620}},
    )
    B = matrix_group(F, [mats["f"], mats["g"]], name="B")
    return CatalogEntry("E4", G, {"MSB": A}, {"MSB": exp}, "G = MS inside AGL(4,3), A = MSB by conjugation",
                        data={"reps": reps, "B_order": B.order, "overgroup": over})


# -- E5: the order-72 example ----------------------------------------------------------

def e5_generators() -> dict[str, np.ndarray]:
    """y1, y2 in the quaternion part of a Sylow 2-subgroup T of GL(2,3), and an
    involution z in T of determinant -1 with y1^z = y1^-1 and y2^z = y1 y2."""
    from .structure import sylow

    F = gf(3)
    GL = matrix_group(F, [np.array([[1, 1], [0, 1]]), np.array([[0, 2], [1, 0]]), np.array([[2, 0], [0, 1]])], name="GL(2,3)")
    T = sylow(GL, 2)
    dets = {x: F.det(GL.elements[x].reshape(2, 2)) for x in T.members}
    order = GL.element_orders
    quat = [x for x in T.members if dets[x] == 1]
    invol = [x for x in T.members if dets[x] == 2 and order[x] == 2]
    for y1 in quat:
        if order[y1] != 4:
            continue
        for y2 in quat:
            if order[y2] != 4 or GL.commuting[y1, y2]:
                continue
            for z in invol:
                if GL.conj_many(y1, z) == GL.inv[y1] and GL.conj_many(y2, z) == GL.mul(y1, y2):
                    return {k: GL.elements[v].reshape(2, 2) for k, v in (("y1", y1), ("y2", y2), ("z", z))}
    raise AssertionError("no generators with the required relations")


def e5() -> CatalogEntry:
    F = gf(3)
    gens = e5_generators()
    e = np.eye(2, dtype=np.int64)
    tr = [translation(F, e[0]), translation(F, e[1])]
    G = matrix_group(F, tr + [affine(F, gens["y1"]), affine(F, gens["z"])], name="M<y1,z>")
    over = tr + [affine(F, gens["y1"]), affine(F, gens["y2"]), affine(F, gens["z"])]
    A = overgroup_action(over, G, name="MT")
    exp = Expected(
        orbit_sizes=[1, 8, 9, 18, 12, 24],
        shape="FGraphWithSingular",
        singular_size=12,
        theorem_case="Case1a_D8",
        citation="orbits of lengths 8, 9, 18, 12, 24; a triangle together with a tail",
        extra={"q": 3, "fitting_order": 9, "hbar_over_gbar": 2, "triangles": 1, "tails": [2]},
    )
    return CatalogEntry("E5", G, {"MT": A}, {"MT": exp}, "G = M<y1,z> of order 72, A = MT by conjugation",
                        data={"generators": gens, "overgroup": over})


# -- E6: extraspecial 3^(1+2) ------------------------------------------------------------

def e6() -> CatalogEntry:
    G = extraspecial_p3_exp_p(3)
    a, b = 1, 3  # (1,0,0) and (0,1,0)
    x = automorphism_from_images(G, [a, b], [int(G.inv[b]), a])
    t = automorphism_from_images(G, [a, b], [int(G.inv[a]), b])
    x2 = Automorphism(x.image[x.image])
    inn = inner_action(G).generators
    A1 = ActionSpec(inn + [x, t], provenance="explicit", name="Inn(G)B")
    A2 = ActionSpec(inn + [x2, t], provenance="explicit", name="Inn(G)C")
    return CatalogEntry(
        "E6", G, {"A1": A1, "A2": A2},
        {
            "A1": Expected(shape="Path(3)", theorem_case="NotApplicable", citation="Gamma(G,A1) = P3"),
            "A2": Expected(shape="Star(4)", theorem_case="NotApplicable", citation="star graph with 4 vertices"),
        },
        "extraspecial group of order 27 and exponent 3",
        data={"a": a, "b": b},
    )


# -- E7: groups with |Z(G)| = 2 and G/Z(G) = S3 -------------------------------------------

def _inner_sylow2(G: FiniteGroup, g: int) -> ActionSpec:
    return ActionSpec([conjugation_map(G, g)], provenance="inner", name="Syl2(Inn)")


def e7a() -> CatalogEntry:
    G = direct_product(cyclic(2), sym(3), name="Z2xS3")
    S3 = sym(3)
    trans = next(x for x in range(S3.order) if S3.element_orders[x] == 2)
    g = trans  # (0, transposition)
    return _e7_entry("E7a", G, g, "Z2 x S3")


def e7b() -> CatalogEntry:
    G = order12_group()
    G.name = "Dic12"
    return _e7_entry("E7b", G, E1_TAU, "the dicyclic group of order 12")


# Friendship counts measured from the built graphs.
E7_SYL2_TRIANGLES = 3
E7_INN_TRIANGLES = 2


def _e7_entry(name: str, G: FiniteGroup, g: int, desc: str) -> CatalogEntry:
    return CatalogEntry(
        name, G, {"Syl2Inn": _inner_sylow2(G, g), "Inn": inner_action(G)},
        {
            "Syl2Inn": Expected(shape=f"Friendship({E7_SYL2_TRIANGLES})", theorem_case="Case4_Frobenius",
                                citation="friendship graph (count computed)"),
            "Inn": Expected(shape=f"Friendship({E7_INN_TRIANGLES})", theorem_case="Case4_Frobenius",
                            citation="friendship graph with two C3's"),
        },
        desc,
    )


# -- coprime pairs giving C3 ---------------------------------------------------------------

def gf_frobenius_pair(p: int, n: int, q: int, m: int, *, require_coprime: bool = True) -> CatalogEntry:
    """G = (Z_p)^n x (Z_q)^m with A generated by field multiplications on each factor."""
    if not (is_prime(p) and is_prime(q)) or p == q or n not in (1, 2) or m not in (1, 2):
        raise OutOfRange("need distinct primes and exponents in {1, 2}")
    if p**n * q**m > 4096:
        raise OutOfRange("group too large")
    coprime = (q**m - 1) % p != 0 and (p**n - 1) % q != 0
    if require_coprime and not coprime:
        raise CoprimalityViolated(f"({p},{n},{q},{m}): need p not dividing q^m-1 and q not dividing p^n-1")
    P, Q = elementary_abelian(p, n), elementary_abelian(q, m)
    G = direct_product(P, Q, name=f"{P.name}x{Q.name}")
    k = Q.order
    idx = np.arange(G.order)
    pi_, qi = idx // k, idx % k
    FP, FQ = gf(p**n), gf(q**m)
    a1 = Automorphism(FP.mul_table[FP.primitive_element()][pi_] * k + qi)
    a2 = Automorphism(pi_ * k + FQ.mul_table[FQ.primitive_element()][qi])
    A = ActionSpec([a1, a2], provenance="explicit", name="A1xA2")
    exp = Expected(orbit_sizes=[1, p**n - 1, q**m - 1, (p**n - 1) * (q**m - 1)], shape="Cycle(3)",
                   theorem_case="NoSingular_PxQ", citation="Gamma = C3")
    return CatalogEntry(f"GF({p},{n},{q},{m})", G, {"A": A}, {"A": exp}, "coprime field-multiplication action",
                        data={"coprime": coprime, "acting_order": (p**n - 1) * (q**m - 1)})


GF_PAIRS = ((3, 1, 5, 1), (5, 1, 7, 1), (3, 2, 5, 1))


# -- registry ---------------------------------------------------------------------------

BUILDERS: dict[str, Callable[[], CatalogEntry]] = {
    "E1": e1,
    "E2": e2,
    "E3": z_times_a5,
    "E3-A5": e3_a5,
    "E4": e4,
    "E5": e5,
    "E6": e6,
    "E7a": e7a,
    "E7b": e7b,
}
for _pair in GF_PAIRS:
    BUILDERS["GF({},{},{},{})".format(*_pair)] = (lambda pr=_pair: gf_frobenius_pair(*pr))

_CACHE: dict[str, CatalogEntry] = {}


def catalog_names() -> list[str]:
    return list(BUILDERS)


def catalog_entry(name: str) -> CatalogEntry:
    if name not in BUILDERS:
        raise KeyError(f"unknown catalog entry {name!r}; known: {', '.join(BUILDERS)}")
    if name not in _CACHE:
        _CACHE[name] = BUILDERS[name]()
    return _CACHE[name]


def paper_catalog() -> list[CatalogEntry]:
    return [catalog_entry(n) for n in BUILDERS]
