"""Structural invariants: Sylow and Fitting subgroups, series, Eppo and
Frobenius tests, p-group subgroups, and the layer of a small group."""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd

import numpy as np

from .action import ActionSpec, generated_permutation_group
from .errors import BadKernel, HypothesisViolated, NotAPGroup
from .fields import prime_factors, prime_power
from .group import (
    FiniteGroup,
    Subgroup,
    center,
    closure,
    conjugacy_classes,
    derived_subgroup,
    exponent,
    is_normal,
    join,
    normal_closure,
    normal_subgroups,
    normalizer,
    quotient,
    subgroup_as_group,
    subgroup_from_mask,
    trivial,
    whole,
)

LAYER_LIMIT = 1000


def pi(G: FiniteGroup) -> list[int]:
    return prime_factors(G.order)


def p_part(n: int, p: int) -> int:
    out = 1
    while n % p == 0:
        n //= p
        out *= p
    return out


def is_prime_power(n: int) -> bool:
    return n > 1 and len(prime_factors(n)) == 1


def is_p_element_mask(G: FiniteGroup, p: int) -> np.ndarray:
    o = G.element_orders
    return o == np.array([p_part(int(x), p) for x in o])


# -- Sylow, O_p, Fitting -------------------------------------------------------

def sylow(G: FiniteGroup, p: int) -> Subgroup:
    """Deterministic Sylow p-subgroup by greedy extension inside normalizers."""
    target = p_part(G.order, p)
    if target == 1:
        return trivial(G)
    pel = is_p_element_mask(G, p)
    orders = G.element_orders
    cands = np.nonzero(pel)[0]
    start = int(cands[np.argmax(orders[cands])])
    P = closure(G, [start])
    while len(P) < target:
        N = normalizer(G, P)
        # a p-element x of N(P) outside P with x^p in P; <P, x> is a p-group
        xp = N.array.copy()
        for _ in range(p - 1):
            xp = G.mul_many(xp, N.array)
        ok = (~P.mask[N.array]) & P.mask[xp] & pel[N.array]
        if not ok.any():
            raise AssertionError("Sylow extension stalled")
        x = int(N.array[np.argmax(ok)])
        P = closure(G, list(P.members) + [x])
    return P


def o_p(G: FiniteGroup, p: int) -> Subgroup:
    """Largest normal p-subgroup: union of the classes inside a Sylow p-subgroup."""
    P = sylow(G, p)
    mask = np.zeros(G.order, dtype=bool)
    for c in conjugacy_classes(G):
        if P.mask[list(c)].all():
            mask[list(c)] = True
    return subgroup_from_mask(G, mask)


def o_p_by_intersection(G: FiniteGroup, p: int) -> Subgroup:
    """Intersection of all conjugates of a Sylow p-subgroup."""
    P = sylow(G, p)
    mask = P.mask.copy()
    for g in range(G.order):
        mask &= P.mask[G.conj_many(np.arange(G.order), G.inv[g])]
    return subgroup_from_mask(G, mask)


def o_p_brute_force(G: FiniteGroup, p: int) -> Subgroup:
    """Largest normal p-subgroup from a full normal-subgroup scan (small G only)."""
    best = trivial(G)
    for N in normal_subgroups(G):
        if is_prime_power(len(N)) and len(N) % p == 0 and len(N) > len(best):
            best = N
    return best


def fitting(G: FiniteGroup) -> Subgroup:
    gens: list[int] = []
    for p in pi(G):
        gens.extend(o_p(G, p).members)
    return closure(G, gens)


def o_p_prime(G: FiniteGroup, H: Subgroup, p: int) -> Subgroup:
    """O_{p'}(H) for a nilpotent subgroup H: its p'-elements."""
    o = G.element_orders[H.array]
    keep = H.array[o % p != 0]
    return closure(G, keep.tolist())


# -- series and predicates ---------------------------------------------------

def derived_series(G: FiniteGroup) -> list[Subgroup]:
    series = [whole(G)]
    while True:
        D = derived_subgroup(G, series[-1])
        if D == series[-1]:
            return series
        series.append(D)


def upper_central_series(G: FiniteGroup) -> list[Subgroup]:
    """Z_1 = Z(G) < Z_2 < ... until it stabilizes."""
    series = [center(G)]
    while True:
        Zi = series[-1]
        if len(Zi) == G.order:
            return series
        q = quotient(G, Zi)
        zq = center(q.quotient)
        nxt = subgroup_from_mask(G, zq.mask[q.coset_of])
        if nxt == Zi:
            return series
        series.append(nxt)


def is_nilpotent(G: FiniteGroup) -> bool:
    return len(fitting(G)) == G.order


def is_solvable(G: FiniteGroup) -> bool:
    return len(derived_series(G)[-1]) == 1


def is_perfect(G: FiniteGroup) -> bool:
    return len(derived_subgroup(G)) == G.order


def is_simple(G: FiniteGroup) -> bool:
    if G.order == 1:
        return False
    return all(len(normal_closure(G, [c[0]])) == G.order for c in conjugacy_classes(G)[1:])


def is_quasisimple(G: FiniteGroup) -> bool:
    if G.order == 1 or not is_perfect(G):
        return False
    return is_simple(quotient(G, center(G)).quotient)


def is_eppo(G: FiniteGroup) -> bool:
    return all(o == 1 or is_prime_power(int(o)) for o in np.unique(G.element_orders))


def gk_graph(G: FiniteGroup) -> tuple[list[int], list[tuple[int, int]]]:
    """Prime graph: vertices pi(G), edge p-q iff an element of order pq exists."""
    primes = pi(G)
    orders = set(np.unique(G.element_orders).tolist())
    edges = [(p, q) for i, p in enumerate(primes) for q in primes[i + 1:] if any(o % (p * q) == 0 for o in orders)]
    return primes, edges


def is_frobenius_with_kernel(G: FiniteGroup, K: Subgroup) -> bool:
    if not 1 < len(K) < G.order or not is_normal(G, K):
        raise BadKernel("kernel must be a proper nontrivial normal subgroup")
    outside = np.nonzero(~K.mask)[0]
    fixed = G.commuting[np.ix_(outside, K.array)]
    return int(fixed.sum()) == len(outside)  # only the identity column


# -- p-groups ------------------------------------------------------------------

def _prime_of_p_group(G: FiniteGroup) -> int:
    try:
        p, _ = prime_power(G.order)
    except Exception:
        raise NotAPGroup(f"{G.name} has order {G.order}") from None
    return p


def omega1(G: FiniteGroup) -> Subgroup:
    p = _prime_of_p_group(G)
    return closure(G, np.nonzero(G.element_orders == p)[0].tolist())


def agemo1(G: FiniteGroup) -> Subgroup:
    p = _prime_of_p_group(G)
    return closure(G, np.unique([G.power(x, p) for x in range(G.order)]).tolist())


def frattini_p(G: FiniteGroup) -> Subgroup:
    _prime_of_p_group(G)
    return join(G, derived_subgroup(G), agemo1(G))


def _elementary_abelian(G: FiniteGroup, H: Subgroup, p: int) -> bool:
    sub = H.array
    return bool(G.commuting[np.ix_(sub, sub)].all()) and bool(np.all(np.isin(G.element_orders[sub], (1, p))))


def is_special_p(G: FiniteGroup) -> bool:
    p = _prime_of_p_group(G)
    Z = center(G)
    if G.is_abelian:
        return False
    return Z == derived_subgroup(G) == frattini_p(G) and _elementary_abelian(G, Z, p)


def is_extraspecial(G: FiniteGroup) -> bool:
    p = _prime_of_p_group(G)
    return is_special_p(G) and len(center(G)) == p


def is_elementary_abelian(G: FiniteGroup, H: Subgroup | None = None) -> bool:
    H = H if H is not None else whole(G)
    if len(H) == 1:
        return True
    if not is_prime_power(len(H)):
        return False
    return _elementary_abelian(G, H, prime_factors(len(H))[0])


# -- coprime action facts --------------------------------------------------------

def induced_group(G: FiniteGroup, action: ActionSpec, dense: bool = True) -> FiniteGroup:
    return generated_permutation_group(list(action.images), dense=dense)


def fixed_subgroup(G: FiniteGroup, perm: np.ndarray) -> Subgroup:
    return subgroup_from_mask(G, np.asarray(perm) == np.arange(G.order))


def coprime_facts_check(G: FiniteGroup, action: ActionSpec) -> bool:
    """G is generated by the fixed-point subgroups of the nontrivial elements of A.

    Hypotheses (checked on the permutation group A induces on G): A is
    elementary abelian and noncyclic, and (|A|, |G|) = 1.
    """
    Abar = induced_group(G, action)
    n = Abar.order
    if n == 1 or gcd(n, G.order) != 1:
        raise HypothesisViolated("acting group must be nontrivial and of order coprime to |G|")
    if not is_elementary_abelian(Abar) or n == exponent(Abar):
        raise HypothesisViolated("acting group must be elementary abelian and noncyclic")
    gens: set[int] = set()
    for a in range(1, n):
        gens.update(fixed_subgroup(G, Abar.elements[a]).members)
    return len(closure(G, gens)) == G.order


def fixed_point_free(G: FiniteGroup, action: ActionSpec) -> bool:
    """Every nontrivial element of the induced group fixes only the identity."""
    Abar = induced_group(G, action, dense=False)
    moved = Abar.elements[1:] != np.arange(G.order)[None, :]
    return bool(moved[:, 1:].all())


# -- layer ------------------------------------------------------------------------

def layer(G: FiniteGroup) -> Subgroup | None:
    """E(G): join of the quasisimple subnormal subgroups, or None when |G| is too large.

    Subnormal candidates are searched along chains of normal subgroups of
    normal subgroups.
    """
    if G.order > LAYER_LIMIT:
        return None
    found: list[Subgroup] = []
    seen: set[tuple[int, ...]] = set()
    frontier = [whole(G)]
    while frontier:
        nxt = []
        for H in frontier:
            Hg, emb = subgroup_as_group(H)
            for N in normal_subgroups(Hg):
                members = tuple(sorted(emb[list(N.members)].tolist()))
                if members in seen or len(N) == 1:
                    continue
                seen.add(members)
                sub = Subgroup(members, G)
                if is_quasisimple(subgroup_as_group(sub)[0]):
                    found.append(sub)
                if len(N) < len(H):
                    nxt.append(sub)
        frontier = nxt
    if not found:
        return trivial(G)
    return join(G, *found)


@dataclass
class StructureReport:
    pi: list[int]
    exponent: int
    center: Subgroup
    derived_series: list[Subgroup]
    upper_central: list[Subgroup]
    sylow: dict[int, Subgroup]
    o_p: dict[int, Subgroup]
    fitting: Subgroup
    flags: dict[str, bool] = field(default_factory=dict)

    def summary(self) -> dict:
        return {
            "pi": self.pi,
            "exponent": self.exponent,
            "center_order": len(self.center),
            "derived_series_orders": [len(H) for H in self.derived_series],
            "upper_central_orders": [len(H) for H in self.upper_central],
            "sylow_orders": {str(p): len(S) for p, S in self.sylow.items()},
            "o_p_orders": {str(p): len(S) for p, S in self.o_p.items()},
            "fitting_order": len(self.fitting),
            "flags": dict(sorted(self.flags.items())),
        }


def structure_report(G: FiniteGroup) -> StructureReport:
    ps = pi(G)
    ds = derived_series(G)
    F = fitting(G)
    flags = {
        "nilpotent": len(F) == G.order,
        "solvable": len(ds[-1]) == 1,
        "perfect": len(ds) == 1 or len(ds[1]) == G.order,
        "simple": is_simple(G),
        "quasisimple": is_quasisimple(G),
        "eppo": is_eppo(G),
    }
    return StructureReport(
        pi=ps,
        exponent=exponent(G),
        center=center(G),
        derived_series=ds,
        upper_central=upper_central_series(G),
        sylow={p: sylow(G, p) for p in ps},
        o_p={p: o_p(G, p) for p in ps},
        fitting=F,
        flags=flags,
    )
