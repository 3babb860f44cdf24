"""Concrete finite groups on element indices 0..n-1 (identity is 0).

Groups of order <= DENSE_LIMIT carry a full multiplication table.  Larger
groups built from an ambient representation answer products through a
hash-indexed oracle instead.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from math import gcd
from typing import Iterable, Sequence

import numpy as np

from .errors import BadAction, BadIdentification, ClosureTooLarge, NotNormal
from .reps import ElementIndex, hash_rows

DENSE_LIMIT = 4096
MAX_ORDER = 100_000


class FiniteGroup:
    """A finite group with elements indexed 0..order-1 and identity 0."""

    def __init__(
        self,
        table: np.ndarray | None = None,
        *,
        name: str = "G",
        labels: Sequence[str] | None = None,
        elements: np.ndarray | None = None,
        rep=None,
        dense_limit: int = DENSE_LIMIT,
    ):
        self.name = name
        self.elements = elements
        self.rep = rep
        self._labels = list(labels) if labels is not None else None
        if table is not None:
            table = np.ascontiguousarray(table, dtype=np.int32)
            self.order = table.shape[0]
        else:
            if elements is None or rep is None:
                raise ValueError("need a table or ambient elements with a representation")
            self.order = len(elements)
        self._index = ElementIndex(elements) if elements is not None else None
        if table is None and self.order <= dense_limit:
            table = self._build_table()
        self.table = table
        if table is not None:
            if not np.all(table[0] == np.arange(self.order)) or not np.all(table[:, 0] == np.arange(self.order)):
                raise ValueError("element 0 must be the identity")
            self.inv = np.argmax(table == 0, axis=1).astype(np.int64)
        else:
            inv_forms = np.stack([rep.inverse(e) for e in elements])
            self.inv = self._index.lookup(inv_forms)

    @classmethod
    def from_generators(cls, rep, generators, *, name="G", max_order=MAX_ORDER, dense_limit=DENSE_LIMIT):
        """Enumerate the group generated by ambient `generators` (BFS closure)."""
        gens = np.stack([np.asarray(g, dtype=np.int64).reshape(-1) for g in generators]) if len(generators) else np.zeros((0, rep.width), dtype=np.int64)
        ident = rep.identity()[None, :]
        found = [ident]
        seen = set(hash_rows(ident).tolist())
        frontier = ident
        total = 1
        while len(frontier):
            batch = np.concatenate([rep.multiply(frontier, g[None, :]) for g in gens]) if len(gens) else frontier[:0]
            keys = hash_rows(batch)
            _, first = np.unique(keys, return_index=True)
            first.sort()
            fresh = [i for i in first.tolist() if int(keys[i]) not in seen]
            frontier = batch[fresh]
            seen.update(int(keys[i]) for i in fresh)
            total += len(fresh)
            if total > max_order:
                raise ClosureTooLarge(f"closure exceeds {max_order} elements")
            if len(fresh):
                found.append(frontier)
        elements = np.concatenate(found)
        if len(np.unique(elements, axis=0)) != len(elements):
            raise AssertionError("hash collision during closure")
        return cls(name=name, elements=elements, rep=rep, dense_limit=dense_limit)

    def _build_table(self) -> np.ndarray:
        n = self.order
        E = self.elements
        table = np.empty((n, n), dtype=np.int32)
        for i in range(n):
            idx = self._index.lookup(self.rep.multiply(E[i][None, :], E))
            if np.any(idx < 0):
                raise ValueError("elements are not closed under multiplication")
            table[i] = idx
        return table

    # -- arithmetic --------------------------------------------------------
    @property
    def identity(self) -> int:
        return 0

    @property
    def dense(self) -> bool:
        return self.table is not None

    def mul(self, a: int, b: int) -> int:
        if self.table is not None:
            return int(self.table[a, b])
        return int(self._index.lookup(self.rep.multiply(self.elements[a], self.elements[b])[None, :])[0])

    def mul_many(self, a, b) -> np.ndarray:
        """Elementwise products of index arrays (broadcasting)."""
        a, b = np.broadcast_arrays(np.asarray(a), np.asarray(b))
        if self.table is not None:
            return self.table[a, b].astype(np.int64)
        prods = self.rep.multiply(self.elements[a.reshape(-1)], self.elements[b.reshape(-1)])
        return self._index.lookup(prods).reshape(a.shape)

    def conj_many(self, x, g) -> np.ndarray:
        """x^g = g^-1 x g, elementwise."""
        g = np.asarray(g)
        return self.mul_many(self.mul_many(self.inv[g], x), g)

    def power(self, x: int, e: int) -> int:
        r = 0
        e %= self.element_orders[x]
        b = x
        while e:
            if e & 1:
                r = self.mul(r, b)
            b = self.mul(b, b)
            e >>= 1
        return r

    def index_of(self, form) -> int:
        """Index of an ambient element (requires a representation)."""
        i = int(self._index.lookup(np.asarray(form, dtype=np.int64).reshape(1, -1))[0])
        if i < 0:
            raise KeyError("not an element of this group")
        return i

    def lookup_forms(self, forms: np.ndarray) -> np.ndarray:
        return self._index.lookup(forms)

    @cached_property
    def element_orders(self) -> np.ndarray:
        n = self.order
        orders = np.zeros(n, dtype=np.int64)
        orders[0] = 1
        base = np.arange(n)
        cur = base.copy()
        k = 1
        while np.any(orders == 0):
            k += 1
            cur = self.mul_many(cur, base)
            hit = (cur == 0) & (orders == 0)
            orders[hit] = k
        return orders

    def element_order(self, g: int) -> int:
        return int(self.element_orders[g])

    @cached_property
    def commuting(self) -> np.ndarray:
        """Boolean matrix: [x, y] = 1."""
        if self.table is not None:
            return self.table == self.table.T
        n = self.order
        out = np.zeros((n, n), dtype=bool)
        ar = np.arange(n)
        for x in range(n):
            out[x] = self.mul_many(x, ar) == self.mul_many(ar, x)
        return out

    @cached_property
    def is_abelian(self) -> bool:
        return bool(self.commuting.all())

    def label(self, g: int) -> str:
        if self._labels is not None:
            return self._labels[g]
        if self.elements is not None:
            return self.rep.label(self.elements[g])
        return f"g{g}"

    @property
    def labels(self) -> list[str]:
        return [self.label(g) for g in range(self.order)]

    def __len__(self) -> int:
        return self.order

    def __repr__(self) -> str:
        return f"FiniteGroup({self.name!r}, order={self.order})"


@dataclass(frozen=True, eq=False)
class Subgroup:
    """An explicit subgroup: sorted member indices of a parent group."""

    members: tuple[int, ...]
    parent: FiniteGroup

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, g) -> bool:
        return bool(self.mask[int(g)])

    def __iter__(self):
        return iter(self.members)

    def __eq__(self, other) -> bool:
        return isinstance(other, Subgroup) and other.parent is self.parent and other.members == self.members

    def __hash__(self) -> int:
        return hash(self.members)

    @property
    def order(self) -> int:
        return len(self.members)

    @cached_property
    def array(self) -> np.ndarray:
        return np.array(self.members, dtype=np.int64)

    @cached_property
    def mask(self) -> np.ndarray:
        m = np.zeros(self.parent.order, dtype=bool)
        m[list(self.members)] = True
        return m

    def is_subgroup_of(self, other: "Subgroup") -> bool:
        return bool(np.all(other.mask[self.array]))

    def __repr__(self) -> str:
        return f"Subgroup(order={len(self)} of {self.parent.name})"


def subgroup_from_mask(G: FiniteGroup, mask: np.ndarray) -> Subgroup:
    return Subgroup(tuple(np.nonzero(mask)[0].tolist()), G)


def whole(G: FiniteGroup) -> Subgroup:
    return Subgroup(tuple(range(G.order)), G)


def trivial(G: FiniteGroup) -> Subgroup:
    return Subgroup((0,), G)


@dataclass(frozen=True, eq=False)
class QuotientGroup:
    kernel: Subgroup
    coset_of: np.ndarray
    quotient: FiniteGroup


# -- subgroup generation ---------------------------------------------------

def closure(G: FiniteGroup, generators: Iterable[int]) -> Subgroup:
    """Smallest subgroup containing `generators`."""
    gens = sorted({int(g) for g in generators} - {0})
    mask = np.zeros(G.order, dtype=bool)
    mask[0] = True
    if not gens:
        return subgroup_from_mask(G, mask)
    frontier = np.array([0], dtype=np.int64)
    gen_arr = np.array(gens, dtype=np.int64)
    while len(frontier):
        prods = G.mul_many(frontier[:, None], gen_arr[None, :]).reshape(-1)
        prods = np.unique(prods)
        fresh = prods[~mask[prods]]
        mask[fresh] = True
        frontier = fresh
    return subgroup_from_mask(G, mask)


def is_closed(G: FiniteGroup, mask: np.ndarray) -> bool:
    """Whether a nonempty set containing 1 is closed under products."""
    S = np.nonzero(mask)[0]
    return bool(mask[G.mul_many(S[:, None], S[None, :])].all())


def join(G: FiniteGroup, *subgroups: Subgroup) -> Subgroup:
    gens = set()
    for H in subgroups:
        gens.update(H.members)
    return closure(G, gens)


def intersection(*subgroups: Subgroup) -> Subgroup:
    G = subgroups[0].parent
    mask = np.ones(G.order, dtype=bool)
    for H in subgroups:
        mask &= H.mask
    return subgroup_from_mask(G, mask)


def element_order(G: FiniteGroup, g: int) -> int:
    return G.element_order(g)


def centralizer(G: FiniteGroup, s: Iterable[int]) -> Subgroup:
    s = list(s)
    if not s:
        raise ValueError("centralizer of an empty set")
    mask = np.ones(G.order, dtype=bool)
    for x in s:
        mask &= G.commuting[int(x)]
    return subgroup_from_mask(G, mask)


def center(G: FiniteGroup) -> Subgroup:
    return subgroup_from_mask(G, G.commuting.all(axis=1))


def conjugates(G: FiniteGroup, x: int) -> np.ndarray:
    """x^g for every g, indexed by g."""
    return G.conj_many(x, np.arange(G.order))


def conjugacy_classes(G: FiniteGroup) -> list[tuple[int, ...]]:
    """Classes ordered by their minimal member; members ascending."""
    return [tuple(c) for c in _classes(G)]


def class_ids(G: FiniteGroup) -> np.ndarray:
    ids = np.empty(G.order, dtype=np.int64)
    for i, c in enumerate(_classes(G)):
        ids[list(c)] = i
    return ids


def _classes(G: FiniteGroup) -> list[list[int]]:
    cached = getattr(G, "_class_cache", None)
    if cached is not None:
        return cached
    assigned = np.zeros(G.order, dtype=bool)
    out = []
    for x in range(G.order):
        if assigned[x]:
            continue
        members = np.unique(conjugates(G, x))
        assigned[members] = True
        out.append(members.tolist())
    G._class_cache = out
    return out


def normal_closure(G: FiniteGroup, s: Iterable[int]) -> Subgroup:
    ids = class_ids(G)
    classes = _classes(G)
    gens = set()
    for x in s:
        gens.update(classes[ids[int(x)]])
    return closure(G, gens)


def is_normal(G: FiniteGroup, H: Subgroup) -> bool:
    ids = class_ids(G)
    classes = _classes(G)
    for c in set(ids[H.array].tolist()):
        if not H.mask[classes[c]].all():
            return False
    return True


def normalizer(G: FiniteGroup, H: Subgroup) -> Subgroup:
    mask = np.ones(G.order, dtype=bool)
    ar = np.arange(G.order)
    for h in H.members:
        mask &= H.mask[G.conj_many(h, ar)]
    return subgroup_from_mask(G, mask)


def commutator(G: FiniteGroup, a, b):
    """[a, b] = a^-1 b^-1 a b (elementwise)."""
    a = np.asarray(a)
    b = np.asarray(b)
    return G.mul_many(G.mul_many(G.inv[a], G.inv[b]), G.mul_many(a, b))


def commutator_subgroup(G: FiniteGroup, H: Subgroup, K: Subgroup) -> Subgroup:
    vals = commutator(G, H.array[:, None], K.array[None, :])
    return closure(G, np.unique(vals).tolist())


def derived_subgroup(G: FiniteGroup, H: Subgroup | None = None) -> Subgroup:
    H = H if H is not None else whole(G)
    return commutator_subgroup(G, H, H)


def normal_subgroups(G: FiniteGroup) -> list[Subgroup]:
    """All normal subgroups, as joins of normal closures of classes."""
    base = []
    seen = set()
    for c in _classes(G):
        N = normal_closure(G, [c[0]])
        if N.members not in seen:
            seen.add(N.members)
            base.append(N)
    found = {N.members: N for N in base}
    found[(0,)] = trivial(G)
    frontier = list(found.values())
    while frontier:
        nxt = []
        for N in frontier:
            for B in base:
                if B.is_subgroup_of(N):
                    continue
                J = join(G, N, B)
                if J.members not in found:
                    found[J.members] = J
                    nxt.append(J)
        frontier = nxt
    return sorted(found.values(), key=lambda H: (len(H), H.members))


# -- quotients and subgroup groups ----------------------------------------

def quotient(G: FiniteGroup, N: Subgroup) -> QuotientGroup:
    if not is_normal(G, N):
        raise NotNormal(f"subgroup of order {len(N)} is not normal in {G.name}")
    coset_of = np.full(G.order, -1, dtype=np.int64)
    reps = []
    Narr = N.array
    for g in range(G.order):
        if coset_of[g] >= 0:
            continue
        coset_of[G.mul_many(g, Narr)] = len(reps)
        reps.append(g)
    reps = np.array(reps, dtype=np.int64)
    table = coset_of[G.mul_many(reps[:, None], reps[None, :])]
    labels = [f"{G.label(int(r))}N" for r in reps]
    Q = FiniteGroup(table, name=f"{G.name}/N{len(N)}", labels=labels)
    return QuotientGroup(N, coset_of, Q)


def subgroup_as_group(H: Subgroup, name: str | None = None) -> tuple[FiniteGroup, np.ndarray]:
    """Re-index H as a FiniteGroup; returns (group, local -> parent index map)."""
    G = H.parent
    members = H.array
    local = np.full(G.order, -1, dtype=np.int64)
    local[members] = np.arange(len(members))
    table = local[G.mul_many(members[:, None], members[None, :])]
    labels = [G.label(int(g)) for g in members] if G._labels is not None or G.elements is not None else None
    return FiniteGroup(table, name=name or f"sub{len(H)}({G.name})", labels=labels), members


# -- products --------------------------------------------------------------

def direct_product(G: FiniteGroup, H: FiniteGroup, name: str | None = None) -> FiniteGroup:
    """G x H with (g, h) stored at index g*|H| + h."""
    m = H.order
    tg = G.table.astype(np.int64)
    th = H.table.astype(np.int64)
    table = (tg[:, None, :, None] * m + th[None, :, None, :]).reshape(G.order * m, G.order * m)
    labels = [f"({G.label(g)},{H.label(h)})" for g in range(G.order) for h in range(m)]
    return FiniteGroup(table, name=name or f"{G.name}x{H.name}", labels=labels)


def semidirect_product(N: FiniteGroup, H: FiniteGroup, action, name: str | None = None) -> FiniteGroup:
    """N x| H with (n1,h1)(n2,h2) = (n1 * phi(h1)(n2), h1 h2); index n*|H| + h.

    `action[h]` is the image array of the automorphism phi(h) of N.
    """
    phi = np.array([np.asarray(action[h], dtype=np.int64) for h in range(H.order)])
    if phi.shape != (H.order, N.order):
        raise BadAction("action must give an image array for every element of H")
    tn = N.table.astype(np.int64)
    for h in range(H.order):
        img = phi[h]
        if img[0] != 0 or len(np.unique(img)) != N.order or not np.array_equal(img[tn], tn[img[:, None], img[None, :]]):
            raise BadAction(f"phi({h}) is not an automorphism of {N.name}")
    th = H.table.astype(np.int64)
    # phi(h1) o phi(h2) must equal phi(h1 h2) for associativity
    if not np.array_equal(_compose_all(phi), phi[th]):
        raise BadAction("action is not a homomorphism H -> Aut(N)")
    m = H.order
    n_idx = np.arange(N.order)
    h_idx = np.arange(m)
    # index (n1,h1),(n2,h2)
    n1 = n_idx[:, None, None, None]
    h1 = h_idx[None, :, None, None]
    n2 = n_idx[None, None, :, None]
    h2 = h_idx[None, None, None, :]
    new_n = tn[n1, phi[h1, n2]]
    new_h = th[h1, h2]
    table = (new_n * m + new_h).reshape(N.order * m, N.order * m)
    labels = [f"({N.label(a)},{H.label(b)})" for a in range(N.order) for b in range(m)]
    return FiniteGroup(table, name=name or f"{N.name}:{H.name}", labels=labels)


def _compose_all(phi: np.ndarray) -> np.ndarray:
    # out[h1, h2, n] = phi[h1][phi[h2][n]]
    return phi[np.arange(len(phi))[:, None, None], phi[None, :, :]]


def central_product(G: FiniteGroup, H: FiniteGroup, identification, name: str | None = None) -> FiniteGroup:
    """G * H amalgamating central subgroups via `identification`: pairs (g, h)."""
    pairs = [(int(g), int(h)) for g, h in identification]
    zg = center(G)
    zh = center(H)
    gmap = dict(pairs)
    if 0 not in gmap:
        gmap[0] = 0
    if any(g not in zg or h not in zh for g, h in gmap.items()):
        raise BadIdentification("identified elements must be central")
    if len(set(gmap.values())) != len(gmap):
        raise BadIdentification("identification is not injective")
    for a in gmap:
        for b in gmap:
            ab = G.mul(a, b)
            if ab not in gmap or gmap[ab] != H.mul(gmap[a], gmap[b]):
                raise BadIdentification("identification is not an isomorphism of subgroups")
    D = direct_product(G, H)
    m = H.order
    kernel = closure(D, [g * m + int(H.inv[h]) for g, h in gmap.items()])
    if len(kernel) != len(gmap):
        raise BadIdentification("identified subgroups have different orders")
    Q = quotient(D, kernel).quotient
    Q.name = name or f"{G.name}*{H.name}"
    return Q


# -- audits ----------------------------------------------------------------

def audit(G: FiniteGroup, *, full_limit: int = 256, samples: int | None = None, seed: int = 0) -> bool:
    """Group-axiom check: identity, inverses, associativity (full or sampled)."""
    n = G.order
    ar = np.arange(n)
    if not (np.array_equal(G.mul_many(0, ar), ar) and np.array_equal(G.mul_many(ar, 0), ar)):
        return False
    if not (np.all(G.mul_many(ar, G.inv) == 0) and np.all(G.mul_many(G.inv, ar) == 0)):
        return False
    if G.table is not None and np.any(np.sort(G.table, axis=1) != ar):
        return False
    if n <= full_limit and G.table is not None:
        t = G.table.astype(np.int64)
        left = t[t[:, :, None], ar[None, None, :]]
        right = t[ar[:, None, None], t[None, :, :]]
        return bool(np.array_equal(left, right))
    rng = np.random.default_rng(seed)
    k = samples if samples is not None else 10 * n
    a, b, c = rng.integers(0, n, size=(3, k))
    return bool(np.array_equal(G.mul_many(G.mul_many(a, b), c), G.mul_many(a, G.mul_many(b, c))))


def lagrange_ok(H: Subgroup) -> bool:
    return H.parent.order % len(H) == 0


def exponent(G: FiniteGroup) -> int:
    e = 1
    for o in np.unique(G.element_orders).tolist():
        e = e * o // gcd(e, o)
    return e
