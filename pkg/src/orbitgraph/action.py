"""Automorphism actions given by generator maps, orbits, and Aut(G) search.

The acting group A is never enumerated: an action is a list of image
arrays, one per generator of A.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from functools import cached_property
from typing import Sequence

import numpy as np

from .errors import BudgetExceeded, InvalidAutomorphism, NotNormal
from .group import FiniteGroup, class_ids, closure, conjugacy_classes
from .reps import PermutationRep

DEFAULT_BUDGET = 2_000_000


@dataclass(frozen=True, eq=False)
class Automorphism:
    image: np.ndarray

    def __call__(self, x):
        return self.image[x]

    def validate(self, G: FiniteGroup, *, full_limit: int = 4096, samples: int = 20000) -> None:
        img = np.asarray(self.image)
        n = G.order
        if img.shape != (n,):
            raise InvalidAutomorphism(f"image array has shape {img.shape}, expected ({n},)")
        if img[0] != 0:
            raise InvalidAutomorphism("identity must map to identity")
        if len(np.unique(img)) != n or img.min() < 0 or img.max() >= n:
            raise InvalidAutomorphism("image array is not a bijection")
        if n <= full_limit and G.table is not None:
            t = G.table
            if not np.array_equal(img[t], t[img[:, None], img[None, :]]):
                raise InvalidAutomorphism("map does not preserve multiplication")
        else:
            rng = np.random.default_rng(0)
            a, b = rng.integers(0, n, size=(2, samples))
            if not np.array_equal(img[G.mul_many(a, b)], G.mul_many(img[a], img[b])):
                raise InvalidAutomorphism("map does not preserve multiplication")


@dataclass(eq=False)
class ActionSpec:
    """A group of automorphisms of G, given by generators."""

    generators: list[Automorphism]
    provenance: str = "explicit"
    name: str = ""
    note: dict = field(default_factory=dict)

    def __post_init__(self):
        if not self.generators:
            raise ValueError("an action needs at least one generator (use the identity map for trivial A)")

    @property
    def images(self) -> np.ndarray:
        return np.stack([np.asarray(a.image) for a in self.generators])

    def validate(self, G: FiniteGroup) -> "ActionSpec":
        for a in self.generators:
            a.validate(G)
        return self

    def combined(self, other: "ActionSpec", name: str = "") -> "ActionSpec":
        return ActionSpec(self.generators + other.generators, provenance="explicit", name=name)


def identity_action(G: FiniteGroup) -> ActionSpec:
    return ActionSpec([Automorphism(np.arange(G.order))], provenance="explicit", name="trivial")


# -- orbits ------------------------------------------------------------------

class UnionFind:
    def __init__(self, n: int):
        self.parent = list(range(n))
        self.rank = [0] * n

    def find(self, x: int) -> int:
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, x: int, y: int) -> None:
        x, y = self.find(x), self.find(y)
        if x == y:
            return
        if self.rank[x] < self.rank[y]:
            x, y = y, x
        elif self.rank[x] == self.rank[y]:
            self.rank[x] += 1
        self.parent[y] = x


@dataclass(frozen=True, eq=False)
class OrbitPartition:
    orbit_of: np.ndarray
    reps: tuple[int, ...]
    sizes: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.reps)

    @cached_property
    def orbits(self) -> list[np.ndarray]:
        order = np.argsort(self.orbit_of, kind="stable")
        bounds = np.cumsum((0,) + self.sizes)
        return [order[bounds[i]:bounds[i + 1]] for i in range(len(self.reps))]

    def orbit(self, x: int) -> np.ndarray:
        return self.orbits[int(self.orbit_of[x])]

    def nontrivial_sizes(self) -> list[int]:
        return list(self.sizes[1:])


def partition_from_labels(labels: np.ndarray) -> OrbitPartition:
    """Canonical partition: ids assigned in order of minimal member."""
    labels = np.asarray(labels)
    _, first, inverse = np.unique(labels, return_index=True, return_inverse=True)
    rank = np.empty(len(first), dtype=np.int64)
    rank[np.argsort(first, kind="stable")] = np.arange(len(first))
    orbit_of = rank[inverse.reshape(-1)]
    reps = tuple(sorted(first.tolist()))
    sizes = tuple(np.bincount(orbit_of, minlength=len(reps)).tolist())
    return OrbitPartition(orbit_of, reps, sizes)


def orbit_partition(G: FiniteGroup, action: ActionSpec) -> OrbitPartition:
    """Orbits of <action> on G via union-find over x ~ a(x)."""
    n = G.order
    src = np.tile(np.arange(n), len(action.generators))
    dst = action.images.reshape(-1)
    moved = src != dst
    pairs = np.unique(np.stack([src[moved], dst[moved]], axis=1), axis=0) if moved.any() else np.zeros((0, 2), dtype=np.int64)
    uf = UnionFind(n)
    for x, y in pairs.tolist():
        uf.union(x, y)
    return partition_from_labels(np.array([uf.find(x) for x in range(n)]))


# -- standard actions ------------------------------------------------------

def conjugation_map(G: FiniteGroup, g: int) -> Automorphism:
    return Automorphism(G.conj_many(np.arange(G.order), g))


def inner_action(G: FiniteGroup) -> ActionSpec:
    gens = generating_sequence(G) or [0]
    return ActionSpec([conjugation_map(G, g) for g in gens], provenance="inner", name="inner")


def overgroup_action(overgroup, G: FiniteGroup, name: str = "overgroup") -> ActionSpec:
    """Conjugation by ambient elements of an overgroup H normalizing G.

    `overgroup` is a sequence of ambient forms in G's representation (the
    generators of H); x is sent to h^-1 x h.
    """
    if G.rep is None:
        raise ValueError("overgroup_action needs a group with an ambient representation")
    rep = G.rep
    gens = []
    for h in overgroup:
        h = np.asarray(h, dtype=np.int64).reshape(-1)
        hinv = rep.inverse(h)
        forms = rep.multiply(rep.multiply(hinv[None, :], G.elements), h[None, :])
        img = G.lookup_forms(forms)
        if np.any(img < 0):
            raise NotNormal(f"overgroup element does not normalize {G.name}")
        gens.append(Automorphism(img))
    return ActionSpec(gens, provenance="overgroup", name=name)


def generated_permutation_group(perms: Sequence[np.ndarray], *, max_order: int = 100_000, dense: bool = False) -> FiniteGroup:
    """Group generated by permutations of {0..d-1}, composed left to right."""
    perms = [np.asarray(p, dtype=np.int64) for p in perms]
    rep = PermutationRep(len(perms[0]))
    return FiniteGroup.from_generators(rep, perms, name="perm", max_order=max_order, dense_limit=4096 if dense else 0)


def induced_group_order(G: FiniteGroup, action: ActionSpec, max_order: int = 100_000) -> int:
    """|A / C_A(G)|: the order of the permutation group the action induces on G."""
    return generated_permutation_group(list(action.images), max_order=max_order).order


# -- homomorphisms -----------------------------------------------------------

def generating_sequence(G: FiniteGroup) -> list[int]:
    """Greedy minimal generating sequence: largest closure gain, ties by index."""
    gens: list[int] = []
    current = closure(G, [])
    orders = G.element_orders
    while len(current) < G.order:
        best, best_size = None, len(current)
        candidates = np.nonzero(~current.mask)[0]
        if not gens:
            # cyclic closure sizes are the element orders
            best = int(candidates[np.argmax(orders[candidates])])
        else:
            for x in candidates.tolist():
                size = len(closure(G, gens + [x]))
                if size > best_size:
                    best, best_size = x, size
                    if size == G.order:
                        break
        gens.append(best)
        current = closure(G, gens)
    return gens


class _SpanningTree:
    """BFS levels of the Cayley graph of G w.r.t. gens: child = parent * gen."""

    def __init__(self, G: FiniteGroup, gens: Sequence[int]):
        self.gens = list(gens)
        seen = np.zeros(G.order, dtype=bool)
        seen[0] = True
        frontier = np.array([0])
        self.levels = []
        gen_arr = np.array(self.gens, dtype=np.int64)
        while len(frontier):
            prods = G.mul_many(frontier[:, None], gen_arr[None, :])
            par = np.repeat(frontier, len(gen_arr))
            gi = np.tile(np.arange(len(gen_arr)), len(frontier))
            flat = prods.reshape(-1)
            _, first = np.unique(flat, return_index=True)
            first.sort()
            first = first[~seen[flat[first]]]
            if not len(first):
                break
            kids = flat[first]
            seen[kids] = True
            self.levels.append((kids, par[first], gi[first]))
            frontier = kids
        self.spans = bool(seen.all())


def _tree(G: FiniteGroup, gens: Sequence[int]) -> _SpanningTree:
    cache = G.__dict__.setdefault("_tree_cache", {})
    key = tuple(int(g) for g in gens)
    if key not in cache:
        cache[key] = _SpanningTree(G, key)
    return cache[key]


def extend_homomorphism(G: FiniteGroup, gens: Sequence[int], images: Sequence[int], H: FiniteGroup | None = None) -> np.ndarray | None:
    """Image array of the homomorphism G -> H sending gens to images, or None."""
    H = H if H is not None else G
    tree = _tree(G, gens)
    if not tree.spans:
        raise ValueError("gens do not generate G")
    img = np.full(G.order, -1, dtype=np.int64)
    img[0] = 0
    images = np.asarray(images, dtype=np.int64)
    for kids, parents, gi in tree.levels:
        img[kids] = H.mul_many(img[parents], images[gi])
    ar = np.arange(G.order)
    for g, h in zip(tree.gens, images.tolist()):
        if not np.array_equal(img[G.mul_many(ar, g)], H.mul_many(img, h)):
            return None
    return img


def automorphism_from_images(G: FiniteGroup, gens: Sequence[int], images: Sequence[int]) -> Automorphism:
    img = extend_homomorphism(G, gens, images)
    if img is None or len(np.unique(img)) != G.order:
        raise InvalidAutomorphism("generator images do not define an automorphism")
    return Automorphism(img)


def fingerprints(G: FiniteGroup) -> list[tuple]:
    """Aut-invariant element data: order, class size, and the same for powers."""
    ids = class_ids(G)
    csize = np.bincount(ids)[ids]
    orders = G.element_orders
    out = []
    for x in range(G.order):
        o = int(orders[x])
        pw, pattern = x, []
        for _ in range(1, o):
            pattern.append((int(orders[pw]), int(csize[pw])))
            pw = G.mul(pw, x)
        out.append((o, int(csize[x]), tuple(pattern)))
    return out


def _search_homs(G: FiniteGroup, H: FiniteGroup, budget: int, first_only: bool) -> list[np.ndarray]:
    gens = generating_sequence(G)
    if not gens:
        return [np.zeros(1, dtype=np.int64)]
    fg, fh = fingerprints(G), fingerprints(H)
    by_fp: dict[tuple, list[int]] = {}
    for y in range(H.order):
        by_fp.setdefault(fh[y], []).append(y)
    cands = [by_fp.get(fg[g], []) for g in gens]
    orders_g, orders_h = G.element_orders, H.element_orders
    # pairwise word checks: orders of g_i*g_j and g_i^-1*g_j
    found: list[np.ndarray] = []
    nodes = 0
    chosen: list[int] = []

    def consistent(i: int, y: int) -> bool:
        gi = gens[i]
        for j in range(i):
            gj, yj = gens[j], chosen[j]
            if orders_g[G.mul(gj, gi)] != orders_h[H.mul(yj, y)]:
                return False
            if orders_g[G.mul(int(G.inv[gj]), gi)] != orders_h[H.mul(int(H.inv[yj]), y)]:
                return False
        return True

    def rec(i: int) -> bool:
        nonlocal nodes
        if i == len(gens):
            img = extend_homomorphism(G, gens, chosen, H)
            if img is not None and len(np.unique(img)) == G.order:
                found.append(img)
                return first_only
            return False
        for y in cands[i]:
            nodes += 1
            if nodes > budget:
                raise BudgetExceeded(f"automorphism search exceeded {budget} nodes")
            if not consistent(i, y):
                continue
            chosen.append(y)
            stop = rec(i + 1)
            chosen.pop()
            if stop:
                return True
        return False

    rec(0)
    return found


def full_aut(G: FiniteGroup, budget: int = DEFAULT_BUDGET) -> ActionSpec:
    """All automorphisms of G by backtracking over generator images."""
    if G.order > 1024:
        raise BudgetExceeded("full_aut is limited to groups of order <= 1024")
    auts = _search_homs(G, G, budget, first_only=False)
    auts.sort(key=lambda a: a.tolist())
    gens = _reduce_generators(auts)
    return ActionSpec([Automorphism(a) for a in gens], provenance="full-aut", name="Aut", note={"order": len(auts)})


def _reduce_generators(perms: list[np.ndarray]) -> list[np.ndarray]:
    """Greedy subset of `perms` generating the same permutation group."""
    gens: list[np.ndarray] = []
    span = {perms[0].tobytes()} if perms else set()
    for p in perms:
        if p.tobytes() in span:
            continue
        gens.append(p)
        H = generated_permutation_group(gens)
        span = {row.tobytes() for row in H.elements}
        if len(span) == len(perms):
            break
    return gens or perms[:1]


def find_isomorphism(G: FiniteGroup, H: FiniteGroup, budget: int = DEFAULT_BUDGET) -> np.ndarray | None:
    """An isomorphism G -> H as an image array, or None."""
    if G.order != H.order:
        return None
    if sorted(Counter(G.element_orders.tolist()).items()) != sorted(Counter(H.element_orders.tolist()).items()):
        return None
    if sorted(len(c) for c in conjugacy_classes(G)) != sorted(len(c) for c in conjugacy_classes(H)):
        return None
    found = _search_homs(G, H, budget, first_only=True)
    return found[0] if found else None


def is_isomorphic(G: FiniteGroup, H: FiniteGroup, budget: int = DEFAULT_BUDGET) -> bool:
    return find_isomorphism(G, H, budget) is not None
