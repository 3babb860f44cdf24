"""Group families: cyclic, elementary abelian, dihedral, Q8, S_n, A_n,
extraspecial p^3 of exponent p, and matrix groups over GF(q) for q <= 9."""

from __future__ import annotations

import itertools

import numpy as np

from .errors import OutOfRange
from .fields import GF, field, is_prime
from .group import FiniteGroup, center, quotient
from .reps import MatrixRep, PermutationRep


def cyclic(n: int) -> FiniteGroup:
    if n < 1:
        raise OutOfRange("cyclic group order must be positive")
    a = np.arange(n)
    labels = ["1"] + [f"a^{i}" if i > 1 else "a" for i in range(1, n)]
    return FiniteGroup((a[:, None] + a[None, :]) % n, name=f"Z{n}", labels=labels)


def elementary_abelian(p: int, k: int) -> FiniteGroup:
    """(Z_p)^k; index = sum of digits d_i * p^i."""
    if not is_prime(p) or k < 0 or p**k > 4096:
        raise OutOfRange(f"elementary_abelian({p},{k})")
    n = p**k
    digits = np.array([[(x // p**i) % p for i in range(k)] for x in range(n)], dtype=np.int64).reshape(n, k)
    weights = p ** np.arange(k)
    table = (((digits[:, None, :] + digits[None, :, :]) % p) * weights).sum(axis=-1)
    labels = ["(" + ",".join(map(str, d)) + ")" for d in digits]
    name = f"Z{p}" if k == 1 else f"Z{p}^{k}"
    return FiniteGroup(table, name=name, labels=labels)


def dihedral(order: int) -> FiniteGroup:
    """Dihedral group of the given (even) order; r^i s^a at index i + n*a."""
    if order < 2 or order % 2:
        raise OutOfRange("dihedral group order must be even and >= 2")
    n = order // 2
    idx = np.arange(order)
    i, a = idx % n, idx // n
    sign = np.where(a == 1, -1, 1)
    ni = (i[:, None] + sign[:, None] * i[None, :]) % n
    na = (a[:, None] + a[None, :]) % 2
    labels = []
    for x in idx:
        r = "" if i[x] == 0 else ("r" if i[x] == 1 else f"r^{i[x]}")
        s = "s" if a[x] else ""
        labels.append(r + s or "1")
    return FiniteGroup(ni + n * na, name=f"D{order}", labels=labels)


def quaternion8() -> FiniteGroup:
    """Q8 = {+-1, +-i, +-j, +-k}; unit u with sign s at index u + 4*s."""
    # unit products u*v = (sign, unit) with units 0=1, 1=i, 2=j, 3=k
    prod = {
        (0, 0): (0, 0), (0, 1): (0, 1), (0, 2): (0, 2), (0, 3): (0, 3),
        (1, 0): (0, 1), (1, 1): (1, 0), (1, 2): (0, 3), (1, 3): (1, 2),
        (2, 0): (0, 2), (2, 1): (1, 3), (2, 2): (1, 0), (2, 3): (0, 1),
        (3, 0): (0, 3), (3, 1): (0, 2), (3, 2): (1, 1), (3, 3): (1, 0),
    }
    table = np.zeros((8, 8), dtype=np.int64)
    for x, y in itertools.product(range(8), repeat=2):
        s, u = prod[(x % 4, y % 4)]
        table[x, y] = u + 4 * ((s + x // 4 + y // 4) % 2)
    names = "1ijk"
    labels = [("-" if x >= 4 else "") + names[x % 4] for x in range(8)]
    return FiniteGroup(table, name="Q8", labels=labels)


def _cycle(n: int, *points: int) -> np.ndarray:
    perm = np.arange(n)
    for a, b in zip(points, points[1:] + points[:1]):
        perm[a] = b
    return perm


def permutation_group(degree: int, generators, name: str = "G") -> FiniteGroup:
    rep = PermutationRep(degree)
    return FiniteGroup.from_generators(rep, [rep.coerce(g) for g in generators], name=name)


def sym(n: int) -> FiniteGroup:
    if not 1 <= n <= 6:
        raise OutOfRange("sym(n) supports 1 <= n <= 6")
    gens = [] if n == 1 else [_cycle(n, 0, 1), _cycle(n, *range(n))]
    return permutation_group(n, gens, name=f"S{n}")


def alt(n: int) -> FiniteGroup:
    if not 1 <= n <= 6:
        raise OutOfRange("alt(n) supports 1 <= n <= 6")
    gens = [_cycle(n, 0, 1, i) for i in range(2, n)]
    return permutation_group(n, gens, name=f"A{n}")


def extraspecial_p3_exp_p(p: int) -> FiniteGroup:
    """Heisenberg group over Z_p: (a,b,c)(a',b',c') = (a+a', b+b', c+c'+ab')."""
    if p not in (3, 5, 7):
        raise OutOfRange("extraspecial_p3_exp_p needs an odd prime <= 7")
    n = p**3
    x = np.arange(n)
    a, b, c = x % p, (x // p) % p, x // (p * p)
    na = (a[:, None] + a[None, :]) % p
    nb = (b[:, None] + b[None, :]) % p
    nc = (c[:, None] + c[None, :] + a[:, None] * b[None, :]) % p
    labels = [f"a^{a[i]}b^{b[i]}c^{c[i]}" for i in x]
    return FiniteGroup(na + p * nb + p * p * nc, name=f"{p}^(1+2)", labels=labels)


def matrix_group(F: GF | int, generators, name: str = "G", **kw) -> FiniteGroup:
    """Group generated by invertible n x n matrices over F (BFS closure)."""
    F = field(F) if isinstance(F, int) else F
    gens = [np.asarray(g, dtype=np.int64) for g in generators]
    n = gens[0].shape[0] if gens and gens[0].ndim == 2 else int(round(np.sqrt(gens[0].size))) if gens else 1
    rep = MatrixRep(F, n)
    return FiniteGroup.from_generators(rep, [rep.coerce(g) for g in gens], name=name, **kw)


SL2_FIELDS = (3, 4, 5, 7, 9)


def sl2_generators(q: int) -> list[np.ndarray]:
    if q not in SL2_FIELDS:
        raise OutOfRange(f"sl2 supports q in {SL2_FIELDS}")
    F = field(q)
    one, neg1 = 1, int(F.neg[1])
    gens = [np.array([[one, one], [0, one]]), np.array([[0, neg1], [one, 0]])]
    if F.k == 2:
        w = F.primitive_element()
        gens.append(np.array([[w, 0], [0, int(F.inv[w])]]))
    return gens


def sl2(q: int) -> FiniteGroup:
    return matrix_group(field(q), sl2_generators(q), name=f"SL(2,{q})")


def psl2(q: int) -> FiniteGroup:
    G = sl2(q)
    Q = quotient(G, center(G)).quotient
    Q.name = f"PSL(2,{q})"
    return Q


def affine(F: GF, matrix, vector=None) -> np.ndarray:
    """(n+1)x(n+1) matrix [[A, v], [0, 1]] acting on column vectors."""
    A = np.asarray(matrix, dtype=np.int64)
    n = A.shape[0]
    out = np.zeros((n + 1, n + 1), dtype=np.int64)
    out[:n, :n] = A
    if vector is not None:
        out[:n, n] = np.asarray(vector, dtype=np.int64)
    out[n, n] = 1
    return out


def translation(F: GF, vector) -> np.ndarray:
    v = np.asarray(vector, dtype=np.int64)
    return affine(F, np.eye(len(v), dtype=np.int64), v)


def mod(F: GF, matrix) -> np.ndarray:
    """Reduce an integer matrix into GF(p) codes (prime fields only)."""
    return np.asarray(matrix, dtype=np.int64) % F.p
