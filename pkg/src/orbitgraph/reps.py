"""Ambient element representations (permutations, matrices over small fields).

A representation knows how to multiply batches of canonical element forms
(flat integer code arrays) and how to hash them for lookup.  Groups built
from generators keep their elements in this form.
"""

from __future__ import annotations

import numpy as np

from .fields import GF

_HASH_WEIGHTS = np.random.default_rng(20240917).integers(
    1, 2**63 - 1, size=4096, dtype=np.uint64
) | np.uint64(1)


def hash_rows(rows: np.ndarray) -> np.ndarray:
    """64-bit keys for the rows of a 2-D code array (wrapping arithmetic)."""
    rows = np.atleast_2d(rows)
    w = _HASH_WEIGHTS[: rows.shape[1]]
    with np.errstate(over="ignore"):
        return (rows.astype(np.uint64) * w).sum(axis=1, dtype=np.uint64)


class ElementIndex:
    """Hash index from canonical forms to element indices."""

    def __init__(self, elements: np.ndarray):
        keys = hash_rows(elements)
        order = np.argsort(keys, kind="stable")
        self._keys = keys[order]
        self._pos = order
        self._elements = elements
        if len(np.unique(self._keys)) != len(keys):
            raise ValueError("hash collision or duplicate elements")

    def lookup(self, rows: np.ndarray) -> np.ndarray:
        """Indices of `rows`; -1 where a row is not an element."""
        rows = np.atleast_2d(rows)
        keys = hash_rows(rows)
        at = np.searchsorted(self._keys, keys)
        at = np.minimum(at, len(self._keys) - 1)
        idx = self._pos[at]
        ok = (self._keys[at] == keys) & np.all(self._elements[idx] == rows, axis=1)
        return np.where(ok, idx, -1)


class PermutationRep:
    """Permutations of {0..degree-1}; product `a*b` applies a first, then b."""

    kind = "permutation"

    def __init__(self, degree: int):
        self.degree = degree
        self.width = degree

    def identity(self) -> np.ndarray:
        return np.arange(self.degree, dtype=np.int64)

    def multiply(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        a = np.asarray(a)
        b = np.asarray(b)
        if a.ndim == 1 and b.ndim == 1:
            return b[a]
        shape = np.broadcast_shapes(a.shape, b.shape)
        return np.take_along_axis(np.broadcast_to(b, shape), np.broadcast_to(a, shape), axis=-1)

    def inverse(self, a: np.ndarray) -> np.ndarray:
        return np.argsort(a)

    def coerce(self, data) -> np.ndarray:
        arr = np.asarray(data, dtype=np.int64).reshape(-1)
        if arr.shape != (self.degree,) or sorted(arr.tolist()) != list(range(self.degree)):
            raise ValueError(f"not a permutation of degree {self.degree}: {data!r}")
        return arr

    def label(self, a: np.ndarray) -> str:
        return cycle_string(a)


def cycle_string(perm) -> str:
    """Cycle notation with 1-based points, e.g. '(1,2,3)(4,5)'."""
    perm = list(int(x) for x in perm)
    seen = [False] * len(perm)
    parts = []
    for start in range(len(perm)):
        if seen[start] or perm[start] == start:
            seen[start] = True
            continue
        cyc = []
        i = start
        while not seen[i]:
            seen[i] = True
            cyc.append(i + 1)
            i = perm[i]
        parts.append("(" + ",".join(map(str, cyc)) + ")")
    return "".join(parts) or "()"


class MatrixRep:
    """n x n matrices over GF(q), stored as flat arrays of field codes."""

    kind = "matrix"

    def __init__(self, field: GF, n: int):
        self.field = field
        self.n = n
        self.width = n * n

    def identity(self) -> np.ndarray:
        return np.eye(self.n, dtype=np.int64).reshape(-1)

    def multiply(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        n = self.n
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        single = a.ndim == 1 and b.ndim == 1
        A = a.reshape(-1, n, n)
        B = b.reshape(-1, n, n)
        F = self.field
        if F.k == 1:
            C = np.matmul(A, B) % F.p
        else:
            shape = np.broadcast_shapes(A.shape, B.shape)
            C = np.zeros(shape, dtype=np.int64)
            for i in range(n):
                for j in range(n):
                    acc = F.mul_table[A[:, i, 0], B[:, 0, j]]
                    for t in range(1, n):
                        acc = F.add_table[acc, F.mul_table[A[:, i, t], B[:, t, j]]]
                    C[:, i, j] = acc
        C = C.reshape(-1, n * n)
        return C[0] if single else C

    def power(self, a: np.ndarray, e: int) -> np.ndarray:
        result = self.identity()
        base = np.asarray(a, dtype=np.int64)
        while e:
            if e & 1:
                result = self.multiply(result, base)
            base = self.multiply(base, base)
            e >>= 1
        return result

    def inverse(self, a: np.ndarray) -> np.ndarray:
        m = self.field.matrix_inverse(np.asarray(a).reshape(self.n, self.n))
        return m.reshape(-1)

    def coerce(self, data) -> np.ndarray:
        arr = np.asarray(data, dtype=np.int64)
        if arr.shape != (self.n, self.n) and arr.shape != (self.n * self.n,):
            raise ValueError(f"expected a {self.n}x{self.n} matrix, got shape {arr.shape}")
        arr = arr.reshape(-1) % self.field.q if self.field.k == 1 else arr.reshape(-1)
        if np.any(arr < 0) or np.any(arr >= self.field.q):
            raise ValueError("matrix entry outside the field")
        if self.field.det(arr.reshape(self.n, self.n)) == 0:
            raise ValueError("singular matrix")
        return arr

    def label(self, a: np.ndarray) -> str:
        m = np.asarray(a).reshape(self.n, self.n)
        return "[" + ";".join(",".join(self.field.label(int(x)) for x in row) for row in m) + "]"
