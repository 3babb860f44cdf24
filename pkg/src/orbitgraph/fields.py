"""Arithmetic in GF(p) and GF(p^2).

Elements are coded as integers ``c0 + c1*p`` in the polynomial basis
{1, w} modulo a fixed monic irreducible ``w^2 + a*w + b``: the first one in
(a, b) order, which gives x^2+x+1 for GF(4) and x^2+1 for GF(9).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import OutOfRange


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def prime_power(q: int) -> tuple[int, int]:
    """Return (p, k) with q = p^k, or raise OutOfRange."""
    for p in prime_factors(q):
        k, r = 0, q
        while r % p == 0:
            r //= p
            k += 1
        if r == 1:
            return p, k
    raise OutOfRange(f"{q} is not a prime power")


class GF:
    """The finite field with q = p^k elements, k <= 2."""

    def __init__(self, q: int):
        p, k = prime_power(q)
        if k > 2:
            raise OutOfRange(f"GF({q}): only degree <= 2 extensions are supported")
        self.p, self.k, self.q = p, k, q
        self.modulus = self._find_modulus() if k == 2 else None
        codes = np.arange(q)
        c0, c1 = codes % p, codes // p
        self.add_table = ((c0[:, None] + c0[None, :]) % p + ((c1[:, None] + c1[None, :]) % p) * p).astype(np.int64)
        self.mul_table = np.array([[self._mul(x, y) for y in range(q)] for x in range(q)], dtype=np.int64)
        self.neg = np.array([((-(x % p)) % p) + ((-(x // p)) % p) * p for x in range(q)], dtype=np.int64)
        self.inv = np.zeros(q, dtype=np.int64)
        for x in range(1, q):
            (y,) = np.nonzero(self.mul_table[x] == 1)[0]
            self.inv[x] = y

    def _find_modulus(self) -> tuple[int, int]:
        p = self.p
        for a in range(p):
            for b in range(1, p):
                if all((x * x + a * x + b) % p for x in range(p)):
                    return a, b
        raise AssertionError("no irreducible quadratic")

    def _mul(self, x: int, y: int) -> int:
        p = self.p
        if self.k == 1:
            return (x * y) % p
        x0, x1, y0, y1 = x % p, x // p, y % p, y // p
        # w^2 = -a*w - b
        a, b = self.modulus
        c0 = x0 * y0 - b * x1 * y1
        c1 = x0 * y1 + x1 * y0 - a * x1 * y1
        return (c0 % p) + (c1 % p) * p

    def __repr__(self) -> str:
        return f"GF({self.q})"

    def __eq__(self, other) -> bool:
        return isinstance(other, GF) and other.q == self.q

    def __hash__(self) -> int:
        return hash(("GF", self.q))

    def __call__(self, c0: int, c1: int = 0) -> "FieldElem":
        return FieldElem(self, (c0 % self.p) + (c1 % self.p) * self.p)

    def elements(self) -> list["FieldElem"]:
        return [FieldElem(self, c) for c in range(self.q)]

    def gen(self) -> int:
        """Code of the class of w (or 0 for prime fields)."""
        return self.p if self.k == 2 else 0

    def primitive_element(self) -> int:
        """Smallest code generating the multiplicative group."""
        for x in range(2, self.q) if self.q > 2 else [1]:
            y, n = x, 1
            while y != 1:
                y = self.mul_table[y, x]
                n += 1
            if n == self.q - 1:
                return x
        return 1

    def frobenius(self, x: int) -> int:
        y = 1
        for _ in range(self.p):
            y = self.mul_table[y, x]
        return int(y)

    def label(self, x: int) -> str:
        if self.k == 1:
            return str(x)
        c0, c1 = x % self.p, x // self.p
        if c1 == 0:
            return str(c0)
        w = "w" if c1 == 1 else f"{c1}w"
        return w if c0 == 0 else f"{c0}+{w}"

    def det(self, m: np.ndarray) -> int:
        m = [list(map(int, row)) for row in np.asarray(m)]
        n = len(m)
        d = 1
        for c in range(n):
            piv = next((r for r in range(c, n) if m[r][c]), None)
            if piv is None:
                return 0
            if piv != c:
                m[c], m[piv] = m[piv], m[c]
                d = int(self.neg[d])
            d = int(self.mul_table[d, m[c][c]])
            ic = int(self.inv[m[c][c]])
            for r in range(c + 1, n):
                if m[r][c]:
                    f = int(self.mul_table[m[r][c], ic])
                    for j in range(c, n):
                        m[r][j] = int(self.add_table[m[r][j], self.neg[self.mul_table[f, m[c][j]]]])
        return d

    def matrix_inverse(self, m: np.ndarray) -> np.ndarray:
        m = np.asarray(m)
        n = m.shape[0]
        aug = [list(map(int, m[i])) + [int(i == j) for j in range(n)] for i in range(n)]
        for c in range(n):
            piv = next((r for r in range(c, n) if aug[r][c]), None)
            if piv is None:
                raise ValueError("singular matrix")
            aug[c], aug[piv] = aug[piv], aug[c]
            ic = int(self.inv[aug[c][c]])
            aug[c] = [int(self.mul_table[ic, x]) for x in aug[c]]
            for r in range(n):
                if r != c and aug[r][c]:
                    f = aug[r][c]
                    aug[r] = [int(self.add_table[x, self.neg[self.mul_table[f, y]]]) for x, y in zip(aug[r], aug[c])]
        return np.array([row[n:] for row in aug], dtype=np.int64)


@lru_cache(maxsize=None)
def field(q: int) -> GF:
    return GF(q)


@dataclass(frozen=True)
class FieldElem:
    field: GF
    code: int

    @property
    def coeffs(self) -> tuple[int, ...]:
        p = self.field.p
        return (self.code % p, self.code // p)[: self.field.k]

    def _check(self, other: "FieldElem") -> None:
        if other.field != self.field:
            raise ValueError("elements of different fields")

    def __add__(self, other: "FieldElem") -> "FieldElem":
        self._check(other)
        return FieldElem(self.field, int(self.field.add_table[self.code, other.code]))

    def __neg__(self) -> "FieldElem":
        return FieldElem(self.field, int(self.field.neg[self.code]))

    def __sub__(self, other: "FieldElem") -> "FieldElem":
        return self + (-other)

    def __mul__(self, other: "FieldElem") -> "FieldElem":
        self._check(other)
        return FieldElem(self.field, int(self.field.mul_table[self.code, other.code]))

    def inverse(self) -> "FieldElem":
        if self.code == 0:
            raise ZeroDivisionError("zero has no inverse")
        return FieldElem(self.field, int(self.field.inv[self.code]))

    def __truediv__(self, other: "FieldElem") -> "FieldElem":
        return self * other.inverse()

    def __repr__(self) -> str:
        return self.field.label(self.code)
