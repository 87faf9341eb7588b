"""Small finite fields F_q, q = p or p^2, as lookup tables.

An element of F_{p^2} is encoded as the integer a0 + a1*p standing for the
polynomial a0 + a1*x modulo a fixed monic irreducible quadratic.  Prime
fields use the residues 0..p-1 directly.
"""

from __future__ import annotations

from functools import cached_property

import numpy as np

SUPPORTED_CHARACTERISTICS = (2, 3, 5)


class FieldError(ValueError):
    pass


def _factor_prime_power(q: int) -> tuple[int, int]:
    for p in SUPPORTED_CHARACTERISTICS:
        e, r = 0, q
        while r % p == 0:
            r //= p
            e += 1
        if r == 1 and e in (1, 2):
            return p, e
    raise FieldError(
        f"q={q} unsupported; need p or p^2 with p in {SUPPORTED_CHARACTERISTICS}"
    )


class GF:
    """The field with q elements.

    >>> F = GF(4)
    >>> F.mul[2, 2], F.frob[2]
    (3, 3)
    """

    def __init__(self, q: int):
        self.p, self.e = _factor_prime_power(q)
        self.q = q
        p = self.p
        if self.e == 1:
            self.modulus = None
            r = np.arange(q)
            self.add = (r[:, None] + r[None, :]) % p
            self.mul = (r[:, None] * r[None, :]) % p
        else:
            # smallest monic irreducible x^2 + c1 x + c0
            self.modulus = next(
                (c0, c1)
                for c1 in range(p)
                for c0 in range(1, p)
                if all((x * x + c1 * x + c0) % p for x in range(p))
            )
            c0, c1 = self.modulus
            a0, a1 = np.divmod(np.arange(q), p)[::-1]
            s0 = (a0[:, None] + a0[None, :]) % p
            s1 = (a1[:, None] + a1[None, :]) % p
            self.add = s0 + p * s1
            # (a0 + a1 x)(b0 + b1 x), x^2 = -c1 x - c0
            hi = a1[:, None] * a1[None, :]
            m0 = (a0[:, None] * a0[None, :] - c0 * hi) % p
            m1 = (a0[:, None] * a1[None, :] + a1[:, None] * a0[None, :] - c1 * hi) % p
            self.mul = m0 + p * m1
        self.add = self.add.astype(np.int64)
        self.mul = self.mul.astype(np.int64)
        self.neg = np.array([int(np.nonzero(self.add[a] == 0)[0][0]) for a in range(q)])
        inv = [-1]
        for a in range(1, q):
            inv.append(int(np.nonzero(self.mul[a] == 1)[0][0]))
        self.inv = np.array(inv)

    def __repr__(self) -> str:
        return f"GF({self.q})"

    @property
    def elements(self) -> range:
        return range(self.q)

    @property
    def prime_field(self) -> bool:
        return self.e == 1

    def power(self, a: int, k: int) -> int:
        out = 1
        for _ in range(k):
            out = int(self.mul[out, a])
        return out

    @cached_property
    def frob(self) -> np.ndarray:
        """x -> x^p.  For q = q0^2 this is the involution x -> x^q0."""
        return np.array([self.power(a, self.p) for a in range(self.q)])

    @cached_property
    def basis(self) -> tuple[int, ...]:
        """Basis of F_q over F_p (as encoded elements)."""
        return (1,) if self.e == 1 else (1, self.p)

    def sub(self, a: int, b: int) -> int:
        return int(self.add[a, self.neg[b]])

    def from_int(self, k: int) -> int:
        """Image of the integer k in the prime field."""
        return k % self.p

    def matmul(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        """Batched matrix product over F_q on arrays of shape (..., n, n)."""
        if self.e == 1:
            return (a.astype(np.int64) @ b.astype(np.int64)) % self.p
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        n = a.shape[-1]
        out = self.mul[a[..., :, 0, None], b[..., None, 0, :]]
        for k in range(1, n):
            out = self.add[out, self.mul[a[..., :, k, None], b[..., None, k, :]]]
        return out
