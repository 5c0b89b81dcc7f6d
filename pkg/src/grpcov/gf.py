"""Arithmetic in GF(p^k) with a fixed irreducible modulus per field.

Field elements are length-k coefficient tuples (low degree first) with
entries reduced mod p. The modulus is the lexicographically smallest monic
irreducible polynomial of degree k over GF(p), compared on coefficients from
the highest degree down, so every field has one reproducible construction:
GF(8) gets x^3 + x + 1 and GF(9) gets x^2 + 1.
"""

from __future__ import annotations

from itertools import product


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def factor_prime_power(q: int) -> tuple[int, int]:
    """Return (p, k) with q = p^k, or raise ValueError."""
    if q < 2:
        raise ValueError(f"{q} is not a prime power")
    p = 2
    while q % p != 0:
        p += 1
        if p * p > q:
            p = q
            break
    k = 0
    rest = q
    while rest % p == 0:
        rest //= p
        k += 1
    if rest != 1 or not is_prime(p):
        raise ValueError(f"{q} is not a prime power")
    return p, k


class GF:
    """The finite field with p^k elements."""

    def __init__(self, p: int, k: int = 1):
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        if k < 1:
            raise ValueError("extension degree must be positive")
        self.p = p
        self.k = k
        self.size = p**k
        self.zero = (0,) * k
        self.one = (1,) + (0,) * (k - 1)
        self.modulus = self._smallest_irreducible() if k > 1 else (0, 1)

    @classmethod
    def of_size(cls, q: int) -> "GF":
        return cls(*factor_prime_power(q))

    # -- polynomial helpers over GF(p), coefficients low degree first --------

    def _poly_mul(self, a: list[int], b: list[int]) -> list[int]:
        out = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    out[i + j] = (out[i + j] + ai * bj) % self.p
        return out

    def _poly_mod(self, a: list[int], m: list[int]) -> list[int]:
        a = list(a)
        dm = len(m) - 1
        while len(a) > dm:
            lead = a[-1]
            if lead:
                shift = len(a) - 1 - dm
                for i, mi in enumerate(m):
                    a[shift + i] = (a[shift + i] - lead * mi) % self.p
            a.pop()
        while len(a) < dm:
            a.append(0)
        return a

    def _is_irreducible(self, coeffs: tuple[int, ...]) -> bool:
        # monic poly of degree k given by its low coefficients; trial division
        k = self.k
        full = list(coeffs) + [1]
        for deg in range(1, k // 2 + 1):
            for low in product(range(self.p), repeat=deg):
                divisor = list(low) + [1]
                rem = list(full)
                while len(rem) >= len(divisor):
                    lead = rem[-1]
                    if lead:
                        shift = len(rem) - len(divisor)
                        for i, di in enumerate(divisor):
                            rem[shift + i] = (rem[shift + i] - lead * di) % self.p
                    rem.pop()
                if not any(rem):
                    return False
        return True

    def _smallest_irreducible(self) -> tuple[int, ...]:
        # lexicographic on (c_{k-1}, ..., c_0)
        for high_first in product(range(self.p), repeat=self.k):
            coeffs = tuple(reversed(high_first))
            if self._is_irreducible(coeffs):
                return coeffs + (1,)
        raise RuntimeError("no irreducible polynomial found")  # unreachable

    # -- element arithmetic ---------------------------------------------------

    def elements(self) -> list[tuple[int, ...]]:
        return [tuple(reversed(t)) for t in product(range(self.p), repeat=self.k)]

    def from_int(self, n: int) -> tuple[int, ...]:
        return (n % self.p,) + (0,) * (self.k - 1)

    def add(self, a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
        return tuple((x + y) % self.p for x, y in zip(a, b))

    def neg(self, a: tuple[int, ...]) -> tuple[int, ...]:
        return tuple((-x) % self.p for x in a)

    def mul(self, a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
        if self.k == 1:
            return ((a[0] * b[0]) % self.p,)
        raw = self._poly_mul(list(a), list(b))
        return tuple(self._poly_mod(raw, list(self.modulus)))

    def pow(self, a: tuple[int, ...], e: int) -> tuple[int, ...]:
        out = self.one
        base = a
        while e:
            if e & 1:
                out = self.mul(out, base)
            base = self.mul(base, base)
            e >>= 1
        return out

    def inv(self, a: tuple[int, ...]) -> tuple[int, ...]:
        if a == self.zero:
            raise ZeroDivisionError("inverse of zero in GF")
        return self.pow(a, self.size - 2)
