"""Arithmetic in GF(2^h) for small h.

Elements are integers in [0, 2^h) whose binary digits are the coefficients
of a polynomial over GF(2), reduced modulo a fixed irreducible polynomial.
Addition is XOR; multiplication is carry-less polynomial multiplication
followed by reduction.  All unary/binary operations are backed by full
lookup tables, which are trivial at these field sizes and dominate the
hot paths of the exhaustive sweeps.

Default irreducible moduli (bitstrings, degree h):
    h=1 : x + 1          0b11
    h=2 : x^2 + x + 1    0b111
    h=3 : x^3 + x + 1    0b1011
    h=4 : x^4 + x + 1    0b10011
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np

DEFAULT_MODULI = {1: 0b11, 2: 0b111, 3: 0b1011, 4: 0b10011}

SUPPORTED_ORDERS = (2, 4, 8, 16)


def clmul(a: int, b: int) -> int:
    """Carry-less (GF(2)[x]) product of two polynomial bitstrings."""
    r = 0
    while b:
        if b & 1:
            r ^= a
        a <<= 1
        b >>= 1
    return r


def clmod(a: int, m: int) -> int:
    """Remainder of the polynomial bitstring a modulo m."""
    dm = m.bit_length()
    while a.bit_length() >= dm:
        a ^= m << (a.bit_length() - dm)
    return a


def _is_irreducible(m: int) -> bool:
    """Irreducibility test for a polynomial bitstring over GF(2).

    Checks x^(2^h) == x mod m and gcd-style conditions x^(2^(h/p)) != x
    for prime divisors p of the degree h.  Sufficient for the tiny degrees
    used here.
    """
    h = m.bit_length() - 1
    if h < 1:
        return False

    def xpow2k(k: int) -> int:
        # x^(2^k) mod m by repeated squaring of x
        v = clmod(0b10, m)
        for _ in range(k):
            v = clmod(clmul(v, v), m)
        return v

    if xpow2k(h) != clmod(0b10, m):
        return False
    for p in (2, 3):
        if h % p == 0 and xpow2k(h // p) == clmod(0b10, m):
            return False
    return True


class GF:
    """The finite field GF(2^h) with q = 2^h elements.

    Immutable after construction; all operations are pure and safe for
    concurrent use.  Elements enumerate canonically in ascending bitstring
    value 0, 1, ..., q-1.
    """

    def __init__(self, q: int, modulus: int | None = None):
        h = q.bit_length() - 1
        if q != 1 << h or h not in DEFAULT_MODULI:
            raise ValueError(f"unsupported field order q={q}; must be in {SUPPORTED_ORDERS}")
        if modulus is None:
            modulus = DEFAULT_MODULI[h]
        if modulus.bit_length() - 1 != h or not _is_irreducible(modulus):
            raise ValueError(f"modulus {modulus:#b} is not an irreducible polynomial of degree {h}")
        self.q = q
        self.h = h
        self.modulus = modulus

        mul = np.zeros((q, q), dtype=np.uint8)
        for a in range(q):
            for b in range(a, q):
                p = clmod(clmul(a, b), modulus)
                mul[a, b] = p
                mul[b, a] = p
        self._mul = mul
        self._mul.setflags(write=False)

        inv = [0] * q
        for a in range(1, q):
            for b in range(1, q):
                if mul[a, b] == 1:
                    inv[a] = b
                    break
        self._inv = tuple(inv)

        # sqrt(a) = a^(2^(h-1)); squaring is a bijection in characteristic 2
        sq = [int(mul[a, a]) for a in range(q)]
        sqrt = [0] * q
        for a in range(q):
            sqrt[sq[a]] = a
        self._sqrt = tuple(sqrt)

        # Tr(a) = a + a^2 + ... + a^(2^(h-1)), always 0 or 1
        trace = []
        for a in range(q):
            t, v = 0, a
            for _ in range(h):
                t ^= v
                v = int(mul[v, v])
            trace.append(t)
        self._trace = tuple(trace)

    # -- basic operations ------------------------------------------------

    @property
    def mul_table(self) -> np.ndarray:
        """The q-by-q multiplication table as a read-only uint8 array."""
        return self._mul

    def elements(self) -> range:
        return range(self.q)

    def units(self) -> range:
        return range(1, self.q)

    def add(self, a: int, b: int) -> int:
        return a ^ b

    def mul(self, a: int, b: int) -> int:
        return int(self._mul[a, b])

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of 0 in GF(q)")
        return self._inv[a]

    def div(self, a: int, b: int) -> int:
        return int(self._mul[a, self.inv(b)])

    def sqrt(self, a: int) -> int:
        return self._sqrt[a]

    def trace(self, a: int) -> int:
        return self._trace[a]

    def pow(self, a: int, n: int) -> int:
        if n < 0:
            a, n = self.inv(a), -n
        r = 1
        while n:
            if n & 1:
                r = int(self._mul[r, a])
            a = int(self._mul[a, a])
            n >>= 1
        return r

    def primitive_element(self) -> int:
        """Smallest generator of the multiplicative group."""
        for w in self.units():
            seen, v = set(), 1
            for _ in range(self.q - 1):
                v = self.mul(v, w)
                seen.add(v)
            if len(seen) == self.q - 1:
                return w
        raise AssertionError("no primitive element found")

    def is_cube(self, a: int) -> bool:
        return any(self.pow(x, 3) == a for x in self.elements())

    def cube_root_of_unity(self) -> int:
        """A primitive third root of unity; exists iff 3 | q - 1 (h even)."""
        if (self.q - 1) % 3 != 0:
            raise ValueError(f"GF({self.q}) has no primitive third root of unity")
        return self.pow(self.primitive_element(), (self.q - 1) // 3)

    # -- quadratic equations ---------------------------------------------

    def solve_quadratic(self, alpha: int, beta: int, gamma: int) -> tuple[int, ...]:
        """Roots in GF(q) of alpha*x^2 + beta*x + gamma, alpha != 0.

        Root count is 1 iff beta = 0, 2 iff beta != 0 and
        Tr(alpha*gamma / beta^2) = 0, and 0 otherwise.
        """
        if alpha == 0:
            raise ValueError("alpha must be nonzero")
        if beta == 0:
            return (self.sqrt(self.div(gamma, alpha)),)
        d = self.div(self.mul(alpha, gamma), self.mul(beta, beta))
        if self.trace(d) != 0:
            return ()
        # substitute x = (beta/alpha) y to reduce to y^2 + y = d
        y0 = next(y for y in self.elements() if self.mul(y, y) ^ y == d)
        scale = self.div(beta, alpha)
        r1 = self.mul(scale, y0)
        r2 = r1 ^ scale
        return (r1, r2) if r1 < r2 else (r2, r1)

    # -- parameter searches (deterministic, canonical order) --------------

    def find_gamma_inv_trace(self) -> int:
        """First gamma != 0 with Tr(gamma^{-1}) = 1."""
        for g in self.units():
            if self.trace(self.inv(g)) == 1:
                return g
        raise AssertionError("no gamma with Tr(1/gamma)=1")

    def find_gamma_trace(self) -> int:
        """First gamma != 0 with Tr(gamma) = 1."""
        for g in self.units():
            if self.trace(g) == 1:
                return g
        raise AssertionError("no gamma with Tr(gamma)=1")

    def cubic_has_no_roots(self, b: int, c: int) -> bool:
        """True iff b*x^3 + c*x + 1 has no roots in GF(q)."""
        for lam in self.elements():
            v = self.mul(b, self.pow(lam, 3)) ^ self.mul(c, lam) ^ 1
            if v == 0:
                return False
        return True

    def find_irreducible_cubic_params(self) -> tuple[int, int]:
        """First (b, c) with b != 0 such that b*x^3 + c*x + 1 is irreducible.

        For degree 3 over GF(q), having no roots is equivalent to being
        irreducible.
        """
        for b in self.units():
            for c in self.elements():
                if self.cubic_has_no_roots(b, c):
                    return (b, c)
        raise AssertionError("no irreducible cubic parameters found")

    # -- serialization -----------------------------------------------------

    def to_hex(self, a: int) -> str:
        return format(a, "x")

    def from_hex(self, s: str) -> int:
        a = int(s, 16)
        if not 0 <= a < self.q:
            raise ValueError(f"{s!r} is not an element of GF({self.q})")
        return a

    def __repr__(self) -> str:
        return f"GF({self.q}, modulus={self.modulus:#b})"


@lru_cache(maxsize=None)
def gf(q: int) -> GF:
    """Shared GF(q) instance with the default modulus."""
    return GF(q)
