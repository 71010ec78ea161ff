"""Exact arbitrary-precision integer primitives used by every other module."""

from __future__ import annotations

import random
from dataclasses import dataclass
from math import gcd, isqrt

from .errors import NonPrimeModulus

__all__ = [
    "Factorization",
    "divisor_count",
    "ext_gcd",
    "gcd",
    "is_perfect_square",
    "is_prime",
    "isqrt",
    "mod_inverse",
    "mod_sqrt",
    "next_prime",
    "random_prime",
    "trial_factor",
]

# A square must land in these residue sets; testing n & 63 and n % 63 rejects
# ~95% of non-squares before the isqrt call.
_SQUARES_MOD_64 = frozenset((i * i) & 63 for i in range(64))
_SQUARES_MOD_63 = frozenset((i * i) % 63 for i in range(63))

# Strong-pseudoprime bases: deterministic for n < 3.3e24, probabilistic above.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_perfect_square(n: int) -> int | None:
    """Return r with r*r == n, or None when n is not a perfect square."""
    if n < 0:
        return None
    if n & 63 not in _SQUARES_MOD_64:
        return None
    if n % 63 not in _SQUARES_MOD_63:
        return None
    r = isqrt(n)
    return r if r * r == n else None


def is_prime(n: int) -> bool:
    """Miller-Rabin with fixed bases (deterministic below 3.3e24)."""
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def next_prime(n: int) -> int:
    """Smallest prime strictly greater than n."""
    k = n + 1
    if k <= 2:
        return 2
    if k % 2 == 0:
        k += 1
    while not is_prime(k):
        k += 2
    return k


def random_prime(rng: random.Random, bits: int) -> int:
    """Random prime with exactly `bits` bits."""
    if bits < 2:
        raise ValueError("need at least 2 bits")
    while True:
        n = rng.getrandbits(bits) | (1 << (bits - 1)) | 1
        if is_prime(n):
            return n


def ext_gcd(a: int, b: int) -> tuple[int, int, int]:
    """Return (g, u, v) with a*u + b*v == g == gcd(a, b)."""
    old_r, r = a, b
    old_u, u = 1, 0
    old_v, v = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_u, u = u, old_u - q * u
        old_v, v = v, old_v - q * v
    if old_r < 0:
        old_r, old_u, old_v = -old_r, -old_u, -old_v
    return old_r, old_u, old_v


def mod_inverse(a: int, m: int) -> int:
    """Inverse of a modulo m; raises ValueError when gcd(a, m) != 1."""
    return pow(a, -1, m)


def mod_sqrt(a: int, m: int) -> set[int]:
    """All y in [0, m) with y*y = a (mod m) for prime m; empty for non-residues.

    Tonelli-Shanks with a deterministic non-residue scan.
    """
    if m < 2 or not is_prime(m):
        raise NonPrimeModulus(f"modulus {m} is not prime")
    a %= m
    if a == 0:
        return {0}
    if m == 2:
        return {1}
    if pow(a, (m - 1) // 2, m) != 1:
        return set()
    if m % 4 == 3:
        r = pow(a, (m + 1) // 4, m)
        return {r, m - r}
    q, s = m - 1, 0
    while q % 2 == 0:
        q //= 2
        s += 1
    z = 2
    while pow(z, (m - 1) // 2, m) != m - 1:
        z += 1
    c = pow(z, q, m)
    r = pow(a, (q + 1) // 2, m)
    t = pow(a, q, m)
    e = s
    while t != 1:
        i, t2 = 0, t
        while t2 != 1:
            t2 = t2 * t2 % m
            i += 1
        b = pow(c, 1 << (e - i - 1), m)
        r = r * b % m
        c = b * b % m
        t = t * c % m
        e = i
    return {r, m - r}


@dataclass(frozen=True)
class Factorization:
    """n split into factor powers; `residual` flags an uncertified cofactor.

    parts multiply back to n, every factor is >= 2, and factors strictly
    increase.  When residual is None the parts are all certified prime.
    """

    n: int
    parts: tuple[tuple[int, int], ...]
    residual: int | None = None

    def __post_init__(self):
        prod = 1
        prev = 1
        for f, e in self.parts:
            if f < 2 or e < 1:
                raise ValueError("factors must be >= 2 with positive multiplicity")
            if f <= prev:
                raise ValueError("factors must strictly increase")
            prev = f
            prod *= f**e
        if prod != self.n:
            raise ValueError(f"parts multiply to {prod}, not {self.n}")
        if self.residual is not None and (not self.parts or self.parts[-1][0] != self.residual):
            raise ValueError("residual must be the last listed factor")

    @property
    def complete(self) -> bool:
        return self.residual is None

    def divisors(self) -> list[int]:
        """All positive divisors, ascending (residual treated as prime)."""
        divs = [1]
        for f, e in self.parts:
            divs = [d * f**k for d in divs for k in range(e + 1)]
        return sorted(divs)


def trial_factor(n: int, bound: int) -> Factorization:
    """Trial-divide n by primes <= bound.

    Complete whenever every prime factor is <= bound; otherwise the leftover
    cofactor is included as the last part and flagged via `residual`.
    """
    if n < 2:
        raise ValueError("n must be >= 2")
    parts: list[tuple[int, int]] = []
    r = n
    for d in (2, 3):
        if d > bound:
            break
        e = 0
        while r % d == 0:
            r //= d
            e += 1
        if e:
            parts.append((d, e))
    d = 5
    while d <= bound and d * d <= r:
        for dd in (d, d + 2):
            if dd > bound:
                break
            e = 0
            while r % dd == 0:
                r //= dd
                e += 1
            if e:
                parts.append((dd, e))
        d += 6
    residual = None
    if r > 1:
        if r > bound:
            residual = r
        parts.append((r, 1))
    return Factorization(n, tuple(parts), residual)


def divisor_count(n: int) -> int:
    """Number of positive divisors of n (n >= 1)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if n == 1:
        return 1
    # bound = isqrt(n) always yields a complete factorization: any leftover
    # cofactor would be a single prime above the square root.
    fac = trial_factor(n, isqrt(n))
    count = 1
    for _, e in fac.parts:
        count *= e + 1
    return count
