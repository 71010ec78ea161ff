"""Residue-class determination and residue-class factor recovery.

A factor pair of N with p = m*x + c, q = m*y + d forces c*d = N (mod m);
enumerating the admissible (c, d) and then recovering (x, y) is the
residue-class route to factoring.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd, isqrt

from .arith import Factorization, is_perfect_square, is_prime, trial_factor
from .errors import Exhausted, GcdFactorFound, NonPrimeModulus

__all__ = [
    "ResidueClassSet",
    "ResiduePair",
    "algorithm_one",
    "enumerate_pairs",
    "landry_pepin",
    "theorem4_pairs",
]


@dataclass(frozen=True, order=True)
class ResiduePair:
    """A pair (c, d) with c*d = N (mod m) for the modulus m.

    Outputs of enumerate_pairs and algorithm_one satisfy 0 < c <= d < m and
    gcd(c, m) == 1; theorem4_pairs reuses the carrier for ordered divisor
    pairs that may exceed m.
    """

    c: int
    d: int
    m: int


@dataclass(frozen=True)
class ResidueClassSet:
    """Deduplicated residue pairs (c <= d) for one N and modulus."""

    n: int
    m: int
    pairs: frozenset[ResiduePair]

    def as_tuples(self) -> list[tuple[int, int]]:
        return sorted((p.c, p.d) for p in self.pairs)


def enumerate_pairs(n: int, m: int) -> ResidueClassSet:
    """All (c, d), c <= d, with c*d = n (mod m) and gcd(c, m) = 1.

    Requires gcd(n, m) = 1; a nontrivial gcd is itself a factor and is
    surfaced as GcdFactorFound.
    """
    if m < 2:
        raise ValueError("modulus must be >= 2")
    g = gcd(n, m)
    if g > 1:
        raise GcdFactorFound(g)
    r = n % m
    pairs = set()
    for c in range(1, m):
        if gcd(c, m) != 1:
            continue
        d = r * pow(c, -1, m) % m
        lo, hi = (c, d) if c <= d else (d, c)
        pairs.add(ResiduePair(lo, hi, m))
    return ResidueClassSet(n, m, frozenset(pairs))


def algorithm_one(n: int, m: int) -> ResidueClassSet:
    """Probable residue classes for a prime modulus via square differences.

    For every lift cd = r0 + r1*m below m^2 (r0 = n mod m), scan
    x in [ceil(2*sqrt(cd)), 2m) for x^2 - 4cd a perfect square y^2; then
    c = (x+y)/2, d = (x-y)/2 realizes c*d = cd.  The reduced pairs are kept;
    the true pair (p mod m, q mod m) is always among them.
    """
    if not is_prime(m):
        raise NonPrimeModulus(f"modulus {m} is not prime")
    g = gcd(n, m)
    if g > 1:
        raise GcdFactorFound(g)
    r0 = n % m
    pairs = set()
    cd = r0
    while cd < m * m:
        if cd > 0:
            x = isqrt(4 * cd)
            if x * x < 4 * cd:
                x += 1
            while x < 2 * m:
                y = is_perfect_square(x * x - 4 * cd)
                if y is not None and (x - y) % 2 == 0:
                    c = ((x + y) // 2) % m
                    d = ((x - y) // 2) % m
                    if c != 0 and d != 0:
                        lo, hi = (c, d) if c <= d else (d, c)
                        pairs.add(ResiduePair(lo, hi, m))
                x += 1
        cd += m
    return ResidueClassSet(n, m, frozenset(pairs))


def _split(n: int, root: int) -> Factorization:
    p, q = sorted((root, n // root))
    parts = ((p, 2),) if p == q else ((p, 1), (q, 1))
    return Factorization(n, parts)


def landry_pepin(
    n: int, m: int, mod2: int, c: int, d: int, t_bound: int
) -> Factorization:
    """Recover factors p = m*x + c, q = mod2*y + d by scanning the scaled
    factor sum z = d*p + c*q.

    z is congruent to n + c*d modulo m*mod2, so z = z0 + m*mod2*t for some
    t >= 0; for the right t the discriminant z^2 - 4*c*d*n is a perfect
    square and p appears as a rational root of d*X^2 - z*X + c*n.  Both
    discriminant signs and all four root sign combinations are tried.
    """
    if gcd(c, m) != 1 or gcd(d, mod2) != 1:
        raise ValueError("need gcd(c, m) = gcd(d, mod2) = 1")
    mn = m * mod2
    z0 = (n + c * d) % mn
    four_cdn = 4 * c * d * n
    two_d = 2 * d
    for t in range(t_bound + 1):
        z = z0 + mn * t
        zz = z * z
        for disc in (zz - four_cdn, zz + four_cdn):
            if disc < 0:
                continue
            s = is_perfect_square(disc)
            if s is None:
                continue
            for num in (z + s, z - s, -z + s, -z - s):
                if num <= 0 or num % two_d:
                    continue
                root = num // two_d
                if 1 < root < n and n % root == 0:
                    return _split(n, root)
    raise Exhausted(f"no factor within t <= {t_bound}")


def theorem4_pairs(n: int, m: int) -> list[ResiduePair]:
    """Ordered divisor pairs (c, d) of the lifts r and r + m of n mod m.

    Whenever (p mod m)*(q mod m) < 2m the true residue pair is among them;
    each pair feeds the bilinear small-root solver.
    """
    if m < 2:
        raise ValueError("modulus must be >= 2")
    r = n % m
    pairs: list[ResiduePair] = []
    for cd in (r, r + m):
        if cd == 0:
            continue
        if cd == 1:
            pairs.append(ResiduePair(1, 1, m))
            continue
        for c in trial_factor(cd, cd).divisors():
            pairs.append(ResiduePair(c, cd // c, m))
    return pairs
