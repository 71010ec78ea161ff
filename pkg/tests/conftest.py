"""Shared helpers: brute-force oracles and instance construction."""

from __future__ import annotations

import random

import pytest
from hypothesis import settings

from factorlab.arith import next_prime, random_prime
from factorlab.coppersmith import BivariateProblem

settings.register_profile("deterministic", derandomize=True)
settings.load_profile("deterministic")


def box_oracle(prob: BivariateProblem) -> list[tuple[int, int, int, int]]:
    """Exhaustive scan of the (x, y) box: every (x0, y0, p, q) with
    (m*x0 + P0)(n*y0 + Q0) = N.  Independent of the lattice route."""
    found = []
    for x in range(-prob.X, prob.X + 1):
        p = prob.m * x + prob.P0
        if p == 0 or prob.N % p:
            continue
        q = prob.N // p
        if (q - prob.Q0) % prob.n:
            continue
        y = (q - prob.Q0) // prob.n
        if abs(y) <= prob.Y:
            found.append((x, y, p, q))
    return sorted(found)


def balanced_semiprime(rng: random.Random, bits: int) -> tuple[int, int, int]:
    """Semiprime with p < q < 1.9 * p (safely inside the balanced regime)."""
    half = bits // 2
    while True:
        p = random_prime(rng, half)
        q = random_prime(rng, half)
        if p > q:
            p, q = q, p
        if p < q and 10 * q < 19 * p:
            return p * q, p, q


def close_semiprime(rng: random.Random, bits: int) -> tuple[int, int, int]:
    """Semiprime with q - p <= 4 * N**(1/4)."""
    from factorlab.arith import isqrt

    while True:
        p = random_prime(rng, bits // 2)
        cap = max(4, 1 << max(2, bits // 4))
        q = next_prime(p + rng.randrange(1, cap))
        n = p * q
        if q - p <= 4 * isqrt(isqrt(n)):
            return n, p, q


@pytest.fixture
def rng() -> random.Random:
    return random.Random(0xFAC70)
