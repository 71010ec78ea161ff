import random
from math import gcd

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from factorlab.arith import (
    Factorization,
    divisor_count,
    ext_gcd,
    is_perfect_square,
    is_prime,
    isqrt,
    mod_inverse,
    mod_sqrt,
    next_prime,
    random_prime,
    trial_factor,
)
from factorlab.errors import NonPrimeModulus


def brute_divisor_count(n: int) -> int:
    return sum(1 for d in range(1, n + 1) if n % d == 0)


class TestIsqrt:
    def test_examples(self):
        assert isqrt(0) == 0
        assert isqrt(2599) == 50
        assert 50 * 50 <= 2599 < 51 * 51
        assert isqrt(4305481) == 2074
        assert 2074**2 <= 4305481 < 2075**2

    @given(st.integers(min_value=0, max_value=10**6))
    def test_floor_property_small(self, n):
        r = isqrt(n)
        assert r * r <= n < (r + 1) * (r + 1)

    @given(st.integers(min_value=0, max_value=10**40))
    @settings(max_examples=200)
    def test_floor_property_large(self, n):
        r = isqrt(n)
        assert r * r <= n < (r + 1) * (r + 1)


class TestPerfectSquare:
    def test_examples(self):
        assert is_perfect_square(8100) == 90
        assert is_perfect_square(0) == 0
        assert isqrt(8101) == 90 and 90 * 90 != 8101
        assert is_perfect_square(8101) is None
        assert is_perfect_square(-4) is None

    def test_exhaustive_small(self):
        squares = {k * k for k in range(101)}
        for n in range(10001):
            root = is_perfect_square(n)
            if n in squares:
                assert root is not None and root * root == n
            else:
                assert root is None

    @given(st.integers(min_value=0, max_value=10**18))
    @settings(max_examples=200)
    def test_roundtrip(self, r):
        assert is_perfect_square(r * r) == r


class TestModSqrt:
    def test_examples(self):
        assert mod_sqrt(4, 7) == {2, 5}
        assert mod_sqrt(0, 5) == {0}
        assert mod_sqrt(3, 7) == set()

    def test_non_prime_modulus(self):
        with pytest.raises(NonPrimeModulus):
            mod_sqrt(4, 15)

    def test_exhaustive_primes_to_97(self):
        m = 2
        while m <= 97:
            for a in range(m):
                expected = {y for y in range(m) if y * y % m == a}
                assert mod_sqrt(a, m) == expected, (a, m)
            m = next_prime(m)

    def test_tonelli_on_one_mod_four_primes(self):
        # exercises the general branch (m % 4 == 1) on larger inputs
        for m in (10009, 100049):
            assert is_prime(m) and m % 4 == 1
            rng = random.Random(m)
            for _ in range(50):
                y = rng.randrange(m)
                roots = mod_sqrt(y * y % m, m)
                assert y % m in roots
                assert all(r * r % m == y * y % m for r in roots)


class TestDivisorCount:
    def test_examples(self):
        assert divisor_count(1) == 1
        assert divisor_count(12) == 6
        assert divisor_count(2599) == 4  # 1, 23, 113, 2599

    def test_brute_force_agreement(self):
        for n in range(1, 10001):
            assert divisor_count(n) == brute_divisor_count(n), n

    def test_rejects_zero(self):
        with pytest.raises(ValueError):
            divisor_count(0)


class TestTrialFactor:
    def test_examples(self):
        fac = trial_factor(60, 10)
        assert fac.parts == ((2, 2), (3, 1), (5, 1)) and fac.complete
        fac = trial_factor(2599, 200)
        assert fac.parts == ((23, 1), (113, 1)) and fac.complete
        fac = trial_factor(101, 50)
        assert fac.residual == 101 and not fac.complete

    @given(st.integers(min_value=2, max_value=10**9), st.integers(min_value=1, max_value=10**5))
    @settings(max_examples=300)
    def test_product_invariant(self, n, bound):
        fac = trial_factor(n, bound)
        product = 1
        for f, e in fac.parts:
            product *= f**e
        assert product == n

    def test_divisors_helper(self):
        assert trial_factor(60, 60).divisors() == [1, 2, 3, 4, 5, 6, 10, 12, 15, 20, 30, 60]

    def test_invariant_enforcement(self):
        with pytest.raises(ValueError):
            Factorization(6, ((2, 1), (2, 1)))
        with pytest.raises(ValueError):
            Factorization(6, ((2, 1), (5, 1)))


class TestGcdFamily:
    @given(st.integers(min_value=0, max_value=10**12), st.integers(min_value=0, max_value=10**12))
    @settings(max_examples=200)
    def test_ext_gcd(self, a, b):
        g, u, v = ext_gcd(a, b)
        assert g == gcd(a, b)
        assert a * u + b * v == g

    def test_mod_inverse(self):
        assert mod_inverse(7, 16) * 7 % 16 == 1
        with pytest.raises(ValueError):
            mod_inverse(4, 16)


class TestPrimality:
    def test_against_sieve(self):
        limit = 2000
        sieve = [True] * (limit + 1)
        sieve[0] = sieve[1] = False
        for i in range(2, int(limit**0.5) + 1):
            if sieve[i]:
                for j in range(i * i, limit + 1, i):
                    sieve[j] = False
        for n in range(limit + 1):
            assert is_prime(n) == sieve[n], n

    def test_large_values(self):
        assert is_prime(2**61 - 1)
        assert not is_prime((2**31 - 1) * (2**61 - 1))

    def test_next_and_random_prime(self):
        assert next_prime(113) == 127
        assert next_prime(1) == 2
        rng = random.Random(11)
        for bits in (8, 16, 32):
            p = random_prime(rng, bits)
            assert p.bit_length() == bits and is_prime(p)
