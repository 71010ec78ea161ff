"""Exact integer-lattice machinery.

Gram-Schmidt runs over exact rationals, LLL keeps its size-reduction and
Lovasz bookkeeping in Fractions with the classical O(n) swap updates, and
determinants use fraction-free elimination, so every contract here is
bit-exact and testable without tolerances.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .errors import DependentBasis, DimensionTooLarge

__all__ = [
    "Basis",
    "GramSchmidtData",
    "HERMITE_GAMMA_NTH_POWER",
    "determinant",
    "gram_schmidt",
    "hadamard_check",
    "hermite_bound",
    "lll_reduce",
    "lll_reduce_with_transform",
    "shortest_vector_exhaustive",
]

# gamma_n ** n for the dimensions where the Hermite constant is known exactly.
HERMITE_GAMMA_NTH_POWER: dict[int, Fraction] = {
    1: Fraction(1),
    2: Fraction(4, 3),
    3: Fraction(2),
    4: Fraction(4),
    5: Fraction(8),
    6: Fraction(64, 3),
    7: Fraction(64),
    8: Fraction(256),
}


@dataclass(frozen=True)
class Basis:
    """Square integer basis; rows are the lattice vectors."""

    vectors: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        n = len(self.vectors)
        if n == 0:
            raise ValueError("basis must be nonempty")
        for row in self.vectors:
            if len(row) != n:
                raise ValueError("basis must be square")

    @classmethod
    def from_rows(cls, rows) -> "Basis":
        return cls(tuple(tuple(int(x) for x in row) for row in rows))

    @property
    def n(self) -> int:
        return len(self.vectors)


@dataclass(frozen=True)
class GramSchmidtData:
    """Exact orthogonalization: v_i = v*_i + sum_{j<i} mu[i][j] * v*_j."""

    ortho: tuple[tuple[Fraction, ...], ...]
    mu: tuple[tuple[Fraction, ...], ...]  # row i holds mu[i][j] for j < i
    norms_sq: tuple[Fraction, ...]


def _dot(u, v) -> Fraction:
    return sum((a * b for a, b in zip(u, v)), start=Fraction(0))


def _gso(rows: list[list[int]]):
    """Full Gram-Schmidt pass; returns (ortho, mu-square, norms_sq)."""
    n = len(rows)
    ortho: list[list[Fraction]] = []
    mu = [[Fraction(0)] * n for _ in range(n)]
    norms: list[Fraction] = []
    for i in range(n):
        w = [Fraction(x) for x in rows[i]]
        for j in range(i):
            mu[i][j] = _dot(rows[i], ortho[j]) / norms[j]
            w = [a - mu[i][j] * b for a, b in zip(w, ortho[j])]
        ns = _dot(w, w)
        if ns == 0:
            raise DependentBasis(f"row {i} is in the span of the earlier rows")
        ortho.append(w)
        norms.append(ns)
    return ortho, mu, norms


def gram_schmidt(basis: Basis) -> GramSchmidtData:
    """Exact rational orthogonalization of the basis rows."""
    rows = [list(r) for r in basis.vectors]
    ortho, mu, norms = _gso(rows)
    return GramSchmidtData(
        ortho=tuple(tuple(w) for w in ortho),
        mu=tuple(tuple(mu[i][j] for j in range(i)) for i in range(len(rows))),
        norms_sq=tuple(norms),
    )


def determinant(basis: Basis) -> int:
    """|det| of the basis matrix via fraction-free (Bareiss) elimination."""
    n = basis.n
    a = [list(r) for r in basis.vectors]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                raise DependentBasis("zero pivot column: determinant is 0")
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    det = sign * a[n - 1][n - 1]
    if det == 0:
        raise DependentBasis("determinant is 0")
    return abs(det)


def lll_rows(
    rows: list[list[int]],
    delta: Fraction = Fraction(3, 4),
    transform: bool = False,
) -> tuple[list[list[int]], list[list[int]] | None]:
    """All-integer LLL core (Gram determinants d_i and scaled coefficients
    lambda[i][j] = d_{j+1} * mu[i][j] stay in Z, so no rational arithmetic
    is needed).  Mutates and returns `rows`; optionally tracks the
    unimodular transform."""
    delta = Fraction(delta)
    if not Fraction(1, 4) < delta <= 1:
        raise ValueError("delta must lie in (1/4, 1]")
    num, den = delta.numerator, delta.denominator
    n = len(rows)
    u = [[1 if i == j else 0 for j in range(n)] for i in range(n)] if transform else None

    d = [1] * (n + 1)
    lam = [[0] * n for _ in range(n)]
    for i in range(n):
        row_i = rows[i]
        for j in range(i + 1):
            s = sum(a * b for a, b in zip(row_i, rows[j]))
            for t in range(j):
                s = (d[t + 1] * s - lam[i][t] * lam[j][t]) // d[t]
            if j < i:
                lam[i][j] = s
            else:
                if s <= 0:
                    raise DependentBasis(f"row {i} is in the span of the earlier rows")
                d[i + 1] = s

    def size_reduce(k: int, j: int) -> None:
        dj = d[j + 1]
        if 2 * abs(lam[k][j]) > dj:
            q = (2 * lam[k][j] + dj) // (2 * dj)
            rows[k] = [a - q * c for a, c in zip(rows[k], rows[j])]
            if u is not None:
                u[k] = [a - q * c for a, c in zip(u[k], u[j])]
            lam[k][j] -= q * dj
            for t in range(j):
                lam[k][t] -= q * lam[j][t]

    k = 1
    while k < n:
        size_reduce(k, k - 1)
        lam_k = lam[k][k - 1]
        # Lovasz at delta = num/den: d[k+1]*d[k-1] >= delta*d[k]^2 - lambda^2,
        # cleared of denominators.
        if den * d[k + 1] * d[k - 1] >= num * d[k] * d[k] - den * lam_k * lam_k:
            for j in range(k - 2, -1, -1):
                size_reduce(k, j)
            k += 1
        else:
            rows[k - 1], rows[k] = rows[k], rows[k - 1]
            if u is not None:
                u[k - 1], u[k] = u[k], u[k - 1]
            for j in range(k - 1):
                lam[k - 1][j], lam[k][j] = lam[k][j], lam[k - 1][j]
            d_new = (d[k - 1] * d[k + 1] + lam_k * lam_k) // d[k]
            for i in range(k + 1, n):
                t = lam[i][k]
                lam[i][k] = (d[k + 1] * lam[i][k - 1] - lam_k * t) // d[k]
                lam[i][k - 1] = (d_new * t + lam_k * lam[i][k]) // d[k + 1]
            d[k] = d_new
            k = max(k - 1, 1)
    return rows, u


def lll_reduce_with_transform(
    basis: Basis, delta: Fraction = Fraction(3, 4)
) -> tuple[Basis, tuple[tuple[int, ...], ...]]:
    """LLL-reduce the basis; also return the unimodular transform U with
    U @ basis == reduced.

    The output is size-reduced (|mu[i][j]| <= 1/2) and satisfies the Lovasz
    condition at `delta` for consecutive rows.
    """
    rows, u = lll_rows([list(r) for r in basis.vectors], delta, transform=True)
    return Basis.from_rows(rows), tuple(tuple(r) for r in u)


def lll_reduce(basis: Basis, delta: Fraction = Fraction(3, 4)) -> Basis:
    """LLL-reduced basis spanning the same lattice."""
    reduced, _ = lll_reduce_with_transform(basis, delta)
    return reduced


def hadamard_check(basis: Basis) -> bool:
    """det(L)^2 <= prod ||v_i||^2, compared exactly (always true)."""
    det = determinant(basis)
    prod = 1
    for row in basis.vectors:
        prod *= sum(x * x for x in row)
    return det * det <= prod


def shortest_vector_exhaustive(basis: Basis, coeff_bound: int) -> tuple[int, ...]:
    """Minimal-norm nonzero vector over all |coefficient| <= coeff_bound
    combinations; ties broken toward the sign-canonical lexicographic least.

    Oracle use only; dimension is capped at 5.
    """
    n = basis.n
    if n > 5:
        raise DimensionTooLarge("exhaustive oracle supports n <= 5")
    best: tuple[int, tuple[int, ...]] | None = None
    for coeffs in itertools.product(range(-coeff_bound, coeff_bound + 1), repeat=n):
        if not any(coeffs):
            continue
        vec = [0] * n
        for c, row in zip(coeffs, basis.vectors):
            if c:
                for idx, x in enumerate(row):
                    vec[idx] += c * x
        for x in vec:
            if x:
                if x < 0:
                    vec = [-v for v in vec]
                break
        else:
            continue  # dependent rows can produce the zero vector
        key = (sum(x * x for x in vec), tuple(vec))
        if best is None or key < best:
            best = key
    if best is None:
        raise DependentBasis("no nonzero vector found")
    return best[1]


def hermite_bound(basis: Basis) -> Fraction:
    """n-th power of the squared-norm bound from the Hermite constant:
    the shortest vector satisfies (||v||^2)^n <= gamma_n^n * det(L)^2."""
    n = basis.n
    if n > 8:
        raise DimensionTooLarge("exact Hermite constants stop at n = 8")
    det = determinant(basis)
    return HERMITE_GAMMA_NTH_POWER[n] * det * det
