"""Small-root solvers for the bilinear factoring family
f(x, y) = (m*x + P0)(n*y + Q0) - N.

The lattice route: rows are the scaled coefficient vectors of f together
with working-modulus multiples of the box monomials.  Any integer
combination vanishes modulo the working modulus at every in-box root of f,
so a reduced vector that passes the Howgrave-Graham norm test vanishes
there over the integers, and one that also clears the multiple-of-f norm
gate is algebraically independent of f; the resultant then collapses the
system to one variable and the integer roots fall out of a bounded divisor
scan.

Boxes too large for a one-shot certificate are split into recentred
sub-boxes, each solved by the same pipeline, so the returned root set is
exactly the set of in-box roots regardless of box size.  The certified
regime (X*Y bounded by the 2/3 power of the scaled height) is tracked and
reported; larger boxes only cost more sub-boxes.
"""

from __future__ import annotations

import random
import warnings
from dataclasses import dataclass
from math import gcd, isqrt

from .arith import Factorization, is_perfect_square, random_prime
from .errors import (
    BoundTooLargeWarning,
    Exhausted,
    NoIndependentPolynomial,
    NonInvertibleResidue,
    NoRoot,
    NotCoprime,
)
from .lattice import Basis, lll_reduce, lll_rows
from .polynomial import (
    MultiPoly,
    multiple_bound_predicate,
    norms,
    resultant,
    scale_vars,
)
from .residue import theorem4_pairs

__all__ = [
    "BivariateProblem",
    "RootSolution",
    "TrivariateProblem",
    "default_box_bound",
    "empirical_envelope",
    "gated_polynomial",
    "solve_bivariate",
    "solve_bivariate_single",
    "solve_coprime_moduli",
    "solve_lsb_known",
    "solve_msb_known",
    "solve_trivariate",
    "certified_regime",
    "theorem4_driver",
]


@dataclass(frozen=True)
class BivariateProblem:
    """Root search for (m*x + P0)(n*y + Q0) - N over |x| <= X, |y| <= Y.

    The plain approximation form uses m = n = 1 with P0, Q0 the factor
    hints; the residue form uses moduli m, n with P0, Q0 the residues.
    """

    N: int
    P0: int
    Q0: int
    X: int
    Y: int
    m: int = 1
    n: int = 1

    def __post_init__(self):
        if self.N < 1:
            raise ValueError("N must be positive")
        if self.X < 1 or self.Y < 1:
            raise ValueError("bounds must be >= 1")
        if self.m < 1 or self.n < 1:
            raise ValueError("moduli must be >= 1")

    def poly(self) -> MultiPoly:
        return _family_poly(self.N, self.m, self.P0, self.n, self.Q0)

    def scaled_height(self) -> int:
        return norms(scale_vars(_strip_content(self.poly()), (self.X, self.Y))).height


@dataclass(frozen=True)
class TrivariateProblem:
    """Exhaustive-z variant: q is approximated as M*z0 -/+ a for small a and a
    short ascending range of positive z0 candidates."""

    N: int
    P0: int
    M: int
    a_range: tuple[int, ...]
    z_range: tuple[int, ...]
    X: int
    Y: int

    def __post_init__(self):
        if self.M < 1:
            raise ValueError("M must be >= 1")
        if any(z < 1 for z in self.z_range):
            raise ValueError("z candidates must be positive")


@dataclass(frozen=True)
class RootSolution:
    """An in-box root and the factor pair it certifies: p = m*x0 + P0,
    q = n*y0 + Q0, p*q = N."""

    x0: int
    y0: int
    p: int
    q: int
    z0: int | None = None


def _family_poly(big_n: int, m: int, p0: int, n: int, q0: int) -> MultiPoly:
    return MultiPoly(
        2,
        {
            (1, 1): m * n,
            (1, 0): m * q0,
            (0, 1): n * p0,
            (0, 0): p0 * q0 - big_n,
        },
    )


def _strip_content(f: MultiPoly) -> MultiPoly:
    c = f.content()
    if c > 1:
        return f.map_coeffs(lambda v: v // c)
    return f


def certified_regime(prob: BivariateProblem) -> bool:
    """Exact form of the certified small-root condition X*Y <= W**(2/3) for
    the bilinear family (degree 1 per variable)."""
    w = prob.scaled_height()
    return (prob.X * prob.Y) ** 3 <= w * w


def default_box_bound(big_n: int) -> int:
    """Symmetric box default covering a quarter-of-the-bits hint: one power
    of two above 2**(bits/4), so the derived co-factor offset fits too."""
    return 1 << (big_n.bit_length() // 4 + 1)


# The one-shot lattice over the monomial boxes used at each level.
_LEVELS = {
    1: (
        ((0, 0), (1, 0), (0, 1), (1, 1)),  # monomial order
        ((0, 0), (1, 0), (0, 1)),  # modulus rows
        ((0, 0),),  # shift multipliers for f
    ),
    2: (
        tuple((i, j) for i in range(3) for j in range(3)),
        ((0, 0), (1, 0), (0, 1), (2, 0), (0, 2)),
        ((0, 0), (1, 0), (0, 1), (1, 1)),
    ),
}


def _gated_vector(
    big_n: int, m: int, p0: int, n: int, q0: int, x_bound: int, y_bound: int, level: int
) -> tuple[MultiPoly, MultiPoly, MultiPoly] | None:
    """One lattice attempt.  Returns (f, g, u) where g passed the Howgrave
    and independence gates and u is the eliminating univariate (g itself
    when g has no y), or None when no reduced vector qualifies."""
    f = _strip_content(_family_poly(big_n, m, p0, n, q0))
    f_scaled = scale_vars(f, (x_bound, y_bound))
    w_height = norms(f_scaled).height
    modulus = max(2, w_height // 4)
    monomials, mod_rows, shift_muls = _LEVELS[level]
    col = {mono: idx for idx, mono in enumerate(monomials)}
    dim = len(monomials)
    rows: list[list[int]] = []
    for mono in mod_rows:
        vec = [0] * dim
        vec[col[mono]] = modulus * x_bound ** mono[0] * y_bound ** mono[1]
        rows.append(vec)
    for mono in shift_muls:
        shifted = f * MultiPoly(2, {mono: 1})
        scaled = scale_vars(shifted, (x_bound, y_bound))
        vec = [0] * dim
        for exps, coeff in scaled.terms.items():
            vec[col[exps]] = coeff
        rows.append(vec)
    reduced = lll_reduce(Basis.from_rows(rows))
    max_deg = level  # shifts raise the per-variable degree to the level
    for vec in reduced.vectors:
        g_scaled = MultiPoly(2, {m_: c for m_, c in zip(monomials, vec) if c})
        if g_scaled.is_zero:
            continue
        # Both gates compare the box-scaled pair: that is the pair whose
        # norms the root and multiple bounds constrain.
        if not howgrave_predicate_scaled(g_scaled, modulus):
            continue
        if not multiple_bound_predicate(f_scaled, g_scaled, max_deg):
            continue
        g = MultiPoly(
            2,
            {
                mono: coeff // (x_bound ** mono[0] * y_bound ** mono[1])
                for mono, coeff in g_scaled.terms.items()
            },
        )
        if g.degree(1) > 0:
            u = resultant(f, g, 1)
            if u.is_zero:
                continue
        else:
            u = g
        return f, g, u
    return None


def howgrave_predicate_scaled(g_scaled: MultiPoly, modulus: int) -> bool:
    """howgrave_predicate for a polynomial that is already box-scaled."""
    scaled = norms(g_scaled)
    return scaled.l2_sq * scaled.weight < modulus * modulus


def _fast_level1(
    big_n: int, m: int, p0: int, n: int, q0: int, x_bound: int, y_bound: int
) -> tuple[tuple[int, int, int, int], tuple[int, int, int]] | None:
    """The level-1 pipeline on raw coefficient vectors (hot path).

    Same mathematics as `_gated_vector` at level 1: content-stripped f,
    working modulus W/4, integer LLL, the Howgrave and multiple-of-f gates
    as integer comparisons, and the y-eliminant computed from the closed
    2 x 2 form f1*g0 - f0*g1.  Returns (f coefficients, eliminant
    coefficients) or None.
    """
    c11, c10, c01, c00 = m * n, m * q0, n * p0, p0 * q0 - big_n
    content = gcd(gcd(c11, c10), gcd(c01, abs(c00)))
    if content > 1:
        c11 //= content
        c10 //= content
        c01 //= content
        c00 //= content
    a11 = c11 * x_bound * y_bound
    a10 = c10 * x_bound
    a01 = c01 * y_bound
    w_height = max(abs(a11), abs(a10), abs(a01), abs(c00))
    modulus = max(2, w_height // 4)
    reduced, _ = lll_rows(
        [
            [modulus, 0, 0, 0],
            [0, modulus * x_bound, 0, 0],
            [0, 0, modulus * y_bound, 0],
            [c00, a10, a01, a11],
        ]
    )
    mod_sq = modulus * modulus
    w_sq = w_height * w_height
    for vec in reduced:
        l2 = vec[0] * vec[0] + vec[1] * vec[1] + vec[2] * vec[2] + vec[3] * vec[3]
        if l2 == 0:
            continue
        weight = (vec[0] != 0) + (vec[1] != 0) + (vec[2] != 0) + (vec[3] != 0)
        if l2 * weight >= mod_sq:  # Howgrave-Graham root gate
            continue
        if (l2 << 6) >= w_sq:  # multiple-of-f gate at degree 1
            continue
        g00 = vec[0]
        g10 = vec[1] // x_bound
        g01 = vec[2] // y_bound
        g11 = vec[3] // (x_bound * y_bound)
        u2 = c11 * g10 - c10 * g11
        u1 = c11 * g00 + c01 * g10 - c10 * g01 - c00 * g11
        u0 = c01 * g00 - c00 * g01
        if u2 == 0 and u1 == 0 and u0 == 0:
            continue
        return (c11, c10, c01, c00), (u2, u1, u0)
    return None


def _quad_roots(u2: int, u1: int, u0: int, lo: int, hi: int) -> list[int]:
    """Integer roots of u2*x^2 + u1*x + u0 inside [lo, hi], exactly."""
    if u2 == 0:
        if u1 == 0:
            return []
        if u0 % u1 == 0:
            r = -u0 // u1
            if lo <= r <= hi:
                return [r]
        return []
    disc = u1 * u1 - 4 * u2 * u0
    if disc < 0:
        return []
    s = is_perfect_square(disc)
    if s is None:
        return []
    roots = []
    for num in (-u1 + s, -u1 - s):
        if num % (2 * u2) == 0:
            r = num // (2 * u2)
            if lo <= r <= hi and r not in roots:
                roots.append(r)
    return sorted(roots)


def gated_polynomial(
    prob: BivariateProblem, level: int = 1
) -> tuple[MultiPoly, MultiPoly]:
    """Expose the (f, g) pair from a one-shot lattice; raises
    NoIndependentPolynomial when no reduced vector clears the gates."""
    got = _gated_vector(prob.N, prob.m, prob.P0, prob.n, prob.Q0, prob.X, prob.Y, level)
    if got is None:
        raise NoIndependentPolynomial(
            f"no gated vector at level {level} for box {prob.X} x {prob.Y}"
        )
    f, g, _ = got
    return f, g


def _integer_roots(u: MultiPoly, lo: int, hi: int) -> list[int]:
    """Integer roots of the univariate-in-x polynomial u inside [lo, hi]:
    divisor-of-constant-term filter plus exact evaluation."""
    coeffs = [c.coeff((0, 0)) for c in u.coeffs_in(0)]
    v = 0
    while v < len(coeffs) and coeffs[v] == 0:
        v += 1
    if v == len(coeffs):
        return []
    stripped = coeffs[v:]
    c0 = stripped[0]
    roots = [0] if v > 0 and lo <= 0 <= hi else []

    def value_at(x: int) -> int:
        acc = 0
        for c in reversed(stripped):
            acc = acc * x + c
        return acc

    for x in range(lo, hi + 1):
        if x == 0 or c0 % x:
            continue
        if value_at(x) == 0:
            roots.append(x)
    return sorted(roots)


def _certified_halfwidth(
    big_n: int, m: int, p0: int, n: int, q0: int, limit: int
) -> int:
    """Largest sub-box half-width (in x units) for which the worst-case LLL
    bound beats both gate thresholds, so the one-shot attempt must succeed."""

    def ok(w: int) -> bool:
        x_b = max(w, 1)
        p_min = abs(p0) - m * x_b
        if p_min < 1:
            return False
        y_b = (big_n * m * x_b) // (p_min * p_min * n) + 2
        w_est = max(m * abs(q0) * x_b, n * abs(p0) * y_b, m * n * x_b * y_b)
        if w_est < 2:
            return False
        modulus = max(2, w_est // 4)
        threshold = min(modulus // 2, w_est // 8)
        if threshold < 2:
            return False
        return 8 * modulus**3 * m * n * (x_b * y_b) ** 2 < threshold**4

    if not ok(1):
        return 0
    lo, hi = 1, max(limit, 1)
    while lo < hi:
        mid = (lo + hi + 1) // 2
        if ok(mid):
            lo = mid
        else:
            hi = mid - 1
    return lo


def _solve_interval(
    prob: BivariateProblem,
    xlo: int,
    xhi: int,
    acc: dict[tuple[int, int], tuple[int, int]],
    stats: dict,
) -> None:
    big_n, m, n = prob.N, prob.m, prob.n
    p_base, q_base = prob.P0, prob.Q0

    # Narrow the x interval against the q window until stable.
    while True:
        if xhi < xlo:
            return
        plo, phi = m * xlo + p_base, m * xhi + p_base
        if plo <= 0 <= phi:
            # p = 0 carries no divisor; recurse on the sign-pure halves.
            x_neg_hi = (-1 - p_base) // m
            x_pos_lo = -((p_base - 1) // m)
            _solve_interval(prob, xlo, min(xhi, x_neg_hi), acc, stats)
            _solve_interval(prob, max(xlo, x_pos_lo), xhi, acc, stats)
            return
        q_box_lo, q_box_hi = q_base - n * prob.Y, q_base + n * prob.Y
        if plo > 0:
            qlo = max(q_box_lo, big_n // phi)
            qhi = min(q_box_hi, big_n // plo + 1)
        else:
            qlo = max(q_box_lo, big_n // phi)
            qhi = min(q_box_hi, big_n // plo + 1)
        if qlo > qhi:
            return
        if qlo > 0:
            p2lo, p2hi = big_n // qhi, big_n // qlo + 1
        elif qhi < 0:
            p2lo, p2hi = big_n // qhi, big_n // qlo + 1
        else:
            break  # q window straddles 0: no tightening available
        new_xlo = max(xlo, -((p_base - p2lo) // m))
        new_xhi = min(xhi, (p2hi - p_base) // m)
        if (new_xlo, new_xhi) == (xlo, xhi):
            break
        xlo, xhi = new_xlo, new_xhi

    # Recentre the sub-box.
    xc = (xlo + xhi) // 2
    p0c = m * xc + p_base
    x_half = max(xhi - xc, xc - xlo, 1)
    qc = (qlo + qhi) // 2
    yc = (2 * (qc - q_base) + n) // (2 * n)
    q0c = q_base + n * yc
    y_half = max(-((q0c - qhi) // n), -((qlo - q0c) // n), 0) + 1

    stats["boxes"] = stats.get("boxes", 0) + 1
    fast = _fast_level1(big_n, m, p0c, n, q0c, x_half, y_half)
    if fast is not None:
        stats["lattice_dim"] = max(stats.get("lattice_dim", 0), 4)
        _, (u2, u1, u0) = fast
        for xr in _quad_roots(u2, u1, u0, xlo - xc, xhi - xc):
            p = m * xr + p0c
            if p == 0 or big_n % p:
                continue
            q = big_n // p
            if (q - q_base) % n:
                continue
            acc[(xr + xc, (q - q_base) // n)] = (p, q)
        return

    span = xhi - xlo + 1
    halfwidth = _certified_halfwidth(big_n, m, p0c, n, q0c, x_half)
    if halfwidth >= 1:
        # Reduced bases beat the worst-case certificate by a healthy margin
        # in practice, so split optimistically first; chunks that still miss
        # descend geometrically and bottom out at the certified width, where
        # a hit is guaranteed.
        step = 16 * halfwidth + 1
        if step >= span:
            step = max(2 * halfwidth + 1, (span + 3) // 4)
        if step < span:
            x = xlo
            while x <= xhi:
                _solve_interval(prob, x, min(xhi, x + step - 1), acc, stats)
                x += step
            return

    # Degenerate scale: escalate the lattice once, then fall back to checking
    # the few remaining columns directly.
    got = _gated_vector(big_n, m, p0c, n, q0c, x_half, y_half, 2)
    if got is not None:
        stats["lattice_dim"] = max(stats.get("lattice_dim", 0), 9)
        _, _, u = got
        for xr in _integer_roots(u, xlo - xc, xhi - xc):
            p = m * xr + p0c
            if p == 0 or big_n % p:
                continue
            q = big_n // p
            if (q - q_base) % n:
                continue
            acc[(xr + xc, (q - q_base) // n)] = (p, q)
        return
    stats["column_scans"] = stats.get("column_scans", 0) + 1
    for x0 in range(xlo, xhi + 1):
        p = m * x0 + p_base
        if p == 0 or big_n % p:
            continue
        q = big_n // p
        if (q - q_base) % n:
            continue
        acc[(x0, (q - q_base) // n)] = (p, q)


def solve_bivariate(
    prob: BivariateProblem, stats: dict | None = None
) -> list[RootSolution]:
    """All roots of (m*x + P0)(n*y + Q0) - N with |x| <= X, |y| <= Y.

    Emits BoundTooLargeWarning when the box exceeds the certified regime
    and keeps going; raises NoRoot when the box holds no root.
    """
    certified = certified_regime(prob)
    if not certified:
        warnings.warn(
            f"box {prob.X} x {prob.Y} exceeds the certified small-root regime",
            BoundTooLargeWarning,
            stacklevel=2,
        )
    if stats is None:
        stats = {}
    stats["certified"] = certified
    acc: dict[tuple[int, int], tuple[int, int]] = {}
    # a divisor never exceeds N in magnitude, whatever the requested box
    xlo = max(-prob.X, -((prob.N + prob.P0) // prob.m))
    xhi = min(prob.X, (prob.N - prob.P0) // prob.m)
    _solve_interval(prob, xlo, xhi, acc, stats)
    f = prob.poly()
    solutions = []
    for (x0, y0), (p, q) in sorted(acc.items()):
        if abs(x0) > prob.X or abs(y0) > prob.Y:
            continue
        if p * q != prob.N or f.evaluate((x0, y0)) != 0:
            raise AssertionError("solver produced an invalid root")
        solutions.append(RootSolution(x0=x0, y0=y0, p=p, q=q))
    if not solutions:
        raise NoRoot(f"no factor pair of {prob.N} inside the box")
    return solutions


def solve_bivariate_single(
    prob: BivariateProblem, level: int = 1
) -> list[RootSolution]:
    """One-shot lattice attempt on the whole box, with no splitting: the
    measured-envelope primitive.  Raises NoIndependentPolynomial when the
    gates reject every reduced vector."""
    got = _gated_vector(prob.N, prob.m, prob.P0, prob.n, prob.Q0, prob.X, prob.Y, level)
    if got is None:
        raise NoIndependentPolynomial(f"one-shot level {level} attempt failed")
    f_used, _, u = got
    solutions = []
    for x0 in _integer_roots(u, -prob.X, prob.X):
        p = prob.m * x0 + prob.P0
        if p == 0 or prob.N % p:
            continue
        q = prob.N // p
        if (q - prob.Q0) % prob.n:
            continue
        y0 = (q - prob.Q0) // prob.n
        if abs(y0) > prob.Y:
            continue
        solutions.append(RootSolution(x0=x0, y0=y0, p=p, q=q))
    if not solutions:
        raise NoRoot(f"no factor pair of {prob.N} inside the box")
    return sorted(solutions, key=lambda s: (s.x0, s.y0))


def solve_msb_known(big_n: int, p0: int, stats: dict | None = None) -> list[RootSolution]:
    """Factor N from a leading-bits approximation P0 of a factor.

    Q0 = floor(N / P0); the box is symmetric with the default quarter-bits
    bound, so a hint carrying the top quarter of the bits suffices.
    """
    if p0 < 1:
        raise ValueError("P0 must be positive")
    bound = default_box_bound(big_n)
    prob = BivariateProblem(N=big_n, P0=p0, Q0=big_n // p0, X=bound, Y=bound)
    return solve_bivariate(prob, stats)


def solve_lsb_known(
    big_n: int, x0_bits: int, k: int, stats: dict | None = None
) -> list[RootSolution]:
    """Factor odd N from the k low bits of a factor.

    The co-factor's low bits follow from N * x0_bits^(-1) mod 2^k; both
    factors are then affine in the modulus 2^k and the bilinear solver
    recovers the high parts.
    """
    if big_n % 2 == 0:
        raise ValueError("N must be odd")
    if k < 1:
        raise ValueError("k must be >= 1")
    mod = 1 << k
    if x0_bits % 2 == 0:
        raise NonInvertibleResidue(f"{x0_bits} is even, not invertible mod 2^{k}")
    x0_bits %= mod
    y0_bits = big_n * pow(x0_bits, -1, mod) % mod
    if mod * mod > 2 * big_n:
        # The modulus already covers the factors: direct division.
        p = x0_bits
        if 1 < p < big_n and big_n % p == 0:
            q = big_n // p
            if q % mod == y0_bits:
                return [RootSolution(x0=0, y0=(q - y0_bits) // mod, p=p, q=q)]
        raise NoRoot(f"{x0_bits} does not extend to a factor of {big_n}")
    x_bound = isqrt(big_n) // mod + 1
    y_bound = 2 * isqrt(big_n) // mod + 1
    prob = BivariateProblem(
        N=big_n, P0=x0_bits, Q0=y0_bits, X=x_bound, Y=y_bound, m=mod, n=mod
    )
    return solve_bivariate(prob, stats)


def solve_trivariate(
    prob: TrivariateProblem, stats: dict | None = None
) -> list[RootSolution]:
    """Resolve the co-factor transform Q0 = M*z0 -/+ a by ascending
    exhaustive search over z0 then a, delegating each candidate to the
    bivariate solver; the first verified factorization wins."""
    for z0 in sorted(set(prob.z_range)):
        base = prob.M * z0
        for a in sorted(set(abs(a) for a in prob.a_range)):
            for q0 in ((base - a,) if a == 0 else (base - a, base + a)):
                if q0 < 1:
                    continue
                sub = BivariateProblem(
                    N=prob.N, P0=prob.P0, Q0=q0, X=prob.X, Y=prob.Y
                )
                try:
                    found = solve_bivariate(sub, stats)
                except NoRoot:
                    continue
                return [
                    RootSolution(x0=s.x0, y0=s.y0, p=s.p, q=s.q, z0=z0)
                    for s in found
                ]
    raise Exhausted("no (z0, a) candidate produced a factorization")


def solve_coprime_moduli(
    big_n: int, m: int, n: int, c: int, d: int, stats: dict | None = None
) -> list[RootSolution]:
    """Factor N = (m*x + c)(n*y + d) for coprime moduli and small residues."""
    if gcd(m, n) != 1:
        raise NotCoprime(f"gcd({m}, {n}) != 1")
    bound = 2 * isqrt(big_n) // min(m, n) + 1
    prob = BivariateProblem(N=big_n, P0=c, Q0=d, X=bound, Y=bound, m=m, n=n)
    return solve_bivariate(prob, stats)


def theorem4_driver(big_n: int, m: int, stats: dict | None = None) -> Factorization:
    """Factor N with nearly equal factors by trying every divisor pair of
    the small lifts of N mod m in the (m*x + c)(m*y + d) form."""
    g = gcd(big_n, m)
    if 1 < g < big_n:
        p, q = sorted((g, big_n // g))
        parts = ((p, 2),) if p == q else ((p, 1), (q, 1))
        return Factorization(big_n, parts)
    bound = 3 * isqrt(big_n) // (2 * m) + 2
    for pair in theorem4_pairs(big_n, m):
        prob = BivariateProblem(
            N=big_n, P0=pair.c, Q0=pair.d, X=bound, Y=bound, m=m, n=m
        )
        try:
            found = solve_bivariate(prob, stats)
        except NoRoot:
            continue
        for sol in found:
            if 1 < sol.p < big_n:
                p, q = sorted((sol.p, sol.q))
                parts = ((p, 2),) if p == q else ((p, 1), (q, 1))
                return Factorization(big_n, parts)
    raise Exhausted(f"no residue pair mod {m} yields a factorization")


def empirical_envelope(
    bits: int = 64,
    instances: int = 3,
    seed: int = 2024,
    exponents=range(8, 21, 2),
) -> list[dict]:
    """Measure where the one-shot lattice stops working as the box grows.

    For random balanced semiprimes and a hint inside each box, records the
    certified flag and whether a single gated lattice (no splitting)
    recovered a true factor.  The full solver is exact for every box; this
    report documents the one-shot envelope instead of asserting any
    uncertified range.
    """
    rng = random.Random(seed)
    report = []
    for _ in range(instances):
        p = random_prime(rng, bits // 2)
        q = random_prime(rng, bits - bits // 2)
        if p > q:
            p, q = q, p
        big_n = p * q
        for e in exponents:
            x_bound = 1 << e
            offset = rng.randrange(0, min(x_bound, max(p // 2, 1)))
            p0 = p - offset
            prob = BivariateProblem(
                N=big_n, P0=p0, Q0=big_n // p0, X=x_bound, Y=2 * x_bound
            )
            entry = {
                "n": big_n,
                "x_log2": e,
                "certified": certified_regime(prob),
            }
            try:
                found = solve_bivariate_single(prob)
                entry["one_shot"] = any(s.p in (p, q) or s.q in (p, q) for s in found)
            except (NoIndependentPolynomial, NoRoot):
                entry["one_shot"] = False
            report.append(entry)
    return report
