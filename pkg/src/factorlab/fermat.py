"""Difference-of-squares factoring.

Solving 4N = x^2 - y^2 splits N as p = (x-y)/2, q = (x+y)/2.  Three search
strategies are provided: the consecutive scan, the triangular-number
acceleration that jumps between square values via cube increments, and a
ratio-shifted variant that rebalances q ~ (a/b)p through the multiplier
transform.  Step accounting is exact so the predicted and measured scan
lengths can be compared to the unit.
"""

from __future__ import annotations

from dataclasses import dataclass
from decimal import Decimal
from fractions import Fraction
from math import gcd, isqrt

from .arith import is_perfect_square
from .errors import (
    Exhausted,
    MultiplierCollision,
    NotADivisor,
    PreconditionViolated,
    TrivialOnly,
)

__all__ = [
    "FermatResult",
    "RatioBounds",
    "RatioGridEntry",
    "SearchBudget",
    "fermat_ratio",
    "fermat_standard",
    "fermat_triangular",
    "predict_steps",
    "ratio_bounds_check",
    "ratio_grid",
    "render_ratio",
    "triangular_squares",
    "triangular_start",
]

_RATIO_CAP = 10**4


@dataclass(frozen=True)
class SearchBudget:
    """Caller-chosen step cap; None means scan to the trivial solution.

    Free search exponents and constants live here as concrete bounds rather
    than asymptotic symbols.
    """

    max_steps: int | None = None

    def __post_init__(self):
        if self.max_steps is not None and self.max_steps < 0:
            raise ValueError("max_steps must be >= 0")


def _max_steps(budget: SearchBudget | int | None) -> int | None:
    if budget is None:
        return None
    if isinstance(budget, SearchBudget):
        return budget.max_steps
    return SearchBudget(int(budget)).max_steps


@dataclass(frozen=True)
class FermatResult:
    """A solution of 4N = x^2 - y^2 with its scan-step count."""

    x: int
    y: int
    p: int
    q: int
    steps: int
    method: str

    def __post_init__(self):
        if self.p > self.q or self.p < 1:
            raise ValueError("need 1 <= p <= q")
        if self.x != self.p + self.q or self.y != self.q - self.p:
            raise ValueError("x, y must be the factor sum and gap")
        if self.x * self.x - self.y * self.y != 4 * self.p * self.q:
            raise ValueError("x^2 - y^2 != 4N")

    @property
    def n(self) -> int:
        return self.p * self.q


def _difference_scan(n: int, max_steps: int | None, method: str) -> FermatResult:
    """Scan x upward from the first x with x^2 >= 4n, testing x^2 - 4n for
    squareness.  Steps count squareness tests, including the hit."""
    four_n = 4 * n
    x = isqrt(four_n)
    if x * x < four_n:
        x += 1
    steps = 0
    while x <= n + 1:
        steps += 1
        if max_steps is not None and steps > max_steps:
            raise Exhausted(f"no solution within {max_steps} steps")
        y = is_perfect_square(x * x - four_n)
        if y is not None:
            p, q = (x - y) // 2, (x + y) // 2
            if p >= 2:
                return FermatResult(x=x, y=y, p=p, q=q, steps=steps, method=method)
            if p == 1:
                raise TrivialOnly(f"{n} admits only the trivial split 1 x {n}")
        x += 1
    raise Exhausted("scan passed the trivial solution")  # unreachable for n >= 2


def fermat_standard(n: int, budget: SearchBudget | int | None = None) -> FermatResult:
    """Factor odd n >= 3 by the consecutive difference-of-squares scan."""
    if n < 3 or n % 2 == 0:
        raise ValueError("n must be odd and >= 3")
    return _difference_scan(n, _max_steps(budget), "standard")


def predict_steps(p: int, n: int) -> int:
    """Scan length p + n/p - floor(2*sqrt(n)) for the divisor pair led by p."""
    if n % p != 0:
        raise NotADivisor(f"{p} does not divide {n}")
    if p * p > n:
        raise ValueError("p must be the smaller divisor")
    return max(0, p + n // p - isqrt(4 * n))


def triangular_start(n: int) -> tuple[int, int]:
    """Return (m, x0) with m = floor(2 * n**0.25) and x0 = m(m+1)/2."""
    m = isqrt(isqrt(16 * n))
    return m, m * (m + 1) // 2


def triangular_squares(n: int):
    """Yield (i, x_i, x_i^2) along the cube-increment recurrence
    x_i^2 = x_{i-1}^2 + (m+i)^3 starting from x_0 = m(m+1)/2."""
    m, x = triangular_start(n)
    x_sq = x * x
    i = 0
    while True:
        yield i, x, x_sq
        i += 1
        x_sq += (m + i) ** 3
        x += m + i


def fermat_triangular(n: int, budget: SearchBudget | int | None = None) -> FermatResult:
    """Difference-of-squares scan restricted to triangular x values.

    Succeeds only when p + q is a triangular number; the cube-increment
    recurrence visits exactly those x.  Exhausted signals that p + q is
    (likely) not triangular within the scan range.
    """
    if n < 3 or n % 2 == 0:
        raise ValueError("n must be odd and >= 3")
    max_steps = _max_steps(budget)
    four_n = 4 * n
    steps = 0
    for _i, x, x_sq in triangular_squares(n):
        if 2 * x > n + 4:
            break
        if x_sq < four_n:
            continue
        steps += 1
        if max_steps is not None and steps > max_steps:
            raise Exhausted(f"no triangular solution within {max_steps} steps")
        y = is_perfect_square(x_sq - four_n)
        if y is not None:
            p, q = (x - y) // 2, (x + y) // 2
            if p >= 2:
                return FermatResult(x=x, y=y, p=p, q=q, steps=steps, method="triangular")
    raise Exhausted("p + q is not triangular within the scan range")


@dataclass(frozen=True)
class RatioGridEntry:
    """Grid point (r, s) with r*s == 1 exactly."""

    index: int
    r: Fraction
    s: Fraction

    def __post_init__(self):
        if self.r * self.s != 1:
            raise ValueError("r*s must equal 1")


def _as_fraction(value) -> Fraction:
    if isinstance(value, float):
        # Take the printed decimal, not the binary expansion.
        return Fraction(str(value))
    if isinstance(value, (str, int, Fraction, Decimal)):
        return Fraction(value)
    raise TypeError(f"cannot interpret {value!r} as an exact ratio")


def ratio_grid(lower, upper, count: int) -> list[RatioGridEntry]:
    """Uniform subdivision r_i = lower + i*(upper-lower)/count, s_i = 1/r_i,
    for i = 0..count-1, carried as exact rationals."""
    lo, hi = _as_fraction(lower), _as_fraction(upper)
    if not 0 < lo < hi:
        raise ValueError("need 0 < lower < upper")
    if count < 1:
        raise ValueError("count must be positive")
    step = (hi - lo) / count
    entries = []
    for i in range(count):
        r = lo + i * step
        entries.append(RatioGridEntry(index=i, r=r, s=1 / r))
    return entries


def render_ratio(value: Fraction) -> str:
    """Decimal rendering rounded half-to-even at six places, trailing zeros
    stripped (the table convention)."""
    scaled = round(value * 10**6)
    sign = "-" if scaled < 0 else ""
    intpart, frac = divmod(abs(scaled), 10**6)
    text = f"{sign}{intpart}.{frac:06d}".rstrip("0").rstrip(".")
    return text


def fermat_ratio(
    n: int, ratio, budget: SearchBudget | int | None = None
) -> FermatResult:
    """Factor n when q ~ (a/b) * p for a known ratio a/b >= 1.

    Runs the consecutive scan on a*b*n, whose divisor pair (b*p, a*q) is
    near-balanced, then strips the multipliers from the recovered pair via
    gcd with n.
    """
    r = _as_fraction(ratio)
    if r < 1:
        raise ValueError("ratio must be >= 1")
    a, b = r.numerator, r.denominator
    if a > _RATIO_CAP or b > _RATIO_CAP:
        raise ValueError(f"ratio numerator/denominator capped at {_RATIO_CAP}")
    if n < 3:
        raise ValueError("n must be >= 3")
    inner = _difference_scan(a * b * n, _max_steps(budget), "ratio")
    for cand in (inner.p, inner.q):
        g = gcd(cand, n)
        if 1 < g < n:
            p, q = sorted((g, n // g))
            return FermatResult(
                x=p + q, y=q - p, p=p, q=q, steps=inner.steps, method="ratio"
            )
    raise MultiplierCollision(
        f"neither recovered factor of {a * b}*{n} yields a divisor of {n}"
    )


@dataclass(frozen=True)
class RatioBounds:
    """Exact checks of the balanced-factor windows for q <= 2p."""

    factor_window: bool  # sqrt(N/2) <= p <= sqrt(N) <= q <= sqrt(2N)
    sum_window: bool  # 2*sqrt(N) <= p + q <= (3*sqrt(2)/2)*sqrt(N)
    gap_window: bool  # 0 <= q - p <= (sqrt(2)/2)*sqrt(N)

    @property
    def all_ok(self) -> bool:
        return self.factor_window and self.sum_window and self.gap_window


def ratio_bounds_check(p: int, q: int, n: int) -> RatioBounds:
    """Verify the balanced-factor windows by squaring both sides; integers only."""
    if p * q != n:
        raise ValueError("p*q must equal n")
    if p > q:
        raise ValueError("need p <= q")
    if q > 2 * p:
        raise PreconditionViolated(f"q = {q} exceeds 2p = {2 * p}")
    factor_window = n <= 2 * p * p and p * p <= n and n <= q * q and q * q <= 2 * n
    s = p + q
    sum_window = 4 * n <= s * s and 2 * s * s <= 9 * n
    d = q - p
    gap_window = 2 * d * d <= n
    return RatioBounds(factor_window, sum_window, gap_window)
