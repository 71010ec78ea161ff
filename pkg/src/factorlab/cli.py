"""Command-line front end.

Subcommands: `factor` runs one method on one integer, `bench` generates
seeded semiprime populations and streams per-instance reports, `grid`
prints the balanced-ratio table, `lattice` reduces a basis, and `demo`
walks through the 2599 example.  Output is human text or json-lines; all
big integers in JSON are decimal strings.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

from . import arith, coppersmith, fermat, lattice
from .errors import (
    Exhausted,
    FactorlabError,
    GcdFactorFound,
    MultiplierCollision,
    NoRoot,
    TrivialOnly,
)
from .residue import enumerate_pairs, landry_pepin

METHODS = (
    "standard",
    "triangular",
    "ratio",
    "residue",
    "landry-pepin",
    "coppersmith-msb",
    "coppersmith-lsb",
    "trivariate",
    "theorem4",
)

JSON_KEYS = (
    "n",
    "method",
    "params",
    "outcome",
    "factors",
    "steps",
    "lattice_dim",
    "certified",
    "time_ms",
)


@dataclass
class RunConfig:
    command: str
    method: str | None = None
    n: int | None = None
    r: str | None = None
    mod: int | None = None
    mod2: int | None = None
    c: int | None = None
    d: int | None = None
    p0: int | None = None
    lsb_value: int | None = None
    lsb_bits: int | None = None
    mult: int | None = None
    z_max: int = 32
    a_max: int = 9
    t_bound: int | None = None
    budget: int | None = None
    lower: str = "0.707"
    upper: str = "1"
    count: int = 21
    rows: str | None = None
    delta: str = "3/4"
    profile: str = "gap"
    bits: int = 32
    instances: int = 20
    seed: int = 1
    fmt: str = "text"


@dataclass
class RunReport:
    n: int | None
    method: str | None
    params: dict
    outcome: str  # factored | exhausted | no-root | trivial-only
    factors: tuple[int, ...] | None
    steps: int | None
    lattice_dim: int | None
    certified: bool | None
    time_ms: float = 0.0

    def to_json_obj(self) -> dict:
        def enc(v):
            if isinstance(v, bool) or v is None:
                return v
            if isinstance(v, int):
                return str(v)
            return v

        return {
            "n": enc(self.n),
            "method": self.method,
            "params": {k: enc(v) for k, v in self.params.items()},
            "outcome": self.outcome,
            "factors": [str(f) for f in self.factors] if self.factors else None,
            "steps": self.steps,
            "lattice_dim": self.lattice_dim,
            "certified": self.certified,
            "time_ms": self.time_ms,
        }

    def to_text(self) -> str:
        if self.factors:
            facs = "*".join(str(f) for f in self.factors)
            extra = f" steps={self.steps}" if self.steps is not None else ""
            if self.certified is not None:
                extra += f" certified={self.certified}"
            return f"{self.n} = {facs}{extra} ({self.time_ms:.2f} ms)"
        return f"{self.n}: {self.outcome} ({self.time_ms:.2f} ms)"


def _require(config: RunConfig, *names: str) -> None:
    for name in names:
        if getattr(config, name) is None:
            flag = "--" + name.replace("_", "-")
            raise UsageError(f"method {config.method!r} requires {flag}")


class UsageError(Exception):
    pass


def _factorization_tuple(fac: arith.Factorization) -> tuple[int, ...]:
    out: list[int] = []
    for f, e in fac.parts:
        out.extend([f] * e)
    return tuple(out)


def _residue_method(config: RunConfig) -> tuple[tuple[int, ...], int | None]:
    """Residue-class route: enumerate candidate (c, d) pairs for the modulus,
    then run the scaled-sum scan on each until one factors N."""
    n, m = config.n, config.mod
    try:
        pairs = enumerate_pairs(n, m)
    except GcdFactorFound as found:
        return tuple(sorted((found.factor, n // found.factor))), None
    bound = config.t_bound
    for pair in sorted(pairs.pairs):
        for c, d in ((pair.c, pair.d), (pair.d, pair.c)):
            t_bound = bound
            if t_bound is None:
                t_bound = 3 * max(c, d) * arith.isqrt(n) // (m * m) + 2
            try:
                fac = landry_pepin(n, m, m, c, d, t_bound)
            except Exhausted:
                continue
            return _factorization_tuple(fac), None
    raise Exhausted(f"no residue pair mod {m} factored {n}")


def run(config: RunConfig) -> RunReport:
    """Dispatch one factoring run and wrap the outcome in a RunReport."""
    method = config.method
    if method not in METHODS:
        raise UsageError(f"unknown method {method!r}")
    if config.n is None:
        raise UsageError("--n is required")
    n = config.n
    params: dict = {}
    steps = lattice_dim = None
    certified = None
    factors: tuple[int, ...] | None = None
    outcome = "factored"
    stats: dict = {}
    started = time.perf_counter()
    try:
        if method == "standard":
            res = fermat.fermat_standard(n, config.budget)
            factors, steps = (res.p, res.q), res.steps
        elif method == "triangular":
            res = fermat.fermat_triangular(n, config.budget)
            factors, steps = (res.p, res.q), res.steps
        elif method == "ratio":
            _require(config, "r")
            params["r"] = config.r
            res = fermat.fermat_ratio(n, config.r, config.budget)
            factors, steps = (res.p, res.q), res.steps
        elif method == "residue":
            _require(config, "mod")
            params["mod"] = config.mod
            factors, steps = _residue_method(config)
        elif method == "landry-pepin":
            _require(config, "mod", "mod2", "c", "d")
            params.update(mod=config.mod, mod2=config.mod2, c=config.c, d=config.d)
            t_bound = config.t_bound
            if t_bound is None:
                t_bound = (
                    3 * max(config.c, config.d) * arith.isqrt(n)
                    // (config.mod * config.mod2) + 2
                )
            params["t_bound"] = t_bound
            fac = landry_pepin(n, config.mod, config.mod2, config.c, config.d, t_bound)
            factors = _factorization_tuple(fac)
        elif method == "coppersmith-msb":
            _require(config, "p0")
            params["p0"] = config.p0
            sols = coppersmith.solve_msb_known(n, config.p0, stats)
            factors = _pick_factor_pair(n, sols)
        elif method == "coppersmith-lsb":
            _require(config, "lsb_value", "lsb_bits")
            params.update(lsb_value=config.lsb_value, lsb_bits=config.lsb_bits)
            sols = coppersmith.solve_lsb_known(n, config.lsb_value, config.lsb_bits, stats)
            factors = _pick_factor_pair(n, sols)
        elif method == "trivariate":
            _require(config, "p0", "mult")
            params.update(p0=config.p0, mult=config.mult)
            bound = coppersmith.default_box_bound(n)
            prob = coppersmith.TrivariateProblem(
                N=n,
                P0=config.p0,
                M=config.mult,
                a_range=tuple(range(config.a_max + 1)),
                z_range=tuple(range(1, config.z_max + 1)),
                X=bound,
                Y=bound,
            )
            sols = coppersmith.solve_trivariate(prob, stats)
            params["z0"] = sols[0].z0
            factors = _pick_factor_pair(n, sols)
        elif method == "theorem4":
            _require(config, "mod")
            params["mod"] = config.mod
            fac = coppersmith.theorem4_driver(n, config.mod, stats)
            factors = _factorization_tuple(fac)
    except (Exhausted, MultiplierCollision):
        outcome = "exhausted"
    except NoRoot:
        outcome = "no-root"
    except TrivialOnly:
        outcome = "trivial-only"
    elapsed = (time.perf_counter() - started) * 1000.0
    if factors is not None:
        product = 1
        for f in factors:
            product *= f
        if product != n:  # re-verified at the boundary, never printed unchecked
            raise FactorlabError(f"internal error: {factors} does not multiply to {n}")
    lattice_dim = stats.get("lattice_dim")
    certified = stats.get("certified")
    return RunReport(
        n=n,
        method=method,
        params=params,
        outcome=outcome,
        factors=factors,
        steps=steps,
        lattice_dim=lattice_dim,
        certified=certified,
        time_ms=elapsed,
    )


def _pick_factor_pair(n: int, sols) -> tuple[int, ...]:
    for sol in sols:
        if 1 < sol.p < n:
            return tuple(sorted((sol.p, n // sol.p)))
    raise NoRoot(f"only trivial roots found for {n}")


def gap_semiprime(rng: random.Random, bits: int) -> tuple[int, int, int]:
    """Semiprime N = p*q with q - p <= N**(1/4)."""
    while True:
        p = arith.random_prime(rng, bits // 2)
        cap = max(4, 1 << max(2, bits // 4 - 2))
        q = arith.next_prime(p + rng.randrange(1, cap))
        n = p * q
        if q - p <= arith.isqrt(arith.isqrt(n)):
            return n, p, q


def ratio_semiprime(
    rng: random.Random, bits: int, ratio: Fraction
) -> tuple[int, int, int]:
    """Semiprime N = p*q with |b*q - a*p| <= b * N**(1/4) for ratio a/b."""
    a, b = ratio.numerator, ratio.denominator
    while True:
        p = arith.random_prime(rng, bits // 2)
        q = arith.next_prime(a * p // b + rng.randrange(0, 16))
        if q <= p:
            continue
        n = p * q
        if abs(b * q - a * p) <= b * arith.isqrt(arith.isqrt(n)):
            return n, p, q


def bench(config: RunConfig):
    """Yield one RunReport per generated instance, then a summary dict.

    Instances are generated from the seed alone, so two runs with the same
    seed emit identical reports apart from the wall-time fields.
    """
    rng = random.Random(config.seed)
    ratio = Fraction(config.r) if config.r else Fraction(2)
    instances = []
    for idx in range(config.instances):
        if config.profile == "gap":
            n, p, q = gap_semiprime(rng, config.bits)
        elif config.profile == "ratio":
            n, p, q = ratio_semiprime(rng, config.bits, ratio)
        else:
            raise UsageError(f"unknown profile {config.profile!r}")
        instances.append((idx, n, p, q))

    def one(item):
        idx, n, p, q = item
        sub = RunConfig(
            command="factor",
            method=config.method,
            n=n,
            r=config.r or str(ratio),
            budget=config.budget,
            mod=config.mod,
        )
        if config.method == "coppersmith-msb":
            ell = n.bit_length() // 4
            sub.p0 = (p >> ell) << ell
        elif config.method == "coppersmith-lsb":
            ell = n.bit_length() // 4
            sub.lsb_bits = ell
            sub.lsb_value = p % (1 << ell)
        report = run(sub)
        report.params.update(
            profile=config.profile, bits=config.bits, seed=config.seed,
            index=idx, p=p, q=q,
        )
        return report

    workers = int(os.environ.get("FACTORLAB_THREADS", "1") or "1")
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            reports = list(pool.map(one, instances))
    else:
        reports = [one(item) for item in instances]

    step_values = sorted(r.steps for r in reports if r.steps is not None)
    factored = sum(1 for r in reports if r.outcome == "factored")
    summary = {
        "summary": True,
        "method": config.method,
        "profile": config.profile,
        "count": len(reports),
        "factored": factored,
        "median_steps": step_values[len(step_values) // 2] if step_values else None,
        "mean_steps": (
            round(sum(step_values) / len(step_values), 2) if step_values else None
        ),
    }
    return reports, summary


def grid_lines(config: RunConfig) -> list[str]:
    entries = fermat.ratio_grid(config.lower, config.upper, config.count)
    lines = []
    for e in entries:
        if config.fmt == "json-lines":
            lines.append(
                json.dumps(
                    {
                        "index": e.index,
                        "r": fermat.render_ratio(e.r),
                        "s": fermat.render_ratio(e.s),
                    }
                )
            )
        else:
            lines.append(
                f"{e.index:>3}  {fermat.render_ratio(e.r):<10} {fermat.render_ratio(e.s)}"
            )
    return lines


def lattice_lines(config: RunConfig) -> list[str]:
    if not config.rows:
        raise UsageError("lattice requires --rows like '4,1;7,2'")
    try:
        rows = [
            [int(x) for x in row.split(",")]
            for row in config.rows.split(";")
            if row.strip()
        ]
        basis = lattice.Basis.from_rows(rows)
    except ValueError as exc:
        raise UsageError(f"bad --rows: {exc}") from exc
    delta = Fraction(config.delta)
    reduced, transform = lattice.lll_reduce_with_transform(basis, delta)
    det = lattice.determinant(basis)
    first_norm_sq = sum(x * x for x in reduced.vectors[0])
    if config.fmt == "json-lines":
        return [
            json.dumps(
                {
                    "reduced": [[str(x) for x in row] for row in reduced.vectors],
                    "transform": [[str(x) for x in row] for row in transform],
                    "det": str(det),
                    "first_vector_norm_sq": str(first_norm_sq),
                    "hadamard_ok": lattice.hadamard_check(basis),
                }
            )
        ]
    lines = [f"det = {det}   ||b1||^2 = {first_norm_sq}"]
    lines += ["reduced basis:"] + [
        "  " + " ".join(f"{x:>8}" for x in row) for row in reduced.vectors
    ]
    return lines


def demo_lines() -> list[str]:
    """The 2599 walkthrough: triangular scan beats the consecutive scan."""
    n = 2599
    lines = [f"N = {n}"]
    m, x0 = fermat.triangular_start(n)
    lines.append(f"triangular start: m = {m}, x0 = m(m+1)/2 = {x0}")
    for i, x, x_sq in fermat.triangular_squares(n):
        diff = x_sq - 4 * n
        root = arith.is_perfect_square(diff)
        status = f"{diff} = {root}^2" if root is not None else f"{diff} not a square"
        lines.append(f"  x{i} = {x:>4}  x{i}^2 = {x_sq:>6}  x{i}^2 - 4N: {status}")
        if root is not None:
            break
    tri = fermat.fermat_triangular(n)
    std = fermat.fermat_standard(n)
    lines.append(
        f"triangular: x = {tri.x}, y = {tri.y} -> {tri.p} * {tri.q} in {tri.steps} steps"
    )
    lines.append(f"consecutive scan needs {std.steps} steps for the same split")
    lines.append(f"predicted scan length for p = {tri.p}: {fermat.predict_steps(tri.p, n)}")
    return lines


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="factorlab",
        description="Deterministic integer-factorization toolkit.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_factor = sub.add_parser("factor", help="factor one integer")
    p_factor.add_argument("--method", required=True, choices=METHODS)
    p_factor.add_argument("--n", required=True, type=int)
    p_factor.add_argument("--r", help="ratio a/b for the ratio method")
    p_factor.add_argument("--mod", type=int, help="modulus m")
    p_factor.add_argument("--mod2", type=int, help="second modulus")
    p_factor.add_argument("--c", type=int, help="residue of p")
    p_factor.add_argument("--d", type=int, help="residue of q")
    p_factor.add_argument("--p0", type=int, help="leading-bits hint for p")
    p_factor.add_argument("--lsb-value", type=int, dest="lsb_value")
    p_factor.add_argument("--lsb-bits", type=int, dest="lsb_bits")
    p_factor.add_argument("--mult", type=int, help="transform modulus M")
    p_factor.add_argument("--z-max", type=int, default=32, dest="z_max")
    p_factor.add_argument("--a-max", type=int, default=9, dest="a_max")
    p_factor.add_argument("--t-bound", type=int, dest="t_bound")
    p_factor.add_argument("--budget", type=int)
    p_factor.add_argument("--format", choices=("text", "json-lines"),
                          default="text", dest="fmt")

    p_bench = sub.add_parser("bench", help="seeded semiprime benchmark")
    p_bench.add_argument("--method", required=True, choices=METHODS)
    p_bench.add_argument("--profile", choices=("gap", "ratio"), default="gap")
    p_bench.add_argument("--bits", type=int, default=32)
    p_bench.add_argument("--instances", type=int, default=20)
    p_bench.add_argument("--seed", type=int, required=True)
    p_bench.add_argument("--r", help="target ratio for the ratio profile")
    p_bench.add_argument("--mod", type=int)
    p_bench.add_argument("--budget", type=int)
    p_bench.add_argument("--format", choices=("text", "json-lines"),
                         default="json-lines", dest="fmt")

    p_grid = sub.add_parser("grid", help="balanced-ratio grid table")
    p_grid.add_argument("--lower", default="0.707")
    p_grid.add_argument("--upper", default="1")
    p_grid.add_argument("--count", type=int, default=21)
    p_grid.add_argument("--format", choices=("text", "json-lines"),
                        default="text", dest="fmt")

    p_lat = sub.add_parser("lattice", help="LLL-reduce an integer basis")
    p_lat.add_argument("--rows", required=True, help="rows like '4,1;7,2'")
    p_lat.add_argument("--delta", default="3/4")
    p_lat.add_argument("--format", choices=("text", "json-lines"),
                       default="text", dest="fmt")

    sub.add_parser("demo", help="walk through the 2599 example")
    return parser


def _config_from_args(args: argparse.Namespace) -> RunConfig:
    fields = {f for f in RunConfig.__dataclass_fields__}
    values = {k: v for k, v in vars(args).items() if k in fields and v is not None}
    return RunConfig(**values)


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        config = _config_from_args(args)
        if config.command == "factor":
            report = run(config)
            if config.fmt == "json-lines":
                print(json.dumps(report.to_json_obj()))
            else:
                print(report.to_text())
            return 0 if report.outcome == "factored" else 2
        if config.command == "bench":
            reports, summary = bench(config)
            ok = True
            for report in reports:
                if config.fmt == "json-lines":
                    print(json.dumps(report.to_json_obj()))
                else:
                    print(report.to_text())
                ok = ok and report.outcome == "factored"
            if config.fmt == "json-lines":
                print(json.dumps(summary))
            else:
                print(
                    f"summary: {summary['factored']}/{summary['count']} factored,"
                    f" median steps {summary['median_steps']},"
                    f" mean steps {summary['mean_steps']}"
                )
            return 0 if ok else 2
        if config.command == "grid":
            for line in grid_lines(config):
                print(line)
            return 0
        if config.command == "lattice":
            for line in lattice_lines(config):
                print(line)
            return 0
        if config.command == "demo":
            for line in demo_lines():
                print(line)
            return 0
        raise UsageError(f"unknown command {config.command!r}")
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except FactorlabError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
