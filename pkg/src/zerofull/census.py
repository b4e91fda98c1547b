"""Counting lattice balls B(p/t^n, r) that meet C(b, D).

Two independent counting routes:

* ``brute``: one exact distance computation per lattice point.
* ``exact``: merge the level-K construction intervals, count lattice points
  inside the r-enlarged merged intervals with floor arithmetic, and resolve
  only the points within b^-K of a decision boundary by exact distance.

All arithmetic is on Python integers; the two routes must agree exactly.
"""

from __future__ import annotations

import enum
import math
import statistics
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable

from zerofull.cantor import DEFAULT_ENUM_CAP, CantorParams, distance
from zerofull.errors import DegenerateFitError, DomainError, PreconditionError, ResourceError
from zerofull.exactnum import iroot
from zerofull.laws import heuristic_count_exponent
from zerofull.regime import analyze

DEFAULT_BRUTE_CAP = 2 * 10**6
MIN_FIT_ROWS = 4


class Method(enum.Enum):
    EXACT = "exact"
    BRUTE = "brute"

    def __str__(self):
        return self.value


@dataclass
class CensusRow:
    n: int
    t: int
    radius: Fraction
    count: int
    method: Method
    elapsed: float = 0.0


def pruning_depth(params: CantorParams, radius: Fraction) -> int:
    """ceil(log(1/r) / log b) + 2, computed exactly."""
    k = 0
    while params.b**k * radius.numerator < radius.denominator:
        k += 1
    return k + 2


def _check_radius(radius: Fraction) -> Fraction:
    radius = Fraction(radius)
    if radius <= 0 or radius >= 1:
        raise DomainError(f"radius must lie in (0, 1), got {radius}")
    return radius


def _count_brute_range(params: CantorParams, N: int, radius: Fraction, p0: int, p1: int) -> int:
    return sum(1 for p in range(p0, p1 + 1) if distance(params, Fraction(p, N)) < radius)


def _reachable_lefts(params: CantorParams, K: int, N: int, radius: Fraction,
                     w0: int, w1: int, p0: int, p1: int, cap: int):
    """Sorted level-K lefts within [w0, w1] whose cylinder has some p/N,
    p0 <= p <= p1, within distance r; other subtrees cannot change the count."""
    b, D = params.b, params.D
    rn, rd = radius.numerator, radius.denominator
    found = 0
    stack = [(0, 0)]
    while stack:
        k, node = stack.pop()
        span = b ** (K - k)
        left = node * span
        if left + span < w0 or left > w1:
            continue
        bk = b**k
        # p/N in (node/b^k - r, (node+1)/b^k + r)
        q = bk * rd
        lo = max(((node * rd - rn * bk) * N) // q + 1, p0)
        hi = min((((node + 1) * rd + rn * bk) * N - 1) // q, p1)
        if lo > hi:
            continue
        if k == K:
            found += 1
            if found > cap:
                raise ResourceError(
                    f"more than {cap} level-{K} intervals lie within r of the lattice; raise the cap", cap=cap)
            yield node
            continue
        for d in reversed(D):
            stack.append((k + 1, node * b + d))


def _count_exact_range(params: CantorParams, N: int, radius: Fraction, K: int, p0: int, p1: int,
                       cap: int = DEFAULT_ENUM_CAP) -> int:
    b = params.b
    H = b**K
    rn, rd = radius.numerator, radius.denominator
    Q = H * rd  # p/N compared with X/(H rd N) via p*Q <=> X*N
    # level-K intervals within r + 2/H of [p0/N, p1/N], in units of 1/H
    w0 = ((p0 * H * rd - rn * H * N) // (N * rd)) - 2
    w1 = -((-(p1 * H * rd + rn * H * N)) // (N * rd)) + 2

    merged: list[list[int]] = []
    for A in _reachable_lefts(params, K, N, radius, w0, w1, p0, p1, cap):
        if merged and merged[-1][1] == A:
            merged[-1][1] = A + 1
        else:
            merged.append([A, A + 1])

    count = 0
    covered = p0 - 1
    uncertain: set[int] = set()
    for A, E in merged:
        # open enlargement (A/H - r, E/H + r)
        lo = ((A * rd - rn * H) * N) // Q + 1
        hi = ((E * rd + rn * H) * N - 1) // Q
        lo, hi = max(lo, p0), min(hi, p1)
        if lo > hi:
            continue
        start = max(lo, covered + 1)
        if hi >= start:
            count += hi - start + 1
            covered = hi
        # points within 1/H of either boundary are undecided by the interval test
        band_l = ((A + 1) * rd - rn * H) * N // Q
        for p in range(lo, min(band_l, hi) + 1):
            uncertain.add(p)
        band_r = -((-(((E - 1) * rd + rn * H) * N)) // Q)
        for p in range(max(band_r, lo), hi + 1):
            uncertain.add(p)
    for p in uncertain:
        if distance(params, Fraction(p, N)) >= radius:
            count -= 1
    return count


def partition(p_max: int, parts: int) -> list[tuple[int, int]]:
    """Split [0, p_max] into ``parts`` contiguous near-equal ranges."""
    total = p_max + 1
    parts = max(1, min(parts, total))
    q, r = divmod(total, parts)
    out, start = [], 0
    for k in range(parts):
        size = q + (1 if k < r else 0)
        out.append((start, start + size - 1))
        start += size
    return out


def _run_range(args):
    method, params, N, radius, K, p0, p1, cap = args
    if method is Method.BRUTE:
        return _count_brute_range(params, N, radius, p0, p1)
    return _count_exact_range(params, N, radius, K, p0, p1, cap)


def count_surviving(params: CantorParams, t: int, n: int, radius: Fraction,
                    method: Method | str = Method.EXACT, *, workers: int = 1, parts: int | None = None,
                    cap: int = DEFAULT_ENUM_CAP, brute_cap: int = DEFAULT_BRUTE_CAP,
                    depth: int | None = None) -> CensusRow:
    """Number of p in [0, t^n] with B(p/t^n, radius) cap C(b, D) nonempty.

    ``cap`` bounds the level-K intervals the exact method visits per range
    (only those within r of some lattice point); ``brute_cap`` bounds t^n.
    """
    method = Method(method)
    radius = _check_radius(radius)
    if t < 2 or n < 0:
        raise DomainError(f"need t >= 2 and n >= 0, got t={t}, n={n}")
    N = t**n
    K = depth if depth is not None else pruning_depth(params, radius)
    if method is Method.BRUTE and N > brute_cap:
        raise ResourceError(f"t^n = {N} exceeds the brute-force cap {brute_cap}", cap=brute_cap)
    parts = parts or workers
    jobs = [(method, params, N, radius, K, p0, p1, cap) for p0, p1 in partition(N, parts)]
    t0 = time.perf_counter()
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            total = sum(pool.map(_run_range, jobs))
    else:
        total = sum(_run_range(job) for job in jobs)
    return CensusRow(n, t, radius, total, method, time.perf_counter() - t0)


# ------------------------------------------------------------------- fitting

def iroot_ceil(x: int, k: int) -> int:
    """Smallest integer y >= 0 with y^k >= x."""
    if x <= 0:
        return 0
    y = iroot(x, k)
    return y if y**k == x else y + 1


def power_radius(t: int, theta: Fraction, n: int) -> Fraction:
    """1 / ceil(t^(theta n)); equals t^(-theta n) whenever theta n is an integer."""
    theta = Fraction(theta)
    e = theta * n
    return Fraction(1, iroot_ceil(t**e.numerator, e.denominator))


@dataclass
class GrowthFit:
    exponent: float
    r2: float
    prefactor: float
    rows: int


def growth_fit(rows: Iterable[CensusRow], t: int) -> GrowthFit:
    """Least-squares slope of log(count) against n log t."""
    usable = [r for r in rows if r.count > 0]
    if len(usable) < MIN_FIT_ROWS:
        raise DegenerateFitError(
            f"need at least {MIN_FIT_ROWS} rows with positive count, got {len(usable)}")
    xs = [r.n * math.log(t) for r in usable]
    ys = [math.log(r.count) for r in usable]
    if len(set(xs)) < 2:
        raise DegenerateFitError("all rows share the same level n")
    slope, intercept = statistics.linear_regression(xs, ys)
    if len(set(ys)) > 1:
        r2 = statistics.correlation(xs, ys) ** 2
    else:
        r2 = 1.0
    return GrowthFit(slope, r2, math.exp(intercept), len(usable))


@dataclass
class CoverExponent:
    """Critical exponent of the natural cover sum_n count(n) psi(n)^s."""

    s_star: float | None
    prediction: float
    rows: list[CensusRow]
    fit: GrowthFit | None
    status: str


def census_rows(params: CantorParams, t: int, ns: Iterable[int], radius_of: Callable[[int], Fraction],
                method: Method | str = Method.EXACT, **kw) -> list[CensusRow]:
    return [count_surviving(params, t, n, radius_of(n), method, **kw) for n in ns]


def natural_cover_exponent(params: CantorParams, t: int, theta: Fraction, n_range: Iterable[int],
                           method: Method | str = Method.EXACT, **kw) -> CoverExponent:
    """Fit s* = (count growth exponent) / theta for psi(n) = t^(-theta n)."""
    theta = Fraction(theta)
    if theta <= 1:
        raise PreconditionError(f"theta = {theta} <= 1: lambda_psi >= 1 needs theta > 1", marker="Lambda")
    rep = analyze(params.b, t)
    if not (rep.mult_dependent or t == params.b):
        raise PreconditionError(f"b={params.b}, t={t} are not multiplicatively dependent", marker="Regime")
    rows = census_rows(params, t, n_range, lambda n: power_radius(t, theta, n), method, **kw)
    prediction = params.gamma / float(theta)
    if all(r.count == 0 for r in rows):
        return CoverExponent(None, prediction, rows, None, "Empty")
    fit = growth_fit(rows, t)
    return CoverExponent(fit.exponent / float(theta), prediction, rows, fit, "ok")


@dataclass
class ExploratoryReport:
    """Fitted census growth against the random-placement heuristic."""

    fit: GrowthFit
    heuristic: float
    rows: list[CensusRow] = field(default_factory=list)

    @property
    def deviation(self) -> float:
        return self.fit.exponent - self.heuristic

    def table(self) -> list[tuple[str, str]]:
        lines = [("n", "count")] + [(str(r.n), str(r.count)) for r in self.rows]
        lines += [("fitted exponent", f"{self.fit.exponent:.6f}"),
                  ("heuristic 1-theta(1-gamma)", f"{self.heuristic:.6f}"),
                  ("deviation", f"{self.deviation:+.6f}"),
                  ("r^2", f"{self.fit.r2:.6f}")]
        return lines


def exploratory_growth(params: CantorParams, t: int, theta: Fraction, n_range: Iterable[int],
                       method: Method | str = Method.EXACT, **kw) -> ExploratoryReport:
    """Census growth for psi(n) = t^(-theta n) compared with the heuristic exponent.

    Deviations are reported, never treated as failures: the heuristic rests
    on an unproven equidistribution assumption.
    """
    rows = census_rows(params, t, n_range, lambda n: power_radius(t, theta, n), method, **kw)
    return ExploratoryReport(growth_fit(rows, t), heuristic_count_exponent(params, theta), rows)
