"""Brute-force cross-checks, shared by the test suite and ``check oracles``.

Each oracle avoids the code path it checks: interval enumeration against the
digit-following distance, cylinder-by-cylinder intersection against the
endpoint classifier, per-point distance against interval merging.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction

from zerofull.ballgeom import classify, shifts
from zerofull.cantor import CantorParams, distance, is_left_endpoint, is_right_endpoint, level_intervals, level_lefts
from zerofull.census import Method, count_surviving


def random_params(rng: random.Random, b: int) -> CantorParams:
    size = rng.randint(2, b - 1)
    return CantorParams(b, rng.sample(range(b), size))


def distance_bounds(params: CantorParams, x: Fraction, K: int) -> tuple[Fraction, Fraction]:
    """(lower, upper) bounds on dist(x, C) from the level-K intervals.

    lower: distance to C_K, which contains C.  upper: distance to the
    points a + d_l and a + b^-K - d_r of each interval, which lie in C.
    """
    lower = upper = None
    d_l, d_r = shifts(params, K) if K >= 1 else (params.lo, 1 - params.hi)
    for iv in level_intervals(params, K):
        if x < iv.left:
            lo_d = iv.left - x
        elif x > iv.right:
            lo_d = x - iv.right
        else:
            lo_d = Fraction(0)
        up_d = min(abs(x - (iv.left + d_l)), abs(x - (iv.right - d_r)))
        lower = lo_d if lower is None else min(lower, lo_d)
        upper = up_d if upper is None else min(upper, up_d)
    return lower, upper


def _dist_any(params: CantorParams, x: Fraction) -> Fraction:
    """dist(x, C) for any rational x."""
    if x < 0:
        return params.lo - x
    if x > 1:
        return x - params.hi
    return distance(params, x)


def _cylinder_meets(params: CantorParams, a: Fraction, h: Fraction, u: Fraction, v: Fraction) -> bool:
    """Whether a + h*C meets the open interval (u, v)."""
    if v <= u:
        return False
    uu, vv = (u - a) / h, (v - a) / h
    if uu < params.lo and vv > params.hi:
        return True
    mid, half = (uu + vv) / 2, (vv - uu) / 2
    return _dist_any(params, mid) < half


@dataclass
class ClassifierCase:
    params: CantorParams
    p: int
    n: int
    radius: Fraction


def classifier_mismatches(case: ClassifierCase, extra_depth: int = 6) -> list[int]:
    """Level-(n+extra_depth) cylinders whose Cantor part meets the input ball
    but not the classifier's balls, or vice versa (by left-endpoint index)."""
    params, p, n, r = case.params, case.p, case.n, case.radius
    b = params.b
    K = n + extra_depth
    H = b**K
    h = Fraction(1, H)
    c = Fraction(p, b**n)
    form = classify(params, p, n, r)
    w0 = math.floor((c - r) * H) - 1
    w1 = math.ceil((c + r) * H) + 1
    bad = []
    for A in level_lefts(params, K, window=(w0, w1)):
        a = Fraction(A, H)
        before = _cylinder_meets(params, a, h, c - r, c + r)
        after = any(_cylinder_meets(params, a, h, ball.center - ball.radius, ball.center + ball.radius)
                    for ball in form.balls)
        if before != after:
            bad.append(A)
    return bad


def random_classifier_case(rng: random.Random, max_b: int = 6, max_n: int = 5) -> ClassifierCase:
    b = rng.randint(3, max_b)
    params = random_params(rng, b)
    n = rng.randint(1, max_n)
    N = b**n
    endpoints = [p for p in range(N + 1)
                 if is_left_endpoint(params, p, n) or is_right_endpoint(params, p, n)] if N <= 8000 else []
    if endpoints and rng.random() < 0.8:
        p = rng.choice(endpoints)
    else:
        p = rng.randint(0, N)
    d_l, d_r = shifts(params, n)
    half = Fraction(1, 2 * N)
    pick = rng.random()
    if pick < 0.15 and 0 < d_l < half:
        r = d_l
    elif pick < 0.3 and 0 < d_r < half:
        r = d_r
    else:
        den = rng.randint(2, 1000)
        r = half * Fraction(rng.randint(1, den - 1), den)
    return ClassifierCase(params, p, n, r)


def census_disagreements(params: CantorParams, t: int, n: int, radii) -> list[tuple[Fraction, int, int]]:
    out = []
    for r in radii:
        e = count_surviving(params, t, n, r, Method.EXACT).count
        bf = count_surviving(params, t, n, r, Method.BRUTE).count
        if e != bf:
            out.append((r, e, bf))
    return out


def random_radii(rng: random.Random, params: CantorParams, t: int, n: int, k: int = 5) -> list[Fraction]:
    """k radii in (0, 1): k-1 random rationals at the lattice scale plus one
    equal to an exact lattice-point distance, exercising the strict boundary."""
    N = t**n
    out = []
    for _ in range(k - 1):
        r = Fraction(rng.randint(1, 400), rng.randint(1, 100) * N * rng.choice([1, 4, 16]))
        out.append(min(r, Fraction(99, 100)))
    for _ in range(20):
        d = distance(params, Fraction(rng.randint(0, N), N))
        if 0 < d < 1:
            out.append(d)
            break
    else:
        out.append(Fraction(1, 3 * N))
    return out
