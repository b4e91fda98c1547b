"""Generalized Cantor sets C(b, D).

C(b, D) is the set of x in [0, 1] having a base-b expansion with every
digit in D.  Everything here is exact; the only real-valued output is the
dimension :func:`gamma`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterator, Sequence

import mpmath

from zerofull.errors import DomainError, ResourceError
from zerofull.exactnum import digits_fixed, expand

DEFAULT_ENUM_CAP = 10**7
DEFAULT_PRECISION = 80


@dataclass(frozen=True)
class CantorParams:
    b: int
    D: tuple[int, ...]

    def __init__(self, b: int, D: Sequence[int]):
        digits = tuple(sorted(set(int(d) for d in D)))
        if b < 3:
            raise DomainError(f"CantorParams: base b must be >= 3, got b={b}")
        if any(d < 0 or d > b - 1 for d in digits):
            raise DomainError(f"CantorParams: D must be a subset of {{0,...,{b - 1}}}, got {list(digits)}")
        if not 2 <= len(digits) <= b - 1:
            raise DomainError(
                f"CantorParams: need 2 <= |D| <= b-1 = {b - 1}, got |D| = {len(digits)}"
            )
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "D", digits)

    @property
    def size(self) -> int:
        return len(self.D)

    @property
    def m_l(self) -> int:
        return self.D[0]

    @property
    def m_r(self) -> int:
        return self.b - 1 - self.D[-1]

    @property
    def m(self) -> int:
        return min(self.m_l, self.m_r)

    @property
    def lo(self) -> Fraction:
        """min C(b, D) = 0.(min D)(min D)..."""
        return Fraction(self.m_l, self.b - 1)

    @property
    def hi(self) -> Fraction:
        """max C(b, D) = 0.(max D)(max D)..."""
        return 1 - Fraction(self.m_r, self.b - 1)

    @property
    def touches_ends(self) -> bool:
        """True when D contains 0 or b-1 (the hypothesis of several laws)."""
        return self.m == 0

    @cached_property
    def digit_set(self) -> frozenset[int]:
        return frozenset(self.D)

    @property
    def gamma(self) -> float:
        return float(gamma(self))

    def __str__(self):
        return f"C({self.b}, {{{','.join(map(str, self.D))}}})"


@dataclass(frozen=True, order=True)
class Interval:
    left: Fraction
    right: Fraction

    def __post_init__(self):
        if self.left > self.right:
            raise DomainError(f"interval [{self.left}, {self.right}] has left > right")

    @property
    def length(self) -> Fraction:
        return self.right - self.left


def gamma(params: CantorParams, prec: int = DEFAULT_PRECISION) -> mpmath.mpf:
    """Hausdorff dimension log|D| / log b at ``prec`` bits."""
    with mpmath.workprec(prec):
        return mpmath.log(params.size) / mpmath.log(params.b)


def _check_cap(params: CantorParams, n: int, cap: int) -> None:
    if params.size**n > cap:
        raise ResourceError(
            f"|D|^n = {params.size}^{n} exceeds the enumeration cap {cap}", cap=cap
        )


def level_lefts(params: CantorParams, n: int, window: tuple[int, int] | None = None,
                cap: int = DEFAULT_ENUM_CAP) -> Iterator[int]:
    """Integers A (sorted) such that A / b^n is a left endpoint in L_n.

    ``window=(lo, hi)`` restricts to level-n intervals [A, A+1] (in units of
    b^-n) meeting [lo, hi]; subtrees outside the window are pruned, so the
    cap applies only when no window is given.
    """
    b, D = params.b, params.D
    if n < 0:
        raise DomainError(f"level must be >= 0, got {n}")
    if window is None:
        _check_cap(params, n, cap)
        w0, w1 = 0, b**n
    else:
        w0, w1 = window
    powers = [b ** (n - k) for k in range(n + 1)]
    stack = [(0, 0)]
    while stack:
        k, node = stack.pop()
        span = powers[k]
        left = node * span
        if left + span < w0 or left > w1:
            continue
        if k == n:
            yield node
            continue
        for d in reversed(D):
            stack.append((k + 1, node * b + d))


def level_intervals(params: CantorParams, n: int, cap: int = DEFAULT_ENUM_CAP) -> list[Interval]:
    """The |D|^n closed intervals of C_n(b, D), sorted."""
    scale = params.b**n
    return [Interval(Fraction(a, scale), Fraction(a + 1, scale)) for a in level_lefts(params, n, cap=cap)]


def _digits_in_D(params: CantorParams, p: int, n: int) -> bool:
    digits = params.digit_set
    return all(d in digits for d in digits_fixed(p, params.b, n))


def _check_endpoint_index(params: CantorParams, p: int, n: int) -> None:
    if n < 0 or not 0 <= p <= params.b**n:
        raise DomainError(f"p = {p} outside [0, {params.b}^{n}]")


def is_left_endpoint(params: CantorParams, p: int, n: int) -> bool:
    """p / b^n in L_n."""
    _check_endpoint_index(params, p, n)
    return p < params.b**n and _digits_in_D(params, p, n)


def is_right_endpoint(params: CantorParams, p: int, n: int) -> bool:
    """p / b^n in R_n."""
    _check_endpoint_index(params, p, n)
    return p >= 1 and _digits_in_D(params, p - 1, n)


def _check_unit(x: Fraction) -> Fraction:
    x = Fraction(x)
    if x < 0 or x > 1:
        raise DomainError(f"x = {x} outside [0, 1]")
    return x


def member(params: CantorParams, x: Fraction) -> bool:
    """Whether some base-b expansion of x uses only digits of D."""
    x = _check_unit(x)
    e = expand(x, params.b)
    digits = params.digit_set
    if not e.integer_part and all(d in digits for d in e.preperiod + e.period):
        return True
    alt = e.alternate()
    if alt is not None:
        pre, per = alt
        return all(d in digits for d in pre + per)
    return False


def nearest(params: CantorParams, x: Fraction) -> tuple[Fraction, Fraction]:
    """(distance, witness): the exact distance from x to C(b, D) and the
    nearest point, the smaller one on ties.

    Follows x's digits down the tree.  At each level every digit of D other
    than the one continuing x's path lands x outside [min C, max C] of that
    subtree, where the nearest point is a closed form (all-min or all-max
    continuation).  The path ends when it leaves D, or revisits a remainder,
    in which case x itself lies in C.
    """
    x = _check_unit(x)
    b, D = params.b, params.D
    ml, mr = params.m_l, params.m_r
    bm1 = b - 1
    q = x.denominator
    a = x.numerator
    # y = a / q is the current rescaled point; prefix = digits taken so far.
    # Candidates are kept as (dist_num, wit_num) over q*(b-1)*b^depth and
    # (b-1)*b^depth respectively; rescaled by b when descending.
    lo_num = ml * q          # lo * q * (b-1)
    hi_num = (bm1 - mr) * q  # hi * q * (b-1)
    y_num = a * bm1          # y * q * (b-1)
    if y_num <= lo_num:
        return Fraction(lo_num - y_num, q * bm1), Fraction(ml, bm1)
    if y_num >= hi_num:
        return Fraction(y_num - hi_num, q * bm1), Fraction(bm1 - mr, bm1)

    best_d = best_w = None
    depth = 0
    prefix = 0
    seen = set()
    while True:
        if a in seen:
            return Fraction(0), x
        seen.add(a)
        depth += 1
        if best_d is not None:
            best_d *= b
            best_w *= b
        nxt = None
        ab = a * b
        for d in D:
            yn = (ab - d * q) * bm1
            if yn <= lo_num:
                cd, cw = lo_num - yn, (prefix * b + d) * bm1 + ml
            elif yn >= hi_num:
                cd, cw = yn - hi_num, (prefix * b + d) * bm1 + bm1 - mr
            else:
                nxt = d
                continue
            if best_d is None or cd < best_d or (cd == best_d and cw < best_w):
                best_d, best_w = cd, cw
        if nxt is None:
            scale = b**depth
            return Fraction(best_d, q * bm1 * scale), Fraction(best_w, bm1 * scale)
        a = ab - nxt * q
        prefix = prefix * b + nxt


def distance(params: CantorParams, x: Fraction) -> Fraction:
    """Exact distance from x to C(b, D); zero iff x is a member."""
    return nearest(params, x)[0]
