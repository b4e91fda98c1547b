"""Arithmetic relation between the Cantor base b and the approximation base t."""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from fractions import Fraction

from zerofull.errors import DomainError


class Regime(enum.Enum):
    MULT_DEPENDENT = "MultiplicativelyDependent"
    SAME_PRIMES = "SamePrimesIndependent"
    DIFFERENT_PRIMES = "DifferentPrimes"

    def __str__(self):
        return self.value


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    for f in range(3, math.isqrt(n) + 1, 2):
        if n % f == 0:
            return False
    return True


def factorize(n: int) -> dict[int, int]:
    """Prime factorization by trial division."""
    if n < 1:
        raise DomainError(f"cannot factor {n}")
    out: dict[int, int] = {}
    f = 2
    while f * f <= n:
        while n % f == 0:
            out[f] = out.get(f, 0) + 1
            n //= f
        f += 1 if f == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def valuation(q: int, n: int) -> int:
    """Largest e with q^e | n."""
    if not is_prime(q):
        raise DomainError(f"valuation base {q} is not prime")
    if n < 1:
        raise DomainError(f"valuation needs n >= 1, got {n}")
    e = 0
    while n % q == 0:
        n //= q
        e += 1
    return e


@dataclass(frozen=True)
class RegimeReport:
    b: int
    t: int
    primes_b: tuple[int, ...]
    primes_t: tuple[int, ...]
    valuations: dict[int, tuple[int, int]] = field(hash=False)
    same_primes: bool
    mult_dependent: bool
    alpha1: Fraction | None
    alpha2: Fraction | None
    regime: Regime

    @property
    def log_ratio(self) -> float:
        """log t / log b."""
        return math.log(self.t) / math.log(self.b)


def analyze(b: int, t: int) -> RegimeReport:
    if b < 2 or t < 2:
        raise DomainError(f"need b, t >= 2, got b={b}, t={t}")
    fb, ft = factorize(b), factorize(t)
    primes = sorted(set(fb) | set(ft))
    vals = {q: (fb.get(q, 0), ft.get(q, 0)) for q in primes}
    same = set(fb) == set(ft)
    a1 = a2 = None
    if same:
        ratios = [Fraction(ft[q], fb[q]) for q in fb]
        a1, a2 = min(ratios), max(ratios)
    dependent = same and a1 == a2
    if not same:
        regime = Regime.DIFFERENT_PRIMES
    elif dependent:
        regime = Regime.MULT_DEPENDENT
    else:
        regime = Regime.SAME_PRIMES
    return RegimeReport(
        b=b, t=t,
        primes_b=tuple(sorted(fb)), primes_t=tuple(sorted(ft)),
        valuations=vals, same_primes=same, mult_dependent=dependent,
        alpha1=a1, alpha2=a2, regime=regime,
    )


def dependence_exponents(b: int, t: int, limit: int = 64) -> tuple[int, int] | None:
    """Smallest (k, l) with b^k = t^l and k, l <= limit, by direct powering."""
    for k in range(1, limit + 1):
        bk = b**k
        for l in range(1, limit + 1):
            tl = t**l
            if tl == bk:
                return k, l
            if tl > bk:
                break
    return None
