"""Exact rationals and eventually periodic base-b digit expansions.

Rationals are :class:`fractions.Fraction`; this module adds the digit
machinery the Cantor-set code needs and a strict command-line parser.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from zerofull.errors import DomainError

Rational = Fraction

_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+))?\s*$")
_DECIMAL_RE = re.compile(r"^\s*[+-]?(\d+\.\d*|\.\d+|\d+)([eE][+-]?\d+)?\s*$")


def parse_rational(text: str, allow_decimal: bool = False) -> Fraction:
    """Parse ``"num/den"`` or an integer exactly.

    Decimal literals such as ``"0.43"`` are rejected unless
    ``allow_decimal`` is set, in which case they are read as the exact
    decimal fraction (43/100), never through a float.
    """
    m = _RATIONAL_RE.match(text)
    if m:
        num = int(m.group(1))
        den = int(m.group(2)) if m.group(2) is not None else 1
        if den == 0:
            raise DomainError(f"zero denominator in {text!r}")
        return Fraction(num, den)
    if _DECIMAL_RE.match(text):
        if not allow_decimal:
            raise DomainError(
                f"decimal input {text!r} rejected; enter rationals as num/den"
            )
        return Fraction(text.strip())
    raise DomainError(f"cannot parse {text!r} as a rational")


def format_rational(x: Fraction) -> str:
    """Inverse of :func:`parse_rational` for exact round trips."""
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def iroot(n: int, k: int) -> int:
    """floor(n^(1/k)) for n >= 0, by integer Newton iteration."""
    if n < 0 or k < 1:
        raise DomainError(f"iroot needs n >= 0 and k >= 1, got n={n}, k={k}")
    if n < 2 or k == 1:
        return n
    y = 1 << ((n.bit_length() + k - 1) // k)
    while True:
        z = ((k - 1) * y + n // y ** (k - 1)) // k
        if z >= y:
            return y
        y = z


def exact_power(x: Fraction, e: Fraction) -> Fraction | None:
    """x^e when it is rational, else None (x > 0)."""
    x, e = Fraction(x), Fraction(e)
    if x <= 0:
        raise DomainError(f"exact_power needs x > 0, got {x}")
    k = e.denominator
    num, den = iroot(x.numerator, k), iroot(x.denominator, k)
    if num**k != x.numerator or den**k != x.denominator:
        return None
    return Fraction(num, den) ** e.numerator


@dataclass(frozen=True)
class DigitExpansion:
    """x = integer_part + 0.(preperiod)(period)(period)... in ``base``.

    ``integer_part`` is 1 only for x = 1, whose terminating form is 1.000...
    ``has_alternate`` is set when x also has an expansion ending in repeated
    ``base - 1`` digits (every terminating x > 0).
    """

    base: int
    preperiod: tuple[int, ...]
    period: tuple[int, ...]
    integer_part: int = 0
    has_alternate: bool = False

    def __post_init__(self):
        if self.base < 2:
            raise DomainError(f"base must be >= 2, got {self.base}")
        if not self.period:
            raise DomainError("period must be non-empty")
        for d in self.preperiod + self.period:
            if not 0 <= d < self.base:
                raise DomainError(f"digit {d} outside [0, {self.base - 1}]")

    @property
    def terminating(self) -> bool:
        return self.period == (0,)

    def value(self) -> Fraction:
        return digits_value(self.base, self.preperiod, self.period) + self.integer_part

    def alternate(self) -> tuple[tuple[int, ...], tuple[int, ...]] | None:
        """Digits (preperiod, period) of the expansion ending in base-1's."""
        if not self.has_alternate:
            return None
        top = self.base - 1
        if self.integer_part:
            return (), (top,)
        pre = list(self.preperiod)
        pre[-1] -= 1
        return tuple(pre), (top,)

    def digit(self, i: int) -> int:
        """The i-th fractional digit (1-based) of the canonical expansion."""
        if i <= len(self.preperiod):
            return self.preperiod[i - 1]
        return self.period[(i - len(self.preperiod) - 1) % len(self.period)]


def digits_value(base: int, preperiod: Sequence[int], period: Sequence[int]) -> Fraction:
    """Exact value of 0.(preperiod)(period)(period)... in ``base``."""
    k, p = len(preperiod), len(period)
    head = 0
    for d in preperiod:
        head = head * base + d
    cyc = 0
    for d in period:
        cyc = cyc * base + d
    # 0.(pre)(per)... = (head + cyc / (base^p - 1)) / base^k
    return (Fraction(head) + Fraction(cyc, base**p - 1)) / base**k


def expand(x: Fraction, base: int) -> DigitExpansion:
    """Canonical eventually periodic expansion of ``x`` in [0, 1].

    Terminating values use trailing zeros (period ``(0,)``) with the
    preperiod cut after the last nonzero digit.
    """
    x = Fraction(x)
    if base < 2:
        raise DomainError(f"base must be >= 2, got {base}")
    if x < 0 or x > 1:
        raise DomainError(f"x = {x} outside [0, 1]")
    if x == 1:
        return DigitExpansion(base, (), (0,), integer_part=1, has_alternate=True)
    q = x.denominator
    r = x.numerator
    seen: dict[int, int] = {}
    digits: list[int] = []
    while r not in seen:
        seen[r] = len(digits)
        d, r = divmod(r * base, q)
        digits.append(d)
    start = seen[r]
    pre, per = tuple(digits[:start]), tuple(digits[start:])
    return DigitExpansion(base, pre, per, has_alternate=(per == (0,) and x > 0))


def digits_fixed(p: int, base: int, n: int) -> list[int]:
    """The n base-``base`` digits of p / base^n, most significant first."""
    if n < 0:
        raise DomainError(f"n must be >= 0, got {n}")
    if not 0 <= p < base**n:
        raise DomainError(f"p = {p} outside [0, {base}^{n})")
    out = [0] * n
    for i in range(n - 1, -1, -1):
        p, out[i] = divmod(p, base)
    return out
