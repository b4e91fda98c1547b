"""Rewriting B(p/b^n, r) cap C(b, D) as balls centred inside C(b, D).

An endpoint p/b^n of the level-n construction is at distance exactly
d_l = m_l / ((b-1) b^n) (on its right) or d_r = m_r / ((b-1) b^n) (on its
left) from the Cantor set.  A small ball around such an endpoint therefore
meets C(b, D) exactly where the shrunken ball around the shifted point does;
around any other lattice point it misses C(b, D) entirely.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from zerofull.cantor import CantorParams, is_left_endpoint, is_right_endpoint
from zerofull.errors import DomainError, PreconditionError

# The two-ball form is applied to points that are both a left and a right
# endpoint; read as a union it would shadow the one-sided forms.
CASE3_NOTE = (
    "note: the two-ball case is applied when p/b^n is BOTH a left and a right "
    "endpoint (L_n ∩ R_n); reading it as L_n ∪ R_n would shadow the one-sided cases"
)


@dataclass(frozen=True)
class Ball:
    center: Fraction
    radius: Fraction

    def contains(self, x: Fraction) -> bool:
        return abs(x - self.center) < self.radius


@dataclass(frozen=True)
class IntersectionForm:
    """Empty, Left(ball), Right(ball) or Pair(left, right).

    ``left`` is the ball recentred to the right of the endpoint (the endpoint
    is a left endpoint), ``right`` the one recentred to its left.  Every
    carried ball has positive radius.
    """

    left: Ball | None = None
    right: Ball | None = None

    @property
    def variant(self) -> str:
        if self.left and self.right:
            return "Pair"
        if self.left:
            return "Left"
        if self.right:
            return "Right"
        return "Empty"

    @property
    def balls(self) -> list[Ball]:
        return [ball for ball in (self.left, self.right) if ball is not None]

    @property
    def empty(self) -> bool:
        return self.left is None and self.right is None

    def contains(self, x: Fraction) -> bool:
        return any(ball.contains(x) for ball in self.balls)


def shifts(params: CantorParams, n: int) -> tuple[Fraction, Fraction]:
    """(d_l, d_r) at level n."""
    if n < 1:
        raise DomainError(f"level n must be >= 1, got {n}")
    den = (params.b - 1) * params.b**n
    return Fraction(params.m_l, den), Fraction(params.m_r, den)


def classify(params: CantorParams, p: int, n: int, radius: Fraction) -> IntersectionForm:
    radius = Fraction(radius)
    b = params.b
    if n < 1 or not 0 <= p <= b**n:
        raise DomainError(f"p = {p} outside [0, {b}^{n}] (n = {n})")
    if radius <= 0:
        raise DomainError(f"radius must be positive, got {radius}")
    if radius >= Fraction(1, 2 * b**n):
        raise PreconditionError(
            f"radius {radius} >= b^-n/2 = 1/{2 * b**n}; the classification does not apply",
            marker="NotApplicable",
        )
    c = Fraction(p, b**n)
    d_l, d_r = shifts(params, n)
    left = right = None
    if is_left_endpoint(params, p, n) and radius > d_l:
        left = Ball(c + d_l, radius - d_l)
    if is_right_endpoint(params, p, n) and radius > d_r:
        right = Ball(c - d_r, radius - d_r)
    return IntersectionForm(left, right)


def survives(params: CantorParams, p: int, n: int, radius: Fraction) -> bool:
    """Whether B(p/b^n, radius) meets C(b, D)."""
    return not classify(params, p, n, radius).empty
