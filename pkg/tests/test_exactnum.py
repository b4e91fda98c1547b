from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from zerofull.errors import DomainError
from zerofull.exactnum import (
    DigitExpansion, digits_fixed, digits_value, exact_power, expand, format_rational, iroot, parse_rational,
)

unit_rationals = st.builds(
    lambda q, p: Fraction(p % (q + 1), q), st.integers(1, 1000), st.integers(0, 10**6))
big_rationals = st.builds(
    lambda q, p: Fraction(p % (q + 1), q), st.integers(1, 10**5), st.integers(0, 10**9))


def naive_digits(x: Fraction, base: int, k: int) -> list[int]:
    """First k digits by repeated multiplication (the greedy expansion)."""
    num, den = x.numerator, x.denominator
    out = []
    for _ in range(k):
        d, num = divmod(num * base, den)
        out.append(d)
    return out


class TestParse:
    @pytest.mark.parametrize("text, value", [
        ("1/4", Fraction(1, 4)), ("3", Fraction(3)), ("-2/6", Fraction(-1, 3)), (" 7 / 14 ", Fraction(1, 2)),
    ])
    def test_exact(self, text, value):
        assert parse_rational(text) == value

    def test_decimal_rejected_by_default(self):
        with pytest.raises(DomainError, match="num/den"):
            parse_rational("0.43")

    def test_decimal_is_exact_when_allowed(self):
        assert parse_rational("0.43", allow_decimal=True) == Fraction(43, 100)
        assert parse_rational("1e-3", allow_decimal=True) == Fraction(1, 1000)

    @pytest.mark.parametrize("bad", ["1/0", "abc", "1/2/3", ""])
    def test_garbage(self, bad):
        with pytest.raises(DomainError):
            parse_rational(bad)

    @given(st.fractions())
    def test_format_round_trip(self, x):
        assert parse_rational(format_rational(x)) == x


class TestExpand:
    def test_third(self):
        e = expand(Fraction(1, 3), 10)
        assert e.preperiod == () and e.period == (3,)
        assert not e.has_alternate

    def test_terminating(self):
        e = expand(Fraction(1, 4), 2)
        assert e.preperiod == (0, 1) and e.period == (0,)
        assert e.terminating and e.has_alternate
        assert e.alternate() == ((0, 0), (1,))

    def test_one(self):
        e = expand(Fraction(1), 3)
        assert e.integer_part == 1 and e.value() == 1
        assert e.alternate() == ((), (2,))

    def test_zero_has_no_alternate(self):
        e = expand(Fraction(0), 7)
        assert e.period == (0,) and not e.has_alternate

    def test_out_of_range(self):
        with pytest.raises(DomainError):
            expand(Fraction(3, 2), 3)
        with pytest.raises(DomainError):
            expand(Fraction(1, 2), 1)

    @settings(max_examples=1000)
    @given(unit_rationals, st.integers(2, 16))
    def test_round_trip(self, x, base):
        e = expand(x, base)
        assert e.value() == x
        if e.has_alternate and not e.integer_part:
            pre, per = e.alternate()
            assert digits_value(base, pre, per) == x

    @settings(max_examples=30)
    @given(big_rationals, st.integers(2, 16))
    def test_round_trip_large_denominators(self, x, base):
        assert expand(x, base).value() == x

    @settings(max_examples=300)
    @given(unit_rationals, st.integers(2, 16))
    def test_digits_match_greedy(self, x, base):
        if x == 1:
            return
        e = expand(x, base)
        k = len(e.preperiod) + 2 * len(e.period) + 3
        assert [e.digit(i) for i in range(1, k + 1)] == naive_digits(x, base, k)

    def test_bad_digit(self):
        with pytest.raises(DomainError):
            DigitExpansion(3, (3,), (0,))


@given(st.integers(2, 12), st.integers(0, 8), st.data())
def test_digits_fixed(base, n, data):
    p = data.draw(st.integers(0, base**n - 1)) if n else 0
    ds = digits_fixed(p, base, n) if n else []
    assert sum(d * base ** (n - 1 - i) for i, d in enumerate(ds)) == p


@given(st.integers(0, 10**30), st.integers(1, 7))
def test_iroot_is_floor_root(n, k):
    y = iroot(n, k)
    assert y**k <= n < (y + 1) ** k


def test_exact_power():
    assert exact_power(Fraction(4), Fraction(-1, 2)) == Fraction(1, 2)
    assert exact_power(Fraction(8, 27), Fraction(2, 3)) == Fraction(4, 9)
    assert exact_power(Fraction(2), Fraction(1, 2)) is None
