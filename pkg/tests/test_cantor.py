import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from zerofull.cantor import (
    CantorParams, Interval, distance, gamma, is_left_endpoint, is_right_endpoint, level_intervals,
    level_lefts, member, nearest,
)
from zerofull.errors import DomainError, ResourceError
from zerofull.oracles import distance_bounds


@st.composite
def cantor_params(draw, max_b=8):
    b = draw(st.integers(3, max_b))
    D = draw(st.sets(st.integers(0, b - 1), min_size=2, max_size=b - 1))
    return CantorParams(b, sorted(D))


unit = st.builds(lambda q, p: Fraction(p % (q + 1), q), st.integers(1, 400), st.integers(0, 10**6))


class TestParams:
    @pytest.mark.parametrize("b, D, needle", [
        (2, [0, 1], "b must be >= 3"),
        (3, [0, 3], "subset"),
        (3, [0, 1, 2], "|D|"),
        (5, [4], "|D|"),
    ])
    def test_invariants_named(self, b, D, needle):
        with pytest.raises(DomainError, match=needle.replace("|", r"\|")):
            CantorParams(b, D)

    def test_derived(self, five_one_two):
        p = five_one_two
        assert (p.m_l, p.m_r, p.m) == (1, 2, 1)
        assert p.lo == Fraction(1, 4) and p.hi == Fraction(1, 2)
        assert not p.touches_ends

    def test_gamma(self, middle_thirds):
        assert abs(gamma(middle_thirds) - 0.6309297535714574) < 1e-15


class TestLevels:
    def test_counts_and_lengths(self, middle_thirds):
        ivs = level_intervals(middle_thirds, 3)
        assert len(ivs) == 8
        assert all(iv.length == Fraction(1, 27) for iv in ivs)
        assert ivs[0].left == 0 and ivs[-1].right == 1

    def test_window_matches_filter(self):
        params = CantorParams(5, [0, 2, 4])
        full = list(level_lefts(params, 4))
        assert full == sorted(full)
        assert list(level_lefts(params, 4, window=(100, 300))) == [a for a in full if a + 1 >= 100 and a <= 300]

    def test_cap(self, middle_thirds):
        with pytest.raises(ResourceError):
            list(level_lefts(middle_thirds, 30, cap=1000))

    def test_interval_order(self):
        with pytest.raises(DomainError):
            Interval(Fraction(1), Fraction(0))

    def test_endpoint_sets(self, five_one_two):
        L = {Fraction(p, 5) for p in range(6) if is_left_endpoint(five_one_two, p, 1)}
        R = {Fraction(p, 5) for p in range(6) if is_right_endpoint(five_one_two, p, 1)}
        assert L == {Fraction(1, 5), Fraction(2, 5)}
        assert R == {Fraction(2, 5), Fraction(3, 5)}


class TestDistance:
    @pytest.mark.parametrize("b, D, x, dist, witness", [
        (5, [1, 2], "2/5", "1/20", "9/20"),
        (3, [0, 2], "1/2", "1/6", "1/3"),
        (3, [0, 2], "1/4", "0", "1/4"),
        (3, [0, 2], "1", "0", "1"),
        (5, [1, 2], "0", "1/4", "1/4"),
        (5, [1, 2], "1", "1/2", "1/2"),
    ])
    def test_spot_values(self, b, D, x, dist, witness):
        assert nearest(CantorParams(b, D), Fraction(x)) == (Fraction(dist), Fraction(witness))

    def test_member_alternate_expansion(self, middle_thirds):
        # 1/3 = 0.1000..._3 = 0.0222..._3
        assert member(middle_thirds, Fraction(1, 3))
        assert not member(middle_thirds, Fraction(1, 2))

    def test_outside_unit(self, middle_thirds):
        with pytest.raises(DomainError):
            distance(middle_thirds, Fraction(-1, 3))

    @settings(max_examples=300)
    @given(cantor_params(), unit, st.integers(1, 5))
    def test_sandwich(self, params, x, K):
        d = distance(params, x)
        lo, hi = distance_bounds(params, x, K)
        assert lo <= d <= hi

    @settings(max_examples=300)
    @given(cantor_params(), unit)
    def test_member_iff_zero_distance(self, params, x):
        assert member(params, x) == (distance(params, x) == 0)

    @settings(max_examples=200)
    @given(cantor_params(), unit)
    def test_witness_in_set(self, params, x):
        d, w = nearest(params, x)
        assert member(params, w)
        assert abs(x - w) == d

    @settings(max_examples=100)
    @given(cantor_params(max_b=6), st.integers(1, 4), st.data())
    def test_left_endpoints_are_members(self, params, n, data):
        lefts = list(level_lefts(params, n))
        A = data.draw(st.sampled_from(lefts))
        assert member(params, Fraction(A, params.b**n) + params.lo / params.b**n)


def test_distance_is_1_lipschitz():
    rng = random.Random(7)
    for _ in range(200):
        params = CantorParams(7, sorted(rng.sample(range(7), 3)))
        x, y = (Fraction(rng.randint(0, 999), 999) for _ in range(2))
        assert abs(distance(params, x) - distance(params, y)) <= abs(x - y)
