import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from zerofull.cantor import CantorParams, distance
from zerofull.census import (
    CensusRow, Method, count_surviving, exploratory_growth, growth_fit, iroot_ceil, natural_cover_exponent,
    partition, power_radius, pruning_depth,
)
from zerofull.errors import DegenerateFitError, DomainError, PreconditionError, ResourceError
from zerofull.oracles import census_disagreements, random_params, random_radii


def test_spot_counts(middle_thirds):
    assert count_surviving(middle_thirds, 3, 2, Fraction(1, 100)).count == 8
    assert count_surviving(middle_thirds, 3, 1, Fraction(1, 100)).count == 4
    assert count_surviving(middle_thirds, 3, 2, Fraction(1, 100), "brute").count == 8


def test_strict_radius_boundary(middle_thirds):
    # 1/2 is exactly 1/6 from C: a ball of radius 1/6 misses, anything larger meets
    assert count_surviving(middle_thirds, 2, 1, Fraction(1, 6)).count == 2
    assert count_surviving(middle_thirds, 2, 1, Fraction(1, 6) + Fraction(1, 10**9)).count == 3


def test_natural_cover_counts_are_powers_of_two(middle_thirds):
    for n in range(2, 8):
        assert count_surviving(middle_thirds, 3, n, power_radius(3, Fraction(2), n)).count == 2 ** (n + 1)


def test_pruning_depth(middle_thirds):
    assert pruning_depth(middle_thirds, Fraction(1, 9)) == 4
    assert pruning_depth(middle_thirds, Fraction(1, 10)) == 5


def test_errors(middle_thirds):
    with pytest.raises(DomainError):
        count_surviving(middle_thirds, 3, 2, Fraction(0))
    with pytest.raises(DomainError):
        count_surviving(middle_thirds, 3, 2, Fraction(1))
    with pytest.raises(ResourceError):
        count_surviving(middle_thirds, 3, 20, Fraction(1, 10), "brute", brute_cap=1000)
    with pytest.raises(ResourceError):
        count_surviving(middle_thirds, 3, 2, Fraction(1, 10), cap=10)
    # tiny radii prune almost everything, so a deep K stays cheap
    assert count_surviving(middle_thirds, 3, 2, Fraction(1, 3**40), cap=100).count == 8


@given(st.integers(0, 10**5), st.integers(1, 40))
def test_partition_covers_range(p_max, parts):
    ranges = partition(p_max, parts)
    assert ranges[0][0] == 0 and ranges[-1][1] == p_max
    assert all(a[1] + 1 == b[0] for a, b in zip(ranges, ranges[1:]))


@settings(max_examples=40)
@given(st.integers(1, 12), st.integers(0, 10**6))
def test_partitioned_count_is_deterministic(parts, seed):
    rng = random.Random(seed)
    params = random_params(rng, rng.randint(3, 6))
    t, n = rng.randint(2, 5), rng.randint(1, 5)
    r = random_radii(rng, params, t, n, k=2)[0]
    whole = count_surviving(params, t, n, r).count
    assert count_surviving(params, t, n, r, parts=parts).count == whole
    assert count_surviving(params, t, n, r, "brute", parts=parts).count == whole


def test_workers_match_serial(middle_thirds):
    r = Fraction(1, 2000)
    serial = count_surviving(middle_thirds, 5, 5, r).count
    assert count_surviving(middle_thirds, 5, 5, r, workers=3, parts=7).count == serial


@settings(max_examples=60)
@given(st.integers(0, 10**6))
def test_exact_matches_brute(seed):
    rng = random.Random(seed)
    params = random_params(rng, rng.randint(3, 6))
    t, n = rng.randint(2, 5), rng.randint(1, 5)
    assert census_disagreements(params, t, n, random_radii(rng, params, t, n)) == []


def test_count_is_monotone_in_radius():
    params = CantorParams(7, [1, 3, 4])
    counts = [count_surviving(params, 4, 4, Fraction(k, 4000)).count for k in range(1, 40)]
    assert counts == sorted(counts)
    direct = sum(1 for p in range(4**4 + 1) if distance(params, Fraction(p, 4**4)) < Fraction(39, 4000))
    assert counts[-1] == direct


@given(st.integers(0, 10**40), st.integers(1, 6))
def test_iroot_ceil(x, k):
    y = iroot_ceil(x, k)
    assert y**k >= x and (y == 0 or (y - 1) ** k < x)


def test_power_radius():
    assert power_radius(3, Fraction(2), 4) == Fraction(1, 3**8)
    assert power_radius(2, Fraction(6, 5), 10) == Fraction(1, 4096)
    assert power_radius(2, Fraction(6, 5), 11) == Fraction(1, 9411)


class TestFits:
    def rows(self, counts, t=3):
        return [CensusRow(n, t, Fraction(1, 10), c, Method.EXACT) for n, c in enumerate(counts, 1)]

    def test_exact_power_law(self):
        fit = growth_fit(self.rows([9**n for n in range(1, 7)], 3), 3)
        assert fit.exponent == pytest.approx(2) and fit.r2 == pytest.approx(1)

    def test_degenerate(self):
        with pytest.raises(DegenerateFitError):
            growth_fit(self.rows([0, 0, 5, 7]), 3)

    def test_natural_cover(self, middle_thirds):
        res = natural_cover_exponent(middle_thirds, 3, Fraction(2), range(2, 9))
        assert abs(res.s_star - middle_thirds.gamma / 2) < 0.02

    def test_natural_cover_preconditions(self, middle_thirds):
        with pytest.raises(PreconditionError):
            natural_cover_exponent(middle_thirds, 3, Fraction(1), range(2, 6))
        with pytest.raises(PreconditionError):
            natural_cover_exponent(middle_thirds, 2, Fraction(2), range(2, 6))

    def test_empty_cover(self, five_one_two):
        # every lattice point sits at least 1/(4*5^n) away, far more than 5^(-3n/2)
        res = natural_cover_exponent(five_one_two, 5, Fraction(3, 2), range(2, 7))
        assert res.status == "Empty" and res.s_star is None

    def test_exploratory_table(self, middle_thirds):
        rep = exploratory_growth(middle_thirds, 2, Fraction(6, 5), range(8, 14))
        labels = [a for a, _ in rep.table()]
        assert "fitted exponent" in labels and "deviation" in labels
