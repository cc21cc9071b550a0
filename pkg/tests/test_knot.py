import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from twobridge.contfrac import Rational, crossing_sum, eval_cf, positive_expansion
from twobridge.knot import (
    TwoBridgeKnot,
    canonicalize,
    crossing_number,
    fraction_to_knot,
    mod_inverse,
    slope_family,
)


def all_knot_pairs(p_max):
    """Every (p, q) with p odd, 3 <= p < p_max, 0 < q < p, coprime."""
    for p in range(3, p_max, 2):
        for q in range(1, p):
            if math.gcd(p, q) == 1:
                yield p, q


@st.composite
def knots(draw, max_p=4001):
    p = draw(st.integers(1, max_p // 2)) * 2 + 1
    q = draw(st.integers(1, p - 1))
    g = math.gcd(p, q)
    while g > 1:  # nudge q to the next coprime value
        q = q % (p - 1) + 1
        g = math.gcd(p, q)
    return canonicalize(p, q)


class TestModInverse:
    def test_pinned(self):
        assert mod_inverse(5, 13) == 8
        assert mod_inverse(1, 97) == 1
        assert mod_inverse(4, 15) == 4

    def test_rejects_non_coprime(self):
        with pytest.raises(ValueError):
            mod_inverse(6, 9)

    @given(knots())
    def test_involution(self, k):
        inv = mod_inverse(k.q, k.p)
        assert 0 < inv < k.p
        assert (inv * k.q) % k.p == 1
        assert mod_inverse(inv, k.p) == k.q


class TestCanonicalize:
    def test_pinned(self):
        assert canonicalize(13, 5) == TwoBridgeKnot(13, 8)
        assert canonicalize(13, 8) == TwoBridgeKnot(13, 8)
        assert canonicalize(3, 1) == TwoBridgeKnot(3, 2)
        assert canonicalize(15, 11) == TwoBridgeKnot(15, 4)

    def test_mirror_folds_in(self):
        assert canonicalize(13, -5) == canonicalize(13, 5)
        assert canonicalize(7, -3) == canonicalize(7, 4)

    def test_rejects_links_and_junk(self):
        with pytest.raises(ValueError):
            canonicalize(4, 3)  # even p: two-bridge link
        with pytest.raises(ValueError):
            canonicalize(1, 1)
        with pytest.raises(ValueError):
            canonicalize(9, 3)  # not coprime
        with pytest.raises(ValueError):
            canonicalize(9, 11)  # out of range

    def test_constructor_requires_canonical_form(self):
        with pytest.raises(ValueError):
            TwoBridgeKnot(13, 5)  # odd q
        with pytest.raises(ValueError):
            TwoBridgeKnot(17, 12)  # even, but the partner slope 10 is smaller

    def test_exhaustive_small_range(self):
        # Every slope of every knot with p < 400 canonicalizes to the same
        # knot, and the mirror does too.
        for p, q in all_knot_pairs(400):
            k = canonicalize(p, q)
            assert canonicalize(p, p - q) == k
            assert canonicalize(p, mod_inverse(q, p)) == k
            assert canonicalize(p, -q) == k

    @given(knots())
    def test_idempotent(self, k):
        assert canonicalize(k.p, k.q) == k


class TestSlopeFamily:
    def test_worked_example(self):
        fam = slope_family(TwoBridgeKnot(13, 8))
        assert sorted(str(r) for r in fam) == ["13/5", "13/5", "13/8", "13/8"]

    @given(knots())
    def test_all_slopes_reduce_to_same_knot(self, k):
        fam = slope_family(k)
        for r in fam:
            assert 0 < r.den < r.num == k.p
            assert fraction_to_knot(r) == k

    @given(knots())
    def test_exactly_two_even_denominators(self, k):
        evens = [r for r in slope_family(k) if r.den % 2 == 0]
        assert len(evens) == 2


class TestFractionToKnot:
    def test_links_and_trivial_values_map_to_none(self):
        assert fraction_to_knot(Rational(4, 3)) is None  # even numerator
        assert fraction_to_knot(Rational(1, 1)) is None
        assert fraction_to_knot(Rational(1, 0)) is None
        assert fraction_to_knot(Rational(0, 1)) is None

    def test_negative_value_is_mirror(self):
        assert fraction_to_knot(Rational(-13, 5)) == canonicalize(13, 5)

    def test_denominator_taken_mod_p(self):
        # 13/18 is not a slope, but 18 = 5 mod 13 names the same knot.
        assert fraction_to_knot(Rational(13, 18)) == canonicalize(13, 5)


class TestCrossingNumber:
    def test_pinned(self):
        assert crossing_number(canonicalize(3, 2)) == 3
        assert crossing_number(canonicalize(13, 5)) == 6
        assert crossing_number(canonicalize(15, 4)) == 7

    def test_exhaustive_four_slope_agreement(self):
        # The positive-expansion crossing sums of all four slopes agree;
        # crossing_number would raise if they ever disagreed.
        for p, q in all_knot_pairs(400):
            k = canonicalize(p, q)
            sums = {
                crossing_sum(positive_expansion(r)) for r in slope_family(k)
            }
            assert len(sums) == 1
            assert crossing_number(k) == sums.pop()

    @given(knots())
    def test_matches_own_slope_expansion(self, k):
        r = Rational(k.p, k.q)
        cf = positive_expansion(r)
        assert eval_cf(cf) == r
        assert crossing_number(k) == crossing_sum(cf)
