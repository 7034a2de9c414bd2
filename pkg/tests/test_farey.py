from fractions import Fraction

import pytest

from brokenline import (
    Convention,
    FareyContext,
    HypothesisViolated,
    NotCoprime,
    bezout_minimal,
    bound_fraction,
    farey_parents,
    mediant,
    single_block_slope,
    validate_spec,
)
from helpers import CONVENTIONS, reduced_fractions


def test_mediant():
    assert mediant(Fraction(0), Fraction(1)) == Fraction(1, 2)
    assert mediant(Fraction(1, 3), Fraction(1, 2)) == Fraction(2, 5)
    assert mediant(Fraction(1, 2), Fraction(1)) == Fraction(2, 3)


def test_farey_parents_golden():
    assert farey_parents(Fraction(2, 5)) == (Fraction(1, 3), Fraction(1, 2))
    assert farey_parents(Fraction(1, 2)) == (Fraction(0), Fraction(1))
    assert farey_parents(Fraction(3, 7)) == (Fraction(2, 5), Fraction(1, 2))


def test_farey_parents_are_neighbors_with_right_mediant():
    for x in reduced_fractions(100):
        lower, upper = farey_parents(x)
        det = (
            upper.numerator * lower.denominator
            - lower.numerator * upper.denominator
        )
        assert det == 1
        assert mediant(lower, upper) == x


def test_bound_fraction_golden():
    assert bound_fraction(Fraction(2, 5), 3, Convention.ZERO_ONE) == Fraction(5, 12)
    assert bound_fraction(Fraction(1, 2), 1, Convention.ZERO_ONE) == Fraction(1)
    assert bound_fraction(Fraction(2, 5), 3, Convention.ONE_ZERO) == Fraction(5, 13)


def test_bound_fraction_monotone_in_hinge():
    for x in reduced_fractions(20):
        for hinge in range(1, 20):
            upper_now = bound_fraction(x, hinge, Convention.ZERO_ONE)
            upper_next = bound_fraction(x, hinge + 1, Convention.ZERO_ONE)
            assert x < upper_next < upper_now
            lower_now = bound_fraction(x, hinge, Convention.ONE_ZERO)
            lower_next = bound_fraction(x, hinge + 1, Convention.ONE_ZERO)
            assert lower_now < lower_next < x


def test_single_block_slope_golden():
    ctx = FareyContext.build(Fraction(1, 2), 1, Convention.ZERO_ONE)
    assert single_block_slope(ctx, 0) == Fraction(1, 2)
    assert single_block_slope(ctx, 1) == Fraction(2, 3)
    ctx = FareyContext.build(Fraction(2, 5), 2, Convention.ZERO_ONE)
    assert single_block_slope(ctx, 1) == Fraction(5, 12)


def test_single_block_slopes_march_toward_the_bound():
    for x in reduced_fractions(12):
        for hinge in (1, 2, 3):
            for convention in CONVENTIONS:
                ctx = FareyContext.build(x, hinge, convention)
                previous = x
                for m in range(1, 21):
                    current = single_block_slope(ctx, m)
                    if convention is Convention.ZERO_ONE:
                        assert previous < current < ctx.bound
                    else:
                        assert ctx.bound < current < previous
                    previous = current


def test_validate_spec_golden():
    spec = validate_spec(
        Fraction(2, 5), Fraction(7, 17), 3, Convention.ZERO_ONE
    )
    assert spec.period == 17
    assert spec.context.lower_parent == Fraction(1, 3)
    assert spec.context.upper_parent == Fraction(1, 2)
    validate_spec(Fraction(1, 2), Fraction(3, 4), 1, Convention.ZERO_ONE)
    with pytest.raises(HypothesisViolated):
        validate_spec(Fraction(2, 5), Fraction(1, 2), 3, Convention.ZERO_ONE)


def test_validate_spec_rejects_unreduced_pairs():
    with pytest.raises(HypothesisViolated):
        validate_spec(Fraction(1, 2), (6, 8), 1, Convention.ZERO_ONE)
    with pytest.raises(HypothesisViolated):
        validate_spec((2, 4), (3, 4), 1, Convention.ZERO_ONE)
    # reduced tuples pass
    spec = validate_spec((1, 2), (3, 4), 1, Convention.ZERO_ONE)
    assert spec.slope == Fraction(3, 4)


def test_validate_spec_accepts_single_block_slopes_but_not_the_bound():
    ctx = FareyContext.build(Fraction(2, 5), 2, Convention.ZERO_ONE)
    slope = single_block_slope(ctx, 2)
    validate_spec(Fraction(2, 5), slope, 2, Convention.ZERO_ONE)
    with pytest.raises(HypothesisViolated):
        validate_spec(Fraction(2, 5), ctx.bound, 2, Convention.ZERO_ONE)


def test_bezout_minimal():
    assert bezout_minimal(5, 2) == (2, 1)
    assert bezout_minimal(2, 1) == (1, 1)
    assert bezout_minimal(7, 3) == (2, 1)
    with pytest.raises(NotCoprime):
        bezout_minimal(6, 4)
    with pytest.raises(ValueError):
        bezout_minimal(3, 5)


def test_bezout_minimal_is_minimal():
    for q in range(2, 40):
        for t in range(1, q):
            from math import gcd

            if gcd(q, t) != 1:
                continue
            p, s = bezout_minimal(q, t)
            assert s * q - t * p == 1
            assert 0 < p < q
