"""Stern-Brocot arithmetic and validation of broken-line parameters."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .errors import HypothesisViolated, NotCoprime
from .words import Convention

__all__ = [
    "BrokenLineSpec",
    "FareyContext",
    "Ratio",
    "bezout_minimal",
    "bound_fraction",
    "farey_parents",
    "mediant",
    "single_block_slope",
    "stern_brocot_path",
    "validate_spec",
]

# CLI callers hand in raw (numerator, denominator) pairs so that unreduced
# input is rejected instead of silently reduced (the denominator advertises
# the period).
Ratio = Union[Fraction, tuple]


def _as_reduced(value: Ratio, name: str) -> Fraction:
    if isinstance(value, Fraction):
        return value
    num, den = value
    if den <= 0:
        raise HypothesisViolated(f"{name}: denominator must be positive")
    if math.gcd(num, den) != 1:
        raise HypothesisViolated(f"{name}: {num}/{den} is not reduced")
    return Fraction(num, den)


def mediant(x: Fraction, y: Fraction) -> Fraction:
    """Farey mediant (x.num + y.num) / (x.den + y.den)."""
    return Fraction(x.numerator + y.numerator, x.denominator + y.denominator)


def farey_parents(x: Fraction) -> tuple[Fraction, Fraction]:
    """The unique Farey neighbors whose mediant is x, by Stern-Brocot descent."""
    if not 0 < x < 1:
        raise ValueError("parents exist for fractions strictly between 0 and 1")
    lo, hi = Fraction(0), Fraction(1)
    while True:
        node = mediant(lo, hi)
        if node == x:
            return lo, hi
        if x < node:
            hi = node
        else:
            lo = node


def stern_brocot_path(x: Fraction) -> list[tuple[Fraction, str]]:
    """Strict ancestors of x in the Stern-Brocot tree over (0, 1), each with
    the direction ("L" or "R") the path to x takes there."""
    if not 0 < x < 1:
        raise ValueError("x must lie strictly between 0 and 1")
    lo, hi = Fraction(0), Fraction(1)
    path: list[tuple[Fraction, str]] = []
    while True:
        node = mediant(lo, hi)
        if node == x:
            return path
        if x < node:
            path.append((node, "L"))
            hi = node
        else:
            path.append((node, "R"))
            lo = node


def bound_fraction(p_over_q: Fraction, hinge: int, convention: Convention) -> Fraction:
    """Admissibility bound on the second slope at the given hinge: an upper
    bound under the 01 convention, a lower bound under 10."""
    if not 0 < p_over_q < 1:
        raise ValueError("limb fraction must lie strictly between 0 and 1")
    if hinge < 1:
        raise ValueError("hinge must be a positive integer")
    lower, upper = farey_parents(p_over_q)
    p, q = p_over_q.numerator, p_over_q.denominator
    if convention is Convention.ZERO_ONE:
        return Fraction((hinge - 1) * p + upper.numerator, (hinge - 1) * q + upper.denominator)
    return Fraction(lower.numerator + (hinge - 1) * p, lower.denominator + (hinge - 1) * q)


def bezout_minimal(q: int, t: int) -> tuple[int, int]:
    """Solve s*q - t*p == 1 with p the smallest positive integer; returns (p, s)."""
    if not 0 < t < q:
        raise ValueError("need 0 < t < q")
    if math.gcd(q, t) != 1:
        raise NotCoprime(f"gcd({q}, {t}) != 1")
    p = (-pow(t, -1, q)) % q
    return p, (1 + t * p) // q


@dataclass(frozen=True)
class FareyContext:
    """A limb fraction P/Q with its Farey parents, the hinge count, and the
    slope bound those induce."""

    p_over_q: Fraction
    lower_parent: Fraction
    upper_parent: Fraction
    hinge: int
    convention: Convention
    bound: Fraction

    @classmethod
    def build(cls, p_over_q: Fraction, hinge: int, convention: Convention) -> "FareyContext":
        lower, upper = farey_parents(p_over_q)
        return cls(
            p_over_q,
            lower,
            upper,
            hinge,
            convention,
            bound_fraction(p_over_q, hinge, convention),
        )


def single_block_slope(context: FareyContext, m: int) -> Fraction:
    """The m-th slope whose broken line is a single repeated block; m = 0
    returns P/Q itself.  Increases toward the bound under 01, decreases
    under 10."""
    if m < 0:
        raise ValueError("m must be nonnegative")
    p, bound = context.p_over_q, context.bound
    return Fraction(
        p.numerator + m * bound.numerator, p.denominator + m * bound.denominator
    )


@dataclass(frozen=True)
class BrokenLineSpec:
    """Validated parameters of a broken line: the limb context plus the slope
    taken after the hinge point."""

    context: FareyContext
    slope: Fraction

    @property
    def p_over_q(self) -> Fraction:
        return self.context.p_over_q

    @property
    def hinge(self) -> int:
        return self.context.hinge

    @property
    def convention(self) -> Convention:
        return self.context.convention

    @property
    def period(self) -> int:
        return self.slope.denominator


def validate_spec(
    p_over_q: Ratio, a_over_b: Ratio, hinge: int, convention: Convention
) -> BrokenLineSpec:
    """Check the hinge inequalities and return the validated parameters.

    Raises HypothesisViolated naming the failing constraint.  Slopes equal to
    a single-block fraction are accepted; the bound itself is not.
    """
    limb = _as_reduced(p_over_q, "P/Q")
    slope = _as_reduced(a_over_b, "a/b")
    if not 0 < limb < 1:
        raise HypothesisViolated(f"0 < P/Q < 1 fails for {limb}")
    if not 0 < slope < 1:
        raise HypothesisViolated(f"0 < a/b < 1 fails for {slope}")
    if hinge < 1:
        raise HypothesisViolated(f"hinge must be >= 1, got {hinge}")
    context = FareyContext.build(limb, hinge, convention)
    if convention is Convention.ZERO_ONE:
        if not limb < slope:
            raise HypothesisViolated(f"P/Q < a/b fails: {limb} vs {slope}")
        if not slope < context.bound:
            raise HypothesisViolated(
                f"a/b below the hinge bound fails: {slope} vs {context.bound}"
            )
    else:
        if not context.bound < slope:
            raise HypothesisViolated(
                f"a/b above the hinge bound fails: {slope} vs {context.bound}"
            )
        if not slope < limb:
            raise HypothesisViolated(f"a/b < P/Q fails: {slope} vs {limb}")
    return BrokenLineSpec(context, slope)
