"""Exact angles in R/Z: rationals, binary words, eventually periodic expansions.

Angles are identified modulo 1 and normalized into [0, 1).  Rational values
are ``fractions.Fraction`` throughout; binary words are plain strings over
"0" and "1".
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

__all__ = [
    "ClassOrder",
    "PeriodicAngle",
    "compare_prefix_classes",
    "double_angle",
    "fraction_to_expansion",
    "minimal_period",
    "multiplicative_order",
    "word_to_fraction",
]

_EXPANSION_RE = re.compile(r"0\.(?:\[([01]+)\])?\(([01]+)\)")


def _check_word(word: str) -> None:
    if not word or set(word) - {"0", "1"}:
        raise ValueError(f"not a binary word: {word!r}")


def word_to_fraction(word: str) -> Fraction:
    """Value of the purely periodic expansion 0.(word)^inf, reduced, in [0, 1)."""
    _check_word(word)
    return Fraction(int(word, 2), 2 ** len(word) - 1) % 1


def double_angle(x: Fraction) -> Fraction:
    """One step of the angle doubling map, 2x mod 1."""
    return 2 * x % 1


def minimal_period(word: str) -> int:
    """Length of the shortest prefix whose repetitions give back the word."""
    n = len(word)
    for d in range(1, n + 1):
        if n % d == 0 and word == word[:d] * (n // d):
            return d
    raise AssertionError("unreachable")


def multiplicative_order(base: int, modulus: int) -> int:
    """Least k >= 1 with base**k == 1 modulo ``modulus``."""
    if modulus < 1:
        raise ValueError("modulus must be positive")
    if modulus == 1:
        return 1
    t = base % modulus
    k = 1
    while t != 1:
        t = t * base % modulus
        k += 1
        if k > modulus:
            raise ValueError(f"{base} is not invertible modulo {modulus}")
    return k


def _expand(x: Fraction) -> tuple[str, str]:
    """Canonical (preperiod, period) of x in [0, 1)."""
    num, den = x.numerator, x.denominator
    e = (den & -den).bit_length() - 1
    odd = den >> e
    head, rem = divmod(num, odd)  # x * 2**e == num / odd
    pre = format(head, f"0{e}b") if e else ""
    if odd == 1:
        return pre, "0"
    length = multiplicative_order(2, odd)
    per = format(rem * (2**length - 1) // odd, f"0{length}b")
    return pre, per


def fraction_to_expansion(x: Fraction) -> "PeriodicAngle":
    """Canonical binary expansion of the angle x; purely periodic iff the
    denominator is odd."""
    return PeriodicAngle(*_expand(x % 1))


@dataclass(frozen=True)
class PeriodicAngle:
    """Angle 0.preperiod(period)^inf in canonical form.

    The constructor normalizes its input: the stored period is primitive, the
    preperiod is the shortest possible, and the value lies in [0, 1).  The
    all-ones period collapses to the zero angle.
    """

    preperiod: str = ""
    period: str = "0"

    def __post_init__(self) -> None:
        if self.preperiod:
            _check_word(self.preperiod)
        _check_word(self.period)
        scale = 2 ** len(self.preperiod)
        head = int(self.preperiod, 2) if self.preperiod else 0
        tail = Fraction(int(self.period, 2), 2 ** len(self.period) - 1)
        pre, per = _expand((head + tail) / scale % 1)
        object.__setattr__(self, "preperiod", pre)
        object.__setattr__(self, "period", per)

    @property
    def value(self) -> Fraction:
        scale = 2 ** len(self.preperiod)
        head = int(self.preperiod, 2) if self.preperiod else 0
        tail = Fraction(int(self.period, 2), 2 ** len(self.period) - 1)
        return (head + tail) / scale

    def __str__(self) -> str:
        if self.preperiod:
            return f"0.[{self.preperiod}]({self.period})"
        return f"0.({self.period})"

    @classmethod
    def parse(cls, text: str) -> "PeriodicAngle":
        """Parse the textual format "0.(w)" or "0.[u](w)"."""
        m = _EXPANSION_RE.fullmatch(text)
        if not m:
            raise ValueError(f"not an expansion: {text!r}")
        return cls(m.group(1) or "", m.group(2))


class ClassOrder(Enum):
    LT = "LT"
    GT = "GT"
    INCOMPARABLE = "INCOMPARABLE"


def compare_prefix_classes(u: str, v: str) -> ClassOrder:
    """Order the classes of angles whose expansions start with u resp. v.

    The prefixes are truncated to the shorter length and compared as dyadics;
    equal truncations leave the classes overlapping, hence INCOMPARABLE.
    """
    _check_word(u)
    _check_word(v)
    cut = min(len(u), len(v))
    a, b = int(u[:cut], 2), int(v[:cut], 2)
    if a < b:
        return ClassOrder.LT
    if a > b:
        return ClassOrder.GT
    return ClassOrder.INCOMPARABLE
