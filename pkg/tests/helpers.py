"""Shared oracles and sweeps for the test modules.

Everything here is deliberately independent of the production code paths it
is used to check: the pair rewriter scans for literal "01" pairs, the digit
rule tracks fractional parts of multiples, and the orbit test just iterates
the doubling map.
"""

from fractions import Fraction
from math import gcd

from brokenline import Convention, enumerate_specs

CONVENTIONS = (Convention.ZERO_ONE, Convention.ONE_ZERO)


def reduced_fractions(max_den, min_den=2):
    for q in range(min_den, max_den + 1):
        for p in range(1, q):
            if gcd(p, q) == 1:
                yield Fraction(p, q)


def all_specs(b_min, b_max):
    return [
        spec
        for b in range(b_min, b_max + 1)
        for spec in enumerate_specs(b).specs()
    ]


def pair_rewrite(word):
    """Left-to-right rewriting of literal "01" pairs into "1"."""
    out = []
    i = 0
    while i < len(word):
        if word[i : i + 2] == "01":
            out.append("1")
            i += 2
        else:
            out.append(word[i])
            i += 1
    return "".join(out)


def rotation_digit_word(p_over_q, convention):
    """Digit rule: entry j is 0 when j*p/q mod 1 lands in (0, 1 - p/q)."""
    p, q = p_over_q.numerator, p_over_q.denominator
    digits = ["0" if (j * p) % q < q - p else "1" for j in range(1, q - 1)]
    return "".join(digits) + convention.value


def doubling_orbit(theta):
    orbit = {theta}
    x = 2 * theta % 1
    while x != theta:
        orbit.add(x)
        x = 2 * x % 1
    return orbit


def all_words(length):
    return (format(k, f"0{length}b") for k in range(1 << length))
