"""Cutting sequences, mechanical words, broken-line periods, block structure.

The geometric pipeline (grid crossings, then contraction) and the recursive
pipeline (mediant concatenation down the Stern-Brocot tree) compute the same
words; the test suite holds them against each other.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .angles import PeriodicAngle, word_to_fraction
from .errors import MalformedCuttingSequence
from .farey import BrokenLineSpec, FareyContext, mediant, single_block_slope
from .words import Convention

__all__ = [
    "BlockDecomposition",
    "block_decomposition",
    "block_word",
    "broken_line_angle",
    "broken_line_tags",
    "broken_line_word",
    "characteristic_pair",
    "cutting_sequence",
    "cutting_to_mechanical",
    "mechanical_word",
    "mediant_tags",
]

_WORD_CACHE: dict[tuple[Fraction, Convention], str] = {}


def cutting_sequence(p_over_q: Fraction, convention: Convention) -> str:
    """Grid-crossing word of the line y = (p/q)x over one period.

    Crossings of vertical grid lines contribute 0, horizontal ones 1, ordered
    along the line by exact rational comparison; the lattice point (q, p)
    contributes the convention's two-symbol marker.  Length is p + q.
    """
    if not 0 < p_over_q < 1:
        raise ValueError("slope must lie strictly between 0 and 1")
    p, q = p_over_q.numerator, p_over_q.denominator
    # scale every crossing abscissa by p: vertical i sits at i*p, horizontal
    # j at j*q; coincidences are impossible since gcd(p, q) == 1
    events = sorted(
        [(i * p, "0") for i in range(1, q)] + [(j * q, "1") for j in range(1, p)]
    )
    return "".join(symbol for _, symbol in events) + convention.value


def cutting_to_mechanical(kappa: str) -> str:
    """Contract a cutting word by deleting the 0 immediately before each 1
    (the rewriting 01 -> 1).  Output length equals the number of 0s."""
    out: list[str] = []
    for ch in kappa:
        if ch == "0":
            out.append("0")
        elif ch == "1":
            if not out or out[-1] != "0":
                raise MalformedCuttingSequence(kappa)
            out[-1] = "1"
        else:
            raise MalformedCuttingSequence(kappa)
    return "".join(out)


def _node_word(node: Fraction, w_lo: str, w_hi: str, convention: Convention) -> str:
    num, den = node.numerator, node.denominator
    if convention is Convention.ZERO_ONE:
        if num == 1:
            return "0" * (den - 1) + "1"
        return w_hi + w_lo
    if num == 1:
        return "0" * (den - 2) + "10"
    if den - num == 1:
        return "1" * num + "0"
    return w_lo + w_hi


def mechanical_word(p_over_q: Fraction, convention: Convention) -> str:
    """The length-q word whose repetition is the angle of the line of slope
    p/q under the given convention.

    Built by mediant concatenation down the Stern-Brocot tree, seeded by the
    closed forms for slopes 1/m and m/(m+1).  The boundary slopes 1 ("01")
    and 0 ("10") carry the one-letter words "1" and "0".  Results are
    memoized across calls.
    """
    key = (p_over_q, convention)
    cached = _WORD_CACHE.get(key)
    if cached is not None:
        return cached
    if convention is Convention.ZERO_ONE and p_over_q == 1:
        return _WORD_CACHE.setdefault(key, "1")
    if convention is Convention.ONE_ZERO and p_over_q == 0:
        return _WORD_CACHE.setdefault(key, "0")
    if not 0 < p_over_q < 1:
        raise ValueError(f"no {convention} word for {p_over_q}")
    lo, hi = Fraction(0), Fraction(1)
    w_lo = "0" if convention is Convention.ONE_ZERO else ""
    w_hi = "1" if convention is Convention.ZERO_ONE else ""
    while True:
        node = mediant(lo, hi)
        word = _WORD_CACHE.get((node, convention))
        if word is None:
            word = _node_word(node, w_lo, w_hi, convention)
            _WORD_CACHE[(node, convention)] = word
        if node == p_over_q:
            return word
        if p_over_q < node:
            hi, w_hi = node, word
        else:
            lo, w_lo = node, word


def characteristic_pair(p_over_q: Fraction) -> tuple[Fraction, Fraction]:
    """Both mechanical angles of the slope, the smaller ("01") first."""
    return (
        word_to_fraction(mechanical_word(p_over_q, Convention.ZERO_ONE)),
        word_to_fraction(mechanical_word(p_over_q, Convention.ONE_ZERO)),
    )


def mediant_tags(
    x: Fraction, lo: Fraction, hi: Fraction, convention: Convention
) -> list[Fraction]:
    """Labels of the factorization of x's word into lo-words and hi-words.

    Requires lo < x < hi with lo, hi Farey neighbors.  Under 01 a mediant's
    word is (hi word)(lo word), under 10 it is (lo word)(hi word); the list
    returned is the flattened label sequence down the tree.
    """
    if not lo < x < hi:
        raise ValueError("x must lie strictly between lo and hi")
    if hi.numerator * lo.denominator - lo.numerator * hi.denominator != 1:
        raise ValueError("lo and hi must be Farey neighbors")
    zero_one = convention is Convention.ZERO_ONE
    left, right = lo, hi
    exp_lo, exp_hi = [lo], [hi]
    while True:
        node = mediant(left, right)
        exp = exp_hi + exp_lo if zero_one else exp_lo + exp_hi
        if node == x:
            return exp
        if x < node:
            right, exp_hi = node, exp
        else:
            left, exp_lo = node, exp


def broken_line_tags(spec: BrokenLineSpec) -> list[Fraction]:
    """Wordwise labels of the broken-line period: n copies of P/Q followed by
    the slope word's labels with their trailing P/Q run shortened by n.

    Labels take values in {P/Q, parent}, where the parent is the upper Farey
    parent under 01 and the lower one under 10.
    """
    ctx = spec.context
    limb, n = ctx.p_over_q, ctx.hinge
    if ctx.convention is Convention.ZERO_ONE:
        raw = mediant_tags(spec.slope, limb, ctx.bound, ctx.convention)
        parent = ctx.upper_parent
    else:
        raw = mediant_tags(spec.slope, ctx.bound, limb, ctx.convention)
        parent = ctx.lower_parent
    tags: list[Fraction] = []
    for tag in raw:
        if tag == limb:
            tags.append(limb)
        else:
            # the bound's own word is (parent word)(P/Q word)^(n-1)
            tags.append(parent)
            tags.extend([limb] * (n - 1))
    if tags[-n:] != [limb] * n:
        raise AssertionError("slope word does not end in the hinge prefix")
    return [limb] * n + tags[:-n]


def broken_line_word(spec: BrokenLineSpec) -> str:
    """Period word (length b) of the broken-line angle: the slope word with
    its trailing hinge prefix rotated to the front."""
    ctx = spec.context
    head = mechanical_word(ctx.p_over_q, ctx.convention) * ctx.hinge
    slope_word = mechanical_word(spec.slope, ctx.convention)
    if not slope_word.endswith(head):
        raise AssertionError("slope word does not end in the hinge prefix")
    return head + slope_word[: len(slope_word) - len(head)]


def broken_line_angle(spec: BrokenLineSpec) -> PeriodicAngle:
    """The broken-line angle as a canonical purely periodic expansion."""
    return PeriodicAngle(period=broken_line_word(spec))


def block_word(context: FareyContext, m: int) -> str:
    """Bit string of the m-th block of the context; m = 0 is the bare limb
    word, m >= 1 interleaves m parent words into hinge-sized limb runs."""
    if m < 0:
        raise ValueError("m must be nonnegative")
    wp = mechanical_word(context.p_over_q, context.convention)
    if m == 0:
        return wp
    parent = (
        context.upper_parent
        if context.convention is Convention.ZERO_ONE
        else context.lower_parent
    )
    wx = mechanical_word(parent, context.convention)
    n = context.hinge
    return wp * n + (wx + wp * (n - 1)) * (m - 1) + wx


@dataclass(frozen=True)
class BlockDecomposition:
    """Factorization of a broken-line period word into consecutive blocks.

    ``exponents`` lists the block index at each slot; every entry is base_m
    or base_m + 1.  A single block occurs exactly when the slope is one of
    the single-block fractions (then base_m is that block's own index).
    """

    spec: BrokenLineSpec
    base_m: int
    exponents: tuple[int, ...]
    block_words: dict[int, str]

    @property
    def word(self) -> str:
        return "".join(self.block_words[e] for e in self.exponents)


def _parse_blocks(word: str, long_word: str, short_word: str, base: int) -> list[int]:
    # leftmost match preferring the longer block, with backtracking; dead
    # positions are memoized so the scan stays linear
    n = len(word)
    dead: set[int] = set()
    out: list[int] = []

    def walk(pos: int) -> bool:
        if pos == n:
            return True
        if pos in dead:
            return False
        for piece, exponent in ((long_word, base + 1), (short_word, base)):
            if word.startswith(piece, pos):
                out.append(exponent)
                if walk(pos + len(piece)):
                    return True
                out.pop()
        dead.add(pos)
        return False

    if not walk(0):
        raise AssertionError("period word does not factor into blocks")
    return out


def block_decomposition(spec: BrokenLineSpec) -> BlockDecomposition:
    """Factor the period word into blocks of two adjacent indices.

    The slope's position between consecutive single-block fractions pins the
    base index; re-concatenation of the result is asserted to reproduce the
    period word.
    """
    ctx = spec.context
    word = broken_line_word(spec)
    zero_one = ctx.convention is Convention.ZERO_ONE
    m = 0
    while True:
        candidate = single_block_slope(ctx, m + 1)
        if spec.slope == candidate:
            piece = block_word(ctx, m + 1)
            if word != piece:
                raise AssertionError("single-block word mismatch")
            return BlockDecomposition(spec, m + 1, (m + 1,), {m + 1: piece})
        if (spec.slope < candidate) if zero_one else (spec.slope > candidate):
            break
        m += 1
    long_word, short_word = block_word(ctx, m + 1), block_word(ctx, m)
    exponents = _parse_blocks(word, long_word, short_word, m)
    if len(exponents) < 2 or exponents[0] != m + 1 or exponents[-1] != m:
        raise AssertionError("block exponents violate the boundary pattern")
    decomposition = BlockDecomposition(
        spec, m, tuple(exponents), {m: short_word, m + 1: long_word}
    )
    if decomposition.word != word:
        raise AssertionError("block re-concatenation mismatch")
    return decomposition
