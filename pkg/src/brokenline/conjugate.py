"""Conjugate angles via primed blocks, with two independent verifiers.

The production path primes every block of the decomposition.  The chain
verifier pulls the angle back one doubling step at a time and certifies the
circle intervals stay unlinked; the Lavaurs pairing is a test-only oracle
that matches angles of one exact period by non-crossing chords.
"""

from __future__ import annotations

import heapq
from bisect import bisect_left, bisect_right
from dataclasses import dataclass
from fractions import Fraction

from .angles import (
    PeriodicAngle,
    minimal_period,
    multiplicative_order,
    word_to_fraction,
)
from .errors import UnlinkViolation
from .farey import BrokenLineSpec
from .mechanical import block_decomposition, broken_line_word
from .words import Convention, prime_minus, prime_plus

__all__ = [
    "ConjugateChain",
    "UnlinkCertificate",
    "conjugate_angle",
    "conjugate_chain",
    "conjugate_word",
    "lavaurs_pairs",
    "lavaurs_partner",
    "unlinked",
]

LAVAURS_LIMIT = 20


def conjugate_word(spec: BrokenLineSpec) -> str:
    """Period word of the conjugate angle: every block primed, +1 under the
    01 convention and -1 under 10."""
    decomposition = block_decomposition(spec)
    prime = prime_plus if spec.convention is Convention.ZERO_ONE else prime_minus
    primed = {e: prime(w) for e, w in decomposition.block_words.items()}
    return "".join(primed[e] for e in decomposition.exponents)


def conjugate_angle(spec: BrokenLineSpec) -> PeriodicAngle:
    """The other external angle landing at the same root."""
    return PeriodicAngle(period=conjugate_word(spec))


def _in_arc(t: Fraction, a: Fraction, b: Fraction) -> bool:
    # open arc from a counterclockwise to b
    if a < b:
        return a < t < b
    return t > a or t < b


def unlinked(pair_a: tuple[Fraction, Fraction], pair_b: tuple[Fraction, Fraction]) -> bool:
    """True when one pair of circle points lies inside a single arc cut out
    by the other pair."""
    a1, a2 = pair_a
    c, d = pair_b
    return _in_arc(c, a1, a2) == _in_arc(d, a1, a2)


@dataclass(frozen=True)
class UnlinkCertificate:
    """Outcome of one unlinking check along the preimage chain.

    ``digit_zero_case`` records which side the orbit point fell on: True when
    it sits past the far partition point, which is exactly when the matching
    kneading entry is 0.
    """

    index: int
    digit_zero_case: bool


@dataclass(frozen=True)
class ConjugateChain:
    theta: PeriodicAngle
    conjugate: PeriodicAngle
    preimages: tuple[PeriodicAngle, ...]
    certificates: tuple[UnlinkCertificate, ...]


def conjugate_chain(spec: BrokenLineSpec) -> ConjugateChain:
    """Build the full preimage chain of the broken-line angle and verify it.

    Checks, exactly: each chain element halves to the previous one; for every
    k the interval from the k-th orbit point to the k-th preimage is unlinked
    from the partition interval; and the closed form over the whole chain
    reproduces the primed-block conjugate.
    """
    word = broken_line_word(spec)
    b = len(word)
    theta = word_to_fraction(word)
    cword = conjugate_word(spec)
    conj = word_to_fraction(cword)

    orbit = [theta]
    for _ in range(b - 1):
        orbit.append(2 * orbit[-1] % 1)
    preimage_values = [
        (int(cword[b - k :], 2) + theta) / Fraction(2**k) for k in range(1, b + 1)
    ]
    if 2 * preimage_values[0] % 1 != theta:
        raise AssertionError("first preimage does not halve the angle")
    for k in range(2, b + 1):
        if 2 * preimage_values[k - 1] % 1 != preimage_values[k - 2]:
            raise AssertionError(f"chain breaks at step {k}")

    x1, x2 = preimage_values[0], orbit[b - 1]
    zero_one = spec.convention is Convention.ZERO_ONE
    certificates = []
    for k in range(2, b + 1):
        y1, y2 = orbit[b - k], preimage_values[k - 1]
        if len({x1, x2, y1, y2}) != 4 or not unlinked((x1, x2), (y1, y2)):
            raise UnlinkViolation(k)
        case = (y1 > x2) if zero_one else (y1 < x2)
        certificates.append(UnlinkCertificate(k, case))

    closed = theta + (preimage_values[b - 1] - theta) / (1 - Fraction(1, 2**b))
    if closed != conj:
        raise AssertionError("chain closed form disagrees with primed blocks")
    preimages = tuple(
        PeriodicAngle(cword[b - k :], word) for k in range(1, b + 1)
    )
    return ConjugateChain(
        PeriodicAngle(period=word),
        PeriodicAngle(period=cword),
        preimages,
        tuple(certificates),
    )


_pair_cache: dict[int, tuple[tuple[Fraction, Fraction], ...]] = {}


def _exact_period_angles(period: int) -> list[Fraction]:
    full = (1 << period) - 1
    width = f"0{period}b"
    return [
        Fraction(k, full)
        for k in range(1, full)
        if minimal_period(format(k, width)) == period
    ]


def _pairs_at(period: int) -> tuple[tuple[Fraction, Fraction], ...]:
    cached = _pair_cache.get(period)
    if cached is not None:
        return cached

    # distinct rationals with denominators below 2**LAVAURS_LIMIT differ by
    # more than 2**-40, so their float64 images are distinct and in the same
    # order; floats position the bisects while arc membership stays exact
    endpoints: list[Fraction] = []
    partner: dict[Fraction, Fraction] = {}
    for lower in range(2, period):
        for x, y in _pairs_at(lower):
            partner[x] = y
            partner[y] = x
            endpoints.append(x)
            endpoints.append(y)
    endpoints.sort()
    keys = [float(e) for e in endpoints]

    def add_endpoint(value: Fraction) -> None:
        key = float(value)
        at = bisect_right(keys, key)
        keys.insert(at, key)
        endpoints.insert(at, value)

    def crosses(lo: Fraction, hi: Fraction) -> bool:
        # chord {lo, hi} against every existing chord; arc runs ccw lo -> hi.
        # existing chords never cross each other, so once a chord is known to
        # sit inside the arc the whole span it encloses can be skipped
        lo_key, hi_key = float(lo), float(hi)
        if lo < hi:
            i = bisect_right(keys, lo_key)
            stop = bisect_left(keys, hi_key)
            while i < stop:
                e = endpoints[i]
                mate = partner[e]
                if not lo < mate < hi:
                    return True
                i = bisect_right(keys, float(mate), i + 1, stop) if mate > e else i + 1
            return False
        barrier = None  # rightmost wrap-around landing inside [0, hi)
        i = bisect_right(keys, lo_key)
        count = len(endpoints)
        while i < count:
            e = endpoints[i]
            mate = partner[e]
            if not (mate > lo or mate < hi):
                return True
            if mate > e:
                i = bisect_right(keys, float(mate), i + 1)
            else:
                if mate < hi and (barrier is None or mate > barrier):
                    barrier = mate
                i += 1
        stop = bisect_left(keys, hi_key)
        i = 0 if barrier is None else bisect_right(keys, float(barrier), 0, stop)
        while i < stop:
            e = endpoints[i]
            mate = partner[e]
            if not (mate > lo or mate < hi):
                return True
            i = bisect_right(keys, float(mate), i + 1, stop) if mate > e else i + 1
        return False

    angles = _exact_period_angles(period)
    count = len(angles)
    pairs: list[tuple[Fraction, Fraction]] = []
    if count:
        full = (1 << period) - 1
        # every angle of this period sits on the 1/full grid, so adjacency
        # gaps are plain integers and the heap never compares fractions
        ticks = [int(a * full) for a in angles]
        nxt = list(range(1, count)) + [0]
        prv = [count - 1] + list(range(count - 1))
        done = [False] * count
        heap = [
            ((ticks[nxt[i]] - ticks[i]) % full, i, nxt[i]) for i in range(count)
        ]
        heapq.heapify(heap)
        remaining = count
        while remaining:
            if not heap:
                raise RuntimeError(f"pairing stalled at period {period}")
            _, i, j = heapq.heappop(heap)
            if done[i] or done[j]:
                continue
            x, y = angles[i], angles[j]
            if crosses(x, y):
                continue  # blocked for good: chords are never removed
            pairs.append((x, y) if x < y else (y, x))
            done[i] = done[j] = True
            remaining -= 2
            partner[x] = y
            partner[y] = x
            add_endpoint(x)
            add_endpoint(y)
            before, after = prv[i], nxt[j]
            nxt[before] = after
            prv[after] = before
            if remaining >= 2:
                heapq.heappush(
                    heap, ((ticks[after] - ticks[before]) % full, before, after)
                )
    result = tuple(sorted(pairs))
    _pair_cache[period] = result
    return result


def lavaurs_pairs(period: int) -> set[tuple[Fraction, Fraction]]:
    """Partition the angles of one exact doubling period into conjugate pairs.

    Periods are processed in increasing order; within a period, the closest
    cyclically adjacent unpaired angles whose chord crosses no existing chord
    are joined first (ties broken by the smaller left endpoint).  Capped at
    period 20: this is a desk-scale oracle, not a production path.
    """
    if not 2 <= period <= LAVAURS_LIMIT:
        raise ValueError(f"period must be between 2 and {LAVAURS_LIMIT}")
    return set(_pairs_at(period))


def lavaurs_partner(theta: Fraction) -> Fraction:
    """Partner of a periodic angle in the pairing of its exact period."""
    theta %= 1
    den = theta.denominator
    if den == 1 or den % 2 == 0:
        raise ValueError("angle is not periodic of period >= 2 under doubling")
    period = multiplicative_order(2, den)
    for x, y in lavaurs_pairs(period):
        if x == theta:
            return y
        if y == theta:
            return x
    raise ValueError(f"{theta} missing from the period-{period} pairing")
