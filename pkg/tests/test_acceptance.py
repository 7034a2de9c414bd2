"""Acceptance suite: one test per shipped criterion, every check exact.

Each test prints a single "criterion NN: PASS/FAIL" line (visible with
pytest -s or in captured output).  Criterion 9 is known-red: the census
formula and the brute-force sweep agree everywhere, but the construction
itself stops reaching every counted angle from period 7 on; the test states
the claim as shipped and fails honestly.
"""

import random
import time
from fractions import Fraction
from math import gcd

from brokenline import (
    Convention,
    PeriodicAngle,
    broken_line_word,
    conjugate_angle,
    conjugate_chain,
    cutting_sequence,
    cutting_to_mechanical,
    invert_kneading,
    is_sturmian,
    kneading_of_angle,
    kneading_of_spec,
    lavaurs_pairs,
    locate,
    lower_kneading_period,
    mechanical_word,
    minimal_period,
    sturmian_census,
    tuned_is_nonsturmian,
    validate_spec,
    word_to_fraction,
)
from helpers import (
    CONVENTIONS,
    all_specs,
    doubling_orbit,
    reduced_fractions,
    rotation_digit_word,
)


def report(number, ok, detail):
    print(f"criterion {number:02d}: {'PASS' if ok else 'FAIL'} - {detail}")
    assert ok, f"criterion {number}: {detail}"


def _spec(limb, slope, hinge, convention):
    return validate_spec(
        Fraction(*limb), Fraction(*slope), hinge, Convention(convention)
    )


def test_criterion_01_golden_values():
    a = _spec((1, 2), (3, 4), 1, "01")
    b = _spec((1, 2), (1, 4), 1, "10")
    c = _spec((2, 5), (7, 17), 2, "01")
    ok = (
        word_to_fraction(broken_line_word(a)) == Fraction(7, 15)
        and conjugate_angle(a).value == Fraction(8, 15)
        and word_to_fraction(broken_line_word(b)) == Fraction(8, 15)
        and broken_line_word(c) == "01001010010101001"
        and word_to_fraction(broken_line_word(c)) == Fraction(38057, 131071)
        and conjugate_angle(c).value == Fraction(38090, 131071)
        and conjugate_angle(c).period == "01001010011001010"
    )
    report(1, ok, "worked examples reproduce exactly")


def test_criterion_02_golden_kneading():
    c = _spec((2, 5), (7, 17), 2, "01")
    spec, sequence = invert_kneading("1111011110111101*", Convention.ZERO_ONE)
    expected_word = (
        mechanical_word(Fraction(2, 5), Convention.ZERO_ONE) * 3
        + mechanical_word(Fraction(1, 2), Convention.ZERO_ONE)
    )
    ok = (
        kneading_of_spec(c).symbols == "1111011110111111*"
        and (spec.p_over_q, spec.slope, spec.hinge)
        == (Fraction(2, 5), Fraction(7, 17), 3)
        and sequence.period == expected_word
    )
    report(2, ok, "kneading golden values and inversion reproduce exactly")


def test_criterion_03_base_case_formulas():
    ok = True
    for m in range(2, 11):
        ok &= mechanical_word(Fraction(1, m), Convention.ZERO_ONE) == (
            "0" * (m - 1) + "1"
        )
        ok &= mechanical_word(Fraction(1, m), Convention.ONE_ZERO) == (
            "0" * (m - 2) + "10"
        )
    report(3, ok, "closed forms for 1/m hold for m = 2..10")


def test_criterion_04_mechanical_oracles():
    cases = 0
    ok = True
    for slope in reduced_fractions(50):
        for convention in CONVENTIONS:
            geometric = cutting_to_mechanical(
                cutting_sequence(slope, convention)
            )
            ok &= geometric == mechanical_word(slope, convention)
            ok &= geometric == rotation_digit_word(slope, convention)
            cases += 1
    report(4, ok, f"geometric = recursive = digit rule on {cases} cases")


def test_criterion_05_sturmian_periods():
    specs = all_specs(3, 24)
    ok = all(
        is_sturmian(broken_line_word(s))
        and minimal_period(broken_line_word(s)) == s.period
        for s in specs
    )
    report(5, ok, f"balance and exact period on {len(specs)} parameter sets")


def test_criterion_06_conjugate_oracles():
    specs = all_specs(3, 16)
    partner_of = {}
    for period in range(2, 17):
        for x, y in lavaurs_pairs(period):
            partner_of[x] = y
            partner_of[y] = x
    ok = True
    for spec in specs:
        # conjugate_chain rechecks doubling, every unlink certificate, and
        # the closed form against the primed blocks
        chain = conjugate_chain(spec)
        theta = word_to_fraction(broken_line_word(spec))
        ok &= partner_of.get(theta) == chain.conjugate.value
        if not ok:
            break
    report(6, ok, f"primed blocks = chain = pairing on {len(specs)} sets")


def test_criterion_07_kneading_oracles():
    specs = all_specs(3, 24)
    ok = True
    for spec in specs:
        theta = word_to_fraction(broken_line_word(spec))
        ok &= kneading_of_spec(spec) == kneading_of_angle(theta)
        recovered, sequence = invert_kneading(
            kneading_of_spec(spec), spec.convention
        )
        ok &= recovered == spec and sequence.period == broken_line_word(spec)
        if not ok:
            break
    report(7, ok, f"structural = direct and inversion round-trips on {len(specs)} sets")


def test_criterion_08_primitivity():
    specs = all_specs(3, 20)
    ok = all(
        lower_kneading_period(word_to_fraction(broken_line_word(s))) == s.period
        for s in specs
    )
    checked = 0
    for period in range(2, 15):
        for x, y in lavaurs_pairs(period):
            satellite = y in doubling_orbit(x)
            both_full = (
                lower_kneading_period(x) == period
                and lower_kneading_period(y) == period
            )
            ok &= satellite == (not both_full)
            checked += 1
    report(
        8,
        ok,
        f"full lower-kneading period on {len(specs)} sets; "
        f"satellite oracle agrees on {checked} pairs",
    )


def test_criterion_09_census():
    # shipped claim: constructed, formula, and brute all agree for b = 3..14.
    # formula = brute holds throughout and the b = 3, 4 values are 2 and 4,
    # but the construction reaches every counted angle only through b = 6;
    # from b = 7 on its image is a strict subset (first missing pair
    # 0.(0110111) = 55/127 and 0.(1001000) = 72/127, producible by no
    # parameter choice at all), so this criterion fails by design of the
    # claim, not of the code.
    started = time.monotonic()
    rows = {}
    agree = True
    for b in range(3, 15):
        constructed, formula, brute = sturmian_census(b)
        rows[b] = (constructed, formula, brute)
        agree &= constructed == formula == brute
    elapsed = time.monotonic() - started
    ok = (
        agree
        and rows[3] == (2, 2, 2)
        and rows[4] == (4, 4, 4)
        and elapsed < 60.0
    )
    detail = f"census rows b=3..14 in {elapsed:.1f}s: " + " ".join(
        f"{b}:{c}/{f}/{br}" for b, (c, f, br) in rows.items()
    )
    report(9, ok, detail)


def test_criterion_10_localization():
    specs = all_specs(3, 20)
    ok = True
    for spec in specs:
        spot = locate(spec)
        theta = word_to_fraction(broken_line_word(spec))
        low, high = spot.bracketing_rays
        ok &= low.value < theta < high.value
        if spec.p_over_q == Fraction(1, 2) and spec.hinge == 1:
            ok &= (low.value, high.value) == (Fraction(5, 12), Fraction(7, 12))
        if not ok:
            break
    report(10, ok, f"junction rays bracket all {len(specs)} parameter sets")


def test_criterion_11_tuning():
    rng = random.Random(2026)
    bulbs = list(reduced_fractions(10))
    done = 0
    ok = True
    while done < 1000:
        length = rng.randrange(2, 11)
        word = "".join(rng.choice("01") for _ in range(length))
        phi = PeriodicAngle(period=word)
        tail = phi.period * 2
        if "01" not in tail or "10" not in tail:
            continue
        ok &= tuned_is_nonsturmian(phi, rng.choice(bulbs))
        done += 1
    report(11, ok, "1000 randomized tunings all come out unbalanced")


def test_criterion_12_half_limb_symmetry():
    ok = True
    cases = 0
    for b in range(3, 25):
        for a in range(b // 2 + 1, b):
            if gcd(a, b) != 1:
                continue
            spec01 = _spec((1, 2), (a, b), 1, "01")
            spec10 = _spec((1, 2), (b - a, b), 1, "10")
            ok &= conjugate_angle(spec01).value == word_to_fraction(
                broken_line_word(spec10)
            )
            cases += 1
    report(12, ok, f"mirrored conventions agree on {cases} half-limb slopes")
