"""Shared constructors and seeded random generators for the test suite."""

from __future__ import annotations

import random
from fractions import Fraction

from grossone import GrossNumber, LinearSystem
from grossone.linsolve import determinant

gn = GrossNumber.from_rational
gt = GrossNumber.from_terms


def random_rational(rng: random.Random, lo: int = -9, hi: int = 9, max_den: int = 9) -> Fraction:
    return Fraction(rng.randint(lo, hi), rng.randint(1, max_den))


def random_power(rng: random.Random) -> GrossNumber:
    """A grosspower of nesting depth <= 1: plain rational or c*G^q (+ rational)."""
    if rng.random() < 0.5:
        return gn(random_rational(rng, -6, 6, 3))
    pairs = [(random_rational(rng, -6, 6, 3), gn(random_rational(rng, -3, 3, 2)))]
    if rng.random() < 0.3:
        pairs.append((random_rational(rng, -6, 6, 3), gn(0)))
    return gt(pairs)


def random_grossone(rng: random.Random, max_terms: int = 3) -> GrossNumber:
    """A random numeral of nesting depth <= 2 with small exact digits."""
    pairs = [
        (random_rational(rng), random_power(rng))
        for _ in range(rng.randint(0, max_terms))
    ]
    return gt(pairs)


def random_rational_powered(rng: random.Random, max_terms: int = 3) -> GrossNumber:
    """A random numeral whose grosspowers are all plain rationals.

    Long division between two such numerals always terminates: the emitted
    powers live on the grid (1/L)Z for L the lcm of the denominators, so
    they reach any rational cutoff in finitely many steps.
    """
    pairs = [
        (random_rational(rng), gn(random_rational(rng, -6, 6, 3)))
        for _ in range(rng.randint(0, max_terms))
    ]
    return gt(pairs)


def recomposition_holds(c: GrossNumber, b: GrossNumber, result) -> bool:
    return result.quotient * b + result.remainder == c


def division_cutoff_respected(b: GrossNumber, min_power, result) -> bool:
    """Inexact results must stop exactly when the next power falls below the cutoff."""
    if result.exact:
        return result.remainder == gn(0)
    next_power = result.remainder.terms[0].power - b.terms[0].power
    return next_power < min_power


# -- random linear systems -----------------------------------------------------


def _zero_leading_minors(rows) -> int:
    n = len(rows)
    return sum(
        1
        for j in range(1, n)
        if determinant([row[:j] for row in rows[:j]]) == 0
    )


def random_system_with_zero_minors(
    rng: random.Random, n: int, zero_minors: int
) -> LinearSystem:
    """A nonsingular rational system whose rows are permuted so that exactly
    ``zero_minors`` leading principal minors vanish (so elimination without
    interchange hits that many zero pivots up front)."""
    zero_minors = min(zero_minors, n - 1)
    while True:
        zero_prob = 0.1 if zero_minors == 0 else 0.35
        rows = [
            [
                Fraction(0 if rng.random() < zero_prob else rng.choice([-4, -3, -2, -1, 1, 2, 3, 4]))
                for _ in range(n)
            ]
            for _ in range(n)
        ]
        if determinant(rows) == 0:
            continue
        arranged = _arrange_rows(rng, rows, zero_minors)
        if arranged is None or _zero_leading_minors(arranged) != zero_minors:
            continue
        b = [Fraction(rng.randint(-9, 9)) for _ in range(n)]
        return LinearSystem.from_rows(arranged, b)


def _arrange_rows(rng: random.Random, rows, zero_minors: int):
    shuffled = rows[:]
    rng.shuffle(shuffled)
    if zero_minors == 0:
        return shuffled
    if zero_minors == 1:
        first = next(
            (i for i, r in enumerate(shuffled) if r[0] == 0 and r[1] != 0), None
        )
        if first is None:
            return None
        shuffled.insert(0, shuffled.pop(first))
        return shuffled
    # two leading zero minors: first row zero in columns 0 and 1, second row
    # zero in column 1.  Both minors vanish, and elimination with the first
    # pivot injected leaves a zero pivot in column 1 as well.
    first = next((i for i, r in enumerate(shuffled) if r[0] == 0 and r[1] == 0), None)
    if first is None:
        return None
    second = next((i for i, r in enumerate(shuffled) if i != first and r[1] == 0), None)
    if second is None:
        return None
    front = [shuffled[first], shuffled[second]]
    rest = [r for i, r in enumerate(shuffled) if i not in (first, second)]
    return front + rest
