"""Exact arithmetic on grossone numerals.

A value is a finite sum of terms ``digit * G**power`` where ``G`` is the
infinite unit, digits are exact rationals, and each power is itself a
grossone numeral of bounded nesting depth.  Zero is the empty sum.  Term
lists are kept normalized (powers strictly decreasing, no zero digits),
so two values are equal exactly when their term tuples are identical.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cmp_to_key
from typing import Iterable, Tuple, Union

from .errors import (
    DepthExceeded,
    DivisionByZero,
    InexactInverse,
    NonTerminatingDivision,
    NotIntegerValued,
)

RationalLike = Union[int, Fraction]

DEFAULT_DEPTH_LIMIT = 2
DEFAULT_MIN_POWER = -8

# Safety net for divisors whose grosspowers have infinite parts; see divide().
DIVISION_TERM_BUDGET = 10_000


@dataclass(frozen=True)
class GrossTerm:
    """One addend ``digit * G**power`` of a numeral."""

    digit: Fraction
    power: "GrossNumber"


class GrossNumber:
    """A normalized grossone numeral: term tuple, highest grosspower first."""

    __slots__ = ("terms",)

    terms: Tuple[GrossTerm, ...]

    def __init__(self, terms: Tuple[GrossTerm, ...] = ()):
        # Callers must pass an already-normalized tuple; use from_terms for
        # arbitrary input.
        object.__setattr__(self, "terms", terms)

    @classmethod
    def from_rational(cls, value: RationalLike) -> "GrossNumber":
        value = Fraction(value)
        if value == 0:
            return ZERO
        return cls((GrossTerm(value, ZERO),))

    @classmethod
    def from_terms(
        cls,
        pairs: Iterable[Tuple[RationalLike, "GrossNumber | RationalLike"]],
        depth_limit: int = DEFAULT_DEPTH_LIMIT,
    ) -> "GrossNumber":
        """Build a numeral from (digit, grosspower) pairs.

        Digits at equal grosspowers are summed, zero digits dropped, and the
        terms sorted by descending grosspower.  Raises DepthExceeded when a
        grosspower nests more than ``depth_limit`` levels.
        """
        checked = []
        for digit, power in pairs:
            if not isinstance(power, GrossNumber):
                power = cls.from_rational(power)
            if nesting_depth(power) > depth_limit:
                raise DepthExceeded(
                    f"grosspower nests {nesting_depth(power)} levels; limit is {depth_limit}"
                )
            checked.append((Fraction(digit), power))
        return cls(_normalize(checked))

    # -- classification ------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_rational(self) -> bool:
        """True when the value is a plain rational (only grosspower 0)."""
        return all(not t.power.terms for t in self.terms)

    def sign(self) -> int:
        """-1, 0, or 1; the sign of the leading digit."""
        if not self.terms:
            return 0
        return 1 if self.terms[0].digit > 0 else -1

    # -- part extraction -------------------------------------------------

    def finite_part(self) -> Fraction:
        """The digit at grosspower 0 (0 when absent)."""
        for t in self.terms:
            if not t.power.terms:
                return t.digit
        return Fraction(0)

    def infinite_part(self) -> "GrossNumber":
        """The sub-sum of terms with positive grosspower."""
        return GrossNumber(tuple(t for t in self.terms if t.power.sign() > 0))

    def infinitesimal_part(self) -> "GrossNumber":
        """The sub-sum of terms with negative grosspower."""
        return GrossNumber(tuple(t for t in self.terms if t.power.sign() < 0))

    def is_even(self) -> bool:
        """Parity of an integer-valued numeral.

        Every term digit * G**p with integer digit and grosspower p >= 1 is
        even (G is divisible by every finite natural), so the parity is that
        of the finite part.  In particular G itself is even.
        """
        for t in self.terms:
            if t.digit.denominator != 1:
                raise NotIntegerValued(f"digit {t.digit} is not an integer")
            if not _is_nonnegative_integer(t.power):
                raise NotIntegerValued(
                    "grosspowers must be nonnegative integers for parity"
                )
        return self.finite_part().numerator % 2 == 0

    # -- arithmetic ------------------------------------------------------

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        # Both term tuples are sorted strictly decreasing, so merge linearly.
        a, b = self.terms, other.terms
        out = []
        i = j = 0
        while i < len(a) and j < len(b):
            order = compare(a[i].power, b[j].power)
            if order > 0:
                out.append(a[i])
                i += 1
            elif order < 0:
                out.append(b[j])
                j += 1
            else:
                digit = a[i].digit + b[j].digit
                if digit != 0:
                    out.append(GrossTerm(digit, a[i].power))
                i += 1
                j += 1
        out.extend(a[i:])
        out.extend(b[j:])
        return GrossNumber(tuple(out))

    __radd__ = __add__

    def __neg__(self) -> "GrossNumber":
        return GrossNumber(tuple(GrossTerm(-t.digit, t.power) for t in self.terms))

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        pairs = [
            (ta.digit * tb.digit, ta.power + tb.power)
            for ta in self.terms
            for tb in other.terms
        ]
        return GrossNumber(_normalize(pairs))

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "GrossNumber":
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent == 0:
            return ONE
        if exponent < 0:
            return self._inverse() ** (-exponent)
        result, base, e = ONE, self, exponent
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def _inverse(self) -> "GrossNumber":
        if not self.terms:
            raise DivisionByZero("cannot invert zero")
        if len(self.terms) == 1:
            t = self.terms[0]
            return GrossNumber((GrossTerm(1 / t.digit, -t.power),))
        # A multi-term numeral never has a terminating inverse (the product
        # of two multi-term numerals has distinct leading and trailing
        # grosspowers), but run the division so the contract stays visible.
        result = divide(ONE, self, GrossNumber.from_rational(DEFAULT_MIN_POWER))
        if not result.exact:
            raise InexactInverse(
                "inverse of a multi-term numeral does not terminate; "
                "use divide() with an explicit cutoff"
            )
        return result.quotient

    # -- ordering ----------------------------------------------------------

    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self.terms == other.terms

    def __ne__(self, other):
        eq = self.__eq__(other)
        return eq if eq is NotImplemented else not eq

    def __lt__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return compare(self, other) < 0

    def __le__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return compare(self, other) <= 0

    def __gt__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return compare(self, other) > 0

    def __ge__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return compare(self, other) >= 0

    def __hash__(self):
        return hash(self.terms)

    def __bool__(self):
        return bool(self.terms)

    def __str__(self) -> str:
        from .notation import print_canonical

        return print_canonical(self)

    def __repr__(self) -> str:
        return f"GrossNumber<{self}>"


@dataclass(frozen=True)
class DivisionResult:
    """Quotient and exact remainder of grossone long division."""

    quotient: GrossNumber
    remainder: GrossNumber
    exact: bool


ZERO = GrossNumber()
ONE = GrossNumber((GrossTerm(Fraction(1), ZERO),))
G = GrossNumber((GrossTerm(Fraction(1), ONE),))


def _coerce(value) -> "GrossNumber":
    if isinstance(value, GrossNumber):
        return value
    if isinstance(value, (int, Fraction)):
        return GrossNumber.from_rational(value)
    return NotImplemented


def _normalize(pairs) -> Tuple[GrossTerm, ...]:
    groups: list = []  # [power, digit-sum], insertion order
    for digit, power in pairs:
        for group in groups:
            if group[0].terms == power.terms:
                group[1] += digit
                break
        else:
            groups.append([power, Fraction(digit)])
    kept = [(p, d) for p, d in groups if d != 0]
    kept.sort(key=cmp_to_key(lambda a, b: compare(a[0], b[0])), reverse=True)
    return tuple(GrossTerm(d, p) for p, d in kept)


def compare(a, b) -> int:
    """Total order: -1, 0, or 1 as a < b, a = b, a > b.

    A nonzero numeral has the sign of its leading digit; grosspowers are
    compared recursively the same way, bottoming out at plain rationals.
    """
    a = _coerce(a)
    b = _coerce(b)
    if a.terms == b.terms:
        return 0
    if a.is_rational() and b.is_rational():
        fa, fb = a.finite_part(), b.finite_part()
        return (fa > fb) - (fa < fb)
    return (a - b).sign()


def nesting_depth(value: GrossNumber) -> int:
    """How many levels of grossone content a grosspower nests.

    Plain rationals (and zero) have depth 0; G and 34.21*G have depth 1;
    G**(16.8*G) has depth 2.
    """
    if all(not t.power.terms for t in value.terms):
        return 0
    return 1 + max(nesting_depth(t.power) for t in value.terms)


def divide(
    c,
    b,
    min_power=DEFAULT_MIN_POWER,
    max_terms: int = DIVISION_TERM_BUDGET,
) -> DivisionResult:
    """Long division ``c = quotient * b + remainder``.

    Each step divides the leading digits and subtracts the resulting
    term-multiple of ``b`` from the running partial remainder.  Emission
    stops when the remainder reaches zero (exact) or the next quotient
    grosspower would fall below ``min_power`` (inexact); either way the
    recomposition identity holds exactly.

    ``max_terms`` guards against divisors whose grosspowers carry infinite
    parts, where the cutoff can be unreachable.
    """
    c = _coerce(c)
    b = _coerce(b)
    min_power = _coerce(min_power)
    if not b.terms:
        raise DivisionByZero("division by zero")
    lead_b = b.terms[0]
    quotient_terms: list = []
    r = c
    while r.terms:
        k = r.terms[0].power - lead_b.power
        if compare(k, min_power) < 0:
            return DivisionResult(GrossNumber(tuple(quotient_terms)), r, False)
        if len(quotient_terms) >= max_terms:
            raise NonTerminatingDivision(
                f"quotient exceeded {max_terms} terms before reaching the cutoff"
            )
        digit = r.terms[0].digit / lead_b.digit
        quotient_terms.append(GrossTerm(digit, k))
        r = r - GrossNumber((GrossTerm(digit, k),)) * b
    # Emitted grosspowers strictly decrease, so the tuple is already normal.
    return DivisionResult(GrossNumber(tuple(quotient_terms)), ZERO, True)


def _is_nonnegative_integer(power: GrossNumber) -> bool:
    if power.sign() < 0:
        return False
    return all(
        t.digit.denominator == 1 and _is_nonnegative_integer(t.power)
        for t in power.terms
    )
