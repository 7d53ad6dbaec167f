"""Textual format for grossone numerals.

Grammar (whitespace between tokens is insignificant)::

    number   := [sign] term { sign term }
    term     := digit [ "*" "G" [ "^" power ] ] | "G" [ "^" power ]
    power    := integer | rational | "(" number ")"
    digit    := decimal | rational
    rational := integer "/" positive-integer
    sign     := "+" | "-"

``G`` is the infinite unit.  Decimal digits parse exactly (304.21 is
30421/100).  Canonical output prints digits as reduced rationals and
round-trips bit-exactly; decimal output is display-only.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, List, Tuple

from .core import DEFAULT_DEPTH_LIMIT, ONE, ZERO, GrossNumber
from .errors import ParseError

_PUNCT = "+-*/^()"


class _Token:
    __slots__ = ("kind", "text", "pos")

    def __init__(self, kind: str, text: str, pos: int):
        self.kind = kind
        self.text = text
        self.pos = pos


def _scan(text: str) -> List[_Token]:
    tokens = []
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            if j < n and text[j] == "." and j + 1 < n and text[j + 1].isdigit():
                j += 1
                while j < n and text[j].isdigit():
                    j += 1
                tokens.append(_Token("DEC", text[i:j], i))
            else:
                tokens.append(_Token("INT", text[i:j], i))
            i = j
            continue
        if ch == "G":
            tokens.append(_Token("G", ch, i))
            i += 1
            continue
        if ch in _PUNCT:
            tokens.append(_Token(ch, ch, i))
            i += 1
            continue
        raise ParseError(f"unexpected character {ch!r}", i)
    tokens.append(_Token("EOF", "", n))
    return tokens


class _NumeralParser:
    def __init__(self, tokens: List[_Token], depth_limit: int):
        self.tokens = tokens
        self.i = 0
        self.depth_limit = depth_limit

    def peek(self) -> _Token:
        return self.tokens[self.i]

    def advance(self) -> _Token:
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect(self, kind: str) -> _Token:
        tok = self.peek()
        if tok.kind != kind:
            raise ParseError(f"expected {kind!r}, found {tok.text or 'end of input'!r}", tok.pos)
        return self.advance()

    def parse_number(self) -> GrossNumber:
        pairs: List[Tuple[Fraction, GrossNumber]] = []
        sign = self._maybe_sign()
        pairs.append(self._term(sign))
        while self.peek().kind in ("+", "-"):
            sign = 1 if self.advance().kind == "+" else -1
            pairs.append(self._term(sign))
        return GrossNumber.from_terms(pairs, self.depth_limit)

    def _maybe_sign(self) -> int:
        if self.peek().kind in ("+", "-"):
            return 1 if self.advance().kind == "+" else -1
        return 1

    def _term(self, sign: int) -> Tuple[Fraction, GrossNumber]:
        if self.peek().kind == "G":
            self.advance()
            return (Fraction(sign), self._power_suffix())
        digit = self._digit() * sign
        if self.peek().kind == "*":
            self.advance()
            self.expect("G")
            return (digit, self._power_suffix())
        return (digit, ZERO)

    def _digit(self) -> Fraction:
        tok = self.peek()
        if tok.kind == "DEC":
            self.advance()
            return Fraction(tok.text)
        if tok.kind == "INT":
            self.advance()
            value = Fraction(int(tok.text))
            if self.peek().kind == "/":
                self.advance()
                denom = self.expect("INT")
                if int(denom.text) == 0:
                    raise ParseError("denominator must be a positive integer", denom.pos)
                value /= int(denom.text)
            return value
        raise ParseError(f"digit expected, found {tok.text or 'end of input'!r}", tok.pos)

    def _power_suffix(self) -> GrossNumber:
        if self.peek().kind != "^":
            return ONE
        self.advance()
        return self._power()

    def _power(self) -> GrossNumber:
        tok = self.peek()
        if tok.kind == "(":
            self.advance()
            inner = self.parse_number()
            self.expect(")")
            return inner
        sign = self._maybe_sign()
        tok = self.peek()
        if tok.kind != "INT":
            raise ParseError(
                f"grosspower must be an integer, rational, or parenthesized numeral, "
                f"found {tok.text or 'end of input'!r}",
                tok.pos,
            )
        self.advance()
        value = Fraction(int(tok.text))
        if self.peek().kind == "/":
            self.advance()
            denom = self.expect("INT")
            if int(denom.text) == 0:
                raise ParseError("denominator must be a positive integer", denom.pos)
            value /= int(denom.text)
        return GrossNumber.from_rational(value * sign)


def parse(text: str, depth_limit: int = DEFAULT_DEPTH_LIMIT) -> GrossNumber:
    """Parse numeral text to an exact, normalized value."""
    parser = _NumeralParser(_scan(text), depth_limit)
    value = parser.parse_number()
    trailing = parser.peek()
    if trailing.kind != "EOF":
        raise ParseError(f"unexpected trailing input {trailing.text!r}", trailing.pos)
    return value


def parse_rational(text: str) -> Fraction:
    """Parse a signed rational or decimal literal ("-4", "1/3", "2.5") exactly."""
    tokens = _scan(text)
    parser = _NumeralParser(tokens, DEFAULT_DEPTH_LIMIT)
    sign = parser._maybe_sign()
    value = parser._digit() * sign
    trailing = parser.peek()
    if trailing.kind != "EOF":
        raise ParseError(f"unexpected trailing input {trailing.text!r}", trailing.pos)
    return value


# -- printing ----------------------------------------------------------------


def print_canonical(value: GrossNumber) -> str:
    """Deterministic text form that parses back to an equal value.

    Digits print as reduced rationals; grosspower 0 as a bare digit,
    grosspower 1 as ``G``; grosspowers with grossone content are
    parenthesized.  The unit terms +-1*G print as bare ``G``.
    """
    return _render(value, str)


def print_decimal(value: GrossNumber, digits: int = 6) -> str:
    """Display form with digits as decimals rounded to ``digits`` places.

    Exact when a digit's denominator divides a power of 10 within range,
    otherwise rounded half-even and prefixed with ``~``.  Does not
    round-trip in general.
    """
    if digits < 1:
        raise ValueError("digits must be >= 1")
    return _render(value, lambda q: _decimal_string(q, digits))


def _render(value: GrossNumber, fmt: Callable[[Fraction], str]) -> str:
    if not value.terms:
        return "0"
    out = []
    for i, term in enumerate(value.terms):
        if i == 0:
            prefix = "-" if term.digit < 0 else ""
        else:
            prefix = " - " if term.digit < 0 else " + "
        out.append(prefix + _term_string(abs(term.digit), term.power, fmt))
    return "".join(out)


def _term_string(magnitude: Fraction, power: GrossNumber, fmt) -> str:
    if not power.terms:
        return fmt(magnitude)
    if power == ONE:
        return "G" if magnitude == 1 else f"{fmt(magnitude)}*G"
    return f"{fmt(magnitude)}*G^{_power_string(power, fmt)}"


def _power_string(power: GrossNumber, fmt) -> str:
    if power.is_rational():
        return fmt(power.finite_part())
    return f"({_render(power, fmt)})"


def _decimal_string(q: Fraction, digits: int) -> str:
    scale = 10**digits
    scaled = q * scale
    exact = scaled.denominator == 1
    units = scaled.numerator if exact else round(scaled)
    sign = "-" if units < 0 else ""
    whole, frac = divmod(abs(units), scale)
    body = f"{whole}.{frac:0{digits}d}"
    if exact:
        body = body.rstrip("0").rstrip(".")
    return f"{sign}{body}" if exact else f"~{sign}{body}"
