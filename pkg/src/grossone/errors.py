"""Exception types shared across the package."""


class GrossoneError(Exception):
    """Base class for all errors raised by this package."""


class DepthExceeded(GrossoneError):
    """A grosspower nests deeper than the configured depth limit."""


class DivisionByZero(GrossoneError, ZeroDivisionError):
    """Division (or inversion) of a numeral by exact zero."""


class NonTerminatingDivision(GrossoneError):
    """Long division ran past its term budget without reaching the cutoff.

    Only possible when grosspowers with infinite parts keep every emitted
    quotient power above ``min_power``; rational grosspowers always reach
    the cutoff.
    """


class InexactInverse(GrossoneError):
    """Negative power of a multi-term numeral whose inverse does not terminate."""


class NotIntegerValued(GrossoneError):
    """Parity was requested for a numeral that is not integer-valued."""


class ParseError(GrossoneError):
    """Malformed numeral or expression text; carries the offset of the fault."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class SingularSystem(GrossoneError):
    """The linear system has no finite solution."""


class SchemaError(GrossoneError):
    """An input file does not match the expected JSON shape."""


class InexactProbability(GrossoneError):
    """favorable/total did not divide exactly within the cutoff."""
