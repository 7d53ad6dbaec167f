"""Point counting, infinitesimal probabilities, and mixed-dimension measures.

At resolution r a unit interval holds G**r points, so an event picking m
of them has the strictly positive infinitesimal probability m * G**-r,
and a piece of a figure that is flat in ``codim`` directions contributes
an infinitesimal slab volume instead of the classical zero.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .core import DEFAULT_MIN_POWER, G, ZERO, GrossNumber, divide
from .errors import InexactProbability


def points_in_unit_interval(resolution: int) -> GrossNumber:
    """Number of points in [0, 1) when coordinates are i * G**-resolution."""
    if resolution < 1:
        raise ValueError("resolution must be >= 1")
    return G**resolution


def points_on_line(resolution: int) -> GrossNumber:
    """Number of points on the whole line at the given resolution.

    Each of the G unit intervals per ray holds G**resolution points.
    """
    if resolution < 1:
        raise ValueError("resolution must be >= 1")
    return 2 * G ** (resolution + 1)


def event_probability(
    favorable: GrossNumber,
    total: GrossNumber,
    min_power=DEFAULT_MIN_POWER,
) -> GrossNumber:
    """favorable / total over equiprobable elementary events, exactly.

    Zero favorable count gives exactly 0 (the impossible event); a finite
    favorable count out of an infinite total gives an infinitesimal that
    still compares greater than 0.
    """
    if total.sign() <= 0:
        raise ValueError("total event count must be positive")
    if favorable.sign() < 0 or favorable > total:
        raise ValueError("favorable count must satisfy 0 <= favorable <= total")
    if favorable.is_zero():
        return ZERO
    result = divide(favorable, total, min_power)
    if not result.exact:
        raise InexactProbability(
            "favorable/total does not divide exactly within the cutoff"
        )
    return result.quotient


@dataclass(frozen=True)
class MeasurePiece:
    """A part of a figure that is flat in ``codim`` of its dimensions.

    ``extent`` is the classical measure along the full dimensions; each
    missing dimension is ``width_points`` points wide at ``resolution``
    points per unit.
    """

    extent: Fraction
    codim: int
    width_points: int = 1
    resolution: int = 1

    def __post_init__(self):
        object.__setattr__(self, "extent", Fraction(self.extent))
        if self.extent < 0:
            raise ValueError("extent must be nonnegative")
        if self.codim < 0:
            raise ValueError("codim must be nonnegative")
        if self.width_points < 1:
            raise ValueError("width_points must be >= 1")
        if self.resolution < 1:
            raise ValueError("resolution must be >= 1")


def piece_measure(piece: MeasurePiece) -> GrossNumber:
    """extent * (width_points * G**-resolution) ** codim."""
    width = piece.width_points * G**-piece.resolution
    return GrossNumber.from_rational(piece.extent) * width**piece.codim


def total_measure(pieces: Iterable[MeasurePiece]) -> GrossNumber:
    return sum((piece_measure(p) for p in pieces), ZERO)
