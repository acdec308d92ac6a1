"""Exact rational intervals.

Endpoints are `fractions.Fraction`, so ordinary arithmetic on intervals is
exact; "rounding" only ever happens where an infinite sum or product is
replaced by a finite part plus a one-sided tail bound, and those bounds are
themselves exact rationals.  An interval certifies: the target real number
lies in [lo, hi].
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

Rat = Union[Fraction, int]


@dataclass(frozen=True)
class QInterval:
    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        object.__setattr__(self, "lo", Fraction(self.lo))
        object.__setattr__(self, "hi", Fraction(self.hi))
        if self.lo > self.hi:
            raise ValueError(f"inverted interval: {self.lo} > {self.hi}")

    @classmethod
    def point(cls, value: Rat) -> "QInterval":
        q = Fraction(value)
        return cls(q, q)

    def __add__(self, other: "QInterval | Rat") -> "QInterval":
        if isinstance(other, QInterval):
            return QInterval(self.lo + other.lo, self.hi + other.hi)
        q = Fraction(other)
        return QInterval(self.lo + q, self.hi + q)

    __radd__ = __add__

    def __mul__(self, other: "QInterval | Rat") -> "QInterval":
        if not isinstance(other, QInterval):
            other = QInterval.point(other)
        products = (
            self.lo * other.lo,
            self.lo * other.hi,
            self.hi * other.lo,
            self.hi * other.hi,
        )
        return QInterval(min(products), max(products))

    __rmul__ = __mul__

    def reciprocal(self) -> "QInterval":
        if self.lo <= 0 <= self.hi:
            raise ZeroDivisionError("interval straddles 0")
        return QInterval(1 / self.hi, 1 / self.lo)

    def __truediv__(self, other: "QInterval | Rat") -> "QInterval":
        if not isinstance(other, QInterval):
            other = QInterval.point(other)
        return self * other.reciprocal()

    def contains(self, value: Rat) -> bool:
        q = Fraction(value)
        return self.lo <= q <= self.hi

    def encloses(self, other: "QInterval") -> bool:
        """True when `other` is nested inside self."""
        return self.lo <= other.lo and other.hi <= self.hi

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def midpoint(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def outward_rounded(self, significant: int = 40) -> "QInterval":
        """A slightly wider interval with short endpoints: lo rounded down
        and hi rounded up to `significant` digits, so every certification
        the interval carries survives serialization."""
        return QInterval(round_fraction(self.lo, significant, up=False),
                         round_fraction(self.hi, significant, up=True))

    def to_json(self, significant: int = 40) -> dict:
        rounded = self.outward_rounded(significant)
        return {
            "lo": str(rounded.lo),
            "hi": str(rounded.hi),
            "lo_decimal": float(rounded.lo),
            "hi_decimal": float(rounded.hi),
        }

    def __repr__(self) -> str:
        return f"QInterval[{float(self.lo)!r}, {float(self.hi)!r}]"


def product(intervals) -> QInterval:
    """Product of finitely many intervals (exact)."""
    acc = QInterval.point(1)
    for iv in intervals:
        acc = acc * iv
    return acc


def round_fraction(q: Fraction, significant: int, up: bool) -> Fraction:
    """q rounded to `significant` digits, toward +inf (up) or -inf (down)."""
    if significant < 1:
        raise ValueError("significant must be >= 1")
    if q == 0:
        return Fraction(0)
    a, den = abs(q.numerator), q.denominator
    # e = floor(log10(|q|)), exact via at most two corrections
    e = len(str(a)) - len(str(den))
    while e > -(len(str(den)) + 2) and 10**max(e, 0) * den > a * 10**max(-e, 0):
        e -= 1
    while 10 ** max(e + 1, 0) * den <= a * 10 ** max(-(e + 1), 0):
        e += 1
    shift = significant - 1 - e
    scaled = q * Fraction(10) ** shift
    units = math.ceil(scaled) if up else math.floor(scaled)
    return Fraction(units) / Fraction(10) ** shift


def fraction_to_decimal(q: Fraction, places: int = 15) -> str:
    """Decimal string of q rounded half-up to `places`, computed in integers."""
    sign = "-" if q < 0 else ""
    q = abs(q)
    scaled = q * 10**places
    units = scaled.numerator // scaled.denominator
    if 2 * (scaled.numerator % scaled.denominator) >= scaled.denominator:
        units += 1
    digits = str(units).rjust(places + 1, "0")
    return f"{sign}{digits[:-places]}.{digits[-places:]}" if places else f"{sign}{digits}"
