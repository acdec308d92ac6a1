"""Point counting and classification of short Weierstrass curves over F_p.

A residue pair (a, b) mod p defines y^2 = x^3 + a x + b.  Nonsingular pairs
are classified by the point count N = #E(F_p):

* ``ORDINARY``       N not congruent to 0 or 1 mod p (good ordinary, and p
  is not anomalous for the curve);
* ``ANOMALOUS``      N == 0 mod p;
* ``SUPERSINGULAR``  N == 1 mod p, i.e. the trace of Frobenius vanishes mod
  p, which for p >= 5 forces it to vanish exactly.

Counting is by character sums: N = p + 1 + sum_x chi(x^3 + a x + b) with chi
the quadratic character (chi(0) = 0).  One residue table per p, O(p) per
curve.  The exhaustive per-p census is vectorized row by row and costs
O(p^3) per prime, which covers the tabulated range p < 150 in well under a
second.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .arith import is_prime
from .errors import (
    NotPrimeError,
    PrimeTooLargeError,
    PrimeTooSmallError,
    SingularCurveError,
)

MAX_FIELD_PRIME = 1 << 20
# class_code_table / point_count_table materialize p^2 entries
MAX_TABLE_PRIME = 1024


class PointClass(Enum):
    SINGULAR = "singular"
    ORDINARY = "ordinary"
    ANOMALOUS = "anomalous"
    SUPERSINGULAR = "supersingular"


# integer codes used in the vectorized tables
_CODE_SINGULAR, _CODE_ORDINARY, _CODE_ANOMALOUS, _CODE_SUPERSINGULAR = 0, 1, 2, 3
_CLASS_BY_CODE = {
    _CODE_SINGULAR: PointClass.SINGULAR,
    _CODE_ORDINARY: PointClass.ORDINARY,
    _CODE_ANOMALOUS: PointClass.ANOMALOUS,
    _CODE_SUPERSINGULAR: PointClass.SUPERSINGULAR,
}


@dataclass(frozen=True)
class ResidueClass:
    kind: PointClass
    point_count: int | None  # None exactly when the pair is singular


@dataclass(frozen=True)
class ClassCounts:
    """Exhaustive census of the p^2 residue pairs mod p."""

    p: int
    ordinary: int
    anomalous: int
    supersingular: int
    singular: int

    @property
    def total(self) -> int:
        return self.ordinary + self.anomalous + self.supersingular + self.singular

    @property
    def ordinary_density(self) -> Fraction:
        return Fraction(self.ordinary, self.p * self.p)

    @property
    def anomalous_density(self) -> Fraction:
        return Fraction(self.anomalous, self.p * self.p)

    def to_json(self) -> dict:
        return {
            "p": self.p,
            "n_ordinary": self.ordinary,
            "n_anomalous": self.anomalous,
            "n_supersingular": self.supersingular,
            "n_singular": self.singular,
            "ordinary_density": float(self.ordinary_density),
            "anomalous_density": float(self.anomalous_density),
        }


def _validate_odd_prime(p: int) -> None:
    if p < 3 or p % 2 == 0 or not is_prime(p):
        raise NotPrimeError(f"p = {p} is not an odd prime")
    if p >= MAX_FIELD_PRIME:
        raise PrimeTooLargeError(f"p = {p} exceeds the supported cap 2^20")


@lru_cache(maxsize=64)
def chi_table(p: int) -> tuple[int, ...]:
    """Quadratic character values (chi(t) for t in [0, p)), chi(0) = 0."""
    _validate_odd_prime(p)
    chi = [-1] * p
    chi[0] = 0
    for x in range(1, (p - 1) // 2 + 1):
        chi[x * x % p] = 1
    return tuple(chi)


def discriminant_mod(p: int, a: int, b: int) -> int:
    """(4 a^3 + 27 b^2) mod p."""
    return (4 * a * a * a + 27 * b * b) % p


def count_points(p: int, a: int, b: int) -> int:
    """#E_(a,b)(F_p) for a nonsingular residue pair.

    Raises SingularCurveError when 4a^3 + 27b^2 == 0 mod p.  The result is
    always in the Hasse interval [p + 1 - 2 sqrt(p), p + 1 + 2 sqrt(p)].
    """
    _validate_odd_prime(p)
    if discriminant_mod(p, a, b) == 0:
        raise SingularCurveError(f"discriminant vanishes mod {p} for ({a}, {b})")
    chi = chi_table(p)
    a %= p
    b %= p
    total = 0
    for x in range(p):
        total += chi[(x * x * x + a * x + b) % p]
    return p + 1 + total


def classify_residue(p: int, a: int, b: int) -> ResidueClass:
    """Classify one residue pair by discriminant and point count mod p."""
    _validate_odd_prime(p)
    if discriminant_mod(p, a, b) == 0:
        return ResidueClass(PointClass.SINGULAR, None)
    n = count_points(p, a, b)
    r = n % p
    if r == 0:
        return ResidueClass(PointClass.ANOMALOUS, n)
    if r == 1:
        return ResidueClass(PointClass.SUPERSINGULAR, n)
    return ResidueClass(PointClass.ORDINARY, n)


def _field_arrays(p: int):
    """Shared per-p numpy data: x, chi(x) and x^3 mod p."""
    xs = np.arange(p, dtype=np.int64)
    chi = np.full(p, -1, dtype=np.int8)
    chi[0] = 0
    chi[(xs[1:] * xs[1:]) % p] = 1
    cubes = (xs * xs * xs) % p
    return xs, chi, cubes


def _row_point_counts(p, xs, chi, cubes, a, b_values):
    """Point counts for (a, b) with b ranging over b_values (vectorized)."""
    t = (cubes + a * xs) % p
    idx = (t[None, :] + b_values[:, None]) % p
    sums = chi[idx].sum(axis=1, dtype=np.int64)
    return p + 1 + sums


def _validate_census_prime(p: int) -> None:
    _validate_odd_prime(p)
    if p < 5:
        raise PrimeTooSmallError("the census requires p >= 5")


@lru_cache(maxsize=128)
def residue_class_counts(p: int) -> ClassCounts:
    """Classify all p^2 residue pairs mod p and return exact counts.

    The densities ordinary_density and anomalous_density are the exact
    rationals count / p^2.
    """
    _validate_census_prime(p)
    xs, chi, cubes = _field_arrays(p)
    bs = np.arange(p, dtype=np.int64)
    chunk = max(1, (1 << 22) // p)
    n_ord = n_anom = n_ss = n_sing = 0
    for a in range(p):
        delta = (4 * a * a * a + 27 * bs * bs) % p
        for lo in range(0, p, chunk):
            b_block = bs[lo: lo + chunk]
            counts = _row_point_counts(p, xs, chi, cubes, a, b_block)
            nonsing = delta[lo: lo + chunk] != 0
            r = counts % p
            n_sing += int((~nonsing).sum())
            n_anom += int((nonsing & (r == 0)).sum())
            n_ss += int((nonsing & (r == 1)).sum())
            n_ord += int((nonsing & (r != 0) & (r != 1)).sum())
    return ClassCounts(p, n_ord, n_anom, n_ss, n_sing)


@lru_cache(maxsize=32)
def class_code_table(p: int) -> bytes:
    """Codes for all residue pairs, indexed by a*p + b.

    0 = singular, 1 = ordinary, 2 = anomalous, 3 = supersingular.  Returned
    as bytes for O(1) scalar lookups in enumeration loops.
    """
    _validate_census_prime(p)
    if p > MAX_TABLE_PRIME:
        raise PrimeTooLargeError(f"class table limited to p <= {MAX_TABLE_PRIME}")
    xs, chi, cubes = _field_arrays(p)
    bs = np.arange(p, dtype=np.int64)
    out = np.empty(p * p, dtype=np.uint8)
    for a in range(p):
        counts = _row_point_counts(p, xs, chi, cubes, a, bs)
        delta = (4 * a * a * a + 27 * bs * bs) % p
        r = counts % p
        row = np.where(r == 0, _CODE_ANOMALOUS,
                       np.where(r == 1, _CODE_SUPERSINGULAR, _CODE_ORDINARY))
        row = np.where(delta == 0, _CODE_SINGULAR, row).astype(np.uint8)
        out[a * p: (a + 1) * p] = row
    return out.tobytes()


@lru_cache(maxsize=32)
def point_count_table(p: int) -> tuple[int, ...]:
    """#E(F_p) for every residue pair, indexed by a*p + b; -1 for singular."""
    _validate_census_prime(p)
    if p > MAX_TABLE_PRIME:
        raise PrimeTooLargeError(f"count table limited to p <= {MAX_TABLE_PRIME}")
    xs, chi, cubes = _field_arrays(p)
    bs = np.arange(p, dtype=np.int64)
    out = np.empty(p * p, dtype=np.int64)
    for a in range(p):
        counts = _row_point_counts(p, xs, chi, cubes, a, bs)
        delta = (4 * a * a * a + 27 * bs * bs) % p
        out[a * p: (a + 1) * p] = np.where(delta == 0, -1, counts)
    return tuple(int(v) for v in out)
