"""Exact local densities of Weierstrass pairs and their global products.

Local densities (with respect to the Haar measure on Z_ell x Z_ell) of the
basic congruence-defined sets:

* minimal pairs:                    1 - ell^-10
* good reduction (ell >= 5):        1 - 1/ell
* Kodaira type I_n (ell >= 5):      (ell-1)^2 / ell^(n+2)
* Kodaira type I_m, m >= n:         (ell-1)   / ell^(n+1)
* v(a) >= v1 and v(b) >= v2:        ell^-(v1+v2)

Global densities of congruence-defined families are products of local
measures over the primes carrying a condition.  When the product is
infinite (the cofinite "minimal everywhere" condition), the enclosure
multiplies exact factors up to a truncation point L and encloses the rest
with prod_{ell > L} (1 - eps_ell) >= 1 - sum_{n > L} n^-10 >= 1 - 1/(9 L^9),
by comparison with the integral of t^-10.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Sequence

from .arith import is_prime, sieve_primes
from .errors import NotPrimeError, PrimeTooSmallError, TruncationError
from .intervals import QInterval

DEFAULT_TRUNCATION = 1000


def minimal_density(ell: int) -> Fraction:
    """Local density of minimal pairs at any prime ell: 1 - ell^-10."""
    _check_prime(ell)
    q = ell**10
    return Fraction(q - 1, q)


def density_good(ell: int) -> Fraction:
    """Local density of minimal pairs with good reduction, ell >= 5."""
    _check_prime(ell, minimum=5)
    return Fraction(ell - 1, ell)


def density_In(ell: int, n: int) -> Fraction:
    """Local density of minimal pairs of Kodaira type I_n, n >= 1, ell >= 5."""
    _check_prime(ell, minimum=5)
    if n < 1:
        raise ValueError("density_In requires n >= 1")
    return Fraction((ell - 1) ** 2, ell ** (n + 2))


def density_In_at_least(ell: int, n: int) -> Fraction:
    """Local density of minimal pairs of type I_m for some m >= n >= 1."""
    _check_prime(ell, minimum=5)
    if n < 1:
        raise ValueError("density_In_at_least requires n >= 1")
    return Fraction(ell - 1, ell ** (n + 1))


def valuation_box_measure(ell: int, v1: int, v2: int) -> Fraction:
    """Measure of {v(a) >= v1, v(b) >= v2}: ell^-(v1+v2)."""
    _check_prime(ell)
    if v1 < 0 or v2 < 0:
        raise ValueError("valuations must be nonnegative")
    return Fraction(1, ell ** (v1 + v2))


def _check_prime(ell: int, minimum: int = 2) -> None:
    if not is_prime(ell):
        raise NotPrimeError(f"ell = {ell} is not prime")
    if ell < minimum:
        raise PrimeTooSmallError(f"ell = {ell} is below the supported minimum {minimum}")


@dataclass(frozen=True)
class CongruenceDatum:
    """A finite set of primes with an exact local measure at each, plus an
    optional minimality condition at every other prime.

    `measures` maps a prime ell to the exact measure of the congruence set
    imposed there.  With `minimal_elsewhere` set, every prime not listed
    carries the minimal-pair condition of measure 1 - ell^-10; otherwise
    unlisted primes are unconstrained (factor 1).
    """

    measures: Mapping[int, Fraction] = field(default_factory=dict)
    minimal_elsewhere: bool = False

    def __post_init__(self):
        clean = {}
        for ell, mu in dict(self.measures).items():
            _check_prime(ell)
            mu = Fraction(mu)
            if not 0 <= mu <= 1:
                raise ValueError(f"measure at {ell} outside [0, 1]: {mu}")
            clean[int(ell)] = mu
        object.__setattr__(self, "measures", clean)


def minimal_tail(truncation: int) -> QInterval:
    """Enclosure of prod_{ell > truncation} (1 - ell^-10) over primes."""
    if truncation < 1:
        raise TruncationError("truncation must be >= 1")
    lo = 1 - Fraction(1, 9 * truncation**9)
    if lo <= 0:
        raise TruncationError(f"tail bound vacuous at truncation {truncation}")
    return QInterval(lo, Fraction(1))


def congruence_density(datum: CongruenceDatum, truncation: int = DEFAULT_TRUNCATION) -> QInterval:
    """Enclosure of the height density of pairs satisfying the datum.

    The density equals the product of the local measures.  Explicit factors
    are exact; the cofinite minimality condition contributes the exact
    factors 1 - ell^-10 for primes ell <= truncation plus the rigorous tail
    enclosure from minimal_tail.
    """
    acc = Fraction(1)
    for mu in datum.measures.values():
        acc *= mu
    if not datum.minimal_elsewhere:
        return QInterval.point(acc)
    for ell in sieve_primes(truncation):
        if ell not in datum.measures:
            acc *= minimal_density(ell)
    return minimal_tail(truncation) * acc


def prescribed_In_density(sigma: Sequence[int], n: int, truncation: int = DEFAULT_TRUNCATION) -> QInterval:
    """Density of minimal pairs with Kodaira type I_n at every ell in sigma.

    Equals prod_{ell in sigma} (ell-1)^2/ell^(n+2) times the minimality
    product over all other primes.
    """
    measures = {ell: density_In(ell, n) for ell in sigma}
    return congruence_density(CongruenceDatum(measures, minimal_elsewhere=True), truncation)
