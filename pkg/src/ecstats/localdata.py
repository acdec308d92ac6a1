"""Local invariants of integral short Weierstrass pairs y^2 = x^3 + a x + b.

Covers the naive height, ell-adic valuations, minimality, the Kodaira
classification at primes ell >= 5, the split/nonsplit dichotomy for
multiplicative reduction, Tamagawa p-parts, and the combined count of
"p divides a Tamagawa number" primes plus the anomalous flag at p.

Primes 2 and 3 are deliberately out of scope: classifying bad reduction
there would require the full Tate algorithm, and every consumer in this
package filters such curves into a separate bucket instead.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Sequence

from . import ffcurve
from .arith import integer_nth_root, is_prime, sieve_primes
from .errors import (
    BadReductionError,
    NotMinimalError,
    NotMultiplicativeError,
    NotPrimeError,
    PrimeTooSmallError,
    SingularCurveError,
    SmallBadPrimeError,
)


def discriminant(a: int, b: int) -> int:
    return 4 * a * a * a + 27 * b * b


def naive_height(a: int, b: int) -> int:
    """max(4|a|^3, 27 b^2)."""
    return max(4 * abs(a) ** 3, 27 * b * b)


def valuation(n: int, ell: int) -> int | float:
    """Largest k with ell^k | n; math.inf for n == 0."""
    if n == 0:
        return math.inf
    k = 0
    while n % ell == 0:
        n //= ell
        k += 1
    return k


def is_minimal_at(a: int, b: int, ell: int) -> bool:
    """Minimal at ell unless v(a) >= 4 and v(b) >= 6."""
    return not (valuation(a, ell) >= 4 and valuation(b, ell) >= 6)


def _minimality_candidates(a: int, b: int) -> Sequence[int]:
    # non-minimality needs ell^4 | a (so ell <= |a|^(1/4)), except a == 0
    # where it needs ell^6 | b
    if a != 0:
        bound = integer_nth_root(abs(a), 4)
    else:
        bound = integer_nth_root(abs(b), 6)
    return sieve_primes(bound)


def is_globally_minimal(a: int, b: int) -> bool:
    """True when (a, b) is minimal at every prime.  Requires delta != 0."""
    if discriminant(a, b) == 0:
        raise SingularCurveError(f"({a}, {b}) is singular")
    return all(is_minimal_at(a, b, ell) for ell in _minimality_candidates(a, b))


class ReductionKind(Enum):
    GOOD = "good"
    MULTIPLICATIVE = "multiplicative"
    ADDITIVE = "additive"


@dataclass(frozen=True)
class KodairaType:
    kind: ReductionKind
    ell: int
    n: int | None = None  # v_ell(delta), set only for multiplicative types

    @property
    def is_multiplicative(self) -> bool:
        return self.kind is ReductionKind.MULTIPLICATIVE

    def __str__(self) -> str:
        if self.kind is ReductionKind.GOOD:
            return "I0"
        if self.kind is ReductionKind.MULTIPLICATIVE:
            return f"I{self.n}"
        return "additive"


def _validate_local_prime(ell: int) -> None:
    if not is_prime(ell):
        raise NotPrimeError(f"ell = {ell} is not prime")
    if ell < 5:
        raise PrimeTooSmallError(f"ell = {ell}: local classification needs ell >= 5")


def kodaira_type(a: int, b: int, ell: int) -> KodairaType:
    """Kodaira classification at a prime ell >= 5 for a minimal pair.

    For minimal (a, b) with delta != 0 and ell >= 5 the reduction is
    multiplicative of type I_n, n = v_ell(delta) >= 1, exactly when
    (a, b) is not (0, 0) mod ell; it is good when v_ell(delta) = 0 and
    additive when (a, b) == (0, 0) mod ell.
    """
    _validate_local_prime(ell)
    delta = discriminant(a, b)
    if delta == 0:
        raise SingularCurveError(f"({a}, {b}) is singular")
    if not is_minimal_at(a, b, ell):
        raise NotMinimalError(f"({a}, {b}) is not minimal at {ell}")
    v = valuation(delta, ell)
    if v == 0:
        return KodairaType(ReductionKind.GOOD, ell)
    if a % ell == 0 and b % ell == 0:
        return KodairaType(ReductionKind.ADDITIVE, ell)
    return KodairaType(ReductionKind.MULTIPLICATIVE, ell, int(v))


def _split_from_residues(a_mod: int, b_mod: int, ell: int) -> bool:
    # node x-coordinate: the double root e = -3b / 2a of x^3 + ax + b mod ell;
    # a_mod == 0 cannot occur for a multiplicative pair (it would force b == 0).
    e = (-3 * b_mod) * pow(2 * a_mod, ell - 2, ell) % ell
    s = 3 * e % ell
    return s != 0 and pow(s, (ell - 1) // 2, ell) == 1


def is_split_multiplicative(a: int, b: int, ell: int) -> bool:
    """Whether the node's tangent slopes are rational over F_ell.

    The slopes are +-sqrt(3e) for the double root e, so the reduction is
    split exactly when 3e is a nonzero quadratic residue mod ell.
    Raises NotMultiplicativeError unless the reduction type is I_n, n >= 1.
    """
    kt = kodaira_type(a, b, ell)
    if not kt.is_multiplicative:
        raise NotMultiplicativeError(f"type at {ell} is {kt}, not I_n with n >= 1")
    return _split_from_residues(a % ell, b % ell, ell)


def tamagawa_p_part(a: int, b: int, ell: int, p: int) -> int:
    """p-part of the Tamagawa number c_ell, for distinct primes ell, p >= 5.

    Split I_n has c_ell = n, so the p-part is p^(v_p(n)); nonsplit I_n has
    c_ell in {1, 2} and additive types have c_ell <= 4, both coprime to
    p >= 5; good reduction gives 1.
    """
    if not is_prime(p) or p < 5:
        raise PrimeTooSmallError(f"p = {p} must be a prime >= 5")
    if ell == p:
        raise ValueError("tamagawa_p_part requires ell != p")
    kt = kodaira_type(a, b, ell)
    if not kt.is_multiplicative:
        return 1
    if not _split_from_residues(a % ell, b % ell, ell):
        return 1
    return p ** int(valuation(kt.n, p))


@dataclass(frozen=True)
class TamagawaAnomalyCount:
    """Count of primes where p divides the Tamagawa number, plus the
    anomalous flag at p; total is their sum."""

    tamagawa_primes: int
    anomalous_flag: int
    total: int


def _check_frak_preconditions(a: int, b: int, p: int) -> int:
    delta = discriminant(a, b)
    if delta == 0:
        raise SingularCurveError(f"({a}, {b}) is singular")
    if delta % 2 == 0 or delta % 3 == 0:
        raise SmallBadPrimeError("bad reduction at 2 or 3 is out of scope")
    if delta % p == 0:
        raise BadReductionError(f"p = {p} divides the discriminant")
    if not is_globally_minimal(a, b):
        raise NotMinimalError(f"({a}, {b}) is not globally minimal")
    return delta


def tamagawa_anomaly_count(a: int, b: int, p: int, bad_primes: Sequence[int]) -> TamagawaAnomalyCount:
    """The growth invariant at p: #{ell != p : p | c_ell} + [p | #E(F_p)].

    `bad_primes` must be the primes dividing the discriminant (all >= 5;
    pairs with bad reduction at 2 or 3 are rejected).  Requires good
    reduction at p and a globally minimal pair.
    """
    if not is_prime(p) or p < 5:
        raise PrimeTooSmallError(f"p = {p} must be a prime >= 5")
    _check_frak_preconditions(a, b, p)
    n_tam = 0
    for ell in bad_primes:
        if ell == p:
            continue
        if ell < 5:
            raise SmallBadPrimeError(f"bad prime {ell} < 5 is out of scope")
        if tamagawa_p_part(a, b, ell, p) > 1:
            n_tam += 1
    n = ffcurve.count_points(p, a % p, b % p)
    flag = 1 if n % p == 0 else 0
    return TamagawaAnomalyCount(n_tam, flag, n_tam + flag)


def euler_term_valuation(a: int, b: int, p: int, bad_primes: Sequence[int]) -> int:
    """v_p of (prod_ell c_ell^(p)) * alpha_p^2, the computable Euler-term part.

    alpha_p = #E(F_p)[p] is p when p is anomalous and 1 otherwise (the
    p-torsion of the reduction is at most one copy of Z/p for p >= 5), so
    its square contributes twice the anomalous flag.
    """
    if not is_prime(p) or p < 5:
        raise PrimeTooSmallError(f"p = {p} must be a prime >= 5")
    _check_frak_preconditions(a, b, p)
    v = 0
    for ell in bad_primes:
        if ell == p:
            continue
        if ell < 5:
            raise SmallBadPrimeError(f"bad prime {ell} < 5 is out of scope")
        v += int(valuation(tamagawa_p_part(a, b, ell, p), p))
    n = ffcurve.count_points(p, a % p, b % p)
    if n % p == 0:
        v += 2
    return v
