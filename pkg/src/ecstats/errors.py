"""Exception types shared across the package.

Everything derives from ValueError so callers can catch broadly; the
specific classes exist because several operations need to distinguish
"wrong kind of input" from "input outside the supported range".
"""


class SingularCurveError(ValueError):
    """The pair (a, b) has vanishing discriminant where a curve is required."""


class NotMinimalError(ValueError):
    """The Weierstrass pair is not minimal at the prime in question."""


class NotPrimeError(ValueError):
    """A prime was required."""


class PrimeTooSmallError(ValueError):
    """The prime is below the supported range (typically ell in {2, 3})."""


class PrimeTooLargeError(ValueError):
    """The prime exceeds the supported range."""


class NotMultiplicativeError(ValueError):
    """Split/nonsplit is only defined for multiplicative reduction."""


class BadReductionError(ValueError):
    """Good reduction at p was required but p divides the discriminant."""


class SmallBadPrimeError(ValueError):
    """2 or 3 divides the discriminant; local data at 2 and 3 is out of scope."""


class ExcludedPrimeError(ValueError):
    """The prime is excluded from the index set of this sum or product."""


class TruncationError(ValueError):
    """The truncation point is too small for a meaningful tail bound."""
