"""Exception and warning types used across the package."""

from __future__ import annotations


class OpzetaError(Exception):
    """Base class for all package-specific errors."""


# --- special functions -------------------------------------------------------

class PoleAtOne(OpzetaError):
    """Evaluation requested at (or within tolerance of) the simple pole s = 1."""


class ContourClipped(OpzetaError):
    """A Hankel contour radius would enclose poles of the integration kernel."""


class PrecisionLoss(UserWarning):
    """Result returned outside the validated accuracy domain.

    A warning rather than an exception: the best-effort value is still
    returned, with an honest `abs_error_estimate`.
    """


# --- series ------------------------------------------------------------------

class Diverges(OpzetaError):
    """Raw truncation requested for a series that does not converge."""


class EndpointConditional(OpzetaError):
    """Conditionally convergent series evaluated at an endpoint where the
    partial-sum bound degenerates."""


class SingularAtEndpoint(OpzetaError):
    """Closed form singular at the requested point (x = 0 mod 2*pi)."""


class OutsideDomain(OpzetaError):
    """Point lies outside the validity domain of the requested closed form."""


class NoClosedForm(OpzetaError):
    """No registry closed form and the extrapolation fallback did not converge."""


class NotConverged(OpzetaError):
    """Successive extrapolants disagree beyond the convergence tolerance."""


# --- operator engine ---------------------------------------------------------

class PoleHit(OpzetaError):
    """An operator argument landed on the pole (argument 1 for the zeta kind).

    `degree` is the monomial degree responsible.
    """

    def __init__(self, degree: int, message: str | None = None):
        self.degree = degree
        super().__init__(message or f"operator argument hits the pole at monomial degree {degree}")


class NonIntegerFrequency(OpzetaError):
    """Dilation scale does not map every trig frequency (or exact coefficient)
    to an admissible exact value."""


class UnsupportedExpression(OpzetaError):
    """Input outside the engine's domain (monomials, singular powers, and
    integer-frequency trig atoms with integer shifts)."""


class MultipleAnomalies(OpzetaError):
    """More than one parity-violating term found; indicates a registry bug."""


class InconsistentSystem(OpzetaError):
    """Coefficient matching produced contradictory values for one unknown."""


# --- divisibility matrix -----------------------------------------------------

class DimensionMismatch(OpzetaError):
    """Vector length does not match the matrix size."""
