"""Errors and Warnings."""


class QMockConfigError(ValueError):
    """Raised when a check or evaluation configuration is invalid."""


class ZeroLeadingTerm(ZeroDivisionError):
    """Raised when a series without a nonzero term below its order is inverted."""


class OffGrid(ValueError):
    """Raised when an exponent leaves the 1/24 grid."""


class NonIntegerExponents(ValueError):
    """Raised when an operation needs integer exponents and gets fractional ones."""


class BeyondOrder(IndexError):
    """Raised when a coefficient at or beyond the correctness horizon is requested."""


class DivergentSpec(ValueError):
    """Raised when an infinite Pochhammer product does not converge formally."""


class UnsupportedCharacteristic(ValueError):
    """Raised when the exact cone sum is asked for a characteristic it does not know."""


class InvalidCharacteristic(ValueError):
    """Raised when theta characteristic vectors violate the cone conditions."""


class RadiusTooSmall(RuntimeError):
    """Raised when a lattice sum tail estimate exceeds the requested tolerance."""


class EvaluationFailure(RuntimeError):
    """Raised when a numeric evaluation fails at a point of the upper half plane."""

    def __init__(self, message, tau=None):
        super().__init__(message)
        self.tau = tau


class UnknownIdentity(KeyError):
    """Raised when a selector matches no registered identity."""
