"""Exception taxonomy shared by all modules.

Each error maps to a stable CLI exit code (see cli.EXIT_CODES).
"""


class LorinvError(Exception):
    """Base class for all toolkit errors."""


class ParseError(LorinvError):
    """Malformed JSON input or a value outside the documented schema."""


class NotAUnit(LorinvError):
    """Inversion requested for a boost scalar that is not a single term."""


class EvaluationOverflow(LorinvError):
    """Numeric evaluation of an exact scalar overflowed to infinity."""


class ShapeError(LorinvError):
    """Dimension mismatch between polynomials, matrices or maps."""


class NotLorentz(LorinvError):
    """Matrix fails A^T J A = J; carries the first offending entry."""

    def __init__(self, row: int, col: int, value):
        self.row = row
        self.col = col
        self.value = value
        super().__init__(f"A^T J A - J is nonzero at ({row}, {col}): {value}")


class NotInvolutive(LorinvError):
    """Normal form requested for a matrix with A^2 != I."""


class CentralInvolution(LorinvError):
    """A = +-I has no reflection normal form."""


class HalfBoostNotRepresentable(LorinvError):
    """The involution's half-parameter is not exact in the boost unit."""


class NotBlock(LorinvError):
    """Matrix is not in literal rotation (+) boost block form."""


class CapExceeded(LorinvError):
    """Group closure exceeded the element cap (non-finite group)."""


class UnsupportedGroup(LorinvError):
    """Generator combination outside the supported exact classes."""


class ZeroBoost(LorinvError):
    """Boost block is the identity; the finite path must be used instead."""


class ZeroBeta(LorinvError):
    """Numeric orbit operation called with beta = 0."""


class BoundExceeded(LorinvError):
    """Membership enumeration exceeded the candidate-product cap."""


class BandLimitTooLarge(LorinvError):
    """Fourier band limit exceeds the configured per-axis cap."""
