"""Exception and warning types shared across the package."""

from __future__ import annotations


class DiracLadderError(Exception):
    """Base class for all package errors."""


class InvalidQuantumNumber(DiracLadderError):
    """j is not a positive half-odd-integer, epsilon is not +-1, or k is not a
    nonnegative integer."""


class Supercritical(DiracLadderError):
    """Coupling strength zeta >= j + 1/2: the channel exponent s becomes
    imaginary and no bound-state tower exists."""


class UnphysicalState(DiracLadderError):
    """Requested state is excluded by the first-order system itself
    (the k = 0, epsilon = +1 combination)."""


class DomainError(DiracLadderError):
    """Arguments are outside the mathematical domain of an operation
    (nonpositive radius, energy outside (0, m), mismatched channels, ...)."""


class WrongBranch(DiracLadderError):
    """A ladder function from the wrong spectral branch was supplied."""


class NotAnEigenfunction(DiracLadderError):
    """Casimir application found a residual too large for the input to be a
    member of the ladder family."""


class PrecisionLimit(DiracLadderError):
    """The requested computation would lose all significance in float64.
    Re-run with extended-precision inputs."""


class QuadratureFailure(DiracLadderError):
    """Gauss-Laguerre node doubling failed to converge to tolerance."""


class NoSignChange(DiracLadderError):
    """Shooting determinant has no sign change over the energy bracket."""


class StiffnessFailure(DiracLadderError):
    """ODE integration overflowed or was rejected by the stepper."""


class SupercriticalChannelWarning(UserWarning):
    """A channel requested in a sweep was supercritical and was skipped."""
