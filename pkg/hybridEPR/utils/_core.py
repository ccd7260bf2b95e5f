# Full author list can be found in the CHANGELOG and git history.
#
# Distributed under the BSD 3-Clause License.
# ----------------------------------------------------------------------------
"""Utilities for hybridEPR."""

import numpy as np


class HybridEPRError(ValueError):
    """Base class for the numerical and configuration errors of hybridEPR."""


class NotHermitian(HybridEPRError):
    """Raised when a matrix expected to be Hermitian is not."""


class NotPSD(HybridEPRError):
    """Raised when a matrix has an eigenvalue below the PSD tolerance."""


class NotNormalized(HybridEPRError):
    """Raised when a state vector or density matrix is not normalized."""


class NonHermitianExpectation(HybridEPRError):
    """Raised when an expectation value carries an imaginary residue."""


class DomainError(HybridEPRError):
    """Raised when an argument lies outside the domain of a function."""


class ConfigError(HybridEPRError):
    """Raised for invalid setups, grids or optimizer settings."""


class InvariantViolation(RuntimeError):
    """Raised when a computed result breaks a physical bound.

    Note
    ----
    Never expected for valid quantum states; it signals a bug.

    """


def wrap_phase(phase):
    """Wrap a phase into the half-open interval (-pi, pi].

    Parameters
    ----------
    phase : float
        Phase in radians.

    Returns
    -------
    wrapped : float
        Equivalent phase in (-pi, pi].

    """

    wrapped = float(np.pi - np.mod(np.pi - phase, 2.0 * np.pi))

    # np.mod may round up to the full period
    if wrapped <= -np.pi:
        wrapped += 2.0 * np.pi

    return wrapped


def check_finite(label, *values):
    """Raise a ConfigError if any value is NaN or infinite.

    Parameters
    ----------
    label : str
        Name used in the error message.
    *values : float or array-like
        Values to check.

    Raises
    ------
    ConfigError
        If a value is not finite.

    """

    for value in values:
        if not np.all(np.isfinite(value)):
            raise ConfigError(' '.join(('Non-finite value supplied for',
                                        '{:}: {:}'.format(label, value))))
    return
