# Full author list can be found in the CHANGELOG and git history.
#
# Distributed under the BSD 3-Clause License.
# ----------------------------------------------------------------------------
"""Spin projections and joint expectation values for the two arms.

In-plane measurement angles are read from the +z axis within the x-z plane,
``n(theta) = (sin theta, 0, cos theta)``.  This is the single-angle family for
which the operator expectation on a phased singlet reduces to
``-cos a cos b - sin a sin b cos(phi)``.

"""

import dataclasses

import numpy as np

from hybridEPR.methods import linalg
from hybridEPR.methods.qstate import PAULI
from hybridEPR.utils import DomainError
from hybridEPR.utils import InvariantViolation
from hybridEPR.utils import NonHermitianExpectation

UNIT_TOL = 1.0e-12
IMAG_TOL = 1.0e-10
BOUND_TOL = 1.0e-10


@dataclasses.dataclass(frozen=True)
class MeasurementDirection(object):
    """Unit vector on the Bloch sphere along which a spin is measured.

    Parameters
    ----------
    x, y, z : float
        Cartesian components; the norm must be 1 within 1e-12.

    """

    x: float
    y: float
    z: float

    def __post_init__(self):
        """Validate the norm of the direction."""
        norm = np.sqrt(self.x**2 + self.y**2 + self.z**2)
        if not np.isfinite(norm) or abs(norm - 1.0) > UNIT_TOL:
            raise DomainError(' '.join(('Measurement direction must be a unit',
                                        'vector, norm is {:}'.format(norm))))

    @classmethod
    def from_angle(cls, theta):
        """Direction in the x-z plane at angle `theta` (radians) from +z."""
        return cls(float(np.sin(theta)), 0.0, float(np.cos(theta)))

    @classmethod
    def from_spherical(cls, polar, azimuth):
        """Direction from polar angle (from +z) and azimuth (from +x)."""
        return cls(float(np.sin(polar) * np.cos(azimuth)),
                   float(np.sin(polar) * np.sin(azimuth)),
                   float(np.cos(polar)))

    @classmethod
    def axis(cls, name):
        """Unit vector along the 'x', 'y' or 'z' axis."""
        vec = {'x': (1.0, 0.0, 0.0), 'y': (0.0, 1.0, 0.0),
               'z': (0.0, 0.0, 1.0)}
        if name not in vec:
            raise DomainError('Unknown axis {:}'.format(name))
        return cls(*vec[name])

    @property
    def vector(self):
        """Components as a numpy array."""
        return np.array([self.x, self.y, self.z])

    def spin_operator(self):
        """Return n . sigma as a 2x2 matrix."""
        return self.x * PAULI.x + self.y * PAULI.y + self.z * PAULI.z


class JointExpectation(float):
    """Expectation of a joint spin measurement, a real number in [-1, 1].

    Raises
    ------
    InvariantViolation
        If the value lies beyond the operator norm of the observable.

    """

    def __new__(cls, value):
        """Validate the operator-norm bound."""
        value = float(value)
        if not abs(value) <= 1.0 + BOUND_TOL:
            raise InvariantViolation(
                'Joint expectation {:} exceeds the operator norm'.format(value))
        return super().__new__(cls, value)


def projector(direction, outcome):
    """Projection onto the spin outcome along a direction.

    Parameters
    ----------
    direction : MeasurementDirection
        Measurement axis.
    outcome : int
        +1 or -1.

    Returns
    -------
    proj : np.ndarray
        ``(I2 + outcome * n . sigma) / 2``

    """

    if outcome not in (1, -1):
        raise DomainError('Spin outcome must be +1 or -1, got {:}'.format(
            outcome))

    return 0.5 * (PAULI.identity + outcome * direction.spin_operator())


def _observable(direction):
    """Return P+ - P- for a direction."""

    return projector(direction, 1) - projector(direction, -1)


def expectation(psi, operator):
    """Real expectation value <psi|operator|psi> of a Hermitian 4x4 operator.

    Parameters
    ----------
    psi : PureState2Q
        Normalized state.
    operator : np.ndarray
        Hermitian 4x4 operator.

    Returns
    -------
    value : float
        Real part of the expectation.

    Raises
    ------
    NonHermitianExpectation
        If the imaginary part exceeds 1e-10.

    """

    raw = np.vdot(psi.amp, operator @ psi.amp)
    if abs(raw.imag) > IMAG_TOL:
        raise NonHermitianExpectation(' '.join((
            'Expectation value has imaginary residue',
            '{:.3e}'.format(raw.imag))))

    return float(raw.real)


def joint_expectation(psi, dir_a, dir_b):
    """Correlation E(a, b) of spin measurements on the left and right arms.

    Parameters
    ----------
    psi : PureState2Q
        Normalized state.
    dir_a : MeasurementDirection
        Left-arm measurement direction.
    dir_b : MeasurementDirection
        Right-arm measurement direction.

    Returns
    -------
    value : JointExpectation
        ``<psi| (P+(a) - P-(a)) (x) (P+(b) - P-(b)) |psi>``

    """

    operator = linalg.tensor_product(_observable(dir_a), _observable(dir_b))

    return JointExpectation(expectation(psi, operator))


def closed_form_e(alpha, beta, phi):
    """Closed-form correlation on a singlet with relative phase `phi`.

    Parameters
    ----------
    alpha, beta : float
        In-plane measurement angles in radians.
    phi : float
        Relative phase of the phased singlet in radians.

    Returns
    -------
    value : float
        ``-cos(alpha) cos(beta) - sin(alpha) sin(beta) cos(phi)``

    """

    return float(-np.cos(alpha) * np.cos(beta)
                 - np.sin(alpha) * np.sin(beta) * np.cos(phi))
