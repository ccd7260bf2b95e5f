# Full author list can be found in the CHANGELOG and git history.
#
# Distributed under the BSD 3-Clause License.
# ----------------------------------------------------------------------------
"""Two-qubit pure states, density matrices and Pauli operators.

The ordered basis is (|uu>, |ud>, |du>, |dd>), with the left particle as the
high bit: basis index ``b = 2 * left + right`` where up = 0 and down = 1.  Up
and down are the eigenstates of sigma_z.

"""

from typing import NamedTuple

import numpy as np

from hybridEPR.methods import linalg
from hybridEPR.utils import DomainError
from hybridEPR.utils import NotHermitian
from hybridEPR.utils import NotNormalized
from hybridEPR.utils import NotPSD

NORM_TOL = 1.0e-12
UP = 0
DOWN = 1


class PauliSet(NamedTuple):
    """The Pauli matrices and the 2x2 identity."""

    x: np.ndarray
    y: np.ndarray
    z: np.ndarray
    identity: np.ndarray


PAULI = PauliSet(x=np.array([[0, 1], [1, 0]], dtype=np.complex128),
                 y=np.array([[0, -1j], [1j, 0]], dtype=np.complex128),
                 z=np.array([[1, 0], [0, -1]], dtype=np.complex128),
                 identity=np.eye(2, dtype=np.complex128))

# sigma_y (x) sigma_y, used by the spin flip
SIGMA_YY = np.kron(PAULI.y, PAULI.y)


class PureState2Q(object):
    """Normalized two-qubit pure state.

    Parameters
    ----------
    amp : array-like
        Four complex amplitudes over (|uu>, |ud>, |du>, |dd>).

    Raises
    ------
    NotNormalized
        If the squared norm differs from 1 by more than 1e-12.  States are
        never renormalized silently.

    """

    __slots__ = ('_amp',)

    def __init__(self, amp):
        amp = linalg.as_cvec(amp, 4)
        norm2 = float(np.sum(np.abs(amp)**2))
        if abs(norm2 - 1.0) > NORM_TOL:
            raise NotNormalized(' '.join(('State is not normalized, squared',
                                          'norm is {:.16g}'.format(norm2))))
        amp.flags.writeable = False
        self._amp = amp

    @property
    def amp(self):
        """Read-only amplitude vector."""
        return self._amp

    @property
    def matrix(self):
        """2x2 amplitude matrix ``M[l, r] = amp[2l + r]``."""
        return self._amp.reshape(2, 2)

    def __repr__(self):
        """Represent the state by its amplitudes."""
        return 'PureState2Q({:})'.format(np.array2string(self._amp,
                                                         precision=6))

    def inner(self, other):
        """Return the inner product <self|other>."""
        return complex(np.vdot(self._amp, other.amp))

    def to_json(self):
        """Serialize as a list of four [re, im] pairs."""
        return [[float(val.real), float(val.imag)] for val in self._amp]

    @classmethod
    def from_json(cls, pairs):
        """Build a state from a list of four [re, im] pairs."""
        return cls([complex(re, im) for re, im in pairs])


class DensityMatrix4(object):
    """Two-qubit density matrix.

    Parameters
    ----------
    mat : array-like
        4x4 complex matrix.

    Raises
    ------
    NotHermitian
        If the matrix is not Hermitian within 1e-12.
    NotNormalized
        If the trace differs from 1 by more than 1e-12.
    NotPSD
        If an eigenvalue is below -1e-10.

    """

    __slots__ = ('_mat',)

    def __init__(self, mat):
        mat = linalg.as_cmat(mat, 4)
        resid = linalg.hermiticity_residual(mat)
        if resid > NORM_TOL:
            raise NotHermitian(
                'Density matrix is not Hermitian, residual {:.3e}'.format(resid))
        trace = np.trace(mat)
        if abs(trace - 1.0) > NORM_TOL:
            raise NotNormalized(
                'Density matrix trace is {:} rather than 1'.format(trace))
        evals, _ = linalg.hermitian_eigen(mat)
        if evals[-1] < -linalg.PSD_TOL:
            raise NotPSD(
                'Density matrix has eigenvalue {:.3e}'.format(evals[-1]))
        mat.flags.writeable = False
        self._mat = mat

    @property
    def mat(self):
        """Read-only matrix entries."""
        return self._mat

    def __repr__(self):
        """Represent the matrix by its entries."""
        return 'DensityMatrix4({:})'.format(np.array2string(self._mat,
                                                            precision=6))

    def purity(self):
        """Return trace(rho^2)."""
        return float(np.real(np.trace(self._mat @ self._mat)))

    def to_json(self):
        """Serialize as 16 [re, im] pairs in row-major order."""
        return [[float(val.real), float(val.imag)]
                for val in self._mat.ravel()]

    @classmethod
    def from_json(cls, pairs):
        """Build a density matrix from 16 row-major [re, im] pairs."""
        return cls(np.array([complex(re, im) for re, im in pairs]).reshape(4, 4))

    @classmethod
    def maximally_mixed(cls):
        """Return I4 / 4."""
        return cls(np.eye(4) / 4.0)


def basis_state(left, right):
    """Product basis state |left>|right>.

    Parameters
    ----------
    left : int
        Spin of the left particle, `UP` (0) or `DOWN` (1).
    right : int
        Spin of the right particle, `UP` (0) or `DOWN` (1).

    Returns
    -------
    state : PureState2Q
        The basis state with index ``2 * left + right``.

    """

    if left not in (UP, DOWN) or right not in (UP, DOWN):
        raise DomainError('Spins must be 0 (up) or 1 (down), got {:}, {:}'.format(
            left, right))
    amp = np.zeros(4, dtype=np.complex128)
    amp[2 * left + right] = 1.0

    return PureState2Q(amp)


def singlet():
    """Spin singlet (|ud> - |du>) / sqrt(2) emitted by the source."""

    norm = 1.0 / np.sqrt(2.0)
    return PureState2Q([0.0, norm, -norm, 0.0])


def density_from_pure(psi):
    """Projector |psi><psi| of a pure state.

    Parameters
    ----------
    psi : PureState2Q
        Normalized state.

    Returns
    -------
    rho : DensityMatrix4
        Rank-one density matrix.

    """

    return DensityMatrix4(np.outer(psi.amp, psi.amp.conj()))


def werner_state(prob):
    """Mixture of the singlet with white noise.

    Parameters
    ----------
    prob : float
        Weight of the singlet, in [0, 1].

    Returns
    -------
    rho : DensityMatrix4
        ``prob * |singlet><singlet| + (1 - prob) * I4 / 4``

    """

    if not 0.0 <= prob <= 1.0:
        raise DomainError('Werner weight must be in [0, 1], got {:}'.format(
            prob))
    proj = density_from_pure(singlet()).mat

    return DensityMatrix4(prob * proj + (1.0 - prob) * np.eye(4) / 4.0)


def schmidt_coefficients(psi):
    """Schmidt coefficients of a two-qubit pure state.

    Parameters
    ----------
    psi : PureState2Q
        Normalized state.

    Returns
    -------
    s1, s2 : float
        Singular values of the amplitude matrix, ``s1 >= s2 >= 0``.

    """

    svals = np.linalg.svd(psi.matrix, compute_uv=False)

    return float(svals[0]), float(svals[1])
