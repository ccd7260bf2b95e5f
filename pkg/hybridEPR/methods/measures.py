# Full author list can be found in the CHANGELOG and git history.
#
# Distributed under the BSD 3-Clause License.
# ----------------------------------------------------------------------------
"""Entanglement and distance measures for two-qubit states.

Fidelity follows the amplitude convention F = |<a|b>| (no square), so that the
Bures distance is D_B = sqrt(2 (1 - F)).

"""

import dataclasses

import numpy as np

from hybridEPR.methods import linalg
from hybridEPR.methods.phases import apply_phase
from hybridEPR.methods.phases import PhaseSetup
from hybridEPR.methods.qstate import PureState2Q
from hybridEPR.methods.qstate import SIGMA_YY
from hybridEPR.methods.qstate import singlet
from hybridEPR.utils import DomainError

RANGE_TOL = 1.0e-12
RADICAND_TOL = 1.0e-12

# Overlaps this close to 1 cannot be told apart from 1 in double precision
_UNIT_SNAP = 8.0 * np.finfo(float).eps


class _UnitInterval(float):
    """Real number in [0, 1 + 1e-12]."""

    label = 'value'

    def __new__(cls, value):
        """Validate the range."""
        value = float(value)
        if not -RANGE_TOL <= value <= 1.0 + RANGE_TOL:
            raise DomainError('{:} must lie in [0, 1], got {:}'.format(
                cls.label, value))
        return super().__new__(cls, value)


class Concurrence(_UnitInterval):
    """Concurrence of a two-qubit state."""

    label = 'Concurrence'


class Fidelity(_UnitInterval):
    """Amplitude fidelity between two states."""

    label = 'Fidelity'


@dataclasses.dataclass(frozen=True)
class MeasureReport(object):
    """Measures of a phased singlet relative to the source state.

    Attributes
    ----------
    setup : PhaseSetup
        Setup that produced the phased state.
    concurrence, eof, fidelity, bures : float
        Concurrence and entanglement of formation of the phased state, and
        fidelity and Bures distance to the initial state.

    """

    setup: PhaseSetup
    concurrence: float
    eof: float
    fidelity: float
    bures: float

    def to_dict(self):
        """Serialize to the MeasureReport JSON schema."""
        return {'setup': self.setup.to_dict(),
                'concurrence': float(self.concurrence),
                'eof': float(self.eof), 'fidelity': float(self.fidelity),
                'bures': float(self.bures)}


def _check_unit_interval(label, value):
    """Raise DomainError outside [0, 1] and clip rounding noise."""

    if not -RANGE_TOL <= value <= 1.0 + RANGE_TOL:
        raise DomainError('{:} must lie in [0, 1], got {:}'.format(label,
                                                                   value))
    return min(max(float(value), 0.0), 1.0)


def _sqrt_radicand(value):
    """Square root with tiny negative radicands clamped to zero."""

    if value < -RADICAND_TOL:
        raise DomainError('Negative radicand {:}'.format(value))
    return np.sqrt(max(value, 0.0))


def spin_flip(psi):
    """Spin-flipped state (sigma_y (x) sigma_y) |psi*>.

    Parameters
    ----------
    psi : PureState2Q
        Normalized state.

    Returns
    -------
    flipped : PureState2Q
        Spin-flipped state, same norm as `psi`.

    """

    return PureState2Q(SIGMA_YY @ psi.amp.conj())


def concurrence_pure(psi):
    """Concurrence |<psi|psi~>| of a pure state.

    Parameters
    ----------
    psi : PureState2Q
        Normalized state.

    Returns
    -------
    Concurrence
        0 for product states, 1 for maximally entangled states.

    """

    return Concurrence(abs(psi.inner(spin_flip(psi))))


def concurrence_mixed(rho):
    """Concurrence of a general two-qubit density matrix.

    Parameters
    ----------
    rho : DensityMatrix4
        Valid density matrix.

    Returns
    -------
    Concurrence
        ``max(0, l1 - l2 - l3 - l4)``, where the l_i are the descending
        square roots of the eigenvalues of rho (sigma_y sigma_y) rho*
        (sigma_y sigma_y).

    Note
    ----
    The l_i are computed as the singular values of sqrt(rho) sqrt(rho~),
    with rho~ the spin-flipped density matrix.  Their squares are the
    eigenvalues of the Hermitian matrix sqrt(rho) rho~ sqrt(rho), which share
    the spectrum of rho rho~, and taking singular values avoids the square
    root of eigenvalue noise on rank-deficient inputs.

    """

    root = linalg.psd_sqrt(rho.mat)
    root_flip = SIGMA_YY @ root.conj() @ SIGMA_YY
    lams = np.linalg.svd(root @ root_flip, compute_uv=False)

    return Concurrence(max(0.0, lams[0] - lams[1] - lams[2] - lams[3]))


def binary_entropy(xval):
    """Binary entropy h(x) = -x log2 x - (1 - x) log2 (1 - x).

    Parameters
    ----------
    xval : float
        Probability in [0, 1].

    Returns
    -------
    float
        Entropy in bits; h(0) = h(1) = 0 by continuous extension.

    Raises
    ------
    DomainError
        Outside [0, 1].

    """

    if not 0.0 <= xval <= 1.0:
        raise DomainError('Binary entropy needs x in [0, 1], got {:}'.format(
            xval))

    return float(sum(-prob * np.log2(prob) for prob in (xval, 1.0 - xval)
                     if prob > 0.0))


def eof_from_concurrence(conc):
    """Entanglement of formation h((1 + sqrt(1 - C^2)) / 2).

    Parameters
    ----------
    conc : float
        Concurrence in [0, 1].

    Returns
    -------
    float
        Entanglement of formation in ebits.

    """

    conc = _check_unit_interval('Concurrence', conc)

    return binary_entropy(0.5 * (1.0 + _sqrt_radicand(1.0 - conc**2)))


def fidelity_pure(psi_a, psi_b):
    """Fidelity |<a|b>| between two pure states.

    Parameters
    ----------
    psi_a, psi_b : PureState2Q
        Normalized states.

    Returns
    -------
    Fidelity
        Overlap magnitude; values within a few ulps of 1 are reported as 1.

    """

    overlap = abs(psi_a.inner(psi_b))
    if overlap >= 1.0 - _UNIT_SNAP:
        overlap = 1.0

    return Fidelity(overlap)


def fidelity_mixed(rho, sigma):
    """Uhlmann fidelity tr sqrt(sqrt(rho) sigma sqrt(rho)).

    Parameters
    ----------
    rho, sigma : DensityMatrix4
        Valid density matrices.

    Returns
    -------
    Fidelity
        Equal to `fidelity_pure` on rank-one inputs.

    Note
    ----
    Evaluated as the nuclear norm of sqrt(rho) sqrt(sigma), whose singular
    values are the square roots of the eigenvalues of
    sqrt(rho) sigma sqrt(rho).

    """

    prod = linalg.psd_sqrt(rho.mat) @ linalg.psd_sqrt(sigma.mat)
    value = float(np.sum(np.linalg.svd(prod, compute_uv=False)))
    if value >= 1.0 - _UNIT_SNAP:
        value = 1.0

    return Fidelity(value)


def bures_distance(fid):
    """Bures distance sqrt(2 (1 - F)).

    Parameters
    ----------
    fid : float
        Fidelity in [0, 1].

    Returns
    -------
    float
        Distance in [0, sqrt(2)].

    """

    fid = _check_unit_interval('Fidelity', fid)

    return float(_sqrt_radicand(2.0 * (1.0 - fid)))


def fubini_study_distance(fid):
    """Fubini-Study angle arccos(F) between two pure states.

    Parameters
    ----------
    fid : float
        Fidelity in [0, 1].

    Returns
    -------
    float
        Angle in [0, pi / 2].

    """

    return float(np.arccos(_check_unit_interval('Fidelity', fid)))


def measure_report(setup, initial=None):
    """Concurrence, EoF, fidelity and Bures distance for one setup.

    Parameters
    ----------
    setup : PhaseSetup
        Setup traversed by the pair.
    initial : PureState2Q or NoneType
        Source state; the singlet if None. (default=None)

    Returns
    -------
    MeasureReport
        All quantities computed from the phased state.

    """

    if initial is None:
        initial = singlet()
    phased = apply_phase(initial, setup)
    conc = concurrence_pure(phased)
    fid = fidelity_pure(initial, phased)

    return MeasureReport(setup=setup, concurrence=float(conc),
                         eof=eof_from_concurrence(conc), fidelity=float(fid),
                         bures=bures_distance(fid))


def table1_formulas(setup):
    """Closed-form measure-table entries for a setup traversed by the singlet.

    Parameters
    ----------
    setup : PhaseSetup
        Hybrid setup.

    Returns
    -------
    tuple
        (concurrence, eof, fidelity, bures), where fidelity is |cos(theta)|
        with theta half the relative phase (1 for AB and DAB).

    """

    theta_left, theta_right, _ = setup.arm_angles()
    fid = abs(np.cos(theta_left - theta_right))

    return 1.0, 1.0, float(fid), float(np.sqrt(2.0 - 2.0 * fid))
