# Full author list can be found in the CHANGELOG and git history.
#
# Distributed under the BSD 3-Clause License.
# ----------------------------------------------------------------------------
"""Geometric phases picked up by a spin pair in hybrid EPR setups.

Five setups are supported: Aharonov-Bohm (AB), Aharonov-Casher (AC),
He-McKellar-Wilkens (HMW), Berry and Dual Aharonov-Bohm (DAB).  Every setup
reduces to three angles, a left-arm angle, a right-arm angle and a global
angle, and a basis amplitude with spins (l, r) is multiplied by

    exp(i * (s_l * theta_left + s_r * theta_right + theta_global))

with s = -1 for spin up and +1 for spin down.  For AC the left arm carries
mu * lambda_1 and the right arm mu * lambda_2; HMW and Berry put their
reduced phase (d * lambda_B, gamma) on a single arm; AB and DAB only rescale
the whole state by exp(-i phi_B) and exp(-i g phi_E).

"""

import dataclasses
from typing import ClassVar
import warnings

import numpy as np

from hybridEPR.methods.qstate import PureState2Q
from hybridEPR.utils import check_finite
from hybridEPR.utils import ConfigError
from hybridEPR.utils import wrap_phase

EQUIVALENCE_TOL = 1.0e-10

# Sign picked up by spin up (index 0) and spin down (index 1)
_SPIN_SIGN = np.array([-1.0, 1.0])


@dataclasses.dataclass(frozen=True)
class PhaseSetup(object):
    """Base class of the hybrid setups."""

    kind: ClassVar[str] = ''

    def __post_init__(self):
        """Reject non-finite parameters."""
        for field in dataclasses.fields(self):
            check_finite('{:}.{:}'.format(self.kind, field.name),
                         getattr(self, field.name))

    def arm_angles(self):
        """Return (theta_left, theta_right, theta_global) in radians."""
        raise NotImplementedError

    def to_dict(self):
        """Serialize to the PhaseSetup JSON schema."""
        out = {'kind': self.kind}
        out.update(dataclasses.asdict(self))
        return out


@dataclasses.dataclass(frozen=True)
class ABSetup(PhaseSetup):
    """Charge encircling a magnetic flux.

    Parameters
    ----------
    phi_b : float
        Magnetic-flux phase in radians.

    """

    kind: ClassVar[str] = 'ab'
    phi_b: float = 0.0

    def arm_angles(self):
        """Return (theta_left, theta_right, theta_global) in radians."""
        return 0.0, 0.0, -self.phi_b


@dataclasses.dataclass(frozen=True)
class ACSetup(PhaseSetup):
    """Magnetic dipoles passing two electric line charges.

    Parameters
    ----------
    mu : float
        Magnetic dipole moment (natural units).
    lambda1 : float
        Line-charge density seen by the left arm.
    lambda2 : float
        Line-charge density seen by the right arm.

    """

    kind: ClassVar[str] = 'ac'
    mu: float = 0.0
    lambda1: float = 0.0
    lambda2: float = 0.0

    @property
    def lambda_e(self):
        """Effective line-charge difference lambda_1 - lambda_2."""
        return self.lambda1 - self.lambda2

    def arm_angles(self):
        """Return (theta_left, theta_right, theta_global) in radians."""
        return self.mu * self.lambda1, self.mu * self.lambda2, 0.0


@dataclasses.dataclass(frozen=True)
class HMWSetup(PhaseSetup):
    """Electric dipoles passing an effective magnetic line charge.

    Parameters
    ----------
    d : float
        Electric dipole moment (natural units).
    lambda_b : float
        Effective magnetic line-charge density difference.

    """

    kind: ClassVar[str] = 'hmw'
    d: float = 0.0
    lambda_b: float = 0.0

    def arm_angles(self):
        """Return (theta_left, theta_right, theta_global) in radians."""
        return self.d * self.lambda_b, 0.0, 0.0


@dataclasses.dataclass(frozen=True)
class BerrySetup(PhaseSetup):
    """Generic Berry phase, taken as a given parameter.

    Parameters
    ----------
    gamma : float
        Berry phase in radians.

    """

    kind: ClassVar[str] = 'berry'
    gamma: float = 0.0

    def arm_angles(self):
        """Return (theta_left, theta_right, theta_global) in radians."""
        return self.gamma, 0.0, 0.0


@dataclasses.dataclass(frozen=True)
class DABSetup(PhaseSetup):
    """Magnetic charge encircling an electric flux.

    Parameters
    ----------
    g : float
        Magnetic charge (natural units).
    phi_e : float
        Electric-flux phase per unit magnetic charge, in radians.

    """

    kind: ClassVar[str] = 'dab'
    g: float = 0.0
    phi_e: float = 0.0

    def arm_angles(self):
        """Return (theta_left, theta_right, theta_global) in radians."""
        return 0.0, 0.0, -self.g * self.phi_e


SETUP_KINDS = {cls.kind: cls for cls in (ABSetup, ACSetup, HMWSetup,
                                         BerrySetup, DABSetup)}


@dataclasses.dataclass(frozen=True)
class PhaseDecomposition(object):
    """Global and relative phase of a phased singlet.

    Attributes
    ----------
    global_phase : float
        Phase multiplying the whole state, radians.
    relative_phase : float
        Phase of the |du> term relative to |ud>, wrapped to (-pi, pi].

    """

    global_phase: float
    relative_phase: float

    def to_dict(self):
        """Serialize to a plain dict."""
        return dataclasses.asdict(self)


def setup_params(kind):
    """List the parameter names of a setup kind.

    Parameters
    ----------
    kind : str
        One of 'ab', 'ac', 'hmw', 'berry', 'dab'.

    Returns
    -------
    names : list of str
        Parameter names in declaration order.

    """

    if kind not in SETUP_KINDS:
        raise ConfigError(' '.join(('{:} is not a supported setup kind.'.format(
            kind), 'Choose from {:}'.format(', '.join(SETUP_KINDS)))))

    return [field.name for field in dataclasses.fields(SETUP_KINDS[kind])]


def _check_setup_params(kind, params):
    """Check that a complete set of parameters exists for a setup kind.

    Parameters
    ----------
    kind : str
        Setup kind.
    params : dict
        Parameters supplied for the setup.

    """

    required = setup_params(kind)
    missing = [name for name in required if name not in params]
    if len(missing) > 0:
        raise KeyError(' '.join(('Insufficient parameters. Setup kind',
                                 '{:} requires {:}'.format(
                                     kind, ', '.join(required)))))

    extra = [name for name in params if name not in required]
    if len(extra) > 0:
        warnings.warn(' '.join(('Ignoring parameters not used by',
                                '{:} setups: {:}'.format(kind,
                                                         ', '.join(extra)))))

    return


def setup_from_dict(mapping):
    """Build a PhaseSetup from its JSON representation.

    Parameters
    ----------
    mapping : dict
        Dictionary with a 'kind' key and the parameters of that kind by name,
        e.g. ``{'kind': 'ac', 'mu': 1.0, 'lambda1': 0.5, 'lambda2': 0.0}``.

    Returns
    -------
    setup : PhaseSetup
        Instance of the matching subclass.

    Raises
    ------
    ConfigError
        If the kind is unknown or a value is not a finite number.
    KeyError
        If a parameter of the kind is missing.

    """

    params = dict(mapping)
    kind = str(params.pop('kind', '')).lower()
    _check_setup_params(kind, params)
    try:
        values = {name: float(params[name]) for name in setup_params(kind)}
    except (TypeError, ValueError) as err:
        raise ConfigError('Invalid {:} parameter: {:}'.format(kind, err))

    return SETUP_KINDS[kind](**values)


def apply_phase(psi, setup):
    """Apply the geometric phase of a setup to a two-qubit state.

    Parameters
    ----------
    psi : PureState2Q
        Normalized input state.
    setup : PhaseSetup
        Hybrid setup traversed by the pair.

    Returns
    -------
    phased : PureState2Q
        State with every basis amplitude multiplied by a unit-modulus factor.

    Note
    ----
    The per-arm factors act linearly on any input state; for the singlet they
    reproduce the tabulated phased states.

    """

    theta_left, theta_right, theta_global = setup.arm_angles()
    angles = (np.add.outer(_SPIN_SIGN * theta_left, _SPIN_SIGN * theta_right)
              + theta_global).ravel()

    return PureState2Q(psi.amp * np.exp(1j * angles))


def decompose(setup):
    """Split the phase acquired by the singlet into global and relative parts.

    Parameters
    ----------
    setup : PhaseSetup
        Hybrid setup.

    Returns
    -------
    decomp : PhaseDecomposition
        ``apply_phase(singlet, setup)`` equals
        ``exp(i global) (|ud> - exp(i relative) |du>) / sqrt(2)``.

    """

    theta_left, theta_right, theta_global = setup.arm_angles()
    arm_diff = theta_left - theta_right

    return PhaseDecomposition(global_phase=theta_global - arm_diff,
                              relative_phase=wrap_phase(2.0 * arm_diff))


def phase_equivalent(psi_a, psi_b):
    """Check whether two states differ only by a global phase.

    Parameters
    ----------
    psi_a, psi_b : PureState2Q
        Normalized states.

    Returns
    -------
    bool
        True if |<a|b>| >= 1 - 1e-10.

    """

    return abs(psi_a.inner(psi_b)) >= 1.0 - EQUIVALENCE_TOL
