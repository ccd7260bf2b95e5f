# Full author list can be found in the CHANGELOG and git history.
#
# Distributed under the BSD 3-Clause License.
# ----------------------------------------------------------------------------
"""CHSH correlation statistic, bound classification and angle optimization.

The statistic is

    S = |E(a, b) - E(a, b')| + |E(a', b) + E(a', b')|

with local hidden-variable bound 2 and Tsirelson bound 2 sqrt(2).

"""

import dataclasses
from typing import Optional

import numpy as np

import pysat

from hybridEPR.methods import linalg
from hybridEPR.methods.measurement import expectation
from hybridEPR.methods.measurement import joint_expectation
from hybridEPR.methods.measurement import MeasurementDirection
from hybridEPR.methods.qstate import PAULI
from hybridEPR.utils import ConfigError
from hybridEPR.utils import InvariantViolation

CLASSICAL_BOUND = 2.0
TSIRELSON_BOUND = 2.0 * np.sqrt(2.0)
CLASSIFY_TOL = 1.0e-9

NO_VIOLATION = 'no_violation'
VIOLATES_CLASSICAL = 'violates_classical'
EXCEEDS_TSIRELSON = 'exceeds_tsirelson'

IN_PLANE = 'in_plane'
FULL_SPHERE = 'full_sphere'
MODES = (IN_PLANE, FULL_SPHERE)

# (alpha, beta, alpha', beta') reproducing sqrt(2) + sqrt(2) |cos(phi)|
CANONICAL_THETAS = (0.0, np.pi / 4.0, np.pi / 2.0, 3.0 * np.pi / 4.0)

_MIN_STEP = 1.0e-10
_MAX_CYCLES = 100
_MAX_MOVES = 64


def _wrap_angle(theta):
    """Map an angle into [0, 2 pi)."""

    wrapped = float(np.mod(theta, 2.0 * np.pi))

    # Tiny negative inputs round up to exactly 2 pi
    if wrapped >= 2.0 * np.pi:
        wrapped = 0.0

    return wrapped


@dataclasses.dataclass(frozen=True)
class ChshAngles(object):
    """The four measurement settings (alpha, beta, alpha', beta').

    Attributes
    ----------
    alpha, beta, alpha_prime, beta_prime : MeasurementDirection
        Left (alpha) and right (beta) directions.
    thetas : tuple or NoneType
        In-plane angles in [0, 2 pi) when built with `in_plane`, else None.

    """

    alpha: MeasurementDirection
    beta: MeasurementDirection
    alpha_prime: MeasurementDirection
    beta_prime: MeasurementDirection
    thetas: Optional[tuple] = None

    @classmethod
    def in_plane(cls, alpha, beta, alpha_prime, beta_prime):
        """Build settings from four x-z plane angles in radians."""
        thetas = tuple(_wrap_angle(theta)
                       for theta in (alpha, beta, alpha_prime, beta_prime))
        dirs = [MeasurementDirection.from_angle(theta) for theta in thetas]
        return cls(*dirs, thetas=thetas)

    @classmethod
    def canonical(cls):
        """Settings (0, pi/4, pi/2, 3 pi/4)."""
        return cls.in_plane(*CANONICAL_THETAS)

    @property
    def directions(self):
        """Tuple (alpha, beta, alpha', beta')."""
        return self.alpha, self.beta, self.alpha_prime, self.beta_prime

    def to_json(self):
        """In-plane angles, or four [x, y, z] vectors in sphere mode."""
        if self.thetas is not None:
            return list(self.thetas)
        return [[d.x, d.y, d.z] for d in self.directions]


@dataclasses.dataclass(frozen=True)
class ChshResult(object):
    """Expectations, S value and classification for one set of settings."""

    angles: ChshAngles
    e_ab: float
    e_abp: float
    e_apb: float
    e_apbp: float
    s: float
    classification: str

    @property
    def expectations(self):
        """List [E(a,b), E(a,b'), E(a',b), E(a',b')]."""
        return [self.e_ab, self.e_abp, self.e_apb, self.e_apbp]

    def to_dict(self):
        """Serialize to the ChshResult JSON schema."""
        return {'angles': self.angles.to_json(),
                'expectations': [float(val) for val in self.expectations],
                's': float(self.s),
                'classification': self.classification}


@dataclasses.dataclass(frozen=True)
class OptimizerConfig(object):
    """Settings of the coarse-grid plus coordinate-ascent optimizer.

    Attributes
    ----------
    coarse_grid_points_per_angle : int
        Grid points per angle of the coarse stage. (default=24)
    refinement_iterations : int
        Number of step-size levels of the coordinate ascent. (default=60)
    initial_step : float
        First coordinate step in radians. (default=pi/12)
    shrink_factor : float
        Step multiplier between levels, in (0, 1). (default=0.5)
    restarts : int
        Number of best coarse cells refined. (default=8)

    """

    coarse_grid_points_per_angle: int = 24
    refinement_iterations: int = 60
    initial_step: float = np.pi / 12.0
    shrink_factor: float = 0.5
    restarts: int = 8

    def __post_init__(self):
        """Validate the settings."""
        for name in ('coarse_grid_points_per_angle', 'refinement_iterations',
                     'restarts'):
            value = getattr(self, name)
            if int(value) != value or value < 1:
                raise ConfigError('{:} must be a positive integer, got {:}'.format(
                    name, value))
        if not np.isfinite(self.initial_step) or self.initial_step <= 0:
            raise ConfigError('initial_step must be positive, got {:}'.format(
                self.initial_step))
        if not 0.0 < self.shrink_factor < 1.0:
            raise ConfigError('shrink_factor must be in (0, 1), got {:}'.format(
                self.shrink_factor))


def classify(s_val):
    """Classify an S value against the classical and Tsirelson bounds.

    Parameters
    ----------
    s_val : float
        CHSH statistic.

    Returns
    -------
    str
        'no_violation', 'violates_classical' or 'exceeds_tsirelson'.

    """

    if s_val > TSIRELSON_BOUND + CLASSIFY_TOL:
        return EXCEEDS_TSIRELSON
    if s_val > CLASSICAL_BOUND + CLASSIFY_TOL:
        return VIOLATES_CLASSICAL

    return NO_VIOLATION


def s_value(psi, angles):
    """Evaluate the CHSH statistic through the joint-measurement operators.

    Parameters
    ----------
    psi : PureState2Q
        Normalized state.
    angles : ChshAngles
        Measurement settings.

    Returns
    -------
    result : ChshResult
        Expectations, S and its classification.

    Raises
    ------
    InvariantViolation
        If S exceeds the Tsirelson bound, which no valid state can reach.

    """

    e_ab = joint_expectation(psi, angles.alpha, angles.beta)
    e_abp = joint_expectation(psi, angles.alpha, angles.beta_prime)
    e_apb = joint_expectation(psi, angles.alpha_prime, angles.beta)
    e_apbp = joint_expectation(psi, angles.alpha_prime, angles.beta_prime)
    s_val = abs(e_ab - e_abp) + abs(e_apb + e_apbp)

    label = classify(s_val)
    if label == EXCEEDS_TSIRELSON:
        raise InvariantViolation(' '.join([
            'CHSH value {:.12f} exceeds the Tsirelson bound'.format(s_val),
            '{:.12f} for expectations {:}'.format(
                TSIRELSON_BOUND,
                [float(val) for val in (e_ab, e_abp, e_apb, e_apbp)])]))

    return ChshResult(angles=angles, e_ab=float(e_ab), e_abp=float(e_abp),
                      e_apb=float(e_apb), e_apbp=float(e_apbp), s=s_val,
                      classification=label)


def canonical_s(phi):
    """Closed-form S at the canonical settings for relative phase `phi`.

    Parameters
    ----------
    phi : float
        Relative phase in radians.

    Returns
    -------
    float
        ``sqrt(2) + sqrt(2) |cos(phi)|``

    """

    return float(np.sqrt(2.0) * (1.0 + abs(np.cos(phi))))


def correlation_matrix(psi):
    """Spin correlation matrix T_ij = <psi| sigma_i (x) sigma_j |psi>.

    Parameters
    ----------
    psi : PureState2Q
        Normalized state.

    Returns
    -------
    tmat : np.ndarray
        Real 3x3 array, rows for the left particle (x, y, z).

    """

    paulis = (PAULI.x, PAULI.y, PAULI.z)
    tmat = np.zeros((3, 3))
    for i, sig_i in enumerate(paulis):
        for j, sig_j in enumerate(paulis):
            tmat[i, j] = expectation(psi, linalg.tensor_product(sig_i, sig_j))

    return tmat


def horodecki_s(psi):
    """Maximal CHSH value over all settings, from the correlation matrix.

    Parameters
    ----------
    psi : PureState2Q
        Normalized state.

    Returns
    -------
    float
        ``2 sqrt(t1^2 + t2^2)`` with t1, t2 the two largest singular values of
        the correlation matrix.

    """

    svals = np.linalg.svd(correlation_matrix(psi), compute_uv=False)

    return float(2.0 * np.sqrt(svals[0]**2 + svals[1]**2))


def _param_directions(params, mode):
    """Convert optimizer parameters to a (4, 3) array of unit vectors."""

    if mode == IN_PLANE:
        return np.column_stack((np.sin(params), np.zeros(4), np.cos(params)))

    polar = params[0::2]
    azim = params[1::2]
    return np.column_stack((np.sin(polar) * np.cos(azim),
                            np.sin(polar) * np.sin(azim), np.cos(polar)))


def _s_from_tmat(tmat, dirs):
    """S for directions (a, b, a', b') using E(u, v) = u . T v."""

    emat = dirs[[0, 2]] @ tmat @ dirs[[1, 3]].T
    return abs(emat[0, 0] - emat[0, 1]) + abs(emat[1, 0] + emat[1, 1])


def _coarse_candidates(mode, npts):
    """Coarse direction grid and its parameters for a given mode."""

    if mode == IN_PLANE:
        thetas = 2.0 * np.pi * np.arange(npts) / npts
        dirs = np.column_stack((np.sin(thetas), np.zeros(npts), np.cos(thetas)))
        return thetas[:, None], dirs

    num_polar = max(2, npts // 6)
    num_azim = max(4, npts // 3)
    polar = np.pi * (np.arange(num_polar) + 0.5) / num_polar
    azim = 2.0 * np.pi * np.arange(num_azim) / num_azim
    pgrid, agrid = np.meshgrid(polar, azim, indexing='ij')
    params = np.column_stack((pgrid.ravel(), agrid.ravel()))
    dirs = np.column_stack((np.sin(params[:, 0]) * np.cos(params[:, 1]),
                            np.sin(params[:, 0]) * np.sin(params[:, 1]),
                            np.cos(params[:, 0])))
    return params, dirs


def _coarse_search(tmat, mode, cfg):
    """Maximize S on the product grid and return the best starting points.

    Note
    ----
    For fixed right settings (b, b') the two terms of S separate, so the
    best a and a' are found independently.  Memory scales with the square
    of the number of candidate directions and time with its cube.

    """

    cand_params, cand_dirs = _coarse_candidates(
        mode, cfg.coarse_grid_points_per_angle)
    emat = cand_dirs @ tmat @ cand_dirs.T
    ncand = len(cand_dirs)
    cols = np.arange(ncand)

    # Axes (b, b'), values for the best a and a'
    scores = np.empty((ncand, ncand))
    best_a = np.empty((ncand, ncand), dtype=int)
    best_ap = np.empty((ncand, ncand), dtype=int)
    for ib in range(ncand):
        first = np.abs(emat[:, ib, None] - emat)
        second = np.abs(emat[:, ib, None] + emat)
        best_a[ib] = np.argmax(first, axis=0)
        best_ap[ib] = np.argmax(second, axis=0)
        scores[ib] = first[best_a[ib], cols] + second[best_ap[ib], cols]

    svals = scores.ravel()
    num = min(cfg.restarts, svals.size)
    top = np.argpartition(-svals, num - 1)[:num]
    top = top[np.lexsort((top, -svals[top]))]

    starts = list()
    for flat in top:
        ib, ibp = np.unravel_index(flat, scores.shape)
        ia = best_a[ib, ibp]
        iap = best_ap[ib, ibp]
        starts.append(np.concatenate([cand_params[ia], cand_params[ib],
                                      cand_params[iap], cand_params[ibp]]))

    pysat.logger.debug(' '.join([
        'Coarse CHSH grid of {:d} directions,'.format(ncand),
        'best S {:.10f}'.format(svals[top[0]])]))

    return starts


def _coordinate_ascent(objective, start, cfg):
    """Cyclic coordinate ascent with geometrically shrinking steps."""

    xval = np.array(start, dtype=float)
    fval = objective(xval)
    step = cfg.initial_step

    for _ in range(cfg.refinement_iterations):
        for _ in range(_MAX_CYCLES):
            improved = False
            for coord in range(len(xval)):
                for sign in (1.0, -1.0):
                    moved = False
                    for _ in range(_MAX_MOVES):
                        trial = xval.copy()
                        trial[coord] += sign * step
                        ftrial = objective(trial)
                        if ftrial > fval:
                            xval, fval, moved = trial, ftrial, True
                        else:
                            break
                    if moved:
                        improved = True
                        break
            if not improved:
                break

        step *= cfg.shrink_factor
        if step < _MIN_STEP:
            break

    return xval, fval


def _params_to_angles(params, mode):
    """Wrap optimizer parameters into ChshAngles."""

    if mode == IN_PLANE:
        return ChshAngles.in_plane(*params)

    dirs = [MeasurementDirection.from_spherical(params[2 * i], params[2 * i + 1])
            for i in range(4)]
    return ChshAngles(*dirs)


def maximize_s(psi, mode=IN_PLANE, cfg=None):
    """Maximize the CHSH statistic over measurement settings.

    Parameters
    ----------
    psi : PureState2Q
        Normalized state.
    mode : str
        'in_plane' for four x-z plane angles or 'full_sphere' for four
        arbitrary unit vectors, each given by polar and azimuthal angles.
        (default='in_plane')
    cfg : OptimizerConfig or NoneType
        Optimizer settings; defaults are used if None. (default=None)

    Returns
    -------
    result : ChshResult
        Best settings found, evaluated through `s_value`.

    Note
    ----
    The search is fully deterministic: no random numbers are drawn.  A coarse
    product grid over the four settings selects `cfg.restarts` starting
    cells (ties broken by grid order), each refined by cyclic coordinate
    ascent.  The best refined result is kept; ties keep the earliest restart.

    """

    if mode not in MODES:
        raise ConfigError('Unknown optimization mode {:}, choose {:}'.format(
            mode, ', '.join(MODES)))
    if cfg is None:
        cfg = OptimizerConfig()

    tmat = correlation_matrix(psi)

    def objective(params):
        return _s_from_tmat(tmat, _param_directions(params, mode))

    best = None
    for irestart, start in enumerate(_coarse_search(tmat, mode, cfg)):
        params, fval = _coordinate_ascent(objective, start, cfg)
        result = s_value(psi, _params_to_angles(params, mode))
        pysat.logger.debug('CHSH restart {:d}: S = {:.12f}'.format(irestart,
                                                                   result.s))
        if best is None or result.s > best.s:
            best = result

    return best
