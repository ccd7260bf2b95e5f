# Full author list can be found in the CHANGELOG and git history.
#
# Distributed under the BSD 3-Clause License.
# ----------------------------------------------------------------------------
"""Summary tables of the five hybrid setups and the CHSH phase curve."""

import numpy as np
import pandas as pds

import pysat

from hybridEPR.methods.chsh import ChshAngles
from hybridEPR.methods.chsh import s_value
from hybridEPR.methods.measures import measure_report
from hybridEPR.methods.phases import ACSetup
from hybridEPR.methods.phases import apply_phase
from hybridEPR.methods.phases import SETUP_KINDS
from hybridEPR.methods.phases import setup_from_dict
from hybridEPR.methods.qstate import singlet
from hybridEPR.utils import ConfigError

TABLE1_COLUMNS = ['setup', 'concurrence', 'eof', 'fidelity', 'bures']
TABLE1_FORMATS = ('csv', 'md')

# Default parameters of each row, in table order
DEFAULT_TABLE1_PARAMS = {'ab': {'phi_b': np.pi / 4.0},
                         'ac': {'mu': 1.0, 'lambda1': np.pi / 3.0,
                                'lambda2': 0.0},
                         'hmw': {'d': 1.0, 'lambda_b': np.pi / 4.0},
                         'berry': {'gamma': np.pi / 6.0},
                         'dab': {'g': 1.0, 'phi_e': np.pi / 4.0}}


def table1_report(params=None, initial=None):
    """Concurrence, EoF, fidelity and Bures distance of all five setups.

    Parameters
    ----------
    params : dict or NoneType
        Parameter overrides keyed by setup kind, e.g.
        ``{'ac': {'mu': 2.0}}``.  Parameters not given keep the values in
        `DEFAULT_TABLE1_PARAMS`. (default=None)
    initial : PureState2Q or NoneType
        Source state, the singlet if None. (default=None)

    Returns
    -------
    reports : list of MeasureReport
        One report per setup, ordered ab, ac, hmw, berry, dab.

    Raises
    ------
    ConfigError
        If an override names an unknown setup kind.

    """

    params = dict() if params is None else params
    unknown = [kind for kind in params if kind not in SETUP_KINDS]
    if len(unknown) > 0:
        raise ConfigError('Unknown setup kinds in overrides: {:}'.format(
            ', '.join(unknown)))

    reports = list()
    for kind, defaults in DEFAULT_TABLE1_PARAMS.items():
        row_params = {'kind': kind}
        row_params.update(defaults)
        row_params.update(params.get(kind, dict()))
        reports.append(measure_report(setup_from_dict(row_params),
                                      initial=initial))

    return reports


def table1_frame(reports):
    """Tabulate measure reports, one row per setup kind."""

    return pds.DataFrame([[report.setup.kind, report.concurrence, report.eof,
                           report.fidelity, report.bures]
                          for report in reports], columns=TABLE1_COLUMNS)


def format_table1(reports, fmt='csv'):
    """Render measure reports as CSV or an aligned Markdown table.

    Parameters
    ----------
    reports : list of MeasureReport
        Output of `table1_report`.
    fmt : str
        'csv' or 'md'. (default='csv')

    Returns
    -------
    text : str
        Rendered table ending in a newline; numbers carry 10 significant
        digits.

    """

    if fmt not in TABLE1_FORMATS:
        raise ConfigError('Unknown table format {:}, choose {:}'.format(
            fmt, ' or '.join(TABLE1_FORMATS)))

    frame = table1_frame(reports)
    if fmt == 'csv':
        return frame.to_csv(index=False, float_format='%.10g',
                            lineterminator='\n')

    cells = [TABLE1_COLUMNS]
    for row in frame.itertuples(index=False):
        cells.append([row[0]] + ['{:.10g}'.format(val) for val in row[1:]])
    widths = [max(len(line[icol]) for line in cells)
              for icol in range(len(TABLE1_COLUMNS))]

    def render(line):
        return '| {:} |'.format(' | '.join(
            val.ljust(width) for val, width in zip(line, widths)))

    lines = [render(cells[0]),
             '|{:}|'.format('|'.join('-' * (width + 2) for width in widths))]
    lines.extend(render(line) for line in cells[1:])

    return '\n'.join(lines) + '\n'


def chsh_curve(phis=None, num_points=101):
    """CHSH value of the phased singlet as a function of the relative phase.

    Parameters
    ----------
    phis : array-like or NoneType
        Relative phases in radians.  If None, `num_points` values evenly
        spaced over [0, 2 pi] are used. (default=None)
    num_points : int
        Number of phases when `phis` is None. (default=101)

    Returns
    -------
    curve : pds.DataFrame
        Columns 'phi', 's_canonical' (operator evaluation at the canonical
        settings), 's_formula' (sqrt(2) + sqrt(2) |cos(phi)|) and
        's_in_plane_bound' (2 sqrt(1 + cos^2(phi))).

    """

    if phis is None:
        if int(num_points) != num_points or num_points < 2:
            raise ConfigError('Curve needs at least 2 points, got {:}'.format(
                num_points))
        phis = np.linspace(0.0, 2.0 * np.pi, int(num_points))
    phis = np.asarray(phis, dtype=float)

    source = singlet()
    angles = ChshAngles.canonical()
    s_canon = list()
    for phi in phis:
        # Twice the left-arm angle is the relative phase
        phased = apply_phase(source, ACSetup(mu=1.0, lambda1=0.5 * phi,
                                             lambda2=0.0))
        s_canon.append(s_value(phased, angles).s)

    pysat.logger.info('Evaluated CHSH curve at {:d} phases'.format(len(phis)))

    return pds.DataFrame({'phi': phis, 's_canonical': s_canon,
                          's_formula': np.sqrt(2.0) * (1.0 + np.abs(np.cos(phis))),
                          's_in_plane_bound': 2.0 * np.sqrt(1.0 + np.cos(phis)**2)})
