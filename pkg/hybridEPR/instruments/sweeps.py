# Full author list can be found in the CHANGELOG and git history.
#
# Distributed under the BSD 3-Clause License.
# ----------------------------------------------------------------------------
"""Fidelity and Bures-distance maps over two setup parameters.

A sweep evaluates every cell of a (p1, p2) grid through the full pipeline,
``apply_phase`` on the singlet, then ``fidelity_pure`` and ``bures_distance``.
For 'ac' grids p1 is the dipole moment mu and p2 the line-charge difference
lambda_E (carried on the left arm); for 'hmw' grids p1 is d and p2 lambda_B.

Cells are returned row-major with p1 as the outer, ascending index.

"""

import concurrent.futures
import dataclasses
import json

import numpy as np
import pandas as pds

import pysat

from hybridEPR.instruments.methods import grids
from hybridEPR.methods.measures import bures_distance
from hybridEPR.methods.measures import fidelity_pure
from hybridEPR.methods.phases import ACSetup
from hybridEPR.methods.phases import apply_phase
from hybridEPR.methods.phases import HMWSetup
from hybridEPR.methods.qstate import singlet
from hybridEPR.utils import ConfigError

SWEEP_KINDS = ('ac', 'hmw')
QUANTITIES = ('fidelity', 'bures', 'both')
COLUMNS = ['p1', 'p2', 'fidelity', 'bures']

# Parameter names and descriptions of each sweep kind
_AXIS_LABELS = {'ac': (('mu', 'Magnetic dipole moment'),
                       ('lambda_e', 'Line-charge density difference')),
                'hmw': (('d', 'Electric dipole moment'),
                        ('lambda_b', 'Magnetic line-charge density'))}

CSV_FLOAT_FORMAT = '%.9g'


@dataclasses.dataclass(frozen=True)
class SweepGrid(object):
    """Parameter grid of a sweep.

    Parameters
    ----------
    setup_kind : str
        'ac' or 'hmw'. (default='ac')
    param1_range : tuple
        (min, max, count) of mu or d. (default=(0.0, 4.0, 201))
    param2_range : tuple
        (min, max, count) of lambda_E or lambda_B. (default=(-4.0, 4.0, 201))
    quantity : str
        Quantity reported in summaries: 'fidelity', 'bures' or 'both'.
        Files always carry both columns. (default='both')

    """

    setup_kind: str = 'ac'
    param1_range: tuple = (0.0, 4.0, 201)
    param2_range: tuple = (-4.0, 4.0, 201)
    quantity: str = 'both'

    def __post_init__(self):
        """Validate the grid."""
        if self.setup_kind not in SWEEP_KINDS:
            raise ConfigError(' '.join(('Sweeps support setup kinds',
                                        '{:}, got {:}'.format(
                                            ', '.join(SWEEP_KINDS),
                                            self.setup_kind))))
        if self.quantity not in QUANTITIES:
            raise ConfigError('Unknown sweep quantity {:}'.format(self.quantity))

        grids._check_range('p1', self.param1_range)
        grids._check_range('p2', self.param2_range)

        # Normalize to (float, float, int)
        for name in ('param1_range', 'param2_range'):
            rng = getattr(self, name)
            object.__setattr__(self, name,
                               (float(rng[0]), float(rng[1]), int(rng[2])))

    @property
    def shape(self):
        """Tuple (count1, count2)."""
        return self.param1_range[2], self.param2_range[2]

    @property
    def axis_names(self):
        """Physical names of p1 and p2."""
        return tuple(label[0] for label in _AXIS_LABELS[self.setup_kind])

    def p1_values(self):
        """Values of the outer parameter."""
        return grids.grid_values(self.param1_range)

    def p2_values(self):
        """Values of the inner parameter."""
        return grids.grid_values(self.param2_range)

    def to_dict(self):
        """Serialize to a plain dict."""
        return {'setup_kind': self.setup_kind,
                'param1_range': list(self.param1_range),
                'param2_range': list(self.param2_range),
                'quantity': self.quantity,
                'param_names': list(self.axis_names)}


@dataclasses.dataclass(frozen=True)
class SweepCell(object):
    """One grid point of a sweep."""

    p1: float
    p2: float
    fidelity: float
    bures: float

    def as_row(self):
        """Return [p1, p2, fidelity, bures]."""
        return [self.p1, self.p2, self.fidelity, self.bures]


def _grid_setup(kind, p1, p2):
    """Build the phase setup of one cell."""

    if kind == 'ac':
        return ACSetup(mu=p1, lambda1=p2, lambda2=0.0)

    return HMWSetup(d=p1, lambda_b=p2)


def _sweep_row(kind, source, p1, p2_vals):
    """Evaluate all cells with a fixed outer parameter."""

    row = list()
    for p2 in p2_vals:
        phased = apply_phase(source, _grid_setup(kind, p1, p2))
        fid = float(fidelity_pure(source, phased))
        row.append(SweepCell(p1=float(p1), p2=float(p2), fidelity=fid,
                             bures=bures_distance(fid)))

    return row


def run_sweep(grid, n_workers=None):
    """Evaluate fidelity and Bures distance over a parameter grid.

    Parameters
    ----------
    grid : SweepGrid
        Grid to evaluate.
    n_workers : int or NoneType
        Number of threads evaluating rows.  If None, the
        `HYBRIDEPR_SWEEP_WORKERS` environment variable is read, falling back
        to a single thread. (default=None)

    Returns
    -------
    cells : list of SweepCell
        ``count1 * count2`` cells, p1 outer and ascending.

    """

    workers = grids.sweep_workers(n_workers)
    source = singlet()
    p2_vals = grid.p2_values()

    def row_func(p1):
        return _sweep_row(grid.setup_kind, source, p1, p2_vals)

    pysat.logger.info(' '.join(('Running {:} sweep of'.format(grid.setup_kind),
                                '{:d} x {:d} cells on'.format(*grid.shape),
                                '{:d} thread(s)'.format(workers))))

    if workers == 1:
        rows = [row_func(p1) for p1 in grid.p1_values()]
    else:
        # Executor.map yields rows in submission order
        with concurrent.futures.ThreadPoolExecutor(max_workers=workers) as pool:
            rows = list(pool.map(row_func, grid.p1_values()))

    return [cell for row in rows for cell in row]


def sweep_frame(cells, grid):
    """Tabulate sweep cells with variable metadata.

    Parameters
    ----------
    cells : list of SweepCell
        Output of `run_sweep`.
    grid : SweepGrid
        Grid that produced the cells.

    Returns
    -------
    data : pds.DataFrame
        Columns p1, p2, fidelity and bures, one row per cell.
    meta : pysat.Meta
        Object containing metadata such as column names and units.

    """

    data = pds.DataFrame([cell.as_row() for cell in cells], columns=COLUMNS)

    meta = pysat.Meta()
    for col, (name, desc) in zip(('p1', 'p2'), _AXIS_LABELS[grid.setup_kind]):
        rng = grid.param1_range if col == 'p1' else grid.param2_range
        meta[col] = {meta.labels.units: 'natural units',
                     meta.labels.name: name,
                     meta.labels.desc: desc,
                     meta.labels.min_val: rng[0],
                     meta.labels.max_val: rng[1],
                     meta.labels.fill_val: np.nan}
    meta['fidelity'] = {
        meta.labels.units: '',
        meta.labels.name: 'Fidelity',
        meta.labels.desc: 'Overlap magnitude of phased and initial singlet',
        meta.labels.min_val: 0.0,
        meta.labels.max_val: 1.0,
        meta.labels.fill_val: np.nan}
    meta['bures'] = {
        meta.labels.units: '',
        meta.labels.name: 'Bures distance',
        meta.labels.desc: 'Bures distance sqrt(2 (1 - F)) to the initial singlet',
        meta.labels.min_val: 0.0,
        meta.labels.max_val: np.sqrt(2.0),
        meta.labels.fill_val: np.nan}

    return data, meta


def sweep_summary(cells, quantity='both'):
    """Cell count and extrema of the swept quantities.

    Parameters
    ----------
    cells : list of SweepCell
        Output of `run_sweep`.
    quantity : str
        'fidelity', 'bures' or 'both'. (default='both')

    Returns
    -------
    summary : dict
        'cells' plus '<quantity>_min' and '<quantity>_max' entries.

    """

    names = ['fidelity', 'bures'] if quantity == 'both' else [quantity]
    summary = {'cells': len(cells)}
    for name in names:
        values = np.array([getattr(cell, name) for cell in cells])
        summary['{:}_min'.format(name)] = float(values.min())
        summary['{:}_max'.format(name)] = float(values.max())

    return summary


def write_sweep_csv(cells, path):
    """Write cells as CSV with header 'p1,p2,fidelity,bures'.

    Parameters
    ----------
    cells : list of SweepCell
        Output of `run_sweep`.
    path : str or path-like
        Output file.

    Note
    ----
    Values are printed with 9 significant digits, rows end in LF.

    """

    data = pds.DataFrame([cell.as_row() for cell in cells], columns=COLUMNS)
    data.to_csv(path, index=False, float_format=CSV_FLOAT_FORMAT,
                lineterminator='\n')
    pysat.logger.info('Wrote {:d} sweep cells to {:}'.format(len(cells), path))

    return


def write_sweep_json(cells, grid, path):
    """Write cells as JSON, {"grid": {...}, "cells": [[p1, p2, F, D], ...]}.

    Parameters
    ----------
    cells : list of SweepCell
        Output of `run_sweep`.
    grid : SweepGrid
        Grid that produced the cells.
    path : str or path-like
        Output file.

    """

    with open(path, 'w') as fout:
        json.dump({'grid': grid.to_dict(),
                   'cells': [cell.as_row() for cell in cells]}, fout)
        fout.write('\n')
    pysat.logger.info('Wrote {:d} sweep cells to {:}'.format(len(cells), path))

    return


def read_sweep_csv(path):
    """Read a sweep CSV back into cells.

    Parameters
    ----------
    path : str or path-like
        File written by `write_sweep_csv`.

    Returns
    -------
    cells : list of SweepCell
        Cells in file order.

    """

    data = pds.read_csv(path, float_precision='round_trip')
    if list(data.columns) != COLUMNS:
        raise ConfigError(' '.join(('Unexpected sweep columns',
                                    '{:}'.format(list(data.columns)))))

    return [SweepCell(*[float(val) for val in row])
            for row in data[COLUMNS].itertuples(index=False)]
