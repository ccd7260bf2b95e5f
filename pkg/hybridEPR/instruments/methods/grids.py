# Full author list can be found in the CHANGELOG and git history.
#
# Distributed under the BSD 3-Clause License.
# ----------------------------------------------------------------------------
"""Methods to parse and validate parameter grids for the sweeps."""

import os

import numpy as np

from hybridEPR.utils import ConfigError

WORKERS_ENV = 'HYBRIDEPR_SWEEP_WORKERS'


def parse_range(text):
    """Parse a range given as 'min:max:count'.

    Parameters
    ----------
    text : str
        Range with inclusive endpoints, e.g. '-4:4:201'.

    Returns
    -------
    rng : tuple
        (min, max, count) as (float, float, int).

    Raises
    ------
    ConfigError
        If the text is malformed or the range is invalid.

    """

    parts = str(text).split(':')
    if len(parts) != 3:
        raise ConfigError(' '.join(('Range must be given as min:max:count,',
                                    'got {:}'.format(text))))
    try:
        rng = (float(parts[0]), float(parts[1]), int(parts[2]))
    except ValueError as verr:
        raise ConfigError('Invalid range {:}: {:}'.format(text, verr))

    _check_range(text, rng)

    return rng


def _check_range(label, rng):
    """Check that a (min, max, count) range is usable.

    Parameters
    ----------
    label : str
        Name used in error messages.
    rng : tuple
        (min, max, count).

    Note
    ----
    ``min == max`` is accepted and yields `count` identical values.

    """

    try:
        rmin, rmax, count = rng
    except (TypeError, ValueError):
        raise ConfigError('Range {:} must be (min, max, count)'.format(label))

    if not (np.isfinite(rmin) and np.isfinite(rmax)):
        raise ConfigError('Range {:} has non-finite limits'.format(label))
    if int(count) != count or count < 2:
        raise ConfigError('Range {:} needs an integer count >= 2'.format(label))
    if rmin > rmax:
        raise ConfigError(' '.join(('Range {:} has min {:}'.format(label, rmin),
                                    'greater than max {:}'.format(rmax))))

    return


def grid_values(rng):
    """Evenly spaced values including both endpoints.

    Parameters
    ----------
    rng : tuple
        (min, max, count).

    Returns
    -------
    values : np.ndarray
        ``count`` values from min to max.

    """

    return np.linspace(rng[0], rng[1], int(rng[2]))


def sweep_workers(n_workers=None):
    """Number of threads used to evaluate sweep rows.

    Parameters
    ----------
    n_workers : int or NoneType
        Explicit worker count.  If None, the `HYBRIDEPR_SWEEP_WORKERS`
        environment variable is used, falling back to 1. (default=None)

    Returns
    -------
    int
        Positive worker count.

    """

    if n_workers is None:
        n_workers = os.environ.get(WORKERS_ENV, '1')

    try:
        workers = int(n_workers)
    except ValueError:
        raise ConfigError('Invalid sweep worker count {:}'.format(n_workers))
    if workers < 1:
        raise ConfigError('Sweep worker count must be positive, got {:}'.format(
            workers))

    return workers
