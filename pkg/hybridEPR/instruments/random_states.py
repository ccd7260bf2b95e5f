# Full author list can be found in the CHANGELOG and git history.
#
# Distributed under the BSD 3-Clause License.
# ----------------------------------------------------------------------------
"""Reproducible Haar-random two-qubit pure states.

The generator is numpy's PCG64 bit generator seeded through
``numpy.random.default_rng(seed)``.  Each state draws eight standard normals
with ``Generator.standard_normal(8)``; the first four are the real parts and
the last four the imaginary parts of the amplitudes, which are then divided by
their Euclidean norm.  This yields the unitarily invariant (Haar) measure.

"""

import numpy as np

from hybridEPR.methods.qstate import PureState2Q


def random_pure_state(seed):
    """Draw a Haar-random two-qubit pure state.

    Parameters
    ----------
    seed : int
        Seed for ``numpy.random.default_rng``.

    Returns
    -------
    state : PureState2Q
        Normalized state; identical for identical seeds.

    """

    draws = np.random.default_rng(seed).standard_normal(8)
    amp = draws[:4] + 1j * draws[4:]

    return PureState2Q(amp / np.linalg.norm(amp))


def random_pure_states(seed, count):
    """Yield `count` Haar-random states seeded with seed, seed + 1, ...

    Parameters
    ----------
    seed : int
        First seed.
    count : int
        Number of states.

    Yields
    ------
    state : PureState2Q
        Normalized state.

    """

    for offset in range(count):
        yield random_pure_state(seed + offset)
