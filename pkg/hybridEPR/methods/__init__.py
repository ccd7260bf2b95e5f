# Full author list can be found in the CHANGELOG and git history.
#
# Distributed under the BSD 3-Clause License.
# ----------------------------------------------------------------------------
"""Provides the physics of entangled pairs in hybrid geometric-phase setups."""

from hybridEPR.methods import chsh
from hybridEPR.methods import linalg
from hybridEPR.methods import measurement
from hybridEPR.methods import measures
from hybridEPR.methods import phases
from hybridEPR.methods import qstate

__all__ = ['linalg', 'qstate', 'phases', 'measurement', 'chsh', 'measures']
