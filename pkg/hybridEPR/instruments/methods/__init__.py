# Full author list can be found in the CHANGELOG and git history.
#
# Distributed under the BSD 3-Clause License.
# ----------------------------------------------------------------------------
"""Provide grid parsing and worker settings for the hybridEPR harness."""

from hybridEPR.instruments.methods import grids  # noqa F401
