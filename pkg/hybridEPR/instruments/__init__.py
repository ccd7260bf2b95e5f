# Full author list can be found in the CHANGELOG and git history.
#
# Distributed under the BSD 3-Clause License.
# ----------------------------------------------------------------------------
"""Simulation harness producing sweeps, summary tables and random states.

Modules
-------
sweeps
    Two-parameter fidelity and Bures-distance grids for the AC and HMW
    setups (`run_sweep`), their pandas frames with pysat metadata
    (`sweep_frame`), extrema (`sweep_summary`) and CSV or JSON files
    (`write_sweep_csv`, `write_sweep_json`, `read_sweep_csv`).
reports
    The five-setup measure table (`table1_report`, `table1_frame`,
    `format_table1`) and the CHSH phase curve (`chsh_curve`).
random_states
    Seeded Haar-random two-qubit pure states (`random_pure_state`,
    `random_pure_states`).
methods
    Range parsing and worker-count helpers shared by the modules above.

"""

from hybridEPR.instruments import methods  # noqa F401
from hybridEPR.instruments import random_states  # noqa F401
from hybridEPR.instruments import reports  # noqa F401
from hybridEPR.instruments import sweeps  # noqa F401

__all__ = ['random_states', 'reports', 'sweeps']
