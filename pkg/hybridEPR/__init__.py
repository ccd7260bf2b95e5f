# Full author list can be found in the CHANGELOG and git history.
#
# Distributed under the BSD 3-Clause License.
# ----------------------------------------------------------------------------
"""Core library for hybridEPR.

hybridEPR simulates entangled spin pairs whose arms pick up geometric phases
in hybrid Aharonov-Bohm, Aharonov-Casher, He-McKellar-Wilkens, Berry and dual
Aharonov-Bohm setups, and evaluates how those phases show up in Bell tests and
entanglement measures.

Main Features
-------------
- Apply setup phases to two-qubit states and split them into global and
  relative parts
- Evaluate and maximize the CHSH statistic over measurement settings
- Compute concurrence, entanglement of formation, fidelity and Bures distance
- Produce parameter sweeps and summary tables from the command line

"""

import importlib.metadata

from hybridEPR import instruments
from hybridEPR import methods
from hybridEPR import utils

__all__ = ['instruments', 'methods', 'utils']

__version__ = importlib.metadata.version('hybridEPR')
