# Full author list can be found in the CHANGELOG and git history.
#
# Distributed under the BSD 3-Clause License.
# ----------------------------------------------------------------------------
"""Allow ``python -m hybridEPR``."""

import sys

from hybridEPR.cli import main

sys.exit(main())
