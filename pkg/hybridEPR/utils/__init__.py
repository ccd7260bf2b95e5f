# Full author list can be found in the CHANGELOG and git history.
#
# Distributed under the BSD 3-Clause License.
# ----------------------------------------------------------------------------
"""Shared exceptions and helpers for hybridEPR."""

from hybridEPR.utils._core import check_finite  # noqa F401
from hybridEPR.utils._core import ConfigError  # noqa F401
from hybridEPR.utils._core import DomainError  # noqa F401
from hybridEPR.utils._core import HybridEPRError  # noqa F401
from hybridEPR.utils._core import InvariantViolation  # noqa F401
from hybridEPR.utils._core import NonHermitianExpectation  # noqa F401
from hybridEPR.utils._core import NotHermitian  # noqa F401
from hybridEPR.utils._core import NotNormalized  # noqa F401
from hybridEPR.utils._core import NotPSD  # noqa F401
from hybridEPR.utils._core import wrap_phase  # noqa F401
