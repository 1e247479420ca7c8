"""Select the residue-sum kernel at import time.

The compiled extension is preferred; set ``HBSUM_PURE_PYTHON=1`` to force
the pure-Python fallback.  ``BACKEND`` names the active implementation.
"""
import os

from . import _pykernel

BERNOULLI = _pykernel.BERNOULLI
BERNOULLI_BAR = _pykernel.BERNOULLI_BAR
EULER = _pykernel.EULER
EULER_BAR = _pykernel.EULER_BAR

_impl = _pykernel
BACKEND = "python"
if not os.environ.get("HBSUM_PURE_PYTHON"):
    try:
        from . import _ckernel as _impl  # type: ignore[no-redef]

        BACKEND = "cython"
    except ImportError:
        pass

periodic_column = _impl.periodic_column
weighted_dot = _impl.weighted_dot
dot_matrix = _impl.dot_matrix
