"""Backend selection for the hot quadrature kernel.

The compiled extension is used when importable; setting the environment
variable ``WAVECS_PURE_PYTHON=1`` forces the numpy fallback.
"""
import os

from . import _kernels_py

osc_lognormal_python = _kernels_py.osc_lognormal

try:
    from ._kernels import osc_lognormal as osc_lognormal_compiled
except ImportError:  # extension not built
    osc_lognormal_compiled = None

if osc_lognormal_compiled is not None and not os.environ.get("WAVECS_PURE_PYTHON"):
    osc_lognormal = osc_lognormal_compiled
    BACKEND = "cython"
else:
    osc_lognormal = osc_lognormal_python
    BACKEND = "python"

__all__ = ["osc_lognormal", "osc_lognormal_python", "osc_lognormal_compiled", "BACKEND"]
