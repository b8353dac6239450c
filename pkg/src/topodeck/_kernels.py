"""Kernel backend selection.

The numba backend is used when numba is installed, unless the environment
variable ``TOPODECK_PURE_NUMPY`` is set to a truthy value.

Once loaded, the numba kernels are faster at every size, but loading them
costs a few tenths of a second (and a compile on a cold cache). So the first
``WARMUP_CALLS`` kernel calls in a process run on numpy and the numba module
is imported only when a job has proved long enough to amortize it.
``TOPODECK_NUMBA_WARMUP`` overrides the count (0 switches immediately).
"""

import importlib.util
import os

from . import _kernels_numpy

_TRUTHY = {"1", "true", "yes", "on"}
_pure = os.environ.get("TOPODECK_PURE_NUMPY", "").strip().lower() in _TRUTHY

if _pure or importlib.util.find_spec("numba") is None:
    BACKEND = "numpy"
else:
    BACKEND = "numba"

WARMUP_CALLS = int(os.environ.get("TOPODECK_NUMBA_WARMUP", "300"))

_calls = 0
_impl = _kernels_numpy


def _select():
    global _calls, _impl
    if _impl is _kernels_numpy and BACKEND == "numba":
        _calls += 1
        if _calls > WARMUP_CALLS:
            from . import _kernels_numba

            _impl = _kernels_numba
    return _impl


def active() -> str:
    """Name of the module currently serving kernel calls."""
    return "numba" if _impl is not _kernels_numpy else "numpy"


def refine(adj, colors):
    return _select().refine(adj, colors)


def min_encoding(mult, opens, loops, perms):
    return _select().min_encoding(mult, opens, loops, perms)
