"""Backend selection for the numeric kernels.

Kernels are compiled with numba when it is importable and the environment
variable ``SYMSAX_DISABLE_NUMBA`` is unset (or set to ``0``). Otherwise the
pure-numpy implementations are used. The flag is read once at import time.
"""

import os

_flag = os.environ.get("SYMSAX_DISABLE_NUMBA", "").strip().lower()
DISABLED_BY_ENV = _flag not in ("", "0", "false", "no")

try:
    if DISABLED_BY_ENV:
        raise ImportError("numba disabled via SYMSAX_DISABLE_NUMBA")
    from numba import config as _numba_config
    from numba import njit, prange

    # the bundled TBB is often too old and numba warns on every first launch
    _numba_config.THREADING_LAYER_PRIORITY = ["omp", "workqueue", "tbb"]
    HAVE_NUMBA = True
except ImportError:
    HAVE_NUMBA = False
    prange = range

    def njit(*args, **kwargs):
        if len(args) == 1 and callable(args[0]) and not kwargs:
            return args[0]
        return lambda fn: fn


BACKEND = "numba" if HAVE_NUMBA else "numpy"
