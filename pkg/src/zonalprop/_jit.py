"""Optional numba acceleration for the scalar kernels.

The kernels in ``_kernels.py`` are plain Python over ``math`` functions.
When numba is importable and ``ZONALPROP_DISABLE_JIT`` is not set, they are
compiled with ``@njit``; otherwise the same source runs as-is.  A pure twin
of the kernel module can always be loaded for instrumented evaluation
(transcendental-call counting) independent of the active mode.
"""

import importlib.util
import os
import sys

_DISABLE_VAR = "ZONALPROP_DISABLE_JIT"


def jit_disabled() -> bool:
    return os.environ.get(_DISABLE_VAR, "").strip().lower() in ("1", "true", "yes", "on")


try:
    import numba

    _HAVE_NUMBA = True
except ImportError:  # pragma: no cover - exercised only without numba
    numba = None
    _HAVE_NUMBA = False


def numba_available() -> bool:
    return _HAVE_NUMBA


def jit_active() -> bool:
    return _HAVE_NUMBA and not jit_disabled()


def kernel(func):
    """Compile a scalar kernel with numba when active, else return it as-is."""
    if jit_active():
        return numba.njit(cache=False, fastmath=False)(func)
    return func


_pure_twin = None


def load_pure_kernels():
    """Load (once) a pure-Python twin of ``zonalprop._kernels``.

    The twin never goes through numba, so its module-level math bindings can
    be swapped for counting wrappers and its timings reflect the fallback
    path even when the main module is compiled.
    """
    global _pure_twin
    if _pure_twin is not None:
        return _pure_twin
    from . import _kernels  # noqa: F401  (ensures package import order)

    path = os.path.join(os.path.dirname(__file__), "_kernels.py")
    spec = importlib.util.spec_from_file_location("zonalprop._kernels_pure", path)
    module = importlib.util.module_from_spec(spec)
    old = os.environ.get(_DISABLE_VAR)
    os.environ[_DISABLE_VAR] = "1"
    try:
        sys.modules["zonalprop._kernels_pure"] = module
        spec.loader.exec_module(module)
    finally:
        if old is None:
            os.environ.pop(_DISABLE_VAR, None)
        else:
            os.environ[_DISABLE_VAR] = old
    _pure_twin = module
    return module
