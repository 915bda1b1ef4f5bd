"""Backend selection for the hot numeric kernels.

The numba backend is used when numba imports cleanly, unless the
environment variable ``KF_NUMBA`` is set to ``0``/``false``/``off``, in
which case the pure-numpy implementations are used. Both backends are
always importable by name through :func:`get_backend` (the numba one only
when numba is installed), which is what the tests and the benchmark use.
"""
import importlib
import os
from types import ModuleType

KERNELS = ("unit_lower_inverse", "aux_recursion", "single_pass", "sweep")


def _numba_wanted():
    return os.environ.get("KF_NUMBA", "1").strip().lower() not in {"0", "false", "off", "no"}


def available_backends():
    names = ["numpy"]
    try:
        importlib.import_module("numba")
    except ImportError:
        return names
    return names + ["numba"]


def get_backend(name) -> ModuleType:
    if name not in ("numpy", "numba"):
        raise ValueError(f"unknown kernel backend {name!r}")
    return importlib.import_module(f"{__name__}._{name}")


if _numba_wanted() and "numba" in available_backends():
    BACKEND = "numba"
else:
    BACKEND = "numpy"

_impl = get_backend(BACKEND)
unit_lower_inverse = _impl.unit_lower_inverse
aux_recursion = _impl.aux_recursion
single_pass = _impl.single_pass
sweep = _impl.sweep
