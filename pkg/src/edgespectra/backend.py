"""Kernel backend selection.

The EDGESPECTRA_BACKEND environment variable picks the search kernel build:
"numba" for the jitted kernel, "python" for the interpreted one.  Unset, the
jitted kernel is used whenever numba imports cleanly.  Both run the same
kernel source; only speed differs.
"""

from __future__ import annotations

import importlib.util
import os

from . import kernels

ENV_VAR = "EDGESPECTRA_BACKEND"
_CHOICES = ("numba", "python")


def backend_name() -> str:
    """Active backend name, re-read from the environment on every call."""
    raw = os.environ.get(ENV_VAR, "").strip().lower()
    if raw:
        if raw not in _CHOICES:
            raise ValueError(f"{ENV_VAR}={raw!r}; expected one of {_CHOICES}")
        if raw == "numba" and importlib.util.find_spec("numba") is None:
            raise ValueError(f"{ENV_VAR}=numba but numba is not installed")
        return raw
    return "numba" if importlib.util.find_spec("numba") is not None else "python"


def active_kernel():
    return kernels.build_kernel(backend_name() == "numba")


def chunk_nodes() -> int:
    """Node quota per kernel call; sets the budget-check granularity."""
    return 2_000_000 if backend_name() == "numba" else 50_000
