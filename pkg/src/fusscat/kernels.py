"""Backend selection for the dissection search.

The compiled ``_kernels`` extension is used when it imports; otherwise the
pure-Python ``_kernels_py`` module.  Set ``FUSSCAT_PURE_PYTHON=1`` to force
the fallback.
"""

from __future__ import annotations

import os
from types import ModuleType

from fusscat import _kernels_py


def _load() -> tuple[ModuleType, str]:
    if os.environ.get("FUSSCAT_PURE_PYTHON", "") not in ("", "0"):
        return _kernels_py, "python"
    try:
        from fusscat import _kernels  # type: ignore[attr-defined]
    except ImportError:
        return _kernels_py, "python"
    return _kernels, "cython"


_impl, BACKEND = _load()

face_histograms = _impl.face_histograms
diagonal_sets = _impl.diagonal_sets


def available_backends() -> dict[str, ModuleType]:
    backends: dict[str, ModuleType] = {"python": _kernels_py}
    try:
        from fusscat import _kernels  # type: ignore[attr-defined]
    except ImportError:
        pass
    else:
        backends["cython"] = _kernels
    return backends
