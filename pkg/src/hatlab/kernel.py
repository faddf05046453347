"""Selects the refinement kernel: compiled if available, else pure Python.

Set ``HATLAB_KERNEL=python`` to force the fallback.
"""

from __future__ import annotations

import os

from . import _refine_py

BACKEND = "python"
refine = _refine_py.refine

if os.environ.get("HATLAB_KERNEL", "").lower() != "python":
    try:
        from . import _refine as _compiled
    except ImportError:
        pass
    else:
        refine = _compiled.refine
        BACKEND = "cython"


def backends() -> dict:
    """All importable kernels by name, for benchmarks and equivalence tests."""
    out = {"python": _refine_py.refine}
    try:
        from . import _refine as _compiled

        out["cython"] = _compiled.refine
    except ImportError:
        pass
    return out
