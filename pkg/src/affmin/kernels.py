"""Kernel dispatch: compiled extension when importable, numpy otherwise.

Set ``AFFMIN_PURE_PYTHON=1`` to force the fallback.
"""
import os

BACKEND = "python"

if os.environ.get("AFFMIN_PURE_PYTHON", "") not in ("1", "true", "yes"):
    try:
        from ._ckernels import conditional_blocks, measured_overlap

        BACKEND = "cython"
    except ImportError:  # pragma: no cover - depends on build
        pass

if BACKEND == "python":
    from ._pykernels import conditional_blocks, measured_overlap

__all__ = ["BACKEND", "conditional_blocks", "measured_overlap"]
