"""Pick the compiled kernel when importable, else the numpy fallback.

Set ``QWHASH_PURE_PYTHON=1`` to force the fallback.
"""

import os

from . import _kernel_py

if os.environ.get("QWHASH_PURE_PYTHON", "") not in ("", "0"):
    kernel = _kernel_py
    BACKEND = "python"
else:
    try:
        from . import _kernel as kernel  # type: ignore[attr-defined]

        BACKEND = "cython"
    except ImportError:
        kernel = _kernel_py
        BACKEND = "python"

__all__ = ["kernel", "BACKEND"]
