"""Select the arithmetic kernel at import time.

The Cython build of ``qhopf._kernel`` is used when it is importable;
otherwise, or when ``QHOPF_PURE_PYTHON=1`` is set, the plain-Python source is
loaded.  Both expose the same names.
"""

from __future__ import annotations

import importlib.util
import os
import sys
from pathlib import Path

_SRC = Path(__file__).with_name("_kernel.py")


def load_pure_kernel():
    """Load ``_kernel.py`` as source, bypassing any compiled extension."""
    name = "qhopf._kernel_py"
    mod = sys.modules.get(name)
    if mod is None:
        spec = importlib.util.spec_from_file_location(name, _SRC)
        mod = importlib.util.module_from_spec(spec)
        sys.modules[name] = mod
        spec.loader.exec_module(mod)
    return mod


def _select():
    if os.environ.get("QHOPF_PURE_PYTHON", "") not in ("", "0"):
        return load_pure_kernel(), False
    try:
        from . import _kernel as mod
    except ImportError:  # pragma: no cover - source always importable
        return load_pure_kernel(), False
    compiled = not str(getattr(mod, "__file__", "")).endswith(".py")
    return mod, compiled


kernel, COMPILED = _select()
