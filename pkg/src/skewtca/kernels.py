"""Hot enumeration kernels, compiled when available.

The compiled extension ``skewtca._ckernels`` is used if it imports; otherwise
the pure-Python twins in ``skewtca._pykernels`` are used.  Set
``SKEWTCA_PURE_PYTHON=1`` to force the fallback.
"""
from __future__ import annotations

import os

from skewtca import _pykernels

python = _pykernels
compiled = None
if not os.environ.get("SKEWTCA_PURE_PYTHON"):
    try:
        from skewtca import _ckernels as compiled
    except ImportError:  # extension not built
        compiled = None

_impl = compiled if compiled is not None else python
BACKEND = "cython" if compiled is not None else "python"

lr_count = _impl.lr_count
kostka = _impl.kostka
ssyt_count = _impl.ssyt_count
mono_mul = _impl.mono_mul


def backends() -> dict:
    """Every importable backend keyed by name (used by tests and benchmarks)."""
    out = {"python": python}
    if compiled is not None:
        out["cython"] = compiled
    return out
