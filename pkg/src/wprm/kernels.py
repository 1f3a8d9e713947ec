"""Kernel selection: compiled extension when available, numpy fallback otherwise.

Set WPRM_PURE_PYTHON=1 to force the fallback.
"""
import os

from . import _kernels_py

BACKEND = "python"
_impl = _kernels_py

if os.environ.get("WPRM_PURE_PYTHON", "") not in ("1", "true", "yes"):
    try:
        from . import _kernels as _compiled
    except ImportError:  # extension not built
        _compiled = None
    if _compiled is not None:
        _impl = _compiled
        BACKEND = "cython"


def backends():
    """Mapping name -> module for every importable backend."""
    out = {"python": _kernels_py}
    try:
        from . import _kernels as mod
        out["cython"] = mod
    except ImportError:
        pass
    return out


def rref(M, F, impl=None):
    m = impl or _impl
    return m.rref(M, F.add_table, F.sub_table, F.mul_table, F.inv_table)


def exists_subset_rank_le(M, t, target, F, impl=None):
    m = impl or _impl
    return m.exists_subset_rank_le(M, t, target, F.add_table, F.sub_table, F.mul_table, F.inv_table)
