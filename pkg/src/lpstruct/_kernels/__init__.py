"""Kernel selection: compiled Cython pivot loop with a NumPy fallback.

Set ``LPSTRUCT_PURE_PYTHON=1`` to force the fallback (used by the benchmark
and by tests that compare the two backends).
"""

import os

from . import _simplex_py

if os.environ.get("LPSTRUCT_PURE_PYTHON"):
    _impl = _simplex_py
else:
    try:
        from . import _simplex_cy as _impl
    except ImportError:
        _impl = _simplex_py

simplex_iterate = _impl.simplex_iterate
BACKEND = _impl.BACKEND

STATUS_OPTIMAL = _simplex_py.STATUS_OPTIMAL
STATUS_UNBOUNDED = _simplex_py.STATUS_UNBOUNDED
STATUS_ITER_LIMIT = _simplex_py.STATUS_ITER_LIMIT
STATUS_SINGULAR = _simplex_py.STATUS_SINGULAR
