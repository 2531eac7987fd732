"""Backend selection for the PBW rewriting kernel.

The compiled ``_kernel`` extension is used when it imports; otherwise the
pure-Python ``_pykernel``. Set ``QGR_PURE_PYTHON=1`` to force the fallback.
``QGR_MEMO_LIMIT`` caps each memo table of a kernel (0 means unbounded).
"""

import os
import threading

if os.environ.get("QGR_PURE_PYTHON"):
    from ._pykernel import PBWKernel
    BACKEND = "python"
else:
    try:
        from ._kernel import PBWKernel
        BACKEND = "cython"
    except ImportError:
        from ._pykernel import PBWKernel
        BACKEND = "python"

__all__ = ["BACKEND", "PBWKernel", "get_kernel", "memo_limit"]

_kernels = {}
_lock = threading.Lock()


def memo_limit():
    try:
        return max(0, int(os.environ.get("QGR_MEMO_LIMIT", "0")))
    except ValueError:
        return 0


def get_kernel(m, n, qinv=False):
    key = (m, n, bool(qinv))
    k = _kernels.get(key)
    if k is None:
        with _lock:
            k = _kernels.get(key)
            if k is None:
                k = PBWKernel(m, n, bool(qinv), memo_limit())
                _kernels[key] = k
    return k
