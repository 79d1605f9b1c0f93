"""Kernel backend selection.

Prefers the compiled extension, falling back to the pure-Python kernels.
Set ``SEPDUAL_PURE=1`` in the environment to force the fallback (useful for
benchmarking and for exercising both code paths in tests).
"""

import os

from . import _pure

if os.environ.get("SEPDUAL_PURE"):
    _impl = _pure
else:
    try:
        from . import _fast as _impl  # type: ignore[no-redef]
    except ImportError:
        _impl = _pure

BACKEND = "pure" if _impl is _pure else "compiled"

order2 = _impl.order2
shift2 = _impl.shift2
scan_members = _impl.scan_members
