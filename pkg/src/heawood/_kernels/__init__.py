"""Kernel backend selection.

The package ships two implementations of its hot primitives: a compiled
Cython module (``_speed``) and a pure-Python twin (``pure``).  The compiled
one is preferred when importable; set ``HEAWOOD_PURE=1`` to force the
fallback (useful for benchmarking and debugging).
"""

import os

if os.environ.get("HEAWOOD_PURE") == "1":
    from . import pure as _backend
else:
    try:
        from . import _speed as _backend  # type: ignore[attr-defined]
    except ImportError:
        from . import pure as _backend

BACKEND = _backend.BACKEND
planar = _backend.planar
triangle_free = _backend.triangle_free
canon = _backend.canon
accept_child = _backend.accept_child
apex_witness = _backend.apex_witness
