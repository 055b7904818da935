"""Costas permutations: constructions, correlation scans, parity statistics."""

try:
    from ._core import *  # noqa: F401,F403
    from . import _core as _impl
except ImportError:  # core built out-of-tree (e.g. a plain CMake build)
    import os
    import sys

    _dir = os.environ.get("COSTAS_CORE_DIR")
    if not _dir:
        raise
    sys.path.insert(0, _dir)
    import _core as _impl  # noqa: F401

    _names = [n for n in dir(_impl) if not n.startswith("_")]
    globals().update({n: getattr(_impl, n) for n in _names})

__all__ = [n for n in dir(_impl) if not n.startswith("_")]
