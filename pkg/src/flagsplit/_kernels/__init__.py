"""Counting kernels with a compiled fast path.

The Cython extension is used when it was built; otherwise the pure-Python
implementation takes over.  ``BACKEND`` records which one is active.
"""

try:
    from . import _speedups as _impl

    BACKEND = "cython"
except ImportError:  # pragma: no cover - depends on the build
    from . import _pure as _impl

    BACKEND = "pure"

inversion_count = _impl.inversion_count
has_repeat = _impl.has_repeat
ssyt_count = _impl.ssyt_count

__all__ = ["BACKEND", "has_repeat", "inversion_count", "ssyt_count"]
