"""Backend selection for the integer elimination kernels.

The compiled extension is preferred when importable; setting the
environment variable PERIPLECTIC_PURE=1 forces the pure-Python kernels.
Compiled calls that overflow 64 bits fall back to the pure path, so results
are always exact.
"""

from __future__ import annotations

import os

from . import _pure

_speedups = None
if not os.environ.get("PERIPLECTIC_PURE"):
    try:
        from . import _speedups  # type: ignore[no-redef]
    except ImportError:
        _speedups = None

COMPILED = _speedups is not None


def backend_name() -> str:
    return "compiled" if COMPILED else "pure"


def echelon_int(mat: list[list[int]]) -> tuple[list[list[int]], list[int]]:
    if _speedups is not None:
        try:
            return _speedups.echelon(mat)
        except OverflowError:
            pass
    return _pure.echelon(mat)


def matmul_int(a: list[list[int]], b: list[list[int]]) -> list[list[int]]:
    if _speedups is not None:
        try:
            return _speedups.matmul(a, b)
        except OverflowError:
            pass
    return _pure.matmul(a, b)
