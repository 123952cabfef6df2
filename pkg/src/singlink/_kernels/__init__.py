"""Hot loops, with a compiled backend and a pure-Python fallback.

The compiled module ``_ckernels`` is used when it was built and importable,
unless ``SINGLINK_PURE_PYTHON=1`` is set.  Each wrapper also falls back to
Python when the inputs could overflow int64 arithmetic, so results never
depend on the backend.
"""
from __future__ import annotations

import os
from math import isqrt
from typing import List, Sequence, Tuple

from . import _pykernels

_INT64_SAFE = 1 << 62
_MAX_COMPILED_R = 16

try:
    if os.environ.get("SINGLINK_PURE_PYTHON", "") not in ("", "0"):
        raise ImportError("pure Python requested")
    from . import _ckernels  # type: ignore[attr-defined]
except ImportError:
    _ckernels = None

BACKEND = "compiled" if _ckernels is not None else "python"

__all__ = [
    "BACKEND",
    "available_backends",
    "get_backend",
    "lattice_counts",
    "negdef_minors",
    "sweep_exhaustive",
    "genus_box",
]


def available_backends() -> List[str]:
    return ["python"] + (["compiled"] if _ckernels is not None else [])


def get_backend(name: str):
    """Raw kernel module by name, for tests and benchmarks."""
    if name == "python":
        return _pykernels
    if name == "compiled" and _ckernels is not None:
        return _ckernels
    raise ValueError(f"backend {name!r} is not available")


def _hadamard_bound(rows: Sequence[Sequence[int]]) -> int:
    # upper bound for |any minor|: product of row 2-norms, rounded up
    bound = 1
    for row in rows:
        bound *= isqrt(sum(x * x for x in row)) + 1
    return bound


def _minors_fit(rows: Sequence[Sequence[int]]) -> bool:
    # elimination products are (minor * minor) sized
    return len(rows) <= _MAX_COMPILED_R and _hadamard_bound(rows) ** 2 < _INT64_SAFE


def lattice_counts(a: int, b: int, c: int) -> Tuple[int, int, int]:
    if _ckernels is not None and 3 * a * b * c < _INT64_SAFE:
        return _ckernels.lattice_counts(a, b, c)
    return _pykernels.lattice_counts(a, b, c)


def negdef_minors(rows: Sequence[Sequence[int]]) -> bool:
    if _ckernels is not None and _minors_fit(rows):
        return _ckernels.negdef_minors(rows)
    return _pykernels.negdef_minors(rows)


def sweep_exhaustive(offdiag: Sequence[Sequence[int]], n: int) -> Tuple[int, int, int, int]:
    if _ckernels is not None:
        worst = [list(row) for row in offdiag]
        for i in range(len(worst)):
            worst[i][i] = n
        if _minors_fit(worst):
            return _ckernels.sweep_exhaustive(offdiag, n)
    return _pykernels.sweep_exhaustive(offdiag, n)


def genus_box(adj: Sequence[Sequence[int]], det: int, weights: Sequence[int],
              gmax: int) -> List[Tuple[int, ...]]:
    if _ckernels is not None and len(weights) <= _MAX_COMPILED_R:
        bmax = max(abs(w) for w in weights) + 2 + 2 * gmax
        amax = max((abs(x) for row in adj for x in row), default=0)
        if len(weights) * amax * bmax < _INT64_SAFE and abs(det) < _INT64_SAFE:
            return _ckernels.genus_box(adj, det, weights, gmax)
    return _pykernels.genus_box(adj, det, weights, gmax)
