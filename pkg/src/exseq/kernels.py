"""Backtracking kernels, compiled when available.

The Cython extension ``exseq._kernels`` is used if it was built and
``EXSEQ_PURE_PYTHON`` is not set; otherwise ``exseq._kernels_py``. Inputs
wider than 64 items always take the Python path.
"""

from __future__ import annotations

import logging
import os

from . import _kernels_py as python_backend

log = logging.getLogger(__name__)

compiled_backend = None
if not os.environ.get("EXSEQ_PURE_PYTHON"):
    try:
        from . import _kernels as compiled_backend  # type: ignore[no-redef]
    except ImportError:  # extension not built
        log.debug("compiled kernels unavailable, using pure Python")

BACKEND = "cython" if compiled_backend is not None else "python"
_WORD = 64


def _pick(width: int):
    if compiled_backend is not None and width <= _WORD:
        return compiled_backend
    return python_backend


def extend_sequences(masks: list[int], length: int, prefix: tuple[int, ...] = ()) -> list[tuple[int, ...]]:
    return _pick(len(masks)).extend_sequences(list(masks), length, tuple(prefix))


def count_sequences(masks: list[int], length: int, prefix: tuple[int, ...] = ()) -> int:
    return int(_pick(len(masks)).count_sequences(list(masks), length, tuple(prefix)))


def extend_trees(n_points, ends, cross, size, prefix=()) -> list[tuple[int, ...]]:
    return _pick(len(ends)).extend_trees(n_points, list(ends), list(cross), size, tuple(prefix))


def count_trees(n_points, ends, cross, size, prefix=()) -> int:
    return int(_pick(len(ends)).count_trees(n_points, list(ends), list(cross), size, tuple(prefix)))
