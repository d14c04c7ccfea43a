"""Homology kernels: compiled extension when available, pure Python otherwise.

Set ``MONIDEAL_PURE=1`` to force the pure-Python implementation.
"""

from __future__ import annotations

import importlib
import os

from . import _pure

BACKEND = "pure"
compiled = None
if os.environ.get("MONIDEAL_PURE", "") not in ("1", "true", "yes"):
    try:
        compiled = importlib.import_module("._ext", __name__)
        BACKEND = "cython"
    except ImportError:
        compiled = None


def faces_by_dimension(facets):
    if compiled is not None:
        return compiled.faces_by_dimension(facets)
    return _pure.faces_by_dimension(facets)


def reduced_homology(facets, characteristic: int = 0) -> list[int]:
    if compiled is not None:
        try:
            return compiled.reduced_homology(facets, characteristic)
        except (OverflowError, MemoryError, ValueError):
            pass
    return _pure.reduced_homology(facets, characteristic)
