"""Kernel backend selection.

The compiled extension is preferred when it imported cleanly; set
``PCF_PURE=1`` to force the pure-Python fallback. ``BACKEND`` records which
one is active, and :func:`get_backend` exposes both for parity tests and
benchmarks.
"""

from __future__ import annotations

import importlib
import os

from . import _pure

FOUND = _pure.FOUND
REFUTED = _pure.REFUTED
EXHAUSTED = _pure.EXHAUSTED

_speedups = None
if os.environ.get("PCF_PURE", "") != "1":
    try:
        _speedups = importlib.import_module("._speedups", __name__)
    except ImportError:
        _speedups = None

if _speedups is not None:
    BACKEND = "compiled"
    neighbourhood_counts = _speedups.neighbourhood_counts
    monochromatic_edge_count = _speedups.monochromatic_edge_count
    search_colouring = _speedups.search_colouring
else:
    BACKEND = "pure"
    neighbourhood_counts = _pure.neighbourhood_counts
    monochromatic_edge_count = _pure.monochromatic_edge_count
    search_colouring = _pure.search_colouring


def available_backends() -> list[str]:
    return ["pure"] if _speedups is None else ["compiled", "pure"]


def get_backend(name: str):
    """Return the kernel module for an explicit backend name."""
    if name == "pure":
        return _pure
    if name == "compiled":
        if _speedups is None:
            raise ValueError("compiled backend is not available")
        return _speedups
    raise ValueError(f"unknown backend {name!r}")
