"""Colourings, threshold demands, and the verification primitives.

A colouring assigns a positive colour index to every vertex. A colour is
*solitary* for v when it occurs exactly once in N(v); the neighbour carrying
it is a *witness* of v. Verifiers never assume the colouring is proper:
properness is computed and reported separately so failures can be isolated.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable

import numpy as np

from . import _kernels
from .graphs import Graph

__all__ = [
    "Colouring",
    "ThresholdSpec",
    "WitnessReport",
    "is_proper",
    "solitary_colours",
    "odd_colours",
    "witness_lists",
    "check_conflict_free",
    "check_h_odd",
]


@dataclass(frozen=True, eq=False)
class Colouring:
    """Total assignment vertex -> positive colour index."""

    colours: np.ndarray

    def __post_init__(self):
        arr = np.ascontiguousarray(self.colours, dtype=np.int64)
        if arr.ndim != 1:
            raise ValueError("colours must be a flat sequence")
        if arr.size and arr.min() < 1:
            raise ValueError("colour indices must be >= 1")
        arr.flags.writeable = False
        object.__setattr__(self, "colours", arr)

    @property
    def n(self) -> int:
        return int(self.colours.size)

    @property
    def colours_used(self) -> int:
        return int(np.unique(self.colours).size)

    @property
    def max_colour(self) -> int:
        return int(self.colours.max()) if self.colours.size else 0

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Colouring):
            return NotImplemented
        return np.array_equal(self.colours, other.colours)

    def __repr__(self) -> str:
        return f"Colouring(n={self.n}, colours_used={self.colours_used})"

    def to_json(self) -> str:
        return json.dumps({"n": self.n, "colours": [int(c) for c in self.colours]})

    @classmethod
    def from_json(cls, text: str) -> "Colouring":
        obj = json.loads(text)
        cols = obj["colours"]
        if len(cols) != obj["n"]:
            raise ValueError("colour list length disagrees with n")
        return cls(np.asarray(cols, dtype=np.int64))


@dataclass(frozen=True)
class ThresholdSpec:
    """Per-vertex demanded witness count: ``inside`` on the subset, ``outside``
    elsewhere; the effective demand is always clamped at deg(v)."""

    subset: frozenset
    inside: int
    outside: int

    def __post_init__(self):
        if self.inside < 0 or self.outside < 0:
            raise ValueError("demands must be non-negative")
        object.__setattr__(self, "subset", frozenset(int(v) for v in self.subset))

    def value(self, v: int) -> int:
        return self.inside if v in self.subset else self.outside

    def values(self, n: int) -> np.ndarray:
        out = np.full(n, self.outside, dtype=np.int64)
        if self.subset:
            members = np.fromiter((v for v in self.subset if 0 <= v < n), dtype=np.int64)
            out[members] = self.inside
        return out

    @classmethod
    def constant(cls, h: int) -> "ThresholdSpec":
        return cls(frozenset(), h, h)

    @classmethod
    def degree_split(cls, g: Graph, d: float, inside: int, outside: int) -> "ThresholdSpec":
        """Demand ``inside`` on V_{<=d} and ``outside`` on V_{>d}."""
        return cls(frozenset(np.flatnonzero(g.degrees <= d).tolist()), inside, outside)

    def pointwise_le(self, other: "ThresholdSpec", n: int) -> bool:
        return bool(np.all(self.values(n) <= other.values(n)))


@dataclass(frozen=True)
class WitnessReport:
    """Outcome of a conflict-free check.

    ``passed[v]`` compares the gating count (solitary or odd, per ``mode``)
    against ``demanded[v] = min(f(v), deg(v))``. ``all_pass`` additionally
    requires properness, which is recorded on its own in ``proper``.
    """

    mode: str
    degrees: np.ndarray
    solitary: np.ndarray
    odd: np.ndarray
    demanded: np.ndarray
    passed: np.ndarray
    proper: bool
    monochromatic_edges: int

    @property
    def witnesses_ok(self) -> bool:
        return bool(self.passed.all()) if self.passed.size else True

    @property
    def all_pass(self) -> bool:
        return self.proper and self.witnesses_ok

    @property
    def min_margin(self) -> int:
        counts = self.solitary if self.mode == "solitary" else self.odd
        if counts.size == 0:
            return 0
        return int((counts - self.demanded).min())

    def failing_vertices(self) -> np.ndarray:
        return np.flatnonzero(~self.passed)

    def to_json(self) -> str:
        counts = self.solitary if self.mode == "solitary" else self.odd
        per_vertex = [
            {
                "v": int(v),
                "degree": int(self.degrees[v]),
                "solitary": int(self.solitary[v]),
                "odd": int(self.odd[v]),
                "demanded": int(self.demanded[v]),
                "pass": bool(self.passed[v]),
            }
            for v in range(len(counts))
        ]
        return json.dumps(
            {
                "mode": self.mode,
                "proper": self.proper,
                "monochromatic_edges": self.monochromatic_edges,
                "witnesses_ok": self.witnesses_ok,
                "all_pass": self.all_pass,
                "min_margin": self.min_margin,
                "vertices": per_vertex,
            }
        )


def _require_cover(g: Graph, c: Colouring) -> None:
    if c.n != g.n:
        raise ValueError(f"colouring covers {c.n} vertices, graph has {g.n}")


def is_proper(g: Graph, c: Colouring) -> bool:
    """True iff no edge is monochromatic."""
    _require_cover(g, c)
    return _kernels.monochromatic_edge_count(g.indptr, g.indices, c.colours) == 0


def _multiplicities(g: Graph, c: Colouring, v: int) -> dict[int, int]:
    if not 0 <= v < g.n:
        raise ValueError(f"vertex {v} out of range")
    mult: dict[int, int] = {}
    for u in g.neighbours(v):
        cu = int(c.colours[u])
        mult[cu] = mult.get(cu, 0) + 1
    return mult


def solitary_colours(g: Graph, c: Colouring, v: int) -> set[int]:
    """Colours with exactly one occurrence in N(v)."""
    _require_cover(g, c)
    return {col for col, m in _multiplicities(g, c, v).items() if m == 1}


def odd_colours(g: Graph, c: Colouring, v: int) -> set[int]:
    """Colours with odd multiplicity in N(v)."""
    _require_cover(g, c)
    return {col for col, m in _multiplicities(g, c, v).items() if m % 2 == 1}


def witness_lists(g: Graph, c: Colouring) -> list[list[int]]:
    """For each vertex, its witnesses (neighbours carrying a solitary colour),
    in ascending vertex order."""
    _require_cover(g, c)
    out: list[list[int]] = []
    for v in range(g.n):
        mult = _multiplicities(g, c, v)
        out.append([int(u) for u in g.neighbours(v) if mult[int(c.colours[u])] == 1])
    return out


def _build_report(g: Graph, c: Colouring, f: ThresholdSpec, mode: str) -> WitnessReport:
    _require_cover(g, c)
    solitary, odd = _kernels.neighbourhood_counts(g.indptr, g.indices, c.colours)
    demanded = np.minimum(f.values(g.n), g.degrees)
    counts = solitary if mode == "solitary" else odd
    passed = counts >= demanded
    mono = _kernels.monochromatic_edge_count(g.indptr, g.indices, c.colours)
    return WitnessReport(
        mode=mode,
        degrees=g.degrees,
        solitary=solitary,
        odd=odd,
        demanded=demanded,
        passed=passed,
        proper=mono == 0,
        monochromatic_edges=mono,
    )


def check_conflict_free(g: Graph, c: Colouring, f: ThresholdSpec) -> WitnessReport:
    """Check that every v has at least min(f(v), deg(v)) witnesses."""
    return _build_report(g, c, f, "solitary")


def check_h_odd(g: Graph, c: Colouring, h: int) -> WitnessReport:
    """Check that every v sees at least min(h, deg(v)) odd-multiplicity
    colours in its neighbourhood."""
    if h < 0:
        raise ValueError("h must be non-negative")
    return _build_report(g, c, ThresholdSpec.constant(h), "odd")
